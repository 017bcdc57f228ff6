//! Text indexes: suffix arrays with LCP/RMQ support and an annotated suffix
//! tree. These back the MAW enumeration, the linear-time distance merge and
//! the q-gram bound.

mod rmq;
mod sais;
pub(crate) mod tree;

pub use rmq::SparseRmq;
pub use sais::suffix_array;
pub(crate) use sais::suffix_array_with_sentinel;
pub use tree::{AnnotatedSuffixTree, NodeLocator};

use crate::{Error, Result};

/// Suffix array, inverse, LCP array and an RMQ structure over the LCP array,
/// giving O(1) longest-common-extension queries after O(n log n) setup.
pub struct SuffixArrayBundle {
    len: usize,
    pub sa: Vec<u32>,
    pub isa: Vec<u32>,
    /// `lcp[r]` = longest common prefix of the suffixes at ranks `r-1` and
    /// `r`; `lcp[0] = 0`.
    pub lcp: Vec<u32>,
    rmq: SparseRmq,
}

impl SuffixArrayBundle {
    pub fn build(text: &[u8]) -> Result<SuffixArrayBundle> {
        if text.is_empty() {
            return Err(Error::EmptySequence);
        }
        let sa = suffix_array(text);
        let mut isa = vec![0u32; text.len()];
        for (r, &p) in sa.iter().enumerate() {
            isa[p as usize] = r as u32;
        }
        let lcp = lcp_array(text, &sa, &isa);
        let rmq = SparseRmq::build(&lcp);
        Ok(SuffixArrayBundle {
            len: text.len(),
            sa,
            isa,
            lcp,
            rmq,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false // empty texts are rejected at build time
    }

    /// Length of the longest common prefix of the suffixes starting at `p`
    /// and `q`.
    pub fn lce(&self, p: usize, q: usize) -> Result<usize> {
        for pos in [p, q] {
            if pos >= self.len {
                return Err(Error::PositionOutOfRange {
                    pos,
                    len: self.len,
                });
            }
        }
        Ok(self.lce_in(p, q))
    }

    pub(crate) fn lce_in(&self, p: usize, q: usize) -> usize {
        debug_assert!(p < self.len && q < self.len);
        if p == q {
            return self.len - p;
        }
        let (lo, hi) = {
            let (a, b) = (self.isa[p] as usize, self.isa[q] as usize);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        };
        self.rmq.query(lo + 1, hi) as usize
    }
}

/// Kasai's algorithm, O(n).
pub(crate) fn lcp_array(text: &[u8], sa: &[u32], isa: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n];
    let mut k = 0usize;
    for i in 0..n {
        let r = isa[i] as usize;
        if r == 0 {
            k = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + k < n && j + k < n && text[i + k] == text[j + k] {
            k += 1;
        }
        lcp[r] = k as u32;
        k = k.saturating_sub(1);
    }
    lcp
}
