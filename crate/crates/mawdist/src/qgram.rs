//! The largest q such that every q-gram of a text is a factor of some
//! minimal absent word.
//!
//! Factors shorter than the shortest unique factor occur at least twice and
//! are always covered, so only unique factors can break coverage. The bound
//! is computed in three stages over annotated suffix trees of the text and
//! its reverse: unique infixes first, then unique prefixes, then unique
//! suffixes. Each candidate factor a·u·b is tested through the trees alone,
//! with no minimal absent word materialised: it heads some minimal absent
//! word when u·b right-branches somewhere below its locus or u·b reoccurs
//! earlier, and the mirrored test on the reverse text covers the tail case.

use crate::index::tree::AnnotatedSuffixTree;
use crate::maw::brute_force_maws;
use crate::text::Alphabet;
use crate::{Error, Result};
use std::collections::BTreeSet;

/// Shortest unique factors of a text, organised for the bound pipeline.
///
/// Intervals are inclusive positions `(start, end)` into the text. A factor
/// is unique when it occurs exactly once; an infix is a factor that is
/// neither a prefix nor a suffix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniqueFactorCatalog {
    /// Length of the shortest unique factor.
    pub shortest_unique: usize,
    /// Length of the shortest unique prefix.
    pub shortest_unique_prefix: usize,
    /// Length of the shortest unique suffix.
    pub shortest_unique_suffix: usize,
    /// Length of the shortest unique infix, when any infix is unique.
    pub shortest_unique_infix: Option<usize>,
    /// Every unique infix whose length is exactly the shortest.
    pub unique_infixes: Vec<(usize, usize)>,
    /// Every unique infix one letter longer than the shortest.
    pub unique_infixes_longer: Vec<(usize, usize)>,
}

/// Builds the catalog of shortest unique factors of `x`.
pub fn unique_factor_catalog(x: &[u8]) -> Result<UniqueFactorCatalog> {
    let tree = AnnotatedSuffixTree::build(x)?;
    catalog_from(x, &tree)
}

fn catalog_from(x: &[u8], tree: &AnnotatedSuffixTree) -> Result<UniqueFactorCatalog> {
    let n = x.len();
    if n < 2 {
        return Err(Error::SequenceTooShort { len: n, min: 2 });
    }
    // The shortest factor starting at p that occurs exactly once is one
    // letter longer than the parent of leaf p, and exists only when it stays
    // inside the text.
    let shortest_at: Vec<usize> = (0..n)
        .map(|p| tree.depth(tree.parent(tree.leaf_for_suffix(p))) + 1)
        .collect();
    let starts_unique = |p: usize| shortest_at[p] <= n - p;

    let shortest_unique = (0..n)
        .filter(|&p| starts_unique(p))
        .map(|p| shortest_at[p])
        .min()
        .expect("the whole text is unique");
    let shortest_unique_prefix = shortest_at[0];
    let shortest_unique_suffix = (0..n)
        .filter(|&p| starts_unique(p))
        .map(|p| n - p)
        .min()
        .expect("the whole text is unique");
    // An infix at p must start past 0 and end before n - 1.
    let shortest_unique_infix = (1..n)
        .filter(|&p| p + shortest_at[p] < n)
        .map(|p| shortest_at[p])
        .min();
    let infixes_of = |len: usize| -> Vec<(usize, usize)> {
        (1..n)
            .filter(|&p| p + len < n && shortest_at[p] <= len)
            .map(|p| (p, p + len - 1))
            .collect()
    };
    let (unique_infixes, unique_infixes_longer) = match shortest_unique_infix {
        Some(t) => (infixes_of(t), infixes_of(t + 1)),
        None => (Vec::new(), Vec::new()),
    };

    Ok(UniqueFactorCatalog {
        shortest_unique,
        shortest_unique_prefix,
        shortest_unique_suffix,
        shortest_unique_infix,
        unique_infixes,
        unique_infixes_longer,
    })
}

/// Whether the unique factor `x[i..=j]` occurs inside some minimal absent
/// word of `x`.
///
/// A unique factor cannot sit strictly inside a minimal absent word, since
/// both the word's head and tail occur in the text, so it suffices to test
/// whether the factor heads one (through the forward tree) or tails one
/// (through the tree of the reversed text).
fn factor_of_some_maw(
    x: &[u8],
    fwd: &AnnotatedSuffixTree,
    rev: &AnnotatedSuffixTree,
    i: usize,
    j: usize,
) -> bool {
    if i == j {
        // Single letters are factors of the shortest absent power of
        // themselves.
        return true;
    }
    let n = x.len();

    // Head test on a·u·b: the tail u·b either right-branches at or below its
    // locus, or occurs again before position i + 1.
    let tail = fwd
        .locate_factor(i + 1, j)
        .expect("tail interval lies inside the text");
    if fwd.branching(tail.node) || fwd.first_occurrence(tail.node) <= i {
        return true;
    }

    // Tail test, mirrored: in the reversed text the head a·u reads as
    // x[n-j ..= n-1-i], and reoccurring "earlier" there means ending later
    // in the forward text.
    let head = rev
        .locate_factor(n - j, n - 1 - i)
        .expect("head interval lies inside the reversed text");
    rev.branching(head.node) || rev.first_occurrence(head.node) < n - j
}

fn infix_stage(
    x: &[u8],
    fwd: &AnnotatedSuffixTree,
    rev: &AnnotatedSuffixTree,
    catalog: &UniqueFactorCatalog,
) -> usize {
    let Some(t) = catalog.shortest_unique_infix else {
        // Without unique infixes nothing shorter than the text itself can
        // fail, so later stages start from the whole length.
        return x.len();
    };
    for &(i, j) in &catalog.unique_infixes {
        if !factor_of_some_maw(x, fwd, rev, i, j) {
            return t - 1;
        }
    }
    for &(i, j) in &catalog.unique_infixes_longer {
        if !factor_of_some_maw(x, fwd, rev, i, j) {
            return t;
        }
    }
    t + 1
}

fn prefix_stage(
    x: &[u8],
    fwd: &AnnotatedSuffixTree,
    rev: &AnnotatedSuffixTree,
    catalog: &UniqueFactorCatalog,
    q: usize,
) -> usize {
    let mut p = catalog.shortest_unique_prefix;
    while p <= q {
        if !factor_of_some_maw(x, fwd, rev, 0, p - 1) {
            return p - 1;
        }
        p += 1;
    }
    q
}

fn suffix_stage(
    x: &[u8],
    fwd: &AnnotatedSuffixTree,
    rev: &AnnotatedSuffixTree,
    catalog: &UniqueFactorCatalog,
    q: usize,
) -> usize {
    let n = x.len();
    let mut p = catalog.shortest_unique_suffix;
    while p <= q {
        if !factor_of_some_maw(x, fwd, rev, n - p, n - 1) {
            return p - 1;
        }
        p += 1;
    }
    q
}

/// Computes the largest q such that every q-gram of `x` is a factor of some
/// minimal absent word of `x`.
///
/// The alphabet is taken to be the letters of `x`; adding absent letters
/// would only add single-letter absent words, which cover no q-gram of the
/// text for q above one.
pub fn compute_q(x: &[u8]) -> Result<usize> {
    let fwd = AnnotatedSuffixTree::build(x)?;
    let reversed: Vec<u8> = x.iter().rev().copied().collect();
    let rev = AnnotatedSuffixTree::build(&reversed)?;
    let catalog = catalog_from(x, &fwd)?;

    let q = infix_stage(x, &fwd, &rev, &catalog);
    let q = prefix_stage(x, &fwd, &rev, &catalog, q);
    Ok(suffix_stage(x, &fwd, &rev, &catalog, q))
}

/// Reference implementation that materialises every minimal absent word and
/// closes the set under taking factors.
pub fn brute_force_q(x: &[u8]) -> Result<usize> {
    let n = x.len();
    if n < 2 {
        return Err(Error::SequenceTooShort { len: n, min: 2 });
    }
    let alphabet = Alphabet::union_of(&[x])?;
    let mut covered: BTreeSet<Vec<u8>> = BTreeSet::new();
    for w in brute_force_maws(x, &alphabet)? {
        for a in 0..w.len() {
            for b in a + 1..=w.len() {
                covered.insert(w[a..b].to_vec());
            }
        }
    }
    let all_grams_covered =
        |q: usize| (0..=n - q).all(|k| covered.contains(&x[k..k + q]));
    Ok((1..=n).rev().find(|&q| all_grams_covered(q)).unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trees(x: &[u8]) -> (AnnotatedSuffixTree, AnnotatedSuffixTree) {
        let reversed: Vec<u8> = x.iter().rev().copied().collect();
        (
            AnnotatedSuffixTree::build(x).unwrap(),
            AnnotatedSuffixTree::build(&reversed).unwrap(),
        )
    }

    #[test]
    fn known_q_values() {
        assert_eq!(compute_q(b"abaab").unwrap(), 2);
        assert_eq!(compute_q(b"aaa").unwrap(), 3);
        assert_eq!(compute_q(b"ab").unwrap(), 1);
        assert_eq!(compute_q(b"abab").unwrap(), 3);
    }

    #[test]
    fn catalog_of_abaab() {
        let c = unique_factor_catalog(b"abaab").unwrap();
        assert_eq!(c.shortest_unique, 2);
        assert_eq!(c.shortest_unique_prefix, 3);
        assert_eq!(c.shortest_unique_suffix, 3);
        assert_eq!(c.shortest_unique_infix, Some(2));
        assert_eq!(c.unique_infixes, vec![(1, 2), (2, 3)]);
        assert_eq!(c.unique_infixes_longer, vec![(1, 3)]);
    }

    #[test]
    fn catalog_without_unique_infixes() {
        let c = unique_factor_catalog(b"aab").unwrap();
        assert_eq!(c.shortest_unique, 1);
        assert_eq!(c.shortest_unique_infix, None);
        assert!(c.unique_infixes.is_empty());
        assert!(c.unique_infixes_longer.is_empty());
    }

    #[test]
    fn factor_test_examples() {
        let x = b"abaab";
        let (fwd, rev) = trees(x);
        // "baa" is in no minimal absent word of abaab.
        assert!(!factor_of_some_maw(x, &fwd, &rev, 1, 3));
        // "aab" heads aaba.
        assert!(factor_of_some_maw(x, &fwd, &rev, 2, 4));
        // Every 2-gram is covered, matching q = 2.
        for i in 0..x.len() - 1 {
            assert!(factor_of_some_maw(x, &fwd, &rev, i, i + 1), "at {i}");
        }
        // Single letters are always covered.
        for i in 0..x.len() {
            assert!(factor_of_some_maw(x, &fwd, &rev, i, i));
        }
    }

    #[test]
    fn short_inputs_are_rejected() {
        assert!(matches!(
            compute_q(b"a"),
            Err(Error::SequenceTooShort { len: 1, min: 2 })
        ));
        assert!(matches!(
            unique_factor_catalog(b"a"),
            Err(Error::SequenceTooShort { len: 1, min: 2 })
        ));
        assert!(matches!(
            brute_force_q(b""),
            Err(Error::SequenceTooShort { len: 0, min: 2 })
        ));
    }

    #[test]
    fn matches_brute_force_exhaustively_on_binary_words() {
        for n in 2..=12usize {
            for bits in 0..(1u32 << n) {
                let x: Vec<u8> = (0..n)
                    .map(|k| if bits >> k & 1 == 1 { b'b' } else { b'a' })
                    .collect();
                assert_eq!(
                    compute_q(&x).unwrap(),
                    brute_force_q(&x).unwrap(),
                    "text {:?}",
                    String::from_utf8_lossy(&x)
                );
            }
        }
    }

    #[test]
    fn matches_brute_force_on_random_texts() {
        let mut state = 0x2545_f491_4f6c_dd1d_u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for sigma in 2..=3u64 {
            for _ in 0..40 {
                let len = 2 + (next() % 60) as usize;
                let x: Vec<u8> = (0..len).map(|_| b'a' + (next() % sigma) as u8).collect();
                assert_eq!(
                    compute_q(&x).unwrap(),
                    brute_force_q(&x).unwrap(),
                    "text {:?}",
                    String::from_utf8_lossy(&x)
                );
            }
        }
    }

    #[test]
    fn q_sits_between_the_published_bounds() {
        let mut state = 0x9e37_79b9_7f4a_7c15_u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let sigma = 2 + next() % 3;
            let len = 2 + (next() % 80) as usize;
            let x: Vec<u8> = (0..len).map(|_| b'a' + (next() % sigma) as u8).collect();
            let q = compute_q(&x).unwrap();
            let c = unique_factor_catalog(&x).unwrap();
            assert!(q + 1 >= c.shortest_unique, "q too small for {:?}", x);
            if let Some(t) = c.shortest_unique_infix {
                assert!(q <= t + 1, "q too large for {:?}", x);
            } else {
                assert!(q <= x.len());
            }
        }
    }
}
