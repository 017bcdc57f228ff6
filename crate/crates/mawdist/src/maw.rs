//! Minimal absent word enumeration.
//!
//! A word is minimal absent for a text when it does not occur in the text
//! but every proper factor of it does. Each such word of length two or more
//! can be written `a·u·b` with letters `a`, `b` where `a·u` and `u·b` both
//! occur; it is stored as the first letter `a` plus one occurrence interval
//! of `u·b`, so a set of minimal absent words needs constant space per word.
//! Single letters of the alphabet that never occur in the text are minimal
//! absent too and carry no interval.
//!
//! [`compute_maws`] enumerates the set in O(n) interval-stack passes over
//! the suffix and LCP arrays. [`brute_force_maws`] rechecks the definition
//! on explicit factor sets and exists as an independent oracle for tests.

use crate::index::{lcp_array, suffix_array};
use crate::text::Alphabet;
use crate::{Error, Result};
use std::collections::BTreeSet;

/// One minimal absent word of a source text: `first` concatenated with the
/// source interval `tail = Some((i, j))` spelling everything after the first
/// letter (inclusive bounds). `tail = None` encodes the length-one case, an
/// alphabet letter absent from the text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MawTuple {
    pub first: u8,
    pub tail: Option<(u32, u32)>,
}

impl MawTuple {
    pub fn len(&self) -> usize {
        match self.tail {
            None => 1,
            Some((i, j)) => 2 + (j - i) as usize,
        }
    }

    /// Words are never empty; the shortest case is a single absent letter.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Spells the word out against the text the tuple was computed from.
    pub fn decode(&self, source: &[u8]) -> Vec<u8> {
        let mut word = Vec::with_capacity(self.len());
        word.push(self.first);
        if let Some((i, j)) = self.tail {
            word.extend_from_slice(&source[i as usize..=j as usize]);
        }
        word
    }
}

/// The minimal absent words of one text, in lexicographic word order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MawSet {
    tuples: Vec<MawTuple>,
}

impl MawSet {
    /// Wraps tuples that are already in lexicographic word order, as the
    /// circular filter produces them.
    pub(crate) fn from_sorted_tuples(tuples: Vec<MawTuple>) -> MawSet {
        MawSet { tuples }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[MawTuple] {
        &self.tuples
    }

    pub fn iter(&self) -> impl Iterator<Item = &MawTuple> {
        self.tuples.iter()
    }

    /// Decodes every word against the source text, preserving the
    /// lexicographic order of the set.
    pub fn decode(&self, source: &[u8]) -> Vec<Vec<u8>> {
        self.tuples.iter().map(|t| t.decode(source)).collect()
    }
}

/// 256-bit set of byte symbols.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct LetterSet([u64; 4]);

impl LetterSet {
    fn insert(&mut self, b: u8) {
        self.0[(b >> 6) as usize] |= 1u64 << (b & 63);
    }

    fn union_with(&mut self, other: &LetterSet) {
        for k in 0..4 {
            self.0[k] |= other.0[k];
        }
    }

    /// Symbols in `self` but not in `other`, visited in ascending order.
    fn for_each_missing_from(&self, other: &LetterSet, mut f: impl FnMut(u8)) {
        for k in 0..4 {
            let mut word = self.0[k] & !other.0[k];
            while word != 0 {
                let bit = word.trailing_zeros();
                f((k as u32 * 64 + bit) as u8);
                word &= word - 1;
            }
        }
    }
}

/// Child of an open interval: one maximal run of suffixes that all continue
/// the interval's factor with the same next letter.
struct Child {
    min_pos: u32,
    left: LetterSet,
}

/// Open interval on the traversal stack: the branching factor of string
/// depth `depth` covering the suffix ranks seen so far. `letters` collects
/// the letters preceding its occurrences, `min_pos` its leftmost occurrence.
struct Frame {
    depth: u32,
    min_pos: u32,
    letters: LetterSet,
    children: Vec<Child>,
}

impl Frame {
    fn new(depth: u32) -> Frame {
        Frame {
            depth,
            min_pos: u32::MAX,
            letters: LetterSet::default(),
            children: Vec::new(),
        }
    }
}

/// Bottom-up sweep over the LCP intervals of `text`. For every branching
/// factor `u` and extension letter `b` with `u·b` occurring, emits
/// `(a, i, i + |u|)` for each letter `a` that precedes an occurrence of `u`
/// but no occurrence of `u·b`; the word `a·text[i..=i+|u|]` is then minimal
/// absent. A suffix that ends exactly at depth `u` acts as an implicit
/// end-of-text child: it contributes its preceding letter but no extension,
/// which is also why the root receives a virtual end leaf for the last
/// text position.
fn absent_word_cores(
    text: &[u8],
    sa: &[u32],
    lcp: &[u32],
    mut emit: impl FnMut(u8, u32, u32),
) {
    let n = text.len();
    debug_assert!(n >= 1 && sa.len() == n && lcp.len() == n);
    let mut stack: Vec<Frame> = vec![Frame::new(0)];

    let attach_leaf = |frame: &mut Frame, p: u32| {
        let mut left = LetterSet::default();
        if p > 0 {
            left.insert(text[p as usize - 1]);
        }
        frame.letters.union_with(&left);
        frame.min_pos = frame.min_pos.min(p);
        if p as usize + (frame.depth as usize) < n {
            frame.children.push(Child { min_pos: p, left });
        }
    };
    let attach_interval = |frame: &mut Frame, closed: &Frame| {
        frame.letters.union_with(&closed.letters);
        frame.min_pos = frame.min_pos.min(closed.min_pos);
        frame.children.push(Child {
            min_pos: closed.min_pos,
            left: closed.letters,
        });
    };
    let emit_frame = |frame: &Frame, emit: &mut dyn FnMut(u8, u32, u32)| {
        for c in &frame.children {
            frame.letters.for_each_missing_from(&c.left, |a| {
                emit(a, c.min_pos, c.min_pos + frame.depth);
            });
        }
    };

    for r in 1..=n {
        let l = if r < n { lcp[r] } else { 0 };
        if stack.last().unwrap().depth < l {
            stack.push(Frame::new(l));
        }
        attach_leaf(stack.last_mut().unwrap(), sa[r - 1]);
        while stack.last().unwrap().depth > l {
            let closed = stack.pop().unwrap();
            emit_frame(&closed, &mut emit);
            if stack.last().unwrap().depth < l {
                stack.push(Frame::new(l));
            }
            attach_interval(stack.last_mut().unwrap(), &closed);
        }
    }

    // Virtual end leaf: the empty factor also "occurs" at the very end of
    // the text, preceded by the last letter.
    let root = stack.last_mut().unwrap();
    root.letters.insert(text[n - 1]);
    emit_frame(root, &mut emit);
}

/// Sorts tuples into lexicographic word order with two stable counting
/// passes: by the suffix rank of the interval start (length-one tuples
/// first), then by the leading letter. Within one set no word is a prefix
/// of another, so cores that share a leading letter already diverge before
/// either interval ends and suffix rank order equals word order.
fn sort_lexicographic(tuples: Vec<MawTuple>, isa: &[u32]) -> Vec<MawTuple> {
    let n = isa.len();
    let rank_key = |t: &MawTuple| match t.tail {
        None => 0usize,
        Some((i, _)) => isa[i as usize] as usize + 1,
    };

    let mut counts = vec![0u32; n + 2];
    for t in &tuples {
        counts[rank_key(t) + 1] += 1;
    }
    for k in 1..counts.len() {
        counts[k] += counts[k - 1];
    }
    let mut by_rank: Vec<MawTuple> = vec![
        MawTuple {
            first: 0,
            tail: None
        };
        tuples.len()
    ];
    for t in tuples {
        let slot = &mut counts[rank_key(&t)];
        by_rank[*slot as usize] = t;
        *slot += 1;
    }

    let mut letter_counts = [0u32; 257];
    for t in &by_rank {
        letter_counts[t.first as usize + 1] += 1;
    }
    for k in 1..257 {
        letter_counts[k] += letter_counts[k - 1];
    }
    let mut sorted = by_rank.clone();
    for t in by_rank {
        let slot = &mut letter_counts[t.first as usize];
        sorted[*slot as usize] = t;
        *slot += 1;
    }
    sorted
}

/// Enumerates the minimal absent words of `text` over `alphabet`.
///
/// Every byte of the text must belong to the alphabet. The result is in
/// lexicographic word order and never holds more than one word per
/// (position, letter) pair of the text.
pub fn compute_maws(text: &[u8], alphabet: &Alphabet) -> Result<MawSet> {
    if text.is_empty() {
        return Err(Error::EmptySequence);
    }
    for &b in text {
        if !alphabet.contains(b) {
            return Err(Error::SymbolOutsideAlphabet { symbol: b });
        }
    }

    let sa = suffix_array(text);
    let isa = inverse(&sa);
    let lcp = lcp_array(text, &sa, &isa);

    let mut tuples: Vec<MawTuple> = Vec::new();
    let mut present = LetterSet::default();
    for &b in text {
        present.insert(b);
    }
    let mut all = LetterSet::default();
    for &b in alphabet.letters() {
        all.insert(b);
    }
    all.for_each_missing_from(&present, |a| tuples.push(MawTuple { first: a, tail: None }));

    absent_word_cores(text, &sa, &lcp, |a, i, j| {
        tuples.push(MawTuple {
            first: a,
            tail: Some((i, j)),
        });
    });
    debug_assert!(tuples.len() <= alphabet.len() * text.len());

    Ok(MawSet {
        tuples: sort_lexicographic(tuples, &isa),
    })
}

fn inverse(sa: &[u32]) -> Vec<u32> {
    let mut isa = vec![0u32; sa.len()];
    for (r, &p) in sa.iter().enumerate() {
        isa[p as usize] = r as u32;
    }
    isa
}

/// Definition-faithful enumeration on explicit factor sets, quadratic in
/// the text length. Independent oracle for [`compute_maws`].
pub fn brute_force_maws(text: &[u8], alphabet: &Alphabet) -> Result<BTreeSet<Vec<u8>>> {
    if text.is_empty() {
        return Err(Error::EmptySequence);
    }
    for &b in text {
        if !alphabet.contains(b) {
            return Err(Error::SymbolOutsideAlphabet { symbol: b });
        }
    }

    let n = text.len();
    let mut factors: BTreeSet<Vec<u8>> = BTreeSet::new();
    factors.insert(Vec::new());
    for i in 0..n {
        for j in i..n {
            factors.insert(text[i..=j].to_vec());
        }
    }

    let mut maws = BTreeSet::new();
    for &a in alphabet.letters() {
        if !text.contains(&a) {
            maws.insert(vec![a]);
        }
    }
    for u in &factors {
        for &a in alphabet.letters() {
            let mut au = vec![a];
            au.extend_from_slice(u);
            if !factors.contains(&au) {
                continue;
            }
            for &b in alphabet.letters() {
                let mut ub = u.clone();
                ub.push(b);
                if !factors.contains(&ub) {
                    continue;
                }
                let mut aub = au.clone();
                aub.push(b);
                if !factors.contains(&aub) {
                    maws.insert(aub);
                }
            }
        }
    }
    Ok(maws)
}
