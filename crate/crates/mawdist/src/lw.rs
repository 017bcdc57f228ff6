//! Distance between two texts from their minimal absent word sets.
//!
//! The distance is the sum of `1 / |w|²` over every word `w` in the
//! symmetric difference of the two sets of minimal absent words. Identical
//! texts share their whole set, so the distance is exactly zero, and the
//! weighting by inverse squared length keeps the sum bounded for any
//! alphabet. An optional length cap restricts both sets to words no longer
//! than the cap before taking the difference.
//!
//! Both sets arrive sorted in lexicographic word order, so one linear merge
//! finds the symmetric difference. Word comparisons run in constant time
//! against a joint index of the two texts laid end to end: a longest common
//! extension query tells how far two stored cores agree, and suffix ranks
//! decide the order when they diverge. The merge therefore visits difference
//! members in lexicographic word order no matter which operand came first,
//! which makes the floating point result bit-identical under swapping the
//! arguments.

use crate::index::SuffixArrayBundle;
use crate::maw::{compute_maws, MawSet, MawTuple};
use crate::text::Alphabet;
use crate::{Error, Result};
use std::cmp::Ordering;

/// Distance value plus the size of the underlying symmetric difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LwResult {
    pub value: f64,
    pub symdiff_size: usize,
}

/// Which operand a symmetric difference member came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum MergeSide {
    X,
    Y,
}

/// Distance over the union alphabet of the two texts, no length cap.
pub fn lw_distance(x: &[u8], y: &[u8]) -> Result<LwResult> {
    let alphabet = Alphabet::union_of(&[x, y])?;
    lw_distance_over(x, y, &alphabet, None)
}

/// Distance over an explicit alphabet, optionally capping word length.
pub fn lw_distance_over(
    x: &[u8],
    y: &[u8],
    alphabet: &Alphabet,
    max_len: Option<usize>,
) -> Result<LwResult> {
    let mx = compute_maws(x, alphabet)?;
    let my = compute_maws(y, alphabet)?;
    lw_distance_between(x, &mx, y, &my, max_len)
}

/// Distance from precomputed word sets. The sets must belong to the texts
/// they are paired with; tuple intervals are resolved against them.
pub fn lw_distance_between(
    x: &[u8],
    mx: &MawSet,
    y: &[u8],
    my: &MawSet,
    max_len: Option<usize>,
) -> Result<LwResult> {
    let cap = max_len.unwrap_or(usize::MAX);
    let mut value = 0.0f64;
    let mut count = 0usize;
    merge_symmetric_difference(x, mx.tuples(), cap, y, my.tuples(), cap, |_, t| {
        let l = t.len() as f64;
        value += 1.0 / (l * l);
        count += 1;
    })?;
    Ok(LwResult {
        value,
        symdiff_size: count,
    })
}

/// The symmetric difference itself, decoded, in lexicographic order.
pub fn lw_symmetric_difference(
    x: &[u8],
    y: &[u8],
    alphabet: &Alphabet,
    max_len: Option<usize>,
) -> Result<Vec<Vec<u8>>> {
    let mx = compute_maws(x, alphabet)?;
    let my = compute_maws(y, alphabet)?;
    let cap = max_len.unwrap_or(usize::MAX);
    let mut words = Vec::new();
    merge_symmetric_difference(x, mx.tuples(), cap, y, my.tuples(), cap, |side, t| {
        words.push(match side {
            MergeSide::X => t.decode(x),
            MergeSide::Y => t.decode(y),
        });
    })?;
    Ok(words)
}

/// Walks both sorted tuple lists at once and visits every word present in
/// exactly one of them, in lexicographic word order. Each side admits only
/// words up to its own cap, which the circular distance uses to bound the
/// two operands independently. Returns `UnsortedMerge` if either list is
/// not strictly increasing.
pub(crate) fn merge_symmetric_difference(
    x: &[u8],
    tx: &[MawTuple],
    cap_x: usize,
    y: &[u8],
    ty: &[MawTuple],
    cap_y: usize,
    mut visit: impl FnMut(MergeSide, &MawTuple),
) -> Result<()> {
    let mut joint = Vec::with_capacity(x.len() + y.len());
    joint.extend_from_slice(x);
    joint.extend_from_slice(y);
    let bundle = SuffixArrayBundle::build(&joint)?;
    let y_offset = x.len();

    for (tuples, offset) in [(tx, 0), (ty, y_offset)] {
        for pair in tuples.windows(2) {
            if cmp_words(&bundle, &pair[0], offset, &pair[1], offset) != Ordering::Less {
                return Err(Error::UnsortedMerge);
            }
        }
    }

    let mut i = 0usize;
    let mut j = 0usize;
    loop {
        while i < tx.len() && tx[i].len() > cap_x {
            i += 1;
        }
        while j < ty.len() && ty[j].len() > cap_y {
            j += 1;
        }
        match (i < tx.len(), j < ty.len()) {
            (false, false) => return Ok(()),
            (true, false) => {
                visit(MergeSide::X, &tx[i]);
                i += 1;
            }
            (false, true) => {
                visit(MergeSide::Y, &ty[j]);
                j += 1;
            }
            (true, true) => match cmp_words(&bundle, &tx[i], 0, &ty[j], y_offset) {
                Ordering::Less => {
                    visit(MergeSide::X, &tx[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    visit(MergeSide::Y, &ty[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

/// Lexicographic comparison of two stored words through the joint index.
/// After the leading letters, a longest common extension query on the core
/// starts settles everything: when it reaches the shorter core the shorter
/// word is a prefix and lengths decide; otherwise the cores diverge inside
/// both intervals and suffix rank order at the divergence decides.
fn cmp_words(
    bundle: &SuffixArrayBundle,
    a: &MawTuple,
    offset_a: usize,
    b: &MawTuple,
    offset_b: usize,
) -> Ordering {
    match a.first.cmp(&b.first) {
        Ordering::Equal => {}
        unequal => return unequal,
    }
    match (a.tail, b.tail) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some((i1, j1)), Some((i2, j2))) => {
            let p = offset_a + i1 as usize;
            let q = offset_b + i2 as usize;
            let len_a = (j1 - i1) as usize + 1;
            let len_b = (j2 - i2) as usize + 1;
            let agree = bundle.lce_in(p, q);
            if agree >= len_a.min(len_b) {
                len_a.cmp(&len_b)
            } else {
                bundle.isa[p].cmp(&bundle.isa[q])
            }
        }
    }
}
