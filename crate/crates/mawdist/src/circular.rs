//! Minimal absent words and distances for circular sequences.
//!
//! A circular sequence is handled through its doubling: every factor of the
//! circle spelled by `x` has length at most `|x|` and occurs in the linear
//! text `xx`, so the circular word set is the linear set of `xx` with every
//! word longer than `|x|` dropped. Rotating the input changes the stored
//! tuples but not the decoded words, which is all the distance consumes.

use crate::lw::{lw_distance_between, LwResult};
use crate::maw::{compute_maws, MawSet};
use crate::text::Alphabet;
use crate::{Error, Result};

/// Minimal absent words of the circular word spelled by a linear sequence.
///
/// Tuples inside reference positions of the doubled text, so decoding must go
/// through [`CircularMawSet::decode`] or use [`CircularMawSet::doubled`] as
/// the source.
#[derive(Debug, Clone)]
pub struct CircularMawSet {
    doubled: Vec<u8>,
    linear_len: usize,
    maws: MawSet,
}

impl CircularMawSet {
    /// Length of the sequence that was doubled.
    pub fn linear_len(&self) -> usize {
        self.linear_len
    }

    /// The doubled text that tuple positions refer to.
    pub fn doubled(&self) -> &[u8] {
        &self.doubled
    }

    /// The words, capped at the linear length, in lexicographic order.
    pub fn maws(&self) -> &MawSet {
        &self.maws
    }

    pub fn len(&self) -> usize {
        self.maws.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maws.is_empty()
    }

    /// Decodes every word, in lexicographic order.
    pub fn decode(&self) -> Vec<Vec<u8>> {
        self.maws.decode(&self.doubled)
    }
}

/// Computes the minimal absent words of the circular word spelled by `x`.
///
/// The result can be empty: a run of a single letter over a one-letter
/// alphabet leaves nothing absent below the length cap.
pub fn circular_maws(x: &[u8], alphabet: &Alphabet) -> Result<CircularMawSet> {
    if x.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut doubled = Vec::with_capacity(2 * x.len());
    doubled.extend_from_slice(x);
    doubled.extend_from_slice(x);
    let linear = compute_maws(&doubled, alphabet)?;
    let tuples = linear
        .tuples()
        .iter()
        .filter(|t| t.len() <= x.len())
        .copied()
        .collect();
    Ok(CircularMawSet {
        doubled,
        linear_len: x.len(),
        maws: MawSet::from_sorted_tuples(tuples),
    })
}

/// Circular distance over the union alphabet of the two inputs, no length cap.
pub fn circular_lw(x: &[u8], y: &[u8]) -> Result<LwResult> {
    let alphabet = Alphabet::union_of(&[x, y])?;
    circular_lw_over(x, y, &alphabet, None)
}

/// Circular distance over an explicit alphabet, optionally capping word length.
pub fn circular_lw_over(
    x: &[u8],
    y: &[u8],
    alphabet: &Alphabet,
    max_len: Option<usize>,
) -> Result<LwResult> {
    let cx = circular_maws(x, alphabet)?;
    let cy = circular_maws(y, alphabet)?;
    circular_lw_between(&cx, &cy, max_len)
}

/// Circular distance between two precomputed word sets.
pub fn circular_lw_between(
    x: &CircularMawSet,
    y: &CircularMawSet,
    max_len: Option<usize>,
) -> Result<LwResult> {
    lw_distance_between(x.doubled(), x.maws(), y.doubled(), y.maws(), max_len)
}
