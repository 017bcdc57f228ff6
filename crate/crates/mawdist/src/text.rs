//! Sequences and alphabets.
//!
//! Symbols are plain bytes, so an alphabet is any non-empty subset of the 256
//! byte values. Distance computations infer the alphabet as the union of the
//! letters occurring in the operands unless an explicit alphabet is supplied.

use crate::{Error, Result};

/// A labelled byte sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    pub label: String,
    pub data: Vec<u8>,
}

impl Sequence {
    pub fn new(label: impl Into<String>, data: impl Into<Vec<u8>>) -> Self {
        Sequence {
            label: label.into(),
            data: data.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// The mirror image of the sequence, keeping the label.
    pub fn reverse(&self) -> Sequence {
        let mut data = self.data.clone();
        data.reverse();
        Sequence {
            label: self.label.clone(),
            data,
        }
    }

    /// The rotation starting at position `i`: `x[i..] + x[..i]`.
    pub fn rotate(&self, i: usize) -> Result<Sequence> {
        Ok(Sequence {
            label: self.label.clone(),
            data: rotate(&self.data, i)?,
        })
    }
}

/// The rotation `x[i..] + x[..i]`; `i` must be a valid position of `x`.
pub fn rotate(x: &[u8], i: usize) -> Result<Vec<u8>> {
    if i >= x.len() {
        return Err(Error::RotationOutOfRange { index: i, len: x.len() });
    }
    let mut out = x.to_vec();
    out.rotate_left(i);
    Ok(out)
}

/// An ordered set of byte symbols with O(1) membership and rank lookups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<u8>,
    rank: [i16; 256],
}

impl Alphabet {
    /// Builds an alphabet from the given symbols (duplicates collapse).
    pub fn from_letters<I>(letters: I) -> Result<Alphabet>
    where
        I: IntoIterator,
        I::Item: std::borrow::Borrow<u8>,
    {
        use std::borrow::Borrow;
        let mut present = [false; 256];
        for b in letters {
            present[*b.borrow() as usize] = true;
        }
        let letters: Vec<u8> = (0..=255u8).filter(|&b| present[b as usize]).collect();
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut rank = [-1i16; 256];
        for (r, &b) in letters.iter().enumerate() {
            rank[b as usize] = r as i16;
        }
        Ok(Alphabet { letters, rank })
    }

    /// The union of the letters occurring in the given texts.
    pub fn union_of(texts: &[&[u8]]) -> Result<Alphabet> {
        Alphabet::from_letters(texts.iter().flat_map(|t| t.iter().copied()))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty alphabets
    }

    /// Symbols in ascending byte order.
    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn contains(&self, b: u8) -> bool {
        self.rank[b as usize] >= 0
    }

    /// Rank of `b` within the alphabet (0-based, ascending byte order).
    pub fn rank(&self, b: u8) -> Option<usize> {
        let r = self.rank[b as usize];
        (r >= 0).then_some(r as usize)
    }
}

/// The union alphabet over a batch of sequences.
pub fn infer_alphabet(seqs: &[Sequence]) -> Result<Alphabet> {
    Alphabet::from_letters(seqs.iter().flat_map(|s| s.data.iter().copied()))
}
