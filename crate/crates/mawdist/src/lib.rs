//! Alignment-free comparison of sequences through their minimal absent words.
//!
//! A minimal absent word (MAW) of a sequence is a word that does not occur in
//! the sequence while every proper factor of it does. The set of MAWs is a
//! compact fingerprint of the sequence, and two sequences can be compared by
//! accumulating `1/|w|^2` over the symmetric difference of their MAW sets.
//! This crate computes MAW sets in O(sigma n) time, evaluates that distance in
//! linear time for a sequence pair, supports circular sequences via their
//! doubled linearisations, and computes the largest q for which every q-gram
//! of a sequence is a factor of one of its MAWs.
//!
//! Sequences are byte strings; any subset of the 256 byte values can serve as
//! the alphabet.

#![allow(clippy::needless_range_loop)]

pub mod circular;
pub mod fasta;
pub mod genfam;
pub mod index;
pub mod lw;
pub mod matrix;
pub mod maw;
pub mod phylip;
pub mod qgram;
pub mod text;

pub use circular::{circular_lw, circular_lw_between, circular_lw_over, circular_maws, CircularMawSet};
pub use fasta::{parse_multifasta, read_multifasta, write_multifasta};
pub use genfam::{binary_extremal, multiletter_extremal, multiletter_extremal_with};
pub use lw::{
    lw_distance, lw_distance_between, lw_distance_over, lw_symmetric_difference, LwResult,
};
pub use matrix::{distance_matrix, DistanceMatrix, MatrixConfig, Mode};
pub use maw::{brute_force_maws, compute_maws, MawSet, MawTuple};
pub use phylip::{read_phylip, write_phylip};
pub use qgram::{brute_force_q, compute_q, unique_factor_catalog, UniqueFactorCatalog};
pub use text::{infer_alphabet, rotate, Alphabet, Sequence};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("sequence must be non-empty")]
    EmptySequence,
    #[error("sequence of length {len} is too short (need at least {min} symbols)")]
    SequenceTooShort { len: usize, min: usize },
    #[error("symbol {} (0x{:02x}) does not belong to the alphabet", display_byte(*.symbol), .symbol)]
    SymbolOutsideAlphabet { symbol: u8 },
    #[error("rotation index {index} out of range for length {len}")]
    RotationOutOfRange { index: usize, len: usize },
    #[error("position {pos} out of range for length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("interval ({start}, {end}) is not a valid factor interval for length {len}")]
    IntervalOutOfRange { start: usize, end: usize, len: usize },
    #[error("merge input is not sorted")]
    UnsortedMerge,
    #[error("family parameters out of range: {0}")]
    FamilyParams(String),
    #[error("{path}:{line}: {msg}")]
    Fasta {
        path: String,
        line: usize,
        msg: String,
    },
    #[error("input contains no sequence records")]
    NoRecords,
    #[error("need at least two sequences to build a distance matrix, got {count}")]
    TooFewSequences { count: usize },
    #[error("matrix file {path}: {msg}")]
    Phylip { path: String, msg: String },
    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

fn display_byte(b: u8) -> String {
    if b.is_ascii_graphic() {
        format!("'{}'", b as char)
    } else {
        format!("{}", b)
    }
}
