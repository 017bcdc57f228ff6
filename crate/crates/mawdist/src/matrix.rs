//! All-pairs distance matrices over a batch of sequences.
//!
//! Each unordered pair is computed once, in parallel across a dedicated
//! thread pool, and mirrored into a dense row-major matrix with a zero
//! diagonal. Every cell is computed by the same code path regardless of how
//! pairs land on threads, so results are bit-identical for any worker count.

use crate::circular::circular_lw_over;
use crate::lw::lw_distance_over;
use crate::text::{infer_alphabet, Alphabet, Sequence};
use crate::{Error, Result};
use rayon::prelude::*;

/// Whether sequences compare as written or as circular words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Linear,
    Circular,
}

/// Settings for [`distance_matrix`].
#[derive(Debug, Clone)]
pub struct MatrixConfig {
    pub mode: Mode,
    /// Ignore absent words longer than this when set.
    pub max_len: Option<usize>,
    /// Worker threads for pair computations; zero picks the default.
    pub threads: usize,
    /// Compare every pair over the alphabet of the whole batch instead of
    /// the pair's own letters.
    pub global_alphabet: bool,
}

impl Default for MatrixConfig {
    fn default() -> Self {
        MatrixConfig {
            mode: Mode::Linear,
            max_len: None,
            threads: 0,
            global_alphabet: false,
        }
    }
}

/// A symmetric matrix of pairwise distances with row labels.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    labels: Vec<String>,
    values: Vec<f64>,
    n: usize,
}

impl DistanceMatrix {
    pub(crate) fn from_parts(labels: Vec<String>, values: Vec<f64>) -> DistanceMatrix {
        let n = labels.len();
        debug_assert_eq!(values.len(), n * n);
        DistanceMatrix { labels, values, n }
    }

    /// Number of rows (and columns).
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }

    /// Row-major cells.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Whether opposite cells are equal, bit for bit.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn diagonal_is_zero(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == 0.0)
    }

    pub fn is_non_negative(&self) -> bool {
        self.values.iter().all(|&v| v >= 0.0)
    }
}

/// Computes all pairwise distances between the given sequences.
pub fn distance_matrix(seqs: &[Sequence], config: &MatrixConfig) -> Result<DistanceMatrix> {
    let n = seqs.len();
    if n < 2 {
        return Err(Error::TooFewSequences { count: n });
    }
    let global: Option<Alphabet> = if config.global_alphabet {
        Some(infer_alphabet(seqs)?)
    } else {
        None
    };

    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::ThreadPool(e.to_string()))?;
    let computed: Vec<f64> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(i, j)| {
                let x = seqs[i].data.as_slice();
                let y = seqs[j].data.as_slice();
                let pair_alphabet;
                let alphabet = match &global {
                    Some(a) => a,
                    None => {
                        pair_alphabet = Alphabet::union_of(&[x, y])?;
                        &pair_alphabet
                    }
                };
                let r = match config.mode {
                    Mode::Linear => lw_distance_over(x, y, alphabet, config.max_len)?,
                    Mode::Circular => circular_lw_over(x, y, alphabet, config.max_len)?,
                };
                Ok(r.value)
            })
            .collect::<Result<Vec<f64>>>()
    })?;

    let mut values = vec![0.0f64; n * n];
    for (&(i, j), &v) in pairs.iter().zip(&computed) {
        values[i * n + j] = v;
        values[j * n + i] = v;
    }
    let labels = seqs.iter().map(|s| s.label.clone()).collect();
    Ok(DistanceMatrix::from_parts(labels, values))
}
