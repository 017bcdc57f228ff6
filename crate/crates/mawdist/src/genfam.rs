//! Generators for families of sequences with many minimal absent words.
//!
//! Both families are built around long runs of a base letter. The binary
//! family closes a run between two marker letters, so every shorter run
//! closed the same way is absent while its pieces occur. The multiletter
//! family separates the markers by equal runs, making every marker pair with
//! every wrong-length run absent. They exercise counting bounds and give the
//! command line a reproducible stress input.

use crate::{Error, Result};

/// Letters drawn on by [`multiletter_extremal`], ASCII lowercase then
/// uppercase.
pub const FAMILY_LETTERS: [u8; 52] = *b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// The length-`n` binary word `b a^(n-2) b`.
pub fn binary_extremal(n: usize) -> Result<Vec<u8>> {
    if n < 3 {
        return Err(Error::FamilyParams(format!(
            "binary family needs length at least 3, got {n}"
        )));
    }
    let mut word = vec![b'a'; n];
    word[0] = b'b';
    word[n - 1] = b'b';
    Ok(word)
}

/// Words of the binary family at length `n` have at least this many minimal
/// absent words.
pub fn binary_extremal_lower_bound(n: usize) -> usize {
    n.saturating_sub(2)
}

/// The length-`n` word over `sigma` letters interleaving each marker letter
/// with equal runs of the base letter, using the default letter pool.
pub fn multiletter_extremal(n: usize, sigma: usize) -> Result<Vec<u8>> {
    multiletter_extremal_with(n, sigma, &FAMILY_LETTERS)
}

/// Same family over the first `sigma` letters of a caller-supplied pool.
pub fn multiletter_extremal_with(n: usize, sigma: usize, letters: &[u8]) -> Result<Vec<u8>> {
    if sigma < 3 {
        return Err(Error::FamilyParams(format!(
            "multiletter family needs at least 3 letters, got {sigma}"
        )));
    }
    if sigma > n {
        return Err(Error::FamilyParams(format!(
            "length {n} cannot hold {sigma} distinct letters"
        )));
    }
    if letters.len() < sigma {
        return Err(Error::FamilyParams(format!(
            "letter pool holds {} symbols but {sigma} are needed",
            letters.len()
        )));
    }
    let pool = &letters[..sigma];
    let mut seen = [false; 256];
    for &b in pool {
        if seen[b as usize] {
            return Err(Error::FamilyParams(format!(
                "letter pool repeats {:?}",
                b as char
            )));
        }
        seen[b as usize] = true;
    }

    // Runs of the base letter have length k; whatever is left of n after the
    // sigma - 1 marker-plus-run blocks trails as more base letters.
    let k = n / (sigma - 1) - 1;
    let m = n - (sigma - 1) * (k + 1);
    let mut word = Vec::with_capacity(n);
    for &marker in &pool[1..] {
        word.push(marker);
        word.extend(std::iter::repeat_n(pool[0], k));
    }
    word.extend(std::iter::repeat_n(pool[0], m));
    debug_assert_eq!(word.len(), n);
    Ok(word)
}

/// Words of the multiletter family at length `n` over `sigma` letters have
/// at least this many minimal absent words.
pub fn multiletter_extremal_lower_bound(n: usize, sigma: usize) -> usize {
    ((sigma - 1) * (sigma - 2) * (n / (sigma - 1))).saturating_sub(sigma - 2)
}
