//! Suffix array construction by induced sorting (SA-IS).
//!
//! Runs in O(n) time for integer alphabets. The public entry points work on
//! byte texts; the recursive core works on u32 texts that end with a unique
//! smallest sentinel, which is what the reduction step produces naturally.

const EMPTY: u32 = u32::MAX;

/// Suffix array of a byte text, positions of all non-empty suffixes in
/// lexicographic order. The sentinel used internally is dropped.
pub fn suffix_array(text: &[u8]) -> Vec<u32> {
    if text.is_empty() {
        return Vec::new();
    }
    let mut s: Vec<u32> = Vec::with_capacity(text.len() + 1);
    s.extend(text.iter().map(|&b| b as u32 + 1));
    s.push(0);
    let mut sa = vec![EMPTY; s.len()];
    sa_is(&s, 257, &mut sa);
    sa.remove(0); // rank 0 is always the sentinel suffix
    sa
}

/// Suffix array of `text + [0]` where `text` holds values in `1..sigma`.
/// The sentinel suffix is kept at rank 0; the suffix tree builder wants it.
pub fn suffix_array_with_sentinel(text: &[u32], sigma: usize) -> Vec<u32> {
    let mut s: Vec<u32> = Vec::with_capacity(text.len() + 1);
    s.extend_from_slice(text);
    s.push(0);
    let mut sa = vec![EMPTY; s.len()];
    sa_is(&s, sigma, &mut sa);
    sa
}

/// Core SA-IS. `s` ends with a unique 0 sentinel, values lie in `0..sigma`.
fn sa_is(s: &[u32], sigma: usize, sa: &mut [u32]) {
    let n = s.len();
    debug_assert!(n >= 1 && s[n - 1] == 0);
    if n == 1 {
        sa[0] = 0;
        return;
    }
    if n == 2 {
        sa[0] = 1;
        sa[1] = 0;
        return;
    }

    // Suffix types: S when the suffix is smaller than its right neighbour.
    let mut stype = vec![false; n];
    stype[n - 1] = true;
    for i in (0..n - 1).rev() {
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    }
    let is_lms = |i: usize| i > 0 && stype[i] && !stype[i - 1];

    let mut bucket = vec![0u32; sigma];
    for &c in s {
        bucket[c as usize] += 1;
    }

    // Pass 1: seed the bucket tails with the LMS positions in any order and
    // induce; afterwards the LMS entries appear sorted by LMS substring.
    sa.fill(EMPTY);
    {
        let mut tails = bucket_tails(&bucket);
        for i in (1..n).rev() {
            if is_lms(i) {
                let c = s[i] as usize;
                tails[c] -= 1;
                sa[tails[c] as usize] = i as u32;
            }
        }
    }
    induce(s, sa, &bucket, &stype);

    // Name the LMS substrings in their induced order.
    let lms_sorted: Vec<u32> = sa
        .iter()
        .copied()
        .filter(|&p| is_lms(p as usize))
        .collect();
    let mut name_of = vec![EMPTY; n];
    let mut names: u32 = 0;
    let mut prev = usize::MAX;
    for &p in &lms_sorted {
        let p = p as usize;
        if prev == usize::MAX || !lms_substrings_equal(s, &stype, prev, p) {
            names += 1;
        }
        name_of[p] = names - 1;
        prev = p;
    }

    let lms_positions: Vec<u32> = (1..n).filter(|&i| is_lms(i)).map(|i| i as u32).collect();
    let lms_order: Vec<u32> = if names as usize == lms_positions.len() {
        // All names distinct, the induced order already sorts the LMS suffixes.
        lms_sorted
    } else {
        // Recurse on the reduced text. Its last symbol is the name of the
        // sentinel's LMS substring, which is the unique minimum, so the
        // precondition of the core holds.
        let reduced: Vec<u32> = lms_positions
            .iter()
            .map(|&p| name_of[p as usize])
            .collect();
        let mut rsa = vec![EMPTY; reduced.len()];
        sa_is(&reduced, names as usize, &mut rsa);
        rsa.iter().map(|&r| lms_positions[r as usize]).collect()
    };

    // Pass 2: seed with the now sorted LMS suffixes and induce the final order.
    sa.fill(EMPTY);
    {
        let mut tails = bucket_tails(&bucket);
        for &p in lms_order.iter().rev() {
            let c = s[p as usize] as usize;
            tails[c] -= 1;
            sa[tails[c] as usize] = p;
        }
    }
    induce(s, sa, &bucket, &stype);
}

fn bucket_heads(bucket: &[u32]) -> Vec<u32> {
    let mut heads = vec![0u32; bucket.len()];
    let mut sum = 0;
    for (c, &k) in bucket.iter().enumerate() {
        heads[c] = sum;
        sum += k;
    }
    heads
}

fn bucket_tails(bucket: &[u32]) -> Vec<u32> {
    let mut tails = vec![0u32; bucket.len()];
    let mut sum = 0;
    for (c, &k) in bucket.iter().enumerate() {
        sum += k;
        tails[c] = sum;
    }
    tails
}

fn induce(s: &[u32], sa: &mut [u32], bucket: &[u32], stype: &[bool]) {
    let n = s.len();
    // L pass, left to right from the bucket heads.
    let mut heads = bucket_heads(bucket);
    for r in 0..n {
        let p = sa[r];
        if p == EMPTY || p == 0 {
            continue;
        }
        let j = (p - 1) as usize;
        if !stype[j] {
            let c = s[j] as usize;
            sa[heads[c] as usize] = j as u32;
            heads[c] += 1;
        }
    }
    // S pass, right to left from the bucket tails, overwriting the seeds.
    let mut tails = bucket_tails(bucket);
    for r in (0..n).rev() {
        let p = sa[r];
        if p == EMPTY || p == 0 {
            continue;
        }
        let j = (p - 1) as usize;
        if stype[j] {
            let c = s[j] as usize;
            tails[c] -= 1;
            sa[tails[c] as usize] = j as u32;
        }
    }
}

/// Two LMS substrings are equal when symbols and types match up to and
/// including the next LMS position on both sides.
fn lms_substrings_equal(s: &[u32], stype: &[bool], a: usize, b: usize) -> bool {
    if a == b {
        return true;
    }
    let n = s.len();
    let is_lms = |i: usize| i > 0 && stype[i] && !stype[i - 1];
    let mut i = 0;
    loop {
        let (ai, bi) = (a + i, b + i);
        if ai >= n || bi >= n {
            return false;
        }
        if s[ai] != s[bi] || stype[ai] != stype[bi] {
            return false;
        }
        if i > 0 {
            match (is_lms(ai), is_lms(bi)) {
                (true, true) => return true,
                (false, false) => {}
                _ => return false,
            }
        }
        i += 1;
    }
}
