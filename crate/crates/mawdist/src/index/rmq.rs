//! Sparse-table range minimum queries: O(n log n) table, O(1) query.

pub struct SparseRmq {
    // levels[k][i] = min of values[i .. i + 2^k]
    levels: Vec<Vec<u32>>,
}

impl SparseRmq {
    pub fn build(values: &[u32]) -> SparseRmq {
        let n = values.len();
        let mut levels = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= n {
            let prev = levels.last().unwrap();
            let level: Vec<u32> = (0..=n - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(level);
            width *= 2;
        }
        SparseRmq { levels }
    }

    /// Minimum over the inclusive range `[lo, hi]`.
    pub fn query(&self, lo: usize, hi: usize) -> u32 {
        debug_assert!(lo <= hi && hi < self.levels[0].len());
        let k = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        self.levels[k][lo].min(self.levels[k][hi + 1 - (1 << k)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_naive_scan_exhaustively() {
        let values: Vec<u32> = [5u32, 2, 8, 2, 9, 1, 7, 3, 3, 0, 6, 4, 2, 8, 1]
            .iter()
            .flat_map(|&v| [v, v.wrapping_mul(7) % 11])
            .collect();
        let rmq = SparseRmq::build(&values);
        for lo in 0..values.len() {
            for hi in lo..values.len() {
                let naive = *values[lo..=hi].iter().min().unwrap();
                assert_eq!(rmq.query(lo, hi), naive, "range [{lo}, {hi}]");
            }
        }
    }

    #[test]
    fn single_element() {
        let rmq = SparseRmq::build(&[42]);
        assert_eq!(rmq.query(0, 0), 42);
    }
}
