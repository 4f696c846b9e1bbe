//! Seeded splitmix64 stream. Identical seeds give identical streams on every
//! platform, which is what makes generated instances reproducible.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid range [{lo}, {hi}]: need lo <= hi and hi - lo + 1 <= 2^32")]
pub struct RangeError {
    pub lo: i64,
    pub hi: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// `lo + next_u64() mod (hi - lo + 1)`. Modulo bias is below 2^-31 for
    /// the permitted span.
    pub fn uniform_int(&mut self, lo: i64, hi: i64) -> Result<i64, RangeError> {
        if lo > hi || (hi as i128 - lo as i128 + 1) > (1i128 << 32) {
            return Err(RangeError { lo, hi });
        }
        Ok(self.draw(lo, hi))
    }

    /// Unchecked variant for generators whose ranges are validated up front.
    pub(crate) fn draw(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }

    /// Uniform index in `0..n`.
    pub(crate) fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct transcription of the recurrence on u128 with explicit masking,
    /// kept separate from the wrapping-arithmetic implementation above.
    fn reference(state: &mut u128) -> u64 {
        const MASK: u128 = (1u128 << 64) - 1;
        *state = (*state + 0x9E3779B97F4A7C15) & MASK;
        let mut z = *state;
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK;
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK;
        (z ^ (z >> 31)) as u64
    }

    #[test]
    fn published_vectors_for_seed_zero() {
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn matches_reference_recurrence() {
        for seed in [0u64, 1, 42, u64::MAX] {
            let mut rng = SplitMix64::new(seed);
            let mut st = seed as u128;
            for _ in 0..64 {
                assert_eq!(rng.next_u64(), reference(&mut st));
            }
        }
    }

    #[test]
    fn equal_seeds_equal_streams() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..1000 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut a = SplitMix64::new(9);
        let mut b = SplitMix64::new(9);
        for _ in 0..1000 {
            assert_eq!(a.uniform_int(-5, 40).unwrap(), b.uniform_int(-5, 40).unwrap());
        }
    }

    #[test]
    fn degenerate_range_still_advances() {
        let mut a = SplitMix64::new(3);
        assert_eq!(a.uniform_int(5, 5).unwrap(), 5);
        let mut b = SplitMix64::new(3);
        b.next_u64();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_ranges() {
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.uniform_int(3, 2), Err(RangeError { lo: 3, hi: 2 }));
        assert!(rng.uniform_int(0, 1 << 32).is_err());
        assert!(rng.uniform_int(0, (1 << 32) - 1).is_ok());
    }

    #[test]
    fn buckets_within_three_sigma() {
        const DRAWS: u64 = 1_000_000;
        let mut rng = SplitMix64::new(2024);
        let mut buckets = [0u64; 4];
        for _ in 0..DRAWS {
            buckets[rng.uniform_int(0, 3).unwrap() as usize] += 1;
        }
        // Binomial(10^6, 1/4): sigma = sqrt(10^6 * 3/16) ~= 433.
        let sigma = ((DRAWS as f64) * 0.25 * 0.75).sqrt();
        for b in buckets {
            assert!((b as f64 - 250_000.0).abs() <= 3.0 * sigma, "bucket {b}");
        }
    }
}
