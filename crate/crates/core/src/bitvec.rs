//! Multi-word bit vectors with set / clear / find-first-set.
//!
//! Bit `j` lives in word `j / 64` at in-word position `j % 64`. Bits at or
//! beyond `len()` are always zero.

use thiserror::Error;

const WORD: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("bit position {pos} out of range for length {len}")]
pub struct BitRangeError {
    pub pos: usize,
    pub len: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BitVec {
    words: Vec<u64>,
    nbits: usize,
}

impl BitVec {
    pub fn zeros(nbits: usize) -> Self {
        Self {
            words: vec![0; nbits.div_ceil(WORD)],
            nbits,
        }
    }

    pub fn ones(nbits: usize) -> Self {
        let mut v = Self::zeros(nbits);
        v.fill_ones(nbits).expect("k == nbits");
        v
    }

    pub fn len(&self) -> usize {
        self.nbits
    }

    pub fn is_empty(&self) -> bool {
        self.nbits == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Mask of valid bits in word `w`.
    #[inline]
    fn word_mask(&self, w: usize) -> u64 {
        let hi = self.nbits - w * WORD;
        if hi >= WORD {
            u64::MAX
        } else {
            (1u64 << hi) - 1
        }
    }

    #[inline]
    pub fn get(&self, pos: usize) -> bool {
        debug_assert!(pos < self.nbits);
        self.words[pos / WORD] >> (pos % WORD) & 1 == 1
    }

    pub fn set(&mut self, pos: usize) -> Result<(), BitRangeError> {
        self.check(pos)?;
        self.set_unchecked(pos);
        Ok(())
    }

    pub fn clear(&mut self, pos: usize) -> Result<(), BitRangeError> {
        self.check(pos)?;
        self.clear_unchecked(pos);
        Ok(())
    }

    fn check(&self, pos: usize) -> Result<(), BitRangeError> {
        if pos < self.nbits {
            Ok(())
        } else {
            Err(BitRangeError {
                pos,
                len: self.nbits,
            })
        }
    }

    #[inline]
    pub(crate) fn set_unchecked(&mut self, pos: usize) {
        debug_assert!(pos < self.nbits);
        self.words[pos / WORD] |= 1u64 << (pos % WORD);
    }

    #[inline]
    pub(crate) fn clear_unchecked(&mut self, pos: usize) {
        debug_assert!(pos < self.nbits);
        self.words[pos / WORD] &= !(1u64 << (pos % WORD));
    }

    /// Smallest set position, or `None` when every bit is zero.
    #[inline]
    pub fn ffs(&self) -> Option<usize> {
        self.ffs_from_word(0)
    }

    /// Like [`ffs`](Self::ffs) but skips words before `word`. Callers use it
    /// when every bit below `word * 64` is known to be zero.
    #[inline]
    pub fn ffs_from_word(&self, word: usize) -> Option<usize> {
        self.words[word.min(self.words.len())..]
            .iter()
            .position(|&w| w != 0)
            .map(|i| {
                let w = word + i;
                w * WORD + self.words[w].trailing_zeros() as usize
            })
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Sets bits `[0, k)` and clears the rest.
    pub fn fill_ones(&mut self, k: usize) -> Result<(), BitRangeError> {
        if k > self.nbits {
            return Err(BitRangeError {
                pos: k,
                len: self.nbits,
            });
        }
        let full = k / WORD;
        for (i, w) in self.words.iter_mut().enumerate() {
            *w = if i < full {
                u64::MAX
            } else if i == full && k % WORD != 0 {
                (1u64 << (k % WORD)) - 1
            } else {
                0
            };
        }
        Ok(())
    }

    /// Bitwise complement restricted to the logical length.
    pub fn complement(&self) -> BitVec {
        let words = (0..self.words.len())
            .map(|w| !self.words[w] & self.word_mask(w))
            .collect();
        BitVec {
            words,
            nbits: self.nbits,
        }
    }

    /// Complement of word `w`, restricted to the logical length.
    #[inline]
    pub(crate) fn complement_word(&self, w: usize) -> u64 {
        !self.words[w] & self.word_mask(w)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}
