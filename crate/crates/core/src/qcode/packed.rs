use crate::algebra::F4;
use crate::error::{Error, Result};

/// Longest word the bitsliced engine can hold.
pub const MAX_LENGTH: usize = 64;

/// A GF(4) vector of length <= 64 stored as two bit planes: bit j of `lo`
/// is the 1-coefficient of symbol j, bit j of `hi` its w-coefficient.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PackedWord {
    pub lo: u64,
    pub hi: u64,
}

impl PackedWord {
    pub const ZERO: PackedWord = PackedWord { lo: 0, hi: 0 };

    pub fn from_symbols(symbols: &[F4]) -> Result<PackedWord> {
        if symbols.len() > MAX_LENGTH {
            return Err(Error::LengthTooLarge {
                len: symbols.len(),
                max: MAX_LENGTH,
            });
        }
        let mut w = PackedWord::ZERO;
        for (j, s) in symbols.iter().enumerate() {
            w.lo |= u64::from(s.bits() & 1) << j;
            w.hi |= u64::from(s.bits() >> 1) << j;
        }
        Ok(w)
    }

    pub fn to_symbols(self, len: usize) -> Vec<F4> {
        (0..len)
            .map(|j| F4::from_bits((((self.lo >> j) & 1) | (((self.hi >> j) & 1) << 1)) as u8))
            .collect()
    }

    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: PackedWord) -> PackedWord {
        PackedWord {
            lo: self.lo ^ other.lo,
            hi: self.hi ^ other.hi,
        }
    }

    /// Multiplies every symbol by `c`.
    #[inline]
    pub fn scale(self, c: F4) -> PackedWord {
        let PackedWord { lo, hi } = self;
        match c.bits() {
            0 => PackedWord::ZERO,
            1 => self,
            // (c0 + c1 w) w = c1 + (c0 + c1) w
            2 => PackedWord { lo: hi, hi: lo ^ hi },
            // (c0 + c1 w) w^2 = (c0 + c1) + c0 w
            _ => PackedWord { lo: lo ^ hi, hi: lo },
        }
    }

    /// Nonzero-symbol mask.
    #[inline]
    pub fn support(self) -> u64 {
        self.lo | self.hi
    }

    #[inline]
    pub fn weight(self) -> u32 {
        self.support().count_ones()
    }
}
