//! Polynomial rolling-hash fingerprints.
//!
//! A string `s[1..l]` hashes to `sum s[i] * p^(l-i) mod q`, where each byte
//! contributes its own value as the digit. Two operations make the hash a
//! monoid over concatenation:
//!
//! * `concat` (⊕): `h(S1 S2) = h(S1) * p^|S2| + h(S2)`
//! * `remove_prefix` (⊖): `h(S2) = h(S1 S2) - p^|S2| * h(S1)`
//!
//! The empty string hashes to 0 with length 0, which is the identity for ⊕.

mod lcp;
mod table;

pub use lcp::{lcp_hash, HashConfig, HashLcp};
pub use table::{BlockedHashTable, PrefixHashTable, PrefixHashes};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// 2^61 - 1, the default modulus.
pub const MERSENNE_61: u64 = (1 << 61) - 1;

/// Largest prime below 2^62, used by the optional second fingerprint lane.
pub const SECONDARY_MODULUS: u64 = 4_611_686_018_427_387_847;

/// Number of distinct byte symbols; seeded bases are drawn above this.
pub const BYTE_ALPHABET: u64 = 256;

/// A fingerprint together with the number of symbols it covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct HashValue {
    pub value: u64,
    pub len: usize,
}

impl HashValue {
    pub const EMPTY: HashValue = HashValue { value: 0, len: 0 };

    pub fn new(value: u64, len: usize) -> Self {
        Self { value, len }
    }
}

/// Base, modulus and a table of powers of the base.
#[derive(Clone, Debug)]
pub struct HashParams {
    base: u64,
    modulus: u64,
    powers: Vec<u64>,
}

impl HashParams {
    /// Builds parameters with an explicit base, precomputing `base^0..=base^max_len`.
    ///
    /// Panics if `base < 2`, `base >= modulus` or `modulus >= 2^63`.
    pub fn new(base: u64, modulus: u64, max_len: usize) -> Self {
        assert!(modulus < 1 << 63, "modulus must fit in 63 bits");
        assert!(base >= 2 && base < modulus, "base must lie in [2, modulus)");
        let mut params = Self {
            base,
            modulus,
            powers: Vec::with_capacity(max_len + 1),
        };
        let mut acc = 1 % modulus;
        params.powers.push(acc);
        for _ in 0..max_len {
            acc = params.mul(acc, base);
            params.powers.push(acc);
        }
        params
    }

    /// Draws the base uniformly from `[257, modulus)` with a seeded generator.
    pub fn seeded(seed: u64, modulus: u64, max_len: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = rng.gen_range(BYTE_ALPHABET + 1..modulus);
        Self::new(base, modulus, max_len)
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Largest exponent served from the precomputed table.
    pub fn max_len(&self) -> usize {
        self.powers.len() - 1
    }

    pub fn powers(&self) -> &[u64] {
        &self.powers
    }

    /// `base^e mod modulus`.
    #[inline]
    pub fn pow(&self, e: usize) -> u64 {
        match self.powers.get(e) {
            Some(&v) => v,
            None => self.pow_slow(e),
        }
    }

    fn pow_slow(&self, mut e: usize) -> u64 {
        let mut acc = 1 % self.modulus;
        let mut sq = self.base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub(crate) fn mul(&self, a: u64, b: u64) -> u64 {
        let prod = a as u128 * b as u128;
        if self.modulus == MERSENNE_61 {
            let folded = (prod as u64 & MERSENNE_61) + (prod >> 61) as u64;
            let folded = (folded & MERSENNE_61) + (folded >> 61);
            if folded >= MERSENNE_61 {
                folded - MERSENNE_61
            } else {
                folded
            }
        } else {
            (prod % self.modulus as u128) as u64
        }
    }

    #[inline]
    pub(crate) fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.modulus - b
        }
    }

    /// Digit contributed by one byte.
    #[inline]
    pub(crate) fn digit(&self, c: u8) -> u64 {
        c as u64 % self.modulus
    }

    /// Fingerprint of a single symbol. Code 0 is the reserved sentinel and is never hashed.
    pub fn hash_char(&self, c: u8) -> HashValue {
        debug_assert!(c != 0, "code 0 is the reserved sentinel");
        HashValue::new(self.digit(c), 1)
    }

    /// `h1 ⊕ h2`.
    #[inline]
    pub fn concat(&self, h1: HashValue, h2: HashValue) -> HashValue {
        HashValue::new(
            self.add(self.mul(h1.value, self.pow(h2.len)), h2.value),
            h1.len + h2.len,
        )
    }

    /// `h12 ⊖ h1`: strips the prefix fingerprinted by `h1` off `h12`.
    #[inline]
    pub fn remove_prefix(&self, h12: HashValue, h1: HashValue) -> HashValue {
        debug_assert!(h1.len <= h12.len);
        let rest = h12.len - h1.len;
        HashValue::new(
            self.sub(h12.value, self.mul(h1.value, self.pow(rest))),
            rest,
        )
    }

    /// Sequential fold of the whole slice.
    pub fn hash_bytes(&self, s: &[u8]) -> HashValue {
        let value = s
            .iter()
            .fold(0, |acc, &c| self.add(self.mul(acc, self.base), self.digit(c)));
        HashValue::new(value, s.len())
    }
}
