use rayon::prelude::*;

use super::{HashParams, HashValue};

/// Segments handled by one worker during the parallel scan.
const SCAN_GRAIN: usize = 1 << 14;

/// Prefix fingerprints of a sequence, whichever way they are stored.
pub trait PrefixHashes: Send + Sync {
    /// `h(seq[..x])`.
    fn prefix_hash(&self, seq: &[u8], params: &HashParams, x: usize) -> HashValue;

    /// Fingerprint of `seq[start..start + len]`.
    fn range_hash(&self, seq: &[u8], params: &HashParams, start: usize, len: usize) -> HashValue {
        if len == 0 {
            return HashValue::EMPTY;
        }
        params.remove_prefix(
            self.prefix_hash(seq, params, start + len),
            self.prefix_hash(seq, params, start),
        )
    }

    /// Machine words of auxiliary storage held by the table.
    fn aux_words(&self) -> usize;
}

/// `entries[x] = h(seq[..x])` for every `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixHashTable {
    entries: Vec<u64>,
}

impl PrefixHashTable {
    pub fn build(seq: &[u8], params: &HashParams) -> Self {
        let mut entries = vec![0u64; seq.len() + 1];
        entries[1..]
            .par_iter_mut()
            .zip(seq.par_iter())
            .for_each(|(slot, &c)| *slot = params.digit(c));
        scan_segments(&mut entries[1..], 1, params);
        Self { entries }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }
}

impl PrefixHashes for PrefixHashTable {
    #[inline]
    fn prefix_hash(&self, _seq: &[u8], _params: &HashParams, x: usize) -> HashValue {
        HashValue::new(self.entries[x], x)
    }

    fn aux_words(&self) -> usize {
        self.entries.len()
    }
}

/// Prefix fingerprints stored only at block boundaries: `entries[j] = h(seq[..j*block])`.
///
/// Holds `floor(n / block) + 1` words. A trailing partial block is not stored;
/// prefixes ending inside it are rebuilt on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockedHashTable {
    block: usize,
    entries: Vec<u64>,
}

impl BlockedHashTable {
    /// Panics if `block == 0`.
    pub fn build(seq: &[u8], block: usize, params: &HashParams) -> Self {
        assert!(block >= 1, "block size must be positive");
        let full = seq.len() / block;
        let mut entries = vec![0u64; full + 1];
        entries[1..]
            .par_iter_mut()
            .zip(seq.par_chunks_exact(block))
            .for_each(|(slot, chunk)| *slot = params.hash_bytes(chunk).value);
        scan_segments(&mut entries[1..], block, params);
        Self { block, entries }
    }

    pub fn block(&self) -> usize {
        self.block
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// `h(seq[..x])` along with the number of per-symbol ⊕ steps spent (at most `block - 1`).
    pub fn get_hash_counted(&self, seq: &[u8], params: &HashParams, x: usize) -> (HashValue, usize) {
        if x == 0 {
            return (HashValue::EMPTY, 0);
        }
        let stored = (x / self.block).min(self.entries.len() - 1);
        let from = stored * self.block;
        let mut value = self.entries[stored];
        for &c in &seq[from..x] {
            value = params.add(params.mul(value, params.base()), params.digit(c));
        }
        (HashValue::new(value, x), x - from)
    }

    pub fn get_hash(&self, seq: &[u8], params: &HashParams, x: usize) -> HashValue {
        self.get_hash_counted(seq, params, x).0
    }
}

impl PrefixHashes for BlockedHashTable {
    #[inline]
    fn prefix_hash(&self, seq: &[u8], params: &HashParams, x: usize) -> HashValue {
        self.get_hash(seq, params, x)
    }

    fn aux_words(&self) -> usize {
        self.entries.len()
    }
}

/// Inclusive ⊕-scan over fingerprints of consecutive segments, each `seg_len` symbols long.
///
/// Two passes: every chunk scans locally, then the chunk carries are folded
/// sequentially and pushed back into each chunk. Modular arithmetic is exact,
/// so the result does not depend on the chunking or the thread count.
fn scan_segments(values: &mut [u64], seg_len: usize, params: &HashParams) {
    let shift = params.pow(seg_len);
    let local = |chunk: &mut [u64]| {
        for i in 1..chunk.len() {
            chunk[i] = params.add(params.mul(chunk[i - 1], shift), chunk[i]);
        }
    };
    if values.len() <= SCAN_GRAIN {
        local(values);
        return;
    }
    values.par_chunks_mut(SCAN_GRAIN).for_each(local);

    let mut carries = Vec::with_capacity(values.len().div_ceil(SCAN_GRAIN));
    let mut carry = 0u64;
    for chunk in values.chunks(SCAN_GRAIN) {
        carries.push(carry);
        let total = *chunk.last().expect("chunks are non-empty");
        carry = params.add(params.mul(carry, params.pow(seg_len * chunk.len())), total);
    }

    values
        .par_chunks_mut(SCAN_GRAIN)
        .zip(carries.par_iter())
        .for_each(|(chunk, &carry)| {
            if carry == 0 {
                return;
            }
            for (i, v) in chunk.iter_mut().enumerate() {
                let lifted = params.mul(carry, params.pow(seg_len * (i + 1)));
                *v = params.add(lifted, *v);
            }
        });
}
