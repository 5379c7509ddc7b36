use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sequence::Sequence;

/// Parameters of a synthetic pair: a random `A` of length `n` and `B` at most `k` edits away.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub k: usize,
    pub sigma: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        if self.k > self.n {
            return Err(Error::InvalidGenSpec(format!("k = {} exceeds n = {}", self.k, self.n)));
        }
        if !(2..=256).contains(&self.sigma) {
            return Err(Error::InvalidGenSpec(format!("alphabet size {} is outside 2..=256", self.sigma)));
        }
        Ok(())
    }

    /// Byte used for symbol `c < sigma`: lowercase letters when they suffice, raw bytes otherwise.
    pub fn symbol(&self, c: usize) -> u8 {
        if self.sigma <= 26 {
            b'a' + c as u8
        } else {
            c as u8
        }
    }

    fn code(&self, byte: u8) -> usize {
        if self.sigma <= 26 {
            (byte - b'a') as usize
        } else {
            byte as usize
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Edit {
    Substitute,
    Insert,
    Delete,
}

/// Draws `A` uniformly and applies `k` uniformly chosen edits at distinct positions.
///
/// Edits are applied from the rightmost position leftwards so each lands at
/// its sampled index of `A`.
pub fn generate_edits(spec: &GenSpec) -> Result<(Sequence, Sequence)> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let sigma = spec.sigma as u32;
    let a: Vec<u8> = (0..spec.n)
        .map(|_| spec.symbol(rng.gen_range(0..sigma) as usize))
        .collect();

    let mut positions = index::sample(&mut rng, spec.n, spec.k).into_vec();
    positions.sort_unstable_by(|p, q| q.cmp(p));
    let mut b = a.clone();
    for p in positions {
        let edit = match rng.gen_range(0..3u32) {
            0 => Edit::Substitute,
            1 => Edit::Insert,
            _ => Edit::Delete,
        };
        match edit {
            Edit::Substitute => {
                let shift = rng.gen_range(1..sigma) as usize;
                b[p] = spec.symbol((spec.code(b[p]) + shift) % spec.sigma);
            }
            Edit::Insert => b.insert(p, spec.symbol(rng.gen_range(0..sigma) as usize)),
            Edit::Delete => {
                b.remove(p);
            }
        }
    }
    Ok((Sequence::new(a), Sequence::new(b)))
}
