//! Skew (DC3) suffix sorting.
//!
//! Sorts the suffixes starting at positions `i mod 3 != 0` by recursively
//! naming character triples, sorts the remaining suffixes with one radix pass
//! against those ranks, then merges the two classes.

use crate::error::{Error, Result};

/// Suffix array of `text`, as 0-based start positions in lexicographic order.
///
/// Codes must be positive except for at most one 0, which acts as a unique
/// smallest separator. A second 0 is rejected.
pub fn suffix_array(text: &[u32]) -> Result<Vec<usize>> {
    let mut zero = None;
    for (position, &c) in text.iter().enumerate() {
        if c == 0 {
            if zero.is_some() {
                return Err(Error::MisplacedSentinel { position });
            }
            zero = Some(position);
        }
    }
    let n = text.len();
    if n <= 1 {
        return Ok((0..n).collect());
    }
    // Shift codes up by one: the separator becomes 1 and 0 is left for padding.
    let mut s: Vec<usize> = Vec::with_capacity(n + 3);
    s.extend(text.iter().map(|&c| c as usize + 1));
    let alphabet = s.iter().copied().max().unwrap_or(0);
    s.extend([0, 0, 0]);
    let mut sa = vec![0usize; n];
    skew(&s, &mut sa, n, alphabet);
    Ok(sa)
}

/// Stable counting sort of `src` into `dst` keyed by `keys[idx + offset]`.
fn radix_pass(src: &[usize], dst: &mut [usize], keys: &[usize], offset: usize, alphabet: usize) {
    let mut count = vec![0usize; alphabet + 2];
    for &idx in src {
        count[keys[idx + offset]] += 1;
    }
    let mut sum = 0;
    for c in count.iter_mut() {
        let t = *c;
        *c = sum;
        sum += t;
    }
    for &idx in src {
        let k = keys[idx + offset];
        dst[count[k]] = idx;
        count[k] += 1;
    }
}

#[inline]
fn leq2(a1: usize, a2: usize, b1: usize, b2: usize) -> bool {
    a1 < b1 || (a1 == b1 && a2 <= b2)
}

#[inline]
fn leq3(a1: usize, a2: usize, a3: usize, b1: usize, b2: usize, b3: usize) -> bool {
    a1 < b1 || (a1 == b1 && leq2(a2, a3, b2, b3))
}

/// `s` holds `n` codes in `1..=alphabet` followed by three zeros.
fn skew(s: &[usize], sa: &mut [usize], n: usize, alphabet: usize) {
    let n0 = n.div_ceil(3);
    let n1 = (n + 1) / 3;
    let n2 = n / 3;
    let n02 = n0 + n2;

    let mut s12 = vec![0usize; n02 + 3];
    let mut sa12 = vec![0usize; n02 + 3];

    // Positions i mod 3 != 0, plus a dummy mod-1 position when n % 3 == 1.
    let mut j = 0;
    for i in 0..n + (n0 - n1) {
        if i % 3 != 0 {
            s12[j] = i;
            j += 1;
        }
    }

    radix_pass(&s12[..n02], &mut sa12[..n02], s, 2, alphabet);
    radix_pass(&sa12[..n02], &mut s12[..n02], s, 1, alphabet);
    radix_pass(&s12[..n02], &mut sa12[..n02], s, 0, alphabet);

    // Name the triples.
    let mut name = 0;
    let mut last = (usize::MAX, usize::MAX, usize::MAX);
    for &p in &sa12[..n02] {
        let triple = (s[p], s[p + 1], s[p + 2]);
        if triple != last {
            name += 1;
            last = triple;
        }
        if p % 3 == 1 {
            s12[p / 3] = name;
        } else {
            s12[p / 3 + n0] = name;
        }
    }

    if name < n02 {
        let mut inner = vec![0usize; n02];
        skew(&s12, &mut inner, n02, name);
        sa12[..n02].copy_from_slice(&inner);
        for (rank, &p) in inner.iter().enumerate() {
            s12[p] = rank + 1;
        }
    } else {
        for k in 0..n02 {
            sa12[s12[k] - 1] = k;
        }
    }

    // Sort mod-0 suffixes by (first char, rank of the following mod-1 suffix).
    let s0: Vec<usize> = sa12[..n02]
        .iter()
        .filter(|&&p| p < n0)
        .map(|&p| 3 * p)
        .collect();
    let mut sa0 = vec![0usize; n0];
    radix_pass(&s0, &mut sa0, s, 0, alphabet);

    // Merge.
    let pos12 = |t: usize| {
        if sa12[t] < n0 {
            sa12[t] * 3 + 1
        } else {
            (sa12[t] - n0) * 3 + 2
        }
    };
    let (mut p, mut t, mut k) = (0usize, n0 - n1, 0usize);
    while k < n {
        let i = pos12(t);
        let j = sa0[p];
        let take12 = if sa12[t] < n0 {
            leq2(s[i], s12[sa12[t] + n0], s[j], s12[j / 3])
        } else {
            leq3(s[i], s[i + 1], s12[sa12[t] - n0 + 1], s[j], s[j + 1], s12[j / 3 + n0])
        };
        if take12 {
            sa[k] = i;
            t += 1;
            k += 1;
            if t == n02 {
                while p < n0 {
                    sa[k] = sa0[p];
                    p += 1;
                    k += 1;
                }
            }
        } else {
            sa[k] = j;
            p += 1;
            k += 1;
            if p == n0 {
                while t < n02 {
                    sa[k] = pos12(t);
                    t += 1;
                    k += 1;
                }
            }
        }
    }
}

/// Inverse permutation: `rank[sa[i]] = i`.
pub fn inverse(sa: &[usize]) -> Vec<usize> {
    let mut rank = vec![0usize; sa.len()];
    for (i, &p) in sa.iter().enumerate() {
        rank[p] = i;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(text: &[u32]) -> Vec<usize> {
        let mut sa: Vec<usize> = (0..text.len()).collect();
        sa.sort_by(|&a, &b| text[a..].cmp(&text[b..]));
        sa
    }

    fn codes(s: &[u8]) -> Vec<u32> {
        s.iter().map(|&c| c as u32).collect()
    }

    #[test]
    fn banana() {
        let one_based: Vec<usize> = suffix_array(&codes(b"banana")).unwrap().iter().map(|p| p + 1).collect();
        assert_eq!(one_based, [6, 4, 2, 1, 5, 3]);
    }

    #[test]
    fn tiny_and_repetitive() {
        assert_eq!(suffix_array(&[5]).unwrap(), [0]);
        assert!(suffix_array(&[]).unwrap().is_empty());
        let one_based: Vec<usize> = suffix_array(&codes(b"aaaa")).unwrap().iter().map(|p| p + 1).collect();
        assert_eq!(one_based, [4, 3, 2, 1]);
    }

    #[test]
    fn separator_rules() {
        let text = [3, 1, 2, 0, 2, 1];
        assert_eq!(suffix_array(&text).unwrap(), naive(&text));
        assert!(matches!(
            suffix_array(&[1, 0, 2, 0]),
            Err(Error::MisplacedSentinel { position: 3 })
        ));
    }

    #[test]
    fn matches_comparison_sort() {
        let mut state = 12345u64;
        for len in (1..300).chain([1000, 4096, 10_000]) {
            for sigma in [1u32, 2, 4, 256] {
                let text: Vec<u32> = (0..len)
                    .map(|_| {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        ((state >> 33) as u32 % sigma) + 1
                    })
                    .collect();
                assert_eq!(suffix_array(&text).unwrap(), naive(&text), "len {len} sigma {sigma}");
            }
        }
    }

    #[test]
    fn inverse_permutation() {
        let sa: Vec<usize> = (0..100_000).rev().collect();
        let rank = inverse(&sa);
        for (i, &p) in sa.iter().enumerate() {
            assert_eq!(rank[p], i);
        }
    }
}
