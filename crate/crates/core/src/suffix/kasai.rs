/// LCP array by Kasai's algorithm: `lcp[i]` is the common-prefix length of the
/// suffixes at `sa[i - 1]` and `sa[i]`, with `lcp[0] = 0`.
pub fn lcp_array(text: &[u32], sa: &[usize], rank: &[usize]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] == 0 {
            h = 0;
            continue;
        }
        let j = sa[rank[i] - 1];
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[rank[i]] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suffix::dc3::{inverse, suffix_array};

    fn naive_lcp(text: &[u32], sa: &[usize]) -> Vec<u32> {
        let mut out = vec![0; sa.len()];
        for i in 1..sa.len() {
            let (x, y) = (&text[sa[i - 1]..], &text[sa[i]..]);
            out[i] = x.iter().zip(y).take_while(|(p, q)| p == q).count() as u32;
        }
        out
    }

    fn check(text: &[u32]) -> Vec<u32> {
        let sa = suffix_array(text).unwrap();
        let lcp = lcp_array(text, &sa, &inverse(&sa));
        assert_eq!(lcp, naive_lcp(text, &sa));
        lcp
    }

    #[test]
    fn examples() {
        let banana: Vec<u32> = b"banana".iter().map(|&c| c as u32).collect();
        assert_eq!(check(&banana), [0, 1, 3, 0, 0, 2]);
        assert_eq!(check(&[1, 1, 1, 1]), [0, 1, 2, 3]);
        assert_eq!(check(&[4, 2, 3, 1]), [0, 0, 0, 0]);
    }

    #[test]
    fn random_texts() {
        let mut state = 99u64;
        for len in [2usize, 17, 200, 2000] {
            for sigma in [2u32, 4, 256] {
                let text: Vec<u32> = (0..len)
                    .map(|_| {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        (state % sigma as u64) as u32 + 1
                    })
                    .collect();
                check(&text);
            }
        }
    }
}
