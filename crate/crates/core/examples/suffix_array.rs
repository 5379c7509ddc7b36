//! Suffix array, LCP array and constant-time LCP queries across two strings.

use edist::suffix::{inverse, lcp_array, suffix_array, SuffixArrayIndex};

fn main() {
    let word = b"mississippi";
    let text: Vec<u32> = word.iter().map(|&c| c as u32).collect();
    let sa = suffix_array(&text).expect("text has no zero symbol");
    let rank = inverse(&sa);
    let lcp = lcp_array(&text, &sa, &rank);

    println!("{:>4} {:>4}  suffix", "pos", "lcp");
    for (r, &p) in sa.iter().enumerate() {
        println!("{p:>4} {:>4}  {}", lcp[r], String::from_utf8_lossy(&word[p..]));
    }

    let a = b"the cat sat on the mat";
    let b = b"the cat sat on a hat";
    let index = SuffixArrayIndex::new(a, b);
    println!();
    for (i, j) in [(0, 0), (4, 4), (15, 17), (19, 17)] {
        println!(
            "lcp({:?}, {:?}) = {}",
            String::from_utf8_lossy(&a[i..]),
            String::from_utf8_lossy(&b[j..]),
            index.lcp_sa(i, j)
        );
    }
}
