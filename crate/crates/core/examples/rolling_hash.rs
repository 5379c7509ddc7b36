//! Fingerprints, their algebra, and hash-based LCP queries.
//!
//! Run with `cargo run --release --example rolling_hash`.

use edist::hash::{HashConfig, HashLcp, HashParams, PrefixHashTable, MERSENNE_61};
use edist::LcpOracle;

fn main() {
    let params = HashParams::seeded(7, MERSENNE_61, 64);
    let left = params.hash_bytes(b"edit ");
    let right = params.hash_bytes(b"distance");
    let whole = params.concat(left, right);
    assert_eq!(whole, params.hash_bytes(b"edit distance"));
    assert_eq!(params.remove_prefix(whole, left), right);
    println!("base {} modulus {}", params.base(), params.modulus());
    println!("h(\"edit distance\") = {:#x} over {} symbols", whole.value, whole.len);

    let table = PrefixHashTable::build(b"banana", &params);
    println!("prefix fingerprints of banana: {:x?}", table.entries());

    let a = b"ACGTACGTTTGACCA";
    let b = b"ACGTACGATTGACCA";
    let cfg = HashConfig::default();
    let full = HashLcp::with_prefix_tables(a, b, &cfg);
    let blocked = HashLcp::with_blocked_tables(a, b, 4, &cfg);
    for (i, j) in [(0, 0), (8, 8), (3, 3), (10, 2)] {
        println!(
            "lcp({i:>2}, {j:>2}) = {} (blocked: {})",
            full.lcp(i, j),
            blocked.lcp(i, j)
        );
    }

    let dual = HashLcp::with_prefix_tables(a, b, &HashConfig { dual: true, ..cfg });
    assert_eq!(dual.lcp(0, 0), 7);
}
