//! Stripe doubling over boundary distance matrices, and combining two regions by hand.

use edist::dac::{check, combine, edit_distance_dacmm, Band, DacConfig, EdgeRule, Region, SpMatrix};

fn main() {
    let a = b"saturday afternoon";
    let b = b"sunday afternoons";
    let out = edit_distance_dacmm(a, b);
    println!("distance {}", out.distance);
    for (t, sigma) in out.stats.widths.iter().zip(&out.stats.sigmas) {
        println!("  stripe {t:>2}: best path inside costs {sigma}");
    }

    let cfg = DacConfig::default();
    let c = check(a, b, 1, &cfg);
    println!("\nstripe 1 matrix: {} inputs x {} outputs", c.matrix.inputs().len(), c.matrix.outputs().len());

    let rule = EdgeRule::new(b"kitten", b"sitting");
    let band = Band::unbounded(6, 7);
    let top = SpMatrix::by_dynamic_programming(&rule, Region::new(0, 3, 0, 7, band));
    let bottom = SpMatrix::by_dynamic_programming(&rule, Region::new(3, 6, 0, 7, band));
    let joined = combine(&top, &bottom).expect("regions share row 3");
    assert_eq!(joined, SpMatrix::by_dynamic_programming(&rule, Region::full(6, 7)));
    println!(
        "kitten/sitting via two halves: {}",
        joined.distance((0, 0), (6, 7)).unwrap()
    );
}
