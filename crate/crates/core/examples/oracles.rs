//! The quadratic reference algorithms the fast ones are checked against.

use edist::oracle::{antidiagonal_edit_distance, banded_dp, dp_table, DEFAULT_CELL_CAP};

fn main() {
    let a = b"sunday";
    let b = b"saturday";
    let table = dp_table(a, b, DEFAULT_CELL_CAP).expect("tiny input");

    print!("      ");
    for &c in b {
        print!("{:>3}", c as char);
    }
    println!();
    for i in 0..=a.len() {
        let label = if i == 0 { ' ' } else { a[i - 1] as char };
        print!("{label:>3}");
        for j in 0..=b.len() {
            print!("{:>3}", table.get(i, j));
        }
        println!();
    }

    let k = antidiagonal_edit_distance(a, b, DEFAULT_CELL_CAP).unwrap();
    println!("\ndistance {k}");
    for t in 2..=5 {
        println!("inside |i - j| <= {t}: {}", banded_dp(a, b, t));
    }

    match antidiagonal_edit_distance(&[0; 20_000], &[1; 20_000], DEFAULT_CELL_CAP) {
        Ok(k) => println!("large pair: {k}"),
        Err(e) => println!("large pair refused: {e}"),
    }
}
