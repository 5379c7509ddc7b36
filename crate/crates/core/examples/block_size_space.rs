//! How the block size trades table space for query time.

use edist::harness::{generate_edits, run_algorithm, space_table, Algorithm, GenSpec, RunOptions, SPACE_BLOCKS};

fn main() -> edist::Result<()> {
    let n = 1_000_000;
    let (a, b) = generate_edits(&GenSpec {
        n,
        k: 200,
        sigma: 256,
        seed: 5,
    })?;
    println!("{:>5} {:>9} {:>8} {:>9}", "block", "words", "ratio", "total_s");
    for row in space_table(n, &SPACE_BLOCKS, 5) {
        let options = RunOptions {
            block_size: row.block,
            reps: 1,
            ..RunOptions::default()
        };
        let report = run_algorithm(Algorithm::BfsBh, a.bytes(), b.bytes(), &options)?;
        println!("{:>5} {:>9} {:>8.4} {:>9.4}", row.block, row.words, row.ratio, report.total_s);
    }
    Ok(())
}
