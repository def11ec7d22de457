//! The unbounded-pair-correlation instances: N = 2^(d+2^d+1) points
//! against s = 2, where the counting structure forces F above a bound
//! that grows like 2^d/8.

use necklace::combinatorics::{bound_report, lower_bound, BoundReport};
use necklace::DigitStream;

fn main() -> necklace::Result<()> {
    let stream = DigitStream::levin();

    println!("{}", BoundReport::CSV_HEADER);
    for d in 2..=5 {
        // d = 5 needs 2^38 points; the row still carries the bound.
        let row = bound_report(&stream, d)?;
        println!("{}", row.csv_row());
    }

    println!();
    for d in [2u32, 3, 4, 6, 8, 10] {
        let b = lower_bound(d)?;
        println!("d = {d:>2}: bound {b} ~ {:.4}", b.to_f64());
    }
    println!("\nthe bound exceeds any fixed level, so F_N(2) cannot stay bounded");
    Ok(())
}
