//! Walk one block's target words: scan counts, structural predictions,
//! and the occurrence positions both ways.

use necklace::combinatorics::{constrained_count, enumerate_targets, occurrence_oracle};
use necklace::DigitStream;

fn main() -> necklace::Result<()> {
    let stream = DigitStream::levin();
    let d = 2;
    println!("block {d} digits: {}", stream.block_digits(d)?);
    println!();
    println!("{:>8} {:>9} {:>12} {:>7} positions", "word", "expected", "constrained", "total");

    for a in enumerate_targets(d)? {
        let r = constrained_count(&stream, &a)?;
        println!(
            "{:>8} {:>9} {:>12} {:>7} {:?}",
            r.word, r.expected, r.constrained_count, r.total_count, r.positions
        );

        // The oracle reconstructs each position algebraically: one matrix
        // solve per alignment, no scanning.
        let e = a.e();
        let mut algebraic: Vec<u64> = (d..=e)
            .filter_map(|z| occurrence_oracle(&stream, &a, z).transpose())
            .collect::<necklace::Result<_>>()?;
        algebraic.sort_unstable();
        assert_eq!(algebraic, r.positions);
    }
    println!("\noracle positions matched scan positions for every word");
    Ok(())
}
