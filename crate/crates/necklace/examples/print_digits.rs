//! Print the leading digits of the constant, block by block.

use necklace::{block_length, cumulative_length, DigitStream};

fn main() -> necklace::Result<()> {
    let stream = DigitStream::levin();

    println!("first 74 digits: {}", stream.prefix(74)?);
    println!();
    for d in 0..=3 {
        let start = if d == 0 { 0 } else { cumulative_length(d - 1) };
        let len = block_length(d);
        let shown = len.min(64) as u64;
        let digits = stream.digits_range(start as u64, shown)?;
        let ellipsis = if len > shown as u128 { "..." } else { "" };
        println!("block {d}: length {len:>6}, digits {digits}{ellipsis}");
    }

    // Every position is addressable directly; no prefix materialization.
    println!();
    for pos in [0u64, 73, 2121, 1_000_000_000, 137_440_004_169] {
        println!("digit at {pos:>13}: {}", stream.digit_at(pos)?);
    }
    Ok(())
}
