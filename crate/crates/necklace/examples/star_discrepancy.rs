//! Star discrepancy of the orbit prefix, with the (log N)^2 trend.

use necklace::stats::star_discrepancy;
use necklace::DigitStream;

fn main() -> necklace::Result<()> {
    let stream = DigitStream::levin();

    println!("{:>8} {:>12} {:>22}", "N", "D*", "N D*/(log2 N)^2");
    for k in (4..=20).step_by(2) {
        let r = star_discrepancy(&stream, 1u64 << k)?;
        println!(
            "{:>8} {:>12.3e} {:>22.5}",
            r.n,
            r.d_star_approx(),
            r.ratio.unwrap()
        );
    }

    // The exact value is d_star_num / (N * 2^64); the float columns above
    // are display-only.
    let r = star_discrepancy(&stream, 1 << 10)?;
    println!(
        "\nexact at N = 1024: {} / (1024 * 2^{})",
        r.d_star_num, r.d_star_den_pow2
    );
    Ok(())
}
