//! Compare the orbit's pair correlation against an iid uniform baseline.
//!
//! For Poissonian pair correlations F_N(s) tends to 2s. The seeded
//! baseline reproduces that; the orbit points do not.

use necklace::stats::{baseline_points, pair_correlation, pair_correlation_of, DEFAULT_BASELINE_SEED};
use necklace::{DigitStream, Ratio};

fn main() -> necklace::Result<()> {
    let n = 1u64 << 14;
    let stream = DigitStream::levin();
    let iid = baseline_points(n, 40, DEFAULT_BASELINE_SEED)?;

    println!("N = {n}");
    println!("{:>5} {:>12} {:>12} {:>6}", "s", "orbit F", "iid F", "2s");
    for s in [Ratio::new(1, 2)?, Ratio::from_int(1), Ratio::from_int(2), Ratio::from_int(4)] {
        let orbit = pair_correlation(&stream, n, s)?;
        let baseline = pair_correlation_of(&iid, s, None)?;
        println!(
            "{:>5} {:>12.4} {:>12.4} {:>6.1}",
            s.to_string(),
            orbit.f_approx(),
            baseline.f_approx(),
            2.0 * s.to_f64()
        );
    }
    Ok(())
}
