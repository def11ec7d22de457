//! Run the structural verification sweeps and print every check.

use necklace::combinatorics::{verify_counting, verify_lemmas};
use necklace::{ConstantSpec, DigitStream};

fn main() -> necklace::Result<()> {
    let lemmas = verify_lemmas(3)?;
    for check in &lemmas.checks {
        let tag = if check.passed { "PASS" } else { "FAIL" };
        println!("{tag} {} ({})", check.name, check.detail);
    }

    // The counting theorem, on the base constant and on a member whose
    // block matrices fall in the other dichotomy case.
    let base = DigitStream::levin();
    let rotated = DigitStream::new(ConstantSpec::levin().with_block(2, vec![1, 1, 1, 0], "0000"))?;
    for (label, stream) in [("levin", &base), ("rotated", &rotated)] {
        for d in 1..=3 {
            let summary = verify_counting(stream, d)?;
            let tag = if summary.passed() { "PASS" } else { "FAIL" };
            println!(
                "{tag} counting {label} d={d} (case {}, {} words, {} occurrences)",
                summary.case,
                summary.reports.len(),
                summary.total_expected()
            );
            for m in &summary.mismatches {
                println!("     {m}");
            }
        }
    }
    Ok(())
}
