//! Show the Pascal matrices over GF(2) and their rotated variants.

use necklace::gf2::{enumerate_suitable, Gf2Matrix};

fn main() -> necklace::Result<()> {
    for d in 0..=2 {
        let m = Gf2Matrix::pascal(d)?;
        println!("M_{d} ({0}x{0}):", m.dim());
        for row in m.row_strings() {
            println!("  {row}");
        }
        println!();
    }

    // One rotated variant per suitable tuple; all stay nonsingular.
    let m2 = Gf2Matrix::pascal(2)?;
    for nu in enumerate_suitable(4)? {
        let rm = m2.rotated(&nu)?;
        println!(
            "variant {nu:?}: rows {}, nonsingular = {}",
            rm.row_strings().join(" "),
            rm.is_nonsingular()
        );
    }

    // Columns of a rotated variant are column rotations of the base, so
    // solving still takes O(e^3) bit operations at worst.
    let nu = enumerate_suitable(4)?.into_iter().last().unwrap();
    let rm = m2.rotated(&nu)?;
    let w = 0b0110;
    let img = rm.mat_vec(w);
    println!("\n{nu:?}: w = {w:04b} -> {img:04b} -> solve back {:04b}", rm.solve(img)?);
    Ok(())
}
