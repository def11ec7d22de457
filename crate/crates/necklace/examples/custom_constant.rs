//! Build a family member from a JSON spec and compare it to the base
//! constant.

use necklace::{ConstantSpec, DigitStream};

fn main() -> necklace::Result<()> {
    let json = r#"{
        "default": "levin",
        "blocks": [
            { "d": 1, "nu": [1, 0], "z": "00" },
            { "d": 2, "nu": [2, 1, 0, 0], "z": "1010" }
        ]
    }"#;
    let spec = ConstantSpec::from_json(json)?;
    println!("round-trips: {}", ConstantSpec::from_json(&spec.to_json()?).is_ok());

    let member = DigitStream::new(spec)?;
    let base = DigitStream::levin();

    println!("base   : {}", base.prefix(74)?);
    println!("member : {}", member.prefix(74)?);

    // Only the overridden blocks change: block 1 covers positions 2..10,
    // block 2 covers 10..74.
    let same: Vec<bool> = (0..74)
        .map(|i| base.digit_at(i).unwrap() == member.digit_at(i).unwrap())
        .collect();
    let diff_from = same.iter().position(|&s| !s).unwrap();
    println!("first differing position: {diff_from}");
    Ok(())
}
