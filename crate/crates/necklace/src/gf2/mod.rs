//! GF(2) building blocks: packed bit words, Pascal triangle matrices and
//! their rotated variants, and the suitable tuples that index them.

mod matrix;
mod suitable;
mod word;

pub use matrix::Gf2Matrix;
pub use suitable::{enumerate_suitable, SuitableTuple};
pub use word::BitWord;

/// Mask with the low `e` bits set, `1 <= e <= 64`.
pub(crate) fn low_mask(e: u32) -> u64 {
    debug_assert!((1..=64).contains(&e));
    if e == 64 {
        u64::MAX
    } else {
        (1u64 << e) - 1
    }
}

/// `rot` rotation steps at once on a value-packed word of width `e`: each
/// step moves the last digit to the front and shifts the rest toward the
/// end.
pub(crate) fn rotate_by(v: u64, rot: u32, e: u32) -> u64 {
    let r = rot % e;
    if r == 0 {
        return v;
    }
    ((v >> r) | (v << (e - r))) & low_mask(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rotate_step(v: u64, e: u32) -> u64 {
        rotate_by(v, 1, e)
    }

    #[test]
    fn rotation_moves_last_digit_to_front() {
        // 1000 -> 0100 -> 0010 -> 0001 -> 1000
        let mut v = 0b1000;
        let seen: Vec<u64> = (0..4)
            .map(|_| {
                v = rotate_step(v, 4);
                v
            })
            .collect();
        assert_eq!(seen, vec![0b0100, 0b0010, 0b0001, 0b1000]);
    }

    #[test]
    fn rotate_by_composes_steps() {
        for e in [1u32, 3, 7, 64] {
            let v = 0x9E37_79B9_7F4A_7C15u64 & low_mask(e);
            let mut stepped = v;
            for r in 0..=(2 * e) {
                assert_eq!(rotate_by(v, r, e), stepped, "e={e} r={r}");
                stepped = rotate_step(stepped, e);
            }
        }
    }
}
