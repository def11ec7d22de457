//! Long binary words packed into `u64` limbs.
//!
//! Digit `i` (0-based) lives at bit `63 - i % 64` of limb `i / 64`, so the
//! first digit of the word is the most significant bit of the first limb.
//! That matches the external packed byte format (first digit = top bit of
//! the first byte) via big-endian limb serialization. Invariant: bits past
//! `len` in the last limb are zero, so equality is plain limb equality.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct BitWord {
    limbs: Vec<u64>,
    len: usize,
}

impl BitWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn zeros(len: usize) -> Self {
        BitWord {
            limbs: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn with_capacity(bits: usize) -> Self {
        BitWord {
            limbs: Vec::with_capacity(bits.div_ceil(64)),
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.len, "digit index {i} out of range {}", self.len);
        ((self.limbs[i / 64] >> (63 - (i % 64))) & 1) as u8
    }

    pub fn set(&mut self, i: usize, bit: u8) {
        assert!(i < self.len, "digit index {i} out of range {}", self.len);
        let mask = 1u64 << (63 - (i % 64));
        if bit != 0 {
            self.limbs[i / 64] |= mask;
        } else {
            self.limbs[i / 64] &= !mask;
        }
    }

    pub fn push(&mut self, bit: u8) {
        self.push_value(bit as u64, 1);
    }

    /// Appends the low `width` bits of `v`, most significant first.
    pub fn push_value(&mut self, v: u64, width: u32) {
        assert!(width <= 64);
        let mut remaining = width;
        while remaining > 0 {
            let offset = (self.len % 64) as u32;
            if offset == 0 {
                self.limbs.push(0);
            }
            let take = remaining.min(64 - offset);
            let chunk = (v >> (remaining - take)) & super::low_mask(take);
            let limb = self.limbs.last_mut().unwrap();
            *limb |= chunk << (64 - offset - take);
            self.len += take as usize;
            remaining -= take;
        }
    }

    /// Reads `width` consecutive digits starting at `start` as a value,
    /// first digit in the most significant position.
    pub fn window(&self, start: usize, width: u32) -> u64 {
        assert!(width <= 64);
        if width == 0 {
            return 0;
        }
        assert!(
            start + width as usize <= self.len,
            "window {start}+{width} out of range {}",
            self.len
        );
        let li = start / 64;
        let offset = (start % 64) as u32;
        let hi = self.limbs[li] as u128;
        let lo = *self.limbs.get(li + 1).unwrap_or(&0) as u128;
        let combined = (hi << 64) | lo;
        ((combined >> (128 - offset - width)) as u64) & super::low_mask(width)
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Appends all digits of `other`.
    pub fn extend_from(&mut self, other: &BitWord) {
        let mut i = 0;
        while i < other.len {
            let take = (other.len - i).min(64) as u32;
            self.push_value(other.window(i, take), take);
            i += take as usize;
        }
    }

    /// Number of 1 digits in the whole word.
    pub fn count_ones(&self) -> u64 {
        self.limbs.iter().map(|l| l.count_ones() as u64).sum()
    }

    /// Packs into bytes, 8 digits per byte, first digit in the top bit of
    /// the first byte, final byte zero-padded.
    pub fn to_packed_bytes(&self) -> Vec<u8> {
        let nbytes = self.len.div_ceil(8);
        let mut out = Vec::with_capacity(nbytes);
        for limb in &self.limbs {
            out.extend_from_slice(&limb.to_be_bytes());
        }
        out.truncate(nbytes);
        out
    }

    /// Inverse of [`to_packed_bytes`](Self::to_packed_bytes); `len` says how
    /// many digits of `bytes` are meaningful.
    pub fn from_packed_bytes(bytes: &[u8], len: usize) -> Result<Self> {
        if bytes.len() < len.div_ceil(8) {
            return Err(Error::InvalidArgument(format!(
                "{} bytes cannot hold {len} digits",
                bytes.len()
            )));
        }
        let mut limbs = Vec::with_capacity(len.div_ceil(64));
        for chunk in bytes[..len.div_ceil(8)].chunks(8) {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            limbs.push(u64::from_be_bytes(buf));
        }
        if !len.is_multiple_of(64) {
            if let Some(last) = limbs.last_mut() {
                *last &= !0u64 << (64 - len % 64);
            }
        }
        Ok(BitWord { limbs, len })
    }

    pub fn from_digit_str(s: &str) -> Result<Self> {
        let mut w = BitWord::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => w.push(0),
                '1' => w.push(1),
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "digit string may contain only 0 and 1, found {c:?}"
                    )))
                }
            }
        }
        Ok(w)
    }

    pub fn to_digit_string(&self) -> String {
        self.iter().map(|b| if b == 1 { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_digit_string())
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_digit_string())
    }
}
