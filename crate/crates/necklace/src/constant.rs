//! The necklace constants and their binary digit streams.
//!
//! A constant is an infinite concatenation of blocks indexed by
//! `d = 0, 1, 2, ...`. Block `d` works in dimension `e = 2^d`: it lists,
//! for `n = 0 .. 2^e`, the chunk `Q_n = M (w_n xor z)` where `M` is the
//! `d`-th Pascal matrix rotated by a suitable tuple, `w_n` is the `e`-digit
//! binary word with value `n` (lexicographic order of fixed-width words is
//! numeric order), and `z` is an affine shift. Block `d` therefore holds
//! `e * 2^e = 2^(d + 2^d)` digits.
//!
//! All rotations identity and all shifts zero gives the base constant
//! ("levin"); per-block overrides produce the rest of the family.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{low_mask, BitWord, Gf2Matrix, SuitableTuple};
use crate::limits;

/// Digits in block `d` alone: `2^(d + 2^d)`.
pub fn block_length(d: u32) -> u128 {
    assert!(d <= limits::HARD_MAX_D, "block index {d} out of range");
    1u128 << (d + (1u32 << d))
}

/// Digits in blocks `0 ..= d` together.
pub fn cumulative_length(d: u32) -> u128 {
    (0..=d).map(block_length).sum()
}

/// The `n`-th word of length `e` in lexicographic order. For fixed-width
/// binary words that is simply the value `n`; this exists to give the
/// convention a name and a bounds check.
pub fn lex_word(n: u64, e: u32) -> Result<u64> {
    if e == 0 || e > 64 {
        return Err(Error::InvalidArgument(format!(
            "word length {e} outside 1..=64"
        )));
    }
    if e < 64 && n >= (1u64 << e) {
        return Err(Error::InvalidArgument(format!(
            "word index {n} out of range for length {e}"
        )));
    }
    Ok(n)
}

/// Override for one block: rotation tuple and affine shift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockOverride {
    pub d: u32,
    /// Rotation counts, one per column, `2^d` entries.
    pub nu: Vec<u32>,
    /// Affine shift as a digit string of length `2^d`.
    pub z: String,
}

/// A member of the constant family: a named base plus sparse block
/// overrides. Serializes to/from the JSON form
/// `{"default": "levin", "blocks": [{"d": ..., "nu": [...], "z": "..."}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantSpec {
    #[serde(rename = "default", default = "default_base")]
    pub base: String,
    #[serde(default)]
    pub blocks: Vec<BlockOverride>,
}

fn default_base() -> String {
    "levin".to_string()
}

impl ConstantSpec {
    /// The base constant: every block default.
    pub fn levin() -> Self {
        ConstantSpec {
            base: default_base(),
            blocks: Vec::new(),
        }
    }

    /// Adds one block override, replacing any previous override for the
    /// same block.
    pub fn with_block(mut self, d: u32, nu: Vec<u32>, z: &str) -> Self {
        self.blocks.retain(|b| b.d != d);
        self.blocks.push(BlockOverride {
            d,
            nu,
            z: z.to_string(),
        });
        self
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: ConstantSpec = serde_json::from_str(s)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn is_levin(&self) -> bool {
        self.blocks.iter().all(|b| {
            b.nu.iter().all(|&n| n == 0) && b.z.bytes().all(|c| c == b'0')
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.base != "levin" {
            return Err(Error::InvalidArgument(format!(
                "unknown base constant {:?} (only \"levin\" exists)",
                self.base
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for (index, b) in self.blocks.iter().enumerate() {
            let fail = |reason: String| Error::SpecValidation { index, reason };
            if b.d > limits::HARD_MAX_D {
                return Err(fail(format!(
                    "block index {} exceeds the hard cap {}",
                    b.d,
                    limits::HARD_MAX_D
                )));
            }
            if !seen.insert(b.d) {
                return Err(fail(format!("duplicate override for block {}", b.d)));
            }
            let e = 1usize << b.d;
            if b.nu.len() != e {
                return Err(fail(format!(
                    "nu has {} entries, block {} needs {e}",
                    b.nu.len(),
                    b.d
                )));
            }
            SuitableTuple::new(b.nu.clone())
                .map_err(|err| fail(format!("nu is not suitable: {err}")))?;
            if b.z.len() != e {
                return Err(fail(format!(
                    "z has {} digits, block {} needs {e}",
                    b.z.len(),
                    b.d
                )));
            }
            if !b.z.bytes().all(|c| c == b'0' || c == b'1') {
                return Err(fail("z must be a string of 0s and 1s".into()));
            }
        }
        Ok(())
    }
}

/// Parses a digit string into a value-packed word (first digit at the top
/// bit of the `width`-bit value).
pub(crate) fn parse_shift(z: &str) -> u64 {
    z.bytes().fold(0u64, |v, c| (v << 1) | (c - b'0') as u64)
}

struct BlockCtx {
    e: u32,
    matrix: Gf2Matrix,
    z: u64,
    start: u128,
    len: u128,
}

/// Digit access into one constant. Construction resolves every block up
/// to the configured cap (see [`limits::max_d`]); all further queries are
/// cheap lookups plus GF(2) arithmetic.
pub struct DigitStream {
    spec: ConstantSpec,
    blocks: Vec<BlockCtx>,
}

impl DigitStream {
    pub fn new(spec: ConstantSpec) -> Result<Self> {
        spec.validate()?;
        let cap = limits::max_d();
        for b in &spec.blocks {
            if b.d > cap {
                return Err(Error::ResourceLimit {
                    what: "block override index d",
                    requested: b.d as u128,
                    limit: cap as u128,
                });
            }
        }
        let overrides: HashMap<u32, &BlockOverride> =
            spec.blocks.iter().map(|b| (b.d, b)).collect();
        let mut blocks = Vec::with_capacity(cap as usize + 1);
        let mut start = 0u128;
        for d in 0..=cap {
            let base = Gf2Matrix::pascal(d)?;
            let (matrix, z) = match overrides.get(&d) {
                Some(b) => {
                    let nu = SuitableTuple::new(b.nu.clone())?;
                    (base.rotated(&nu)?, parse_shift(&b.z))
                }
                None => (base, 0),
            };
            if !matrix.is_nonsingular() {
                return Err(Error::Internal(format!(
                    "rotated matrix for block {d} is singular"
                )));
            }
            let len = block_length(d);
            blocks.push(BlockCtx {
                e: 1u32 << d,
                matrix,
                z,
                start,
                len,
            });
            start += len;
        }
        Ok(DigitStream { spec, blocks })
    }

    pub fn levin() -> Self {
        // The all-defaults spec always validates and stays within caps.
        Self::new(ConstantSpec::levin()).expect("base constant must build")
    }

    pub fn spec(&self) -> &ConstantSpec {
        &self.spec
    }

    fn ctx(&self, d: u32) -> Result<&BlockCtx> {
        self.blocks.get(d as usize).ok_or(Error::ResourceLimit {
            what: "block index d",
            requested: d as u128,
            limit: self.blocks.len() as u128 - 1,
        })
    }

    fn locate(&self, pos: u64) -> Result<&BlockCtx> {
        let p = pos as u128;
        self.blocks
            .iter()
            .find(|c| p < c.start + c.len)
            .ok_or_else(|| Error::ResourceLimit {
                what: "digit position",
                requested: p,
                limit: self.blocks.last().map_or(0, |c| c.start + c.len - 1),
            })
    }

    /// The rotated matrix used by block `d`.
    pub fn block_matrix(&self, d: u32) -> Result<&Gf2Matrix> {
        Ok(&self.ctx(d)?.matrix)
    }

    /// The affine shift of block `d`, value-packed.
    pub fn block_shift(&self, d: u32) -> Result<u64> {
        Ok(self.ctx(d)?.z)
    }

    /// Chunk `Q_n` of block `d` as a value-packed `e`-digit word.
    pub fn chunk(&self, d: u32, n: u64) -> Result<u64> {
        let ctx = self.ctx(d)?;
        if ctx.e < 64 && n >= (1u64 << ctx.e) {
            return Err(Error::InvalidArgument(format!(
                "chunk index {n} out of range for block {d}"
            )));
        }
        Ok(ctx.matrix.mat_vec(n ^ ctx.z))
    }

    /// Digit at 0-based position `pos` of the full stream.
    pub fn digit_at(&self, pos: u64) -> Result<u8> {
        let ctx = self.locate(pos)?;
        let offset = pos as u128 - ctx.start;
        let n = (offset / ctx.e as u128) as u64;
        let j = (offset % ctx.e as u128) as u32;
        let v = ctx.matrix.mat_vec(n ^ ctx.z);
        Ok(((v >> (ctx.e - 1 - j)) & 1) as u8)
    }

    /// Digits `pos .. pos + len` as a packed word.
    pub fn digits_range(&self, pos: u64, len: u64) -> Result<BitWord> {
        if len > limits::MAX_RANGE_LEN {
            return Err(Error::ResourceLimit {
                what: "digit range length",
                requested: len as u128,
                limit: limits::MAX_RANGE_LEN as u128,
            });
        }
        // End position must exist before any work happens.
        if len > 0 {
            let end = pos.checked_add(len - 1).ok_or_else(|| {
                Error::InvalidArgument("digit range end exceeds the position space".into())
            })?;
            self.locate(end)?;
        }
        let mut out = BitWord::with_capacity(len as usize);
        let mut pos = pos;
        let mut remaining = len;
        while remaining > 0 {
            let ctx = self.locate(pos)?;
            let offset = pos as u128 - ctx.start;
            let mut in_block = (ctx.len - offset).min(remaining as u128) as u64;
            let mut n = (offset / ctx.e as u128) as u64;
            let mut j = (offset % ctx.e as u128) as u32;
            while in_block > 0 {
                let v = ctx.matrix.mat_vec(n ^ ctx.z);
                let width = ((ctx.e - j) as u64).min(in_block) as u32;
                out.push_value((v >> (ctx.e - j - width)) & low_mask(width), width);
                in_block -= width as u64;
                remaining -= width as u64;
                pos += width as u64;
                n = n.wrapping_add(1);
                j = 0;
            }
        }
        Ok(out)
    }

    /// Same digits as [`digits_range`](Self::digits_range), produced by
    /// `workers` threads over contiguous spans (0 means use the available
    /// parallelism). The result is identical for any worker count.
    pub fn digits_range_parallel(&self, pos: u64, len: u64, workers: usize) -> Result<BitWord> {
        let workers = if workers == 0 {
            std::thread::available_parallelism().map_or(1, |n| n.get())
        } else {
            workers
        };
        if workers <= 1 || len < 1 << 16 {
            return self.digits_range(pos, len);
        }
        if len > limits::MAX_RANGE_LEN {
            return Err(Error::ResourceLimit {
                what: "digit range length",
                requested: len as u128,
                limit: limits::MAX_RANGE_LEN as u128,
            });
        }
        let workers = workers.min((len / (1 << 12)).max(1) as usize);
        let base = len / workers as u64;
        let extra = len % workers as u64;
        let mut spans = Vec::with_capacity(workers);
        let mut at = pos;
        for w in 0..workers as u64 {
            let span = base + (w < extra) as u64;
            spans.push((at, span));
            at += span;
        }
        let parts: Vec<Result<BitWord>> = std::thread::scope(|scope| {
            let handles: Vec<_> = spans
                .iter()
                .map(|&(s, l)| scope.spawn(move || self.digits_range(s, l)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut out = BitWord::with_capacity(len as usize);
        for part in parts {
            out.extend_from(&part?);
        }
        Ok(out)
    }

    /// Materializes all of block `d`. Only small blocks may be built in
    /// full; block 5 is already 2^37 digits.
    pub fn block_digits(&self, d: u32) -> Result<BitWord> {
        if d > limits::MAX_MATERIALIZE_D {
            return Err(Error::ResourceLimit {
                what: "materialized block index d",
                requested: d as u128,
                limit: limits::MAX_MATERIALIZE_D as u128,
            });
        }
        let ctx = self.ctx(d)?;
        self.digits_range(ctx.start as u64, ctx.len as u64)
    }

    /// First `len` digits of the stream.
    pub fn prefix(&self, len: u64) -> Result<BitWord> {
        self.digits_range(0, len)
    }
}
