//! Resource caps.
//!
//! Block sizes grow doubly exponentially (block `d` holds `2^(d + 2^d)`
//! digits), so a handful of caps keeps every entry point from accidentally
//! asking for astronomical work. The matrix cap can be raised at runtime
//! with the `NECKLACE_MAX_D` environment variable; the hard ceiling of 6
//! comes from packing matrix columns and words into `u64` limbs (e = 2^6).

use std::sync::OnceLock;

/// Default cap on the block index `d` for matrix construction.
pub const DEFAULT_MAX_D: u32 = 5;

/// Hard ceiling on `d`: dimension e = 2^d must fit a 64-bit limb.
pub const HARD_MAX_D: u32 = 6;

/// Blocks up to this index may be materialized in full
/// (block 4 is 2^20 digits; block 5 would be 2^37).
pub const MAX_MATERIALIZE_D: u32 = 4;

/// Cap on `e` for suitable-tuple enumeration (2^(e-1) tuples).
pub const MAX_ENUMERATE_E: u32 = 16;

/// Cap on the number of points in a statistics run.
pub const MAX_POINTS: u64 = 1 << 25;

/// Cap on the length of a materialized digit range, in digits.
pub const MAX_RANGE_LEN: u64 = 1 << 30;

/// Environment variable that overrides [`DEFAULT_MAX_D`] (clamped to
/// [`HARD_MAX_D`]).
pub const MAX_D_ENV: &str = "NECKLACE_MAX_D";

static MAX_D: OnceLock<u32> = OnceLock::new();

/// The configured matrix cap. Reads `NECKLACE_MAX_D` once per process.
pub fn max_d() -> u32 {
    *MAX_D.get_or_init(|| {
        std::env::var(MAX_D_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u32>().ok())
            .map(|d| d.min(HARD_MAX_D))
            .unwrap_or(DEFAULT_MAX_D)
    })
}
