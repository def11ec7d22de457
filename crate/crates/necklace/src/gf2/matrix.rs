//! Pascal triangle matrices over GF(2) and their rotated variants.
//!
//! `pascal_matrix(d)` builds the `2^d x 2^d` matrix recursively: the next
//! matrix tiles the previous one as [[M, M], [0, M]]. Entry (r, c)
//! (0-based) equals the binomial coefficient "c choose r" mod 2, so the
//! matrix is upper triangular with a unit diagonal, hence nonsingular.
//!
//! Columns are value-packed: column `j` is a `u64` whose top-of-column
//! entry (row 0) sits at bit `e - 1` and bottom entry (row e-1) at bit 0.
//! Vectors passed to `mat_vec`/`solve` use the same packing.

use std::fmt;

use super::{low_mask, rotate_by, SuitableTuple};
use crate::error::{Error, Result};
use crate::limits;

#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    e: u32,
    cols: Vec<u64>,
}

impl Gf2Matrix {
    /// The `d`-th Pascal matrix, dimension `e = 2^d`. Subject to the
    /// configured cap on `d` (see [`limits::max_d`]).
    pub fn pascal(d: u32) -> Result<Self> {
        let cap = limits::max_d();
        if d > cap {
            return Err(Error::ResourceLimit {
                what: "matrix index d",
                requested: d as u128,
                limit: cap as u128,
            });
        }
        let mut cols = vec![1u64];
        let mut e = 1u32;
        for _ in 0..d {
            let h = e;
            let mut next = Vec::with_capacity(2 * e as usize);
            next.extend(cols.iter().map(|c| c << h));
            next.extend(cols.iter().map(|c| (c << h) | c));
            cols = next;
            e *= 2;
        }
        Ok(Gf2Matrix { e, cols })
    }

    /// Builds a matrix from value-packed columns.
    pub fn from_columns(e: u32, cols: Vec<u64>) -> Result<Self> {
        if e == 0 || e > 64 {
            return Err(Error::InvalidArgument(format!(
                "dimension {e} outside 1..=64"
            )));
        }
        if cols.len() != e as usize {
            return Err(Error::DimensionMismatch {
                expected: e as usize,
                got: cols.len(),
            });
        }
        if cols.iter().any(|&c| c & !low_mask(e) != 0) {
            return Err(Error::InvalidArgument(
                "column value wider than the matrix dimension".into(),
            ));
        }
        Ok(Gf2Matrix { e, cols })
    }

    /// Rotated variant: column `i` (1-based) is the original column
    /// rotated `n_i` times, where the rotation sends the last entry to
    /// the front. The tuple length must match the dimension.
    pub fn rotated(&self, nu: &SuitableTuple) -> Result<Self> {
        if nu.len() != self.e as usize {
            return Err(Error::DimensionMismatch {
                expected: self.e as usize,
                got: nu.len(),
            });
        }
        let cols = self
            .cols
            .iter()
            .zip(nu.entries())
            .map(|(&c, &n)| rotate_by(c, n, self.e))
            .collect();
        Ok(Gf2Matrix { e: self.e, cols })
    }

    pub fn dim(&self) -> u32 {
        self.e
    }

    /// Entry at `row`, `col`, both 0-based.
    pub fn entry(&self, row: u32, col: u32) -> u8 {
        assert!(row < self.e && col < self.e);
        ((self.cols[col as usize] >> (self.e - 1 - row)) & 1) as u8
    }

    /// Column `col` (0-based) as a value-packed word.
    pub fn column(&self, col: u32) -> u64 {
        self.cols[col as usize]
    }

    /// Row `row` (0-based) as a value-packed word, first column at the top
    /// bit. This is the display orientation.
    pub fn row(&self, row: u32) -> u64 {
        let mut v = 0u64;
        for col in 0..self.e {
            v = (v << 1) | self.entry(row, col) as u64;
        }
        v
    }

    pub fn rows(&self) -> Vec<u64> {
        (0..self.e).map(|r| self.row(r)).collect()
    }

    /// Matrix-vector product over GF(2): XOR of the columns selected by
    /// the 1 digits of `w`.
    pub fn mat_vec(&self, w: u64) -> u64 {
        let mut w = w & low_mask(self.e);
        let mut acc = 0u64;
        while w != 0 {
            let b = w.trailing_zeros();
            acc ^= self.cols[(self.e - 1 - b) as usize];
            w &= w - 1;
        }
        acc
    }

    /// Solves `M w = target` by Gauss-Jordan elimination.
    pub fn solve(&self, target: u64) -> Result<u64> {
        let e = self.e;
        if target & !low_mask(e) != 0 {
            return Err(Error::InvalidArgument(
                "target wider than the matrix dimension".into(),
            ));
        }
        // Augmented rows: matrix part shifted up one bit, target bit at bit 0.
        let mut aug: Vec<u64> = (0..e)
            .map(|r| (self.row(r) << 1) | ((target >> (e - 1 - r)) & 1))
            .collect();
        let mut rank = 0usize;
        for col in 0..e {
            let colbit = 1u64 << (e - col);
            let Some(p) = (rank..e as usize).find(|&r| aug[r] & colbit != 0) else {
                continue;
            };
            aug.swap(rank, p);
            for r in 0..e as usize {
                if r != rank && aug[r] & colbit != 0 {
                    aug[r] ^= aug[rank];
                }
            }
            rank += 1;
        }
        if rank < e as usize {
            return Err(Error::SingularMatrix);
        }
        // Full rank: row r holds pivot column r, so its target bit is w_r+1.
        let mut w = 0u64;
        for (r, row) in aug.iter().enumerate() {
            w |= (row & 1) << (e - 1 - r as u32);
        }
        Ok(w)
    }

    pub fn is_nonsingular(&self) -> bool {
        let e = self.e as usize;
        let mut rows: Vec<u64> = (0..self.e).map(|r| self.row(r)).collect();
        // Every column must yield a pivot, so the pivot row index tracks
        // the column position exactly.
        for (rank, col) in (0..self.e).enumerate() {
            let colbit = 1u64 << (self.e - 1 - col);
            let Some(p) = (rank..e).find(|&r| rows[r] & colbit != 0) else {
                return false;
            };
            rows.swap(rank, p);
            for r in 0..e {
                if r != rank && rows[r] & colbit != 0 {
                    rows[r] ^= rows[rank];
                }
            }
        }
        true
    }

    /// Rows as digit strings, top row first.
    pub fn row_strings(&self) -> Vec<String> {
        self.rows()
            .iter()
            .map(|&r| {
                (0..self.e)
                    .rev()
                    .map(|b| if (r >> b) & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix({})", self.row_strings().join(" "))
    }
}
