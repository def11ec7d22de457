//! Small exact rationals.
//!
//! Thresholds like `s = 1/2` and bounds like `(e-d+1)(e-d)/(8e)` must be
//! handled exactly; floating point only appears at the reporting edge.
//! Values here are non-negative and small enough that `u64/u64` with
//! `u128` cross multiplication covers every comparison in the library.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A non-negative rational held in lowest terms, denominator nonzero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Ratio {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Ratio {
    /// Builds `num/den`, reducing to lowest terms.
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let g = gcd(num, den).max(1);
        Ok(Ratio {
            num: num / g,
            den: den / g,
        })
    }

    pub fn from_int(n: u64) -> Self {
        Ratio { num: n, den: 1 }
    }

    pub fn zero() -> Self {
        Ratio { num: 0, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `self * n/d` when the product still fits; products here stay tiny.
    pub fn mul(&self, other: Ratio) -> Result<Self> {
        let n = (self.num as u128) * (other.num as u128);
        let d = (self.den as u128) * (other.den as u128);
        let g = gcd128(n, d).max(1);
        let (n, d) = (n / g, d / g);
        if n > u64::MAX as u128 || d > u64::MAX as u128 {
            return Err(Error::InvalidArgument("rational overflow".into()));
        }
        Ratio::new(n as u64, d as u64)
    }
}

fn gcd128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = (self.num as u128) * (other.den as u128);
        let rhs = (other.num as u128) * (self.den as u128);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Ratio {
    type Err = Error;

    /// Accepts `"a/b"`, a plain integer, or a finite decimal like `"0.5"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            let num = a
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidArgument(format!("bad numerator in {s:?}")))?;
            let den = b
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidArgument(format!("bad denominator in {s:?}")))?;
            return Ratio::new(num, den);
        }
        if let Some((int, frac)) = s.split_once('.') {
            let int = if int.is_empty() { "0" } else { int };
            let int = int
                .parse::<u64>()
                .map_err(|_| Error::InvalidArgument(format!("bad number {s:?}")))?;
            if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::InvalidArgument(format!("bad number {s:?}")));
            }
            let scale = 10u64.pow(frac.len() as u32);
            let frac = frac.parse::<u64>().unwrap();
            let num = int
                .checked_mul(scale)
                .and_then(|v| v.checked_add(frac))
                .ok_or_else(|| Error::InvalidArgument(format!("number too large {s:?}")))?;
            return Ratio::new(num, scale);
        }
        let n = s
            .parse::<u64>()
            .map_err(|_| Error::InvalidArgument(format!("bad number {s:?}")))?;
        Ok(Ratio::from_int(n))
    }
}
