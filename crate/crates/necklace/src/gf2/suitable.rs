//! Suitable rotation tuples.
//!
//! A tuple (n_1, ..., n_e) is suitable when n_e = 0 and each step down
//! the tuple drops by at most one and never rises:
//! n_{i+1} <= n_i <= n_{i+1} + 1. Every suitable tuple yields a
//! nonsingular rotated Pascal matrix, and there are exactly 2^(e-1) of
//! them for dimension e.

use std::fmt;

use crate::error::{Error, Result};
use crate::limits;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuitableTuple {
    entries: Vec<u32>,
}

impl SuitableTuple {
    /// Validates and wraps a tuple; `entries[i]` is n_{i+1}.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::UnsuitableTuple {
                tuple: entries,
                reason: "tuple is empty".into(),
            });
        }
        if *entries.last().unwrap() != 0 {
            return Err(Error::UnsuitableTuple {
                tuple: entries,
                reason: "last entry must be 0".into(),
            });
        }
        for i in 0..entries.len() - 1 {
            let (a, b) = (entries[i], entries[i + 1]);
            if a < b || a > b + 1 {
                return Err(Error::UnsuitableTuple {
                    tuple: entries.clone(),
                    reason: format!(
                        "entry {} is {a}, must be {b} or {}",
                        i + 1,
                        b + 1
                    ),
                });
            }
        }
        Ok(SuitableTuple { entries })
    }

    /// The all-zero tuple of length `e`, which leaves the matrix unchanged.
    pub fn identity(e: usize) -> Self {
        SuitableTuple {
            entries: vec![0; e],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|&n| n == 0)
    }
}

impl fmt::Debug for SuitableTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", {
            let strs: Vec<String> = self.entries.iter().map(|n| n.to_string()).collect();
            strs.join(",")
        })
    }
}

/// All suitable tuples of length `e`, in a fixed deterministic order: the
/// tuple is grown from the last entry toward the first, taking the
/// "repeat the value" branch before the "increase by one" branch.
pub fn enumerate_suitable(e: u32) -> Result<Vec<SuitableTuple>> {
    if e == 0 {
        return Err(Error::InvalidArgument("tuple length must be positive".into()));
    }
    if e > limits::MAX_ENUMERATE_E {
        return Err(Error::ResourceLimit {
            what: "suitable tuple enumeration length",
            requested: e as u128,
            limit: limits::MAX_ENUMERATE_E as u128,
        });
    }
    let mut out = Vec::with_capacity(1usize << (e - 1));
    let mut stack = vec![0u32; e as usize];
    grow(&mut stack, (e - 1) as usize, &mut out);
    Ok(out)
}

fn grow(stack: &mut [u32], i: usize, out: &mut Vec<SuitableTuple>) {
    if i == 0 {
        out.push(SuitableTuple {
            entries: stack.to_vec(),
        });
        return;
    }
    let next = stack[i];
    stack[i - 1] = next;
    grow(stack, i - 1, out);
    stack[i - 1] = next + 1;
    grow(stack, i - 1, out);
    stack[i - 1] = 0;
}
