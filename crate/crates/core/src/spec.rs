use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shape and fill pattern of a target array: `m` rows, `n` columns,
/// `s` filled cells per row and `t` per column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArraySpec {
    pub m: usize,
    pub n: usize,
    pub s: usize,
    pub t: usize,
}

impl ArraySpec {
    pub fn new(m: usize, n: usize, s: usize, t: usize) -> Result<Self> {
        let spec = ArraySpec { m, n, s, t };
        spec.validate()?;
        Ok(spec)
    }

    /// Fully filled `m x n`.
    pub fn tight(m: usize, n: usize) -> Self {
        ArraySpec { m, n, s: n, t: m }
    }

    /// `n x n` with `t` cells per row and column.
    pub fn square(n: usize, t: usize) -> Self {
        ArraySpec { m: n, n, s: t, t }
    }

    /// `m x 2m` with `2t` cells per row and `t` per column.
    pub fn double(m: usize, t: usize) -> Self {
        ArraySpec { m, n: 2 * m, s: 2 * t, t }
    }

    pub fn validate(&self) -> Result<()> {
        let ArraySpec { m, n, s, t } = *self;
        if m == 0 || n == 0 {
            return Err(Error::InvalidSpec(format!("{self}: dimensions must be positive")));
        }
        if s == 0 || s > n {
            return Err(Error::InvalidSpec(format!("{self}: need 1 <= s <= n")));
        }
        if t == 0 || t > m {
            return Err(Error::InvalidSpec(format!("{self}: need 1 <= t <= m")));
        }
        if m * s != n * t {
            return Err(Error::InvalidSpec(format!("{self}: m*s != n*t")));
        }
        Ok(())
    }

    pub fn filled(&self) -> usize {
        self.m * self.s
    }

    pub fn transpose(&self) -> Self {
        ArraySpec { m: self.n, n: self.m, s: self.t, t: self.s }
    }

    pub fn is_tight(&self) -> bool {
        self.s == self.n && self.t == self.m
    }

    pub fn symbols(&self) -> Result<SymbolSet> {
        symbol_set(self)
    }
}

impl fmt::Display for ArraySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{})", self.m, self.n, self.s, self.t)
    }
}

/// The zero-symmetric entry set an array of a given spec must use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolSet {
    /// Largest magnitude.
    pub bound: i64,
    pub contains_zero: bool,
}

impl SymbolSet {
    pub fn len(&self) -> usize {
        2 * self.bound as usize + usize::from(self.contains_zero)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, v: i64) -> bool {
        if v == 0 {
            self.contains_zero
        } else {
            v.abs() <= self.bound
        }
    }

    /// Ascending order.
    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        let b = self.bound;
        let zero = self.contains_zero;
        (-b..=b).filter(move |&v| v != 0 || zero)
    }
}

pub fn symbol_set(spec: &ArraySpec) -> Result<SymbolSet> {
    spec.validate()?;
    let total = spec.filled() as i64;
    Ok(if total % 2 == 1 {
        SymbolSet { bound: (total - 1) / 2, contains_zero: true }
    } else {
        SymbolSet { bound: total / 2, contains_zero: false }
    })
}
