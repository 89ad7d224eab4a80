use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Provenance attached to a constructed grid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GridMeta {
    pub method: Option<String>,
    pub provider_key: Option<String>,
    /// Content digest, set on catalog entries.
    pub digest: Option<String>,
}

/// A sparse `m x n` integer grid. Indices are 0-based; a missing cell is
/// empty, which is distinct from a cell holding 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGrid {
    m: usize,
    n: usize,
    cells: BTreeMap<(usize, usize), i64>,
    pub meta: GridMeta,
}

impl SignedGrid {
    pub fn new(m: usize, n: usize) -> Self {
        SignedGrid { m, n, cells: BTreeMap::new(), meta: GridMeta::default() }
    }

    /// Builds a grid from dense rows, `None` marking an empty cell.
    pub fn from_rows(rows: &[Vec<Option<i64>>]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Argument("ragged rows".into()));
        }
        let mut g = SignedGrid::new(m, n);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if let Some(v) = v {
                    g.cells.insert((i, j), *v);
                }
            }
        }
        Ok(g)
    }

    /// Builds a fully filled grid from dense rows.
    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let rows: Vec<Vec<Option<i64>>> = rows.iter().map(|r| r.iter().copied().map(Some).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn to_rows(&self) -> Vec<Vec<Option<i64>>> {
        let mut rows = vec![vec![None; self.n]; self.m];
        for (&(i, j), &v) in &self.cells {
            rows[i][j] = Some(v);
        }
        rows
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<i64> {
        self.cells.get(&(i, j)).copied()
    }

    pub fn filled(&self) -> usize {
        self.cells.len()
    }

    /// Filled cells in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.cells.iter().map(|(&k, &v)| (k, v))
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.cells.values().copied()
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.cells.range((i, 0)..(i + 1, 0)).map(|(&(_, j), &v)| (j, v))
    }

    pub fn col(&self, j: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        (0..self.m).filter_map(move |i| self.get(i, j).map(|v| (i, v)))
    }

    /// Writes a cell, failing if it is out of range or already filled.
    pub fn place(&mut self, i: usize, j: usize, v: i64) -> Result<()> {
        if i >= self.m || j >= self.n {
            return Err(Error::Composition(format!("cell ({i},{j}) outside {}x{}", self.m, self.n)));
        }
        if self.cells.insert((i, j), v).is_some() {
            return Err(Error::Composition(format!("cell ({i},{j}) written twice")));
        }
        Ok(())
    }

    /// Overwrites a cell. Panics on out-of-range indices.
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        assert!(i < self.m && j < self.n, "cell ({i},{j}) outside {}x{}", self.m, self.n);
        self.cells.insert((i, j), v);
    }

    pub fn clear(&mut self, i: usize, j: usize) -> Option<i64> {
        self.cells.remove(&(i, j))
    }

    pub fn with_method(mut self, method: impl Into<String>) -> Self {
        self.meta.method = Some(method.into());
        self
    }

    pub fn with_provider_key(mut self, key: impl Into<String>) -> Self {
        self.meta.provider_key = Some(key.into());
        self
    }

    pub fn map_values(&self, f: impl Fn(i64) -> i64) -> Self {
        SignedGrid {
            m: self.m,
            n: self.n,
            cells: self.cells.iter().map(|(&k, &v)| (k, f(v))).collect(),
            meta: self.meta.clone(),
        }
    }

    pub fn negate(&self) -> Self {
        self.map_values(|v| -v)
    }

    pub fn transpose(&self) -> Self {
        SignedGrid {
            m: self.n,
            n: self.m,
            cells: self.cells.iter().map(|(&(i, j), &v)| ((j, i), v)).collect(),
            meta: self.meta.clone(),
        }
    }

    /// Moves every entry `k` further from zero.
    pub fn shift_magnitudes(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return Err(Error::Argument(format!("negative shift {k}")));
        }
        if self.values().any(|v| v == 0) {
            return Err(Error::Argument("cannot shift a grid containing 0".into()));
        }
        Ok(self.map_values(|v| v + k * v.signum()))
    }

    /// Moves column `j` to column `j + c (mod n)`.
    pub fn permute_columns_cyclic(&self, c: i64) -> Self {
        let n = self.n as i64;
        SignedGrid {
            m: self.m,
            n: self.n,
            cells: self.cells.iter().map(|(&(i, j), &v)| ((i, (j as i64 + c).rem_euclid(n) as usize), v)).collect(),
            meta: self.meta.clone(),
        }
    }

    /// Moves row `i` to row `i + r (mod m)`.
    pub fn permute_rows_cyclic(&self, r: i64) -> Self {
        self.transpose().permute_columns_cyclic(r).transpose()
    }

    /// Copies `src` into a copy of `self` at the given offset.
    pub fn paste(&self, src: &SignedGrid, row_offset: usize, col_offset: usize) -> Result<Self> {
        let mut out = self.clone();
        for ((i, j), v) in src.entries() {
            out.place(i + row_offset, j + col_offset, v)?;
        }
        Ok(out)
    }

    /// Number of positive minus number of negative entries per row and column.
    pub fn sign_balance(&self) -> (Vec<i64>, Vec<i64>) {
        let mut rows = vec![0; self.m];
        let mut cols = vec![0; self.n];
        for ((i, j), v) in self.entries() {
            rows[i] += v.signum();
            cols[j] += v.signum();
        }
        (rows, cols)
    }
}

impl fmt::Display for SignedGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::to_text_body(self))
    }
}
