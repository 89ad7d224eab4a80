//! Magic rectangles and integer Heffter arrays: builtin seeds, a file
//! catalog, classical constructions and bounded search.

pub mod catalog;
pub mod heffter;
pub mod magic;

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Duration;

pub use catalog::{Catalog, CatalogEntry, CatalogKey, Provenance, PutOutcome};
pub use heffter::SearchOutcome;

use crate::error::{Error, Result};
use crate::grid::SignedGrid;

/// Bounds on any search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest filled-cell count the exhaustive oracle accepts.
    pub max_filled_cells: usize,
    pub time_budget: Duration,
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_filled_cells: 14, time_budget: Duration::from_secs(60), node_budget: 20_000_000_000 }
    }
}

/// Largest magic rectangle (by cell count) handed to exhaustive search;
/// bigger ones use seeded local search.
pub const MAGIC_BACKTRACK_CELLS: usize = 21;

/// Largest Heffter pattern (by cell count) handed to one exhaustive pass;
/// bigger ones use seeded randomized restarts.
pub const HEFFTER_BACKTRACK_CELLS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicRectangle {
    pub m: usize,
    pub n: usize,
    pub grid: SignedGrid,
    pub key: String,
}

impl MagicRectangle {
    pub fn row_sum(&self) -> i64 {
        (self.n * (self.m * self.n - 1) / 2) as i64
    }

    pub fn col_sum(&self) -> i64 {
        (self.m * (self.m * self.n - 1) / 2) as i64
    }

    pub fn w(&self) -> i64 {
        ((self.m * self.n - 1) / 2) as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeffterGrid {
    pub grid: SignedGrid,
    pub key: String,
}

/// Catalog, limits and an in-memory cache shared by all constructions.
#[derive(Debug)]
pub struct Providers {
    catalog: Catalog,
    limits: SearchLimits,
    persist: bool,
    cache: Mutex<HashMap<CatalogKey, SignedGrid>>,
}

impl Default for Providers {
    fn default() -> Self {
        Providers::builtin()
    }
}

impl Providers {
    /// Builtin seeds only, nothing persisted.
    pub fn builtin() -> Self {
        Providers::new(Catalog::builtin(), SearchLimits::default(), false)
    }

    /// `persist` writes freshly searched arrays back to the catalog directory.
    pub fn new(catalog: Catalog, limits: SearchLimits, persist: bool) -> Self {
        Providers { catalog, limits, persist, cache: Mutex::new(HashMap::new()) }
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    pub fn limits(&self) -> &SearchLimits {
        &self.limits
    }

    fn fetch(&self, key: CatalogKey, build: impl FnOnce(&SearchLimits) -> Result<SignedGrid>) -> Result<SignedGrid> {
        if let Some(g) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(g.clone());
        }
        let grid = match self.catalog.get(&key)? {
            Some(entry) => entry.grid,
            None => {
                let grid = build(&self.limits)?;
                key.check(&grid).map_err(|reason| Error::Integrity { key: key.to_string(), reason })?;
                if self.persist && self.catalog.dir().is_some() {
                    let entry = CatalogEntry::new(key, grid.clone(), Provenance::Searched)?;
                    self.catalog.put(&entry)?;
                }
                grid
            }
        };
        self.cache.lock().expect("cache lock").insert(key, grid.clone());
        Ok(grid)
    }

    /// Magic rectangle with odd sides `m, n > 1`.
    pub fn magic_rectangle(&self, m: usize, n: usize) -> Result<MagicRectangle> {
        if m.is_multiple_of(2) || n.is_multiple_of(2) || m < 3 || n < 3 {
            return Err(Error::Unsupported(format!(
                "magic rectangles are provided for odd sides > 1 only, got {m} x {n}"
            )));
        }
        let key = CatalogKey::MagicRectangle { m, n };
        let grid = self.fetch(key, |limits| {
            if m == n {
                return Ok(magic::siamese(n));
            }
            // a stored transpose is as good
            if let Some(entry) = self.catalog.get(&CatalogKey::MagicRectangle { m: n, n: m })? {
                return Ok(entry.grid.transpose());
            }
            let (a, b) = (m.min(n), m.max(n));
            let outcome = if a * b <= MAGIC_BACKTRACK_CELLS {
                magic::backtrack(a, b, limits)
            } else {
                magic::local_search(a, b, (a * 1000 + b) as u64, limits)
            };
            let grid = found(outcome, &key)?;
            Ok(if a == m { grid } else { grid.transpose() })
        })?;
        Ok(MagicRectangle { m, n, grid, key: key.to_string() })
    }

    /// Tight `m x n` integer Heffter array, `mn ≡ 0,3 (mod 4)`.
    pub fn tight_heffter(&self, m: usize, n: usize) -> Result<HeffterGrid> {
        if m < 3 || n < 3 || !matches!((m * n) % 4, 0 | 3) {
            return Err(Error::Unsupported(format!(
                "tight Heffter arrays need m, n >= 3 and mn ≡ 0,3 (mod 4), got {m} x {n}"
            )));
        }
        let key = CatalogKey::TightHeffter { m, n };
        let grid = self.fetch(key, |limits| {
            if let Some(entry) = self.catalog.get(&CatalogKey::TightHeffter { m: n, n: m })? {
                return Ok(entry.grid.transpose());
            }
            found(
                heffter_search(
                    m,
                    n,
                    heffter::closing_order(m, n, &heffter::full_pattern(m, n)),
                    (m * 1000 + n) as u64,
                    limits,
                ),
                &key,
            )
        })?;
        Ok(HeffterGrid { grid, key: key.to_string() })
    }

    /// Square `n x n` integer Heffter array with `k` cells per row and column,
    /// `3 <= k <= n`, `nk ≡ 0,3 (mod 4)`. Searched on the `k` broken diagonals
    /// starting at the main one.
    pub fn square_heffter(&self, n: usize, k: usize) -> Result<HeffterGrid> {
        if k < 3 || k > n || !matches!((n * k) % 4, 0 | 3) {
            return Err(Error::Unsupported(format!(
                "square Heffter arrays need 3 <= k <= n and nk ≡ 0,3 (mod 4), got n = {n}, k = {k}"
            )));
        }
        let key = CatalogKey::SquareHeffter { n, k };
        let grid = self.fetch(key, |limits| {
            found(heffter_search(n, n, heffter::band_pattern(n, k), (n * 1000 + k) as u64, limits), &key)
        })?;
        Ok(HeffterGrid { grid, key: key.to_string() })
    }
}

fn heffter_search(m: usize, n: usize, cells: Vec<(usize, usize)>, seed: u64, limits: &SearchLimits) -> SearchOutcome {
    if cells.len() <= HEFFTER_BACKTRACK_CELLS {
        heffter::search_pattern(m, n, cells, limits)
    } else {
        heffter::search_restarts(m, n, cells, seed, limits)
    }
}

fn found(outcome: SearchOutcome, key: &CatalogKey) -> Result<SignedGrid> {
    match outcome {
        SearchOutcome::Found(g) => Ok(g),
        SearchOutcome::BudgetExceeded => Err(Error::ProviderTimeout { key: key.to_string() }),
        SearchOutcome::Exhausted => Err(Error::Unsupported(format!("search space for {key} holds no solution"))),
    }
}

pub(crate) fn check_magic_rectangle(grid: &SignedGrid, m: usize, n: usize) -> std::result::Result<(), String> {
    if grid.rows() != m || grid.cols() != n || grid.filled() != m * n {
        return Err(format!("need a full {m} x {n} grid"));
    }
    let total = m * n;
    let mut seen = vec![false; total];
    for v in grid.values() {
        if v < 0 || v as usize >= total || std::mem::replace(&mut seen[v as usize], true) {
            return Err(format!("entry {v} repeated or outside 0..{total}"));
        }
    }
    let row_target = (n * (total - 1) / 2) as i64;
    let col_target = (m * (total - 1) / 2) as i64;
    for i in 0..m {
        let s: i64 = grid.row(i).map(|(_, v)| v).sum();
        if s != row_target {
            return Err(format!("row {} sums to {s}, want {row_target}", i + 1));
        }
    }
    for j in 0..n {
        let s: i64 = grid.col(j).map(|(_, v)| v).sum();
        if s != col_target {
            return Err(format!("column {} sums to {s}, want {col_target}", j + 1));
        }
    }
    Ok(())
}

fn check_heffter(grid: &SignedGrid, m: usize, n: usize, s: usize, t: usize) -> std::result::Result<(), String> {
    if grid.rows() != m || grid.cols() != n {
        return Err(format!("need a {m} x {n} grid"));
    }
    let total = m * s;
    let mut seen = vec![false; total + 1];
    for v in grid.values() {
        let a = v.unsigned_abs() as usize;
        if a == 0 || a > total || std::mem::replace(&mut seen[a], true) {
            return Err(format!("magnitude {a} repeated or outside 1..={total}"));
        }
    }
    if grid.filled() != total {
        return Err(format!("{} filled cells, want {total}", grid.filled()));
    }
    for i in 0..m {
        let (cnt, sum) = grid.row(i).fold((0, 0), |(c, s), (_, v)| (c + 1, s + v));
        if cnt != s || sum != 0 {
            return Err(format!("row {} has {cnt} cells summing to {sum}", i + 1));
        }
    }
    for j in 0..n {
        let (cnt, sum) = grid.col(j).fold((0, 0), |(c, s), (_, v)| (c + 1, s + v));
        if cnt != t || sum != 0 {
            return Err(format!("column {} has {cnt} cells summing to {sum}", j + 1));
        }
    }
    Ok(())
}

pub(crate) fn check_tight_heffter(grid: &SignedGrid, m: usize, n: usize) -> std::result::Result<(), String> {
    check_heffter(grid, m, n, n, m)
}

pub(crate) fn check_square_heffter(grid: &SignedGrid, n: usize, k: usize) -> std::result::Result<(), String> {
    check_heffter(grid, n, n, k, k)
}
