//! Exhaustive search over every signed magic array of a small spec.
//!
//! Cells are visited row-major; each is left empty or given an unused
//! symbol, tried in the order `0, 1, -1, 2, -2, ...`. A line with one cell
//! left to fill has its value forced, and every partial line sum must stay
//! reachable with the remaining unused symbols. When `0` is not a symbol,
//! negation pairs up solutions, so the first filled cell is taken positive.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::grid::SignedGrid;
use crate::providers::SearchLimits;
use crate::spec::ArraySpec;

/// Result of an exhaustive run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    Found(SignedGrid),
    /// Every candidate was ruled out.
    NoneExhaustive,
}

struct Search {
    spec: ArraySpec,
    /// largest magnitude; symbol `v` is slot `v + max`
    max: i64,
    order: Vec<i64>,
    used: Vec<bool>,
    has_zero: bool,
    cells: Vec<Option<i64>>,
    row_sum: Vec<i64>,
    col_sum: Vec<i64>,
    row_need: Vec<usize>,
    col_need: Vec<usize>,
    placed: usize,
    nodes: u64,
    limits: SearchLimits,
    started: Instant,
    out_of_budget: bool,
}

impl Search {
    fn new(spec: ArraySpec, limits: &SearchLimits) -> Result<Self> {
        let symbols = spec.symbols()?;
        let max = symbols.iter().map(|v| v.abs()).max().unwrap_or(0);
        let has_zero = symbols.contains(0);
        let mut order: Vec<i64> = symbols.iter().collect();
        order.sort_by_key(|&v| (v.abs(), v < 0));
        Ok(Search {
            spec,
            max,
            order,
            used: vec![false; 2 * max as usize + 1],
            has_zero,
            cells: vec![None; spec.m * spec.n],
            row_sum: vec![0; spec.m],
            col_sum: vec![0; spec.n],
            row_need: vec![spec.s; spec.m],
            col_need: vec![spec.t; spec.n],
            placed: 0,
            nodes: 0,
            limits: limits.clone(),
            started: Instant::now(),
            out_of_budget: false,
        })
    }

    fn slot(&self, v: i64) -> usize {
        (v + self.max) as usize
    }

    fn is_free(&self, v: i64) -> bool {
        v.abs() <= self.max && !self.used[self.slot(v)] && (v != 0 || self.has_zero)
    }

    /// Can `need` distinct unused symbols add up to `target`?
    fn reachable(&self, need: usize, target: i64) -> bool {
        if need == 0 {
            return target == 0;
        }
        let free = (-self.max..=self.max).filter(|&v| self.is_free(v));
        let (mut lo, mut k) = (0, 0);
        for v in free.clone() {
            if k == need {
                break;
            }
            lo += v;
            k += 1;
        }
        if k < need {
            return false;
        }
        let hi: i64 = free.rev().take(need).sum();
        (lo..=hi).contains(&target)
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        let s = self.slot(v);
        self.used[s] = true;
        self.cells[i * self.spec.n + j] = Some(v);
        self.row_sum[i] += v;
        self.col_sum[j] += v;
        self.row_need[i] -= 1;
        self.col_need[j] -= 1;
        self.placed += 1;
    }

    fn unset(&mut self, i: usize, j: usize, v: i64) {
        let s = self.slot(v);
        self.used[s] = false;
        self.cells[i * self.spec.n + j] = None;
        self.row_sum[i] -= v;
        self.col_sum[j] -= v;
        self.row_need[i] += 1;
        self.col_need[j] += 1;
        self.placed -= 1;
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limits.node_budget
            || (self.nodes.is_multiple_of(4096) && self.started.elapsed() > self.limits.time_budget)
        {
            self.out_of_budget = true;
        }
        !self.out_of_budget
    }

    fn grid(&self) -> SignedGrid {
        let n = self.spec.n;
        let mut g = SignedGrid::new(self.spec.m, n);
        for (k, v) in self.cells.iter().enumerate() {
            if let Some(v) = v {
                g.set(k / n, k % n, *v);
            }
        }
        g
    }

    /// Visits solutions from cell `k` on; `visit` returns false to stop.
    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&Search) -> bool) -> bool {
        let ArraySpec { m, n, .. } = self.spec;
        if k == m * n {
            return visit(self);
        }
        if !self.tick() {
            return false;
        }
        let (i, j) = (k / n, k % n);
        let row_room = n - j;
        let col_room = m - i;
        let can_fill = self.row_need[i] > 0 && self.col_need[j] > 0;
        let can_skip = self.row_need[i] < row_room && self.col_need[j] < col_room;

        if can_fill {
            let forced_row = (self.row_need[i] == 1).then(|| -self.row_sum[i]);
            let forced_col = (self.col_need[j] == 1).then(|| -self.col_sum[j]);
            let candidates: Vec<i64> = match (forced_row, forced_col) {
                (Some(a), Some(b)) if a != b => vec![],
                (Some(a), _) | (_, Some(a)) => vec![a],
                (None, None) => self.order.clone(),
            };
            for v in candidates {
                if !self.is_free(v) || (self.placed == 0 && !self.has_zero && v < 0) {
                    continue;
                }
                self.set(i, j, v);
                let ok = self.reachable(self.row_need[i], -self.row_sum[i])
                    && self.reachable(self.col_need[j], -self.col_sum[j]);
                let go_on = !ok || self.run(k + 1, visit);
                self.unset(i, j, v);
                if !go_on {
                    return false;
                }
            }
        }
        if can_skip {
            return self.run(k + 1, visit);
        }
        true
    }
}

fn check_size(spec: &ArraySpec, limits: &SearchLimits) -> Result<()> {
    spec.validate()?;
    if spec.filled() > limits.max_filled_cells {
        return Err(Error::Inconclusive {
            spec: spec.to_string(),
            reason: format!("{} filled cells, above the cap of {}", spec.filled(), limits.max_filled_cells),
        });
    }
    Ok(())
}

fn inconclusive(spec: &ArraySpec, s: &Search) -> Error {
    Error::Inconclusive { spec: spec.to_string(), reason: format!("budget exhausted after {} nodes", s.nodes) }
}

/// First solution in canonical order, or proof that none exists.
pub fn search_one(spec: &ArraySpec, limits: &SearchLimits) -> Result<OracleVerdict> {
    search_one_counted(spec, limits).map(|(v, _)| v)
}

/// As [`search_one`], also returning the number of search nodes visited.
pub fn search_one_counted(spec: &ArraySpec, limits: &SearchLimits) -> Result<(OracleVerdict, u64)> {
    check_size(spec, limits)?;
    let mut s = Search::new(*spec, limits)?;
    let mut found = None;
    s.run(0, &mut |s| {
        found = Some(s.grid());
        false
    });
    match found {
        Some(g) => Ok((OracleVerdict::Found(g.with_method("oracle")), s.nodes)),
        None if s.out_of_budget => Err(inconclusive(spec, &s)),
        None => Ok((OracleVerdict::NoneExhaustive, s.nodes)),
    }
}

/// Exact number of signed magic arrays for `spec`.
pub fn count_all(spec: &ArraySpec, limits: &SearchLimits) -> Result<u64> {
    check_size(spec, limits)?;
    let mut s = Search::new(*spec, limits)?;
    let mut count = 0u64;
    s.run(0, &mut |_| {
        count += 1;
        true
    });
    if s.out_of_budget {
        return Err(inconclusive(spec, &s));
    }
    Ok(if s.has_zero { count } else { 2 * count })
}
