//! Backtracking search for integer Heffter arrays on a fixed cell pattern.
//!
//! Cells are visited in row-major order; each takes an unused magnitude in
//! increasing order, positive before negative. A line's last open cell is
//! forced to cancel the line's partial sum.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::SearchLimits;
use crate::grid::SignedGrid;

/// Result of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(SignedGrid),
    Exhausted,
    BudgetExceeded,
}

struct Search {
    m: usize,
    n: usize,
    cells: Vec<(usize, usize)>,
    max: usize,
    used: Vec<bool>,
    /// lines 0..m are rows, m..m+n columns
    sum: Vec<i64>,
    open: Vec<usize>,
    /// last cell of each line in visiting order
    last_cell: Vec<usize>,
    /// cells that some line with one open cell needs to hold this magnitude
    demand: Vec<Vec<usize>>,
    values: Vec<i64>,
    rng: Option<ChaCha8Rng>,
    nodes: u64,
    limits: SearchLimits,
    start: Instant,
    out_of_budget: bool,
}

impl Search {
    fn largest_unused(&self, r: usize) -> i64 {
        let mut total = 0;
        let mut left = r;
        let mut v = self.max;
        while left > 0 && v > 0 {
            if !self.used[v] {
                total += v as i64;
                left -= 1;
            }
            v -= 1;
        }
        total
    }

    fn line_ok(&self, line: usize) -> bool {
        let r = self.open[line];
        let s = self.sum[line];
        match r {
            0 => s == 0,
            1 => {
                let need = s.unsigned_abs() as usize;
                need != 0 && need <= self.max && !self.used[need]
            }
            _ => s.abs() <= self.largest_unused(r),
        }
    }

    fn demand_of(&self, line: usize) -> Option<usize> {
        (self.open[line] == 1).then(|| self.sum[line].unsigned_abs() as usize)
    }

    fn add_demand(&mut self, line: usize, delta: i32) {
        if let Some(v) = self.demand_of(line) {
            if v >= 1 && v <= self.max {
                let cell = self.last_cell[line];
                if delta > 0 {
                    self.demand[v].push(cell);
                } else if let Some(pos) = self.demand[v].iter().position(|&c| c == cell) {
                    self.demand[v].swap_remove(pos);
                }
            }
        }
    }

    /// Whether a magnitude is claimed by some cell other than `idx`.
    fn claimed_elsewhere(&self, v: usize, idx: usize) -> bool {
        self.demand[v].iter().any(|&c| c != idx)
    }

    fn assign(&mut self, idx: usize, v: i64) {
        let (i, j) = self.cells[idx];
        let (row, col) = (i, self.m + j);
        self.add_demand(row, -1);
        self.add_demand(col, -1);
        self.used[v.unsigned_abs() as usize] = true;
        self.sum[row] += v;
        self.sum[col] += v;
        self.open[row] -= 1;
        self.open[col] -= 1;
        self.values[idx] = v;
        self.add_demand(row, 1);
        self.add_demand(col, 1);
    }

    fn unassign(&mut self, idx: usize) {
        let (i, j) = self.cells[idx];
        let (row, col) = (i, self.m + j);
        let v = self.values[idx];
        self.add_demand(row, -1);
        self.add_demand(col, -1);
        self.used[v.unsigned_abs() as usize] = false;
        self.sum[row] -= v;
        self.sum[col] -= v;
        self.open[row] += 1;
        self.open[col] += 1;
        self.add_demand(row, 1);
        self.add_demand(col, 1);
    }

    fn consistent(&self, idx: usize) -> bool {
        let (i, j) = self.cells[idx];
        if !self.line_ok(i) || !self.line_ok(self.m + j) {
            return false;
        }
        // two different cells cannot both receive one magnitude
        [i, self.m + j].into_iter().all(|line| match self.demand_of(line) {
            Some(v) if v <= self.max => {
                let first = self.demand[v][0];
                self.demand[v].iter().all(|&c| c == first)
            }
            _ => true,
        })
    }

    fn candidates(&mut self, idx: usize) -> Vec<i64> {
        let (i, j) = self.cells[idx];
        let (row, col) = (i, self.m + j);
        let forced = [row, col].into_iter().filter(|&l| self.open[l] == 1).map(|l| -self.sum[l]).collect::<Vec<_>>();
        if let Some(&f) = forced.first() {
            if forced.iter().any(|&g| g != f) || f == 0 {
                return vec![];
            }
            let mag = f.unsigned_abs() as usize;
            if mag > self.max || self.used[mag] || self.claimed_elsewhere(mag, idx) {
                return vec![];
            }
            return vec![f];
        }
        let mut out = Vec::new();
        for v in 1..=self.max {
            if self.used[v] || !self.demand[v].is_empty() {
                continue;
            }
            out.push(v as i64);
            if idx > 0 {
                out.push(-(v as i64));
            }
        }
        if let Some(rng) = self.rng.as_mut() {
            out.shuffle(rng);
        }
        out
    }

    fn run(&mut self, idx: usize) -> bool {
        if idx == self.cells.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.limits.node_budget
            || (self.nodes & 0xffff == 0 && self.start.elapsed() > self.limits.time_budget)
        {
            self.out_of_budget = true;
        }
        if self.out_of_budget {
            return false;
        }
        for v in self.candidates(idx) {
            self.assign(idx, v);
            if self.consistent(idx) && self.run(idx + 1) {
                return true;
            }
            self.unassign(idx);
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}

/// Searches for an `m x n` array on `cells` using each magnitude in
/// `1..=cells.len()` once with zero row and column sums.
pub fn search_pattern(m: usize, n: usize, cells: Vec<(usize, usize)>, limits: &SearchLimits) -> SearchOutcome {
    run_search(m, n, cells, None, limits)
}

/// Nodes per unit of the restart schedule.
const RESTART_UNIT: u64 = 1 << 13;

/// Like [`search_pattern`], but candidate values are tried in a seeded
/// random order and the search restarts on the Luby schedule whenever the
/// current node allowance runs out. Only a round that finishes within its
/// allowance can report `Exhausted`.
pub fn search_restarts(
    m: usize,
    n: usize,
    cells: Vec<(usize, usize)>,
    seed: u64,
    limits: &SearchLimits,
) -> SearchOutcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut round_no: u64 = 1;
    let mut spent: u64 = 0;
    loop {
        let left_time = limits.time_budget.saturating_sub(start.elapsed());
        let left_nodes = limits.node_budget.saturating_sub(spent);
        if left_time.is_zero() || left_nodes == 0 {
            return SearchOutcome::BudgetExceeded;
        }
        let round = SearchLimits {
            node_budget: (RESTART_UNIT * luby(round_no)).min(left_nodes),
            time_budget: left_time,
            ..limits.clone()
        };
        let child = ChaCha8Rng::seed_from_u64(rand::Rng::gen(&mut rng));
        match run_search(m, n, cells.clone(), Some(child), &round) {
            SearchOutcome::BudgetExceeded => {
                spent += round.node_budget;
                round_no += 1;
            }
            done => return done,
        }
    }
}

/// The Luby restart sequence 1, 1, 2, 1, 1, 2, 4, ... (1-based).
fn luby(i: u64) -> u64 {
    let mut k = 1;
    while (1u64 << k) - 1 < i {
        k += 1;
    }
    if (1u64 << k) - 1 == i {
        1 << (k - 1)
    } else {
        luby(i - (1 << (k - 1)) + 1)
    }
}

fn run_search(
    m: usize,
    n: usize,
    cells: Vec<(usize, usize)>,
    rng: Option<ChaCha8Rng>,
    limits: &SearchLimits,
) -> SearchOutcome {
    let max = cells.len();
    let mut open = vec![0; m + n];
    let mut last_cell = vec![0; m + n];
    for (idx, &(i, j)) in cells.iter().enumerate() {
        open[i] += 1;
        open[m + j] += 1;
        last_cell[i] = idx;
        last_cell[m + j] = idx;
    }
    let mut s = Search {
        m,
        n,
        max,
        used: vec![false; max + 1],
        sum: vec![0; m + n],
        open,
        last_cell,
        demand: vec![Vec::new(); max + 1],
        values: vec![0; max],
        rng,
        nodes: 0,
        limits: limits.clone(),
        start: Instant::now(),
        out_of_budget: false,
        cells,
    };
    if s.run(0) {
        let mut g = SignedGrid::new(s.m, s.n);
        for (&(i, j), &v) in s.cells.iter().zip(&s.values) {
            g.set(i, j, v);
        }
        SearchOutcome::Found(g)
    } else if s.out_of_budget {
        SearchOutcome::BudgetExceeded
    } else {
        SearchOutcome::Exhausted
    }
}

/// Every cell of an `m x n` grid, row-major.
pub fn full_pattern(m: usize, n: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
}

/// Reorders cells so lines close early: the rest of row 0, then the rest
/// of column 0, then row 1, column 1, and so on.
pub fn closing_order(m: usize, n: usize, cells: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut taken = vec![false; cells.len()];
    let mut out = Vec::with_capacity(cells.len());
    for k in 0..m.max(n) {
        for want_row in [true, false] {
            for (idx, &(i, j)) in cells.iter().enumerate() {
                let hit = if want_row { i == k } else { j == k };
                if hit && !taken[idx] {
                    taken[idx] = true;
                    out.push((i, j));
                }
            }
        }
    }
    out
}

/// Cells on broken diagonals `0..k` of an `n x n` grid, row-major.
pub fn band_pattern(n: usize, k: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).filter(move |&j| (j + n - i) % n < k).map(move |j| (i, j))).collect()
}
