//! Magic rectangles: entries `0..mn`, constant row sums and constant
//! column sums.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::heffter::SearchOutcome;
use super::SearchLimits;
use crate::grid::SignedGrid;

/// Classical odd-order magic square (step up-right, drop down on collision),
/// entries `0..n*n`.
pub fn siamese(n: usize) -> SignedGrid {
    assert!(n % 2 == 1, "siamese construction needs odd order");
    let mut g = SignedGrid::new(n, n);
    let (mut i, mut j) = (0, n / 2);
    for v in 0..(n * n) as i64 {
        g.set(i, j, v);
        let (ni, nj) = ((i + n - 1) % n, (j + 1) % n);
        if g.get(ni, nj).is_some() {
            i = (i + 1) % n;
        } else {
            (i, j) = (ni, nj);
        }
    }
    g
}

struct Backtrack {
    m: usize,
    n: usize,
    row_target: i64,
    col_target: i64,
    used: Vec<bool>,
    grid: Vec<i64>,
    row_sum: Vec<i64>,
    col_sum: Vec<i64>,
    nodes: u64,
    limits: SearchLimits,
    start: Instant,
    out_of_budget: bool,
}

impl Backtrack {
    /// Sum of the `r` smallest and `r` largest unused values.
    fn extremes(&self, r: usize) -> (i64, i64) {
        let total = self.used.len();
        let lo = (0..total).filter(|&v| !self.used[v]).take(r).map(|v| v as i64).sum();
        let hi = (0..total).rev().filter(|&v| !self.used[v]).take(r).map(|v| v as i64).sum();
        (lo, hi)
    }

    fn feasible(&self, sum: i64, target: i64, remaining: usize) -> bool {
        if remaining == 0 {
            return sum == target;
        }
        let need = target - sum;
        let (lo, hi) = self.extremes(remaining);
        need >= lo && need <= hi
    }

    fn run(&mut self, idx: usize) -> bool {
        let (m, n) = (self.m, self.n);
        if idx == m * n {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.limits.node_budget
            || (self.nodes & 0xffff == 0 && self.start.elapsed() > self.limits.time_budget)
        {
            self.out_of_budget = true;
            return false;
        }
        let (i, j) = (idx / n, idx % n);
        let total = m * n;
        for v in 0..total {
            if self.used[v] {
                continue;
            }
            let v = v as i64;
            // rows and columns may be permuted: keep row 0 and column 0 increasing
            if i == 0 && j > 0 && v < self.grid[j - 1] {
                continue;
            }
            if j == 0 && i > 0 && v < self.grid[(i - 1) * n] {
                continue;
            }
            self.used[v as usize] = true;
            self.grid[idx] = v;
            self.row_sum[i] += v;
            self.col_sum[j] += v;
            let ok = self.feasible(self.row_sum[i], self.row_target, n - j - 1)
                && self.feasible(self.col_sum[j], self.col_target, m - i - 1);
            if ok && self.run(idx + 1) {
                return true;
            }
            self.used[v as usize] = false;
            self.row_sum[i] -= v;
            self.col_sum[j] -= v;
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}

/// Exhaustive search in row-major order with ascending values; row and
/// column permutation symmetry is broken by keeping the first row and
/// first column increasing.
pub fn backtrack(m: usize, n: usize, limits: &SearchLimits) -> SearchOutcome {
    let total = (m * n) as i64;
    let mut b = Backtrack {
        m,
        n,
        row_target: n as i64 * (total - 1) / 2,
        col_target: m as i64 * (total - 1) / 2,
        used: vec![false; m * n],
        grid: vec![0; m * n],
        row_sum: vec![0; m],
        col_sum: vec![0; n],
        nodes: 0,
        limits: limits.clone(),
        start: Instant::now(),
        out_of_budget: false,
    };
    if b.run(0) {
        let rows: Vec<Vec<i64>> = b.grid.chunks(n).map(<[i64]>::to_vec).collect();
        SearchOutcome::Found(SignedGrid::from_dense(&rows).expect("rectangular"))
    } else if b.out_of_budget {
        SearchOutcome::BudgetExceeded
    } else {
        SearchOutcome::Exhausted
    }
}

/// Seeded local search: random permutation, then swaps that do not
/// increase the squared deviation of row and column sums, restarting
/// from a fresh permutation when progress stalls.
pub fn local_search(m: usize, n: usize, seed: u64, limits: &SearchLimits) -> SearchOutcome {
    let total = m * n;
    let row_target = (n * (total - 1) / 2) as i64;
    let col_target = (m * (total - 1) / 2) as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = Instant::now();
    let mut steps: u64 = 0;
    let restart_after = 40 * (total as u64).pow(2);
    loop {
        let mut vals: Vec<i64> = (0..total as i64).collect();
        for k in (1..total).rev() {
            vals.swap(k, rng.gen_range(0..=k));
        }
        let mut rs = vec![-row_target; m];
        let mut cs = vec![-col_target; n];
        for (idx, &v) in vals.iter().enumerate() {
            rs[idx / n] += v;
            cs[idx % n] += v;
        }
        let mut cost: i64 = rs.iter().chain(&cs).map(|d| d * d).sum();
        let mut since_restart = 0u64;
        while cost > 0 && since_restart < restart_after {
            steps += 1;
            since_restart += 1;
            if steps > limits.node_budget || (steps & 0xffff == 0 && start.elapsed() > limits.time_budget) {
                return SearchOutcome::BudgetExceeded;
            }
            let a = rng.gen_range(0..total);
            let b = rng.gen_range(0..total);
            let d = vals[b] - vals[a];
            if d == 0 {
                continue;
            }
            let (ra, ca, rb, cb) = (a / n, a % n, b / n, b % n);
            let mut delta = 0;
            if ra != rb {
                delta += (rs[ra] + d).pow(2) - rs[ra].pow(2) + (rs[rb] - d).pow(2) - rs[rb].pow(2);
            }
            if ca != cb {
                delta += (cs[ca] + d).pow(2) - cs[ca].pow(2) + (cs[cb] - d).pow(2) - cs[cb].pow(2);
            }
            if delta <= 0 {
                vals.swap(a, b);
                if ra != rb {
                    rs[ra] += d;
                    rs[rb] -= d;
                }
                if ca != cb {
                    cs[ca] += d;
                    cs[cb] -= d;
                }
                cost += delta;
            }
        }
        if cost == 0 {
            let rows: Vec<Vec<i64>> = vals.chunks(n).map(<[i64]>::to_vec).collect();
            return SearchOutcome::Found(SignedGrid::from_dense(&rows).expect("rectangular"));
        }
    }
}
