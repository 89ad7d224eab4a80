use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::SignedGrid;
use crate::spec::{symbol_set, ArraySpec};

/// Full audit of a grid against a spec.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub is_valid_sma: bool,
    pub row_sums: Vec<i64>,
    pub col_sums: Vec<i64>,
    pub row_fill_counts: Vec<usize>,
    pub col_fill_counts: Vec<usize>,
    pub symbol_coverage_ok: bool,
    pub is_shiftable: bool,
    /// Only reported for square grids.
    pub diagonal_width: Option<usize>,
}

impl VerificationReport {
    /// 1-based indices of rows whose sum or fill count is wrong.
    pub fn failing_rows(&self, spec: &ArraySpec) -> Vec<usize> {
        failing(&self.row_sums, &self.row_fill_counts, spec.s)
    }

    /// 1-based indices of columns whose sum or fill count is wrong.
    pub fn failing_cols(&self, spec: &ArraySpec) -> Vec<usize> {
        failing(&self.col_sums, &self.col_fill_counts, spec.t)
    }
}

fn failing(sums: &[i64], counts: &[usize], want: usize) -> Vec<usize> {
    sums.iter().zip(counts).enumerate().filter(|(_, (&s, &c))| s != 0 || c != want).map(|(i, _)| i + 1).collect()
}

pub fn verify(grid: &SignedGrid, spec: &ArraySpec) -> Result<VerificationReport> {
    if grid.rows() != spec.m || grid.cols() != spec.n {
        return Err(Error::Argument(format!(
            "grid is {}x{} but spec {} wants {}x{}",
            grid.rows(),
            grid.cols(),
            spec,
            spec.m,
            spec.n
        )));
    }
    let symbols = symbol_set(spec)?;

    let mut row_sums = vec![0; spec.m];
    let mut col_sums = vec![0; spec.n];
    let mut row_fill_counts = vec![0; spec.m];
    let mut col_fill_counts = vec![0; spec.n];
    let mut seen = vec![false; symbols.len()];
    let mut coverage = grid.filled() == symbols.len();
    for ((i, j), v) in grid.entries() {
        row_sums[i] += v;
        col_sums[j] += v;
        row_fill_counts[i] += 1;
        col_fill_counts[j] += 1;
        if symbols.contains(v) {
            let slot = (v + symbols.bound) as usize;
            let slot = if !symbols.contains_zero && v > 0 { slot - 1 } else { slot };
            if std::mem::replace(&mut seen[slot], true) {
                coverage = false;
            }
        } else {
            coverage = false;
        }
    }
    let coverage = coverage && seen.iter().all(|&b| b);

    let (row_bal, col_bal) = grid.sign_balance();
    let is_shiftable = row_bal.iter().chain(&col_bal).all(|&b| b == 0);

    let is_valid_sma = row_sums.iter().chain(&col_sums).all(|&s| s == 0)
        && row_fill_counts.iter().all(|&c| c == spec.s)
        && col_fill_counts.iter().all(|&c| c == spec.t)
        && coverage;

    let diagonal_width = (spec.m == spec.n).then(|| band_width(grid));

    Ok(VerificationReport {
        is_valid_sma,
        row_sums,
        col_sums,
        row_fill_counts,
        col_fill_counts,
        symbol_coverage_ok: coverage,
        is_shiftable,
        diagonal_width,
    })
}

/// Residues `(j - i) mod n` that hold at least one filled cell.
pub fn occupied_diagonals(grid: &SignedGrid) -> Vec<bool> {
    let n = grid.cols();
    let mut occ = vec![false; n];
    for ((i, j), _) in grid.entries() {
        occ[(j + n - i % n) % n] = true;
    }
    occ
}

/// Length of the shortest cyclic window of broken diagonals containing every
/// filled cell. Zero for an empty grid.
pub fn diagonal_width(grid: &SignedGrid) -> Result<usize> {
    if grid.rows() != grid.cols() {
        return Err(Error::Argument(format!(
            "diagonal width needs a square grid, got {}x{}",
            grid.rows(),
            grid.cols()
        )));
    }
    Ok(band_width(grid))
}

fn band_width(grid: &SignedGrid) -> usize {
    let n = grid.cols();
    let occ = occupied_diagonals(grid);
    if !occ.iter().any(|&b| b) {
        return 0;
    }
    // longest cyclic run of empty diagonals
    let mut best = 0;
    let mut run = 0;
    for k in 0..2 * n {
        if occ[k % n] {
            run = 0;
        } else {
            run += 1;
            best = best.max(run.min(n));
        }
    }
    n - best
}

/// First residue of the shortest covering window, with its length.
pub fn diagonal_band(grid: &SignedGrid) -> Option<(usize, usize)> {
    let n = grid.cols();
    let occ = occupied_diagonals(grid);
    let width = band_width(grid);
    if width == 0 {
        return None;
    }
    (0..n).find(|&start| occ[start] && (width..n).all(|k| !occ[(start + k) % n])).map(|start| (start, width))
}
