//! Tight (fully filled) signed magic arrays.

use crate::decide::{tight_method, TightMethod};
use crate::error::{Error, Result};
use crate::grid::SignedGrid;
use crate::providers::Providers;

/// The shiftable 2 x 4 block every growth step tiles with.
pub(crate) const BLOCK_2X4: [[i64; 4]; 2] = [[1, -2, -3, 4], [-1, 2, 3, -4]];

const BASE_2X3: [[i64; 3]; 2] = [[1, 2, -3], [-1, -2, 3]];

const BASE_4X6: [[i64; 6]; 4] =
    [[1, -2, -3, 4, 9, -9], [-1, 2, 3, -4, -10, 10], [5, -6, -7, 8, -11, 11], [-5, 6, 7, -8, 12, -12]];

const BASE_6X6: [[i64; 6]; 6] = [
    [6, -4, -12, -3, 2, 11],
    [-13, 15, 16, 7, -8, -17],
    [10, -18, -5, -14, 18, 9],
    [-9, 1, 14, 5, -1, -10],
    [17, 8, -16, -7, -15, 13],
    [-11, -2, 3, 12, 4, -6],
];

const BASE_3X2: [[i64; 2]; 3] = [[1, -1], [2, -2], [-3, 3]];

const BASE_3X4: [[i64; 4]; 3] = [[1, -1, 2, -2], [5, 4, -5, -4], [-6, -3, 3, 6]];

pub(crate) fn dense<const N: usize>(rows: &[[i64; N]]) -> SignedGrid {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    SignedGrid::from_dense(&rows).expect("rectangular literal")
}

fn block_2x4(shift: i64) -> SignedGrid {
    dense(&BLOCK_2X4).shift_magnitudes(shift).expect("block has no zero")
}

fn block_4x2(shift: i64) -> SignedGrid {
    block_2x4(shift).transpose()
}

fn half(m: usize, n: usize) -> i64 {
    (m * n / 2) as i64
}

/// Tight `SMA(m,n)`, dispatched by the parities of `m` and `n`.
pub fn construct_tight(m: usize, n: usize, providers: &Providers) -> Result<SignedGrid> {
    let method = tight_method(m, n).map_err(Error::Unsupported)?;
    let grid = match method {
        TightMethod::Trivial => SignedGrid::from_dense(&[vec![0]])?,
        TightMethod::TwoRows { transposed: false } => construct_2xn(n)?,
        TightMethod::TwoRows { transposed: true } => construct_2xn(m)?.transpose(),
        TightMethod::EvenEven => construct_even_even(m, n)?,
        TightMethod::OddOdd => construct_odd_odd(m, n, providers)?,
        TightMethod::OddEven { transposed: false } => construct_odd_even(m, n)?,
        TightMethod::OddEven { transposed: true } => construct_odd_even(n, m)?.transpose(),
    };
    Ok(grid.with_method(method.to_string()))
}

/// `SMA(2,n)` for `n ≡ 0,3 (mod 4)`: a 2 x 3 or 2 x 4 base with shifted
/// 2 x 4 blocks appended on the right.
pub fn construct_2xn(n: usize) -> Result<SignedGrid> {
    match n % 4 {
        0 | 3 if n >= 3 => {}
        _ => return Err(Error::Unsupported(format!("2 x n needs n ≡ 0,3 (mod 4), got n = {n}"))),
    }
    let (mut grid, mut width) = if n % 4 == 3 { (dense(&BASE_2X3), 3) } else { (dense(&BLOCK_2X4), 4) };
    while width < n {
        let mut wider = SignedGrid::new(2, width + 4);
        wider = wider.paste(&grid, 0, 0)?;
        grid = wider.paste(&block_2x4(width as i64), 0, width)?;
        width += 4;
    }
    Ok(grid)
}

/// Shiftable `SMA(m,n)` for even `m, n > 2`.
pub fn construct_even_even(m: usize, n: usize) -> Result<SignedGrid> {
    if !m.is_multiple_of(2) || !n.is_multiple_of(2) || m < 4 || n < 4 {
        return Err(Error::Unsupported(format!("even x even needs even m, n > 2, got {m} x {n}")));
    }
    let mut grid = match (m % 4, n % 4) {
        (0, 0) => four_by_four()?,
        (0, _) => dense(&BASE_4X6),
        (_, 0) => dense(&BASE_4X6).transpose(),
        _ => dense(&BASE_6X6),
    };
    let rows = grid.rows();
    // widen: stack shifted 2 x 4 blocks in the new columns
    while grid.cols() < n {
        let cols = grid.cols();
        let base = half(rows, cols);
        let mut wider = SignedGrid::new(rows, cols + 4).paste(&grid, 0, 0)?;
        for b in 0..rows / 2 {
            wider = wider.paste(&block_2x4(base + 4 * b as i64), 2 * b, cols)?;
        }
        grid = wider;
    }
    // lengthen: shifted 4 x 2 blocks side by side in the new rows
    while grid.rows() < m {
        let rows = grid.rows();
        let base = half(rows, n);
        let mut taller = SignedGrid::new(rows + 4, n).paste(&grid, 0, 0)?;
        for b in 0..n / 2 {
            taller = taller.paste(&block_4x2(base + 4 * b as i64), rows, 2 * b)?;
        }
        grid = taller;
    }
    Ok(grid)
}

fn four_by_four() -> Result<SignedGrid> {
    SignedGrid::new(4, 4).paste(&block_2x4(0), 0, 0)?.paste(&block_2x4(4), 2, 0)
}

/// `SMA(m,n)` for odd `m, n > 1`: a magic rectangle recentred on zero.
pub fn construct_odd_odd(m: usize, n: usize, providers: &Providers) -> Result<SignedGrid> {
    if m.is_multiple_of(2) || n.is_multiple_of(2) || m < 3 || n < 3 {
        return Err(Error::Unsupported(format!("odd x odd needs odd m, n > 1, got {m} x {n}")));
    }
    let magic = providers.magic_rectangle(m, n)?;
    let w = ((m * n - 1) / 2) as i64;
    let mut grid = magic.grid.map_values(|v| v - w);
    grid.meta.provider_key = Some(magic.key);
    Ok(grid)
}

/// `SMA(3,n)` for even `n`.
pub fn construct_3xeven(n: usize) -> Result<SignedGrid> {
    if !n.is_multiple_of(2) || n < 2 {
        return Err(Error::Unsupported(format!("3 x n needs even n >= 2, got n = {n}")));
    }
    match n {
        2 => return Ok(dense(&BASE_3X2)),
        4 => return Ok(dense(&BASE_3X4)),
        _ => {}
    }
    let k = (n / 2) as i64;
    let mut grid = SignedGrid::new(3, n);
    for j in 1..=n as i64 {
        let p = (j + 1) / 2;
        let top = match j % 4 {
            0 => -(3 * p - 2) / 2,
            1 => (3 * p - 1) / 2,
            2 => -(3 * p - 1) / 2,
            _ => (3 * p - 2) / 2,
        };
        let bottom = if j == 1 {
            -3 * k
        } else if j == 2 * k {
            3 * k
        } else if j % 2 == 0 {
            -3 * (k - p)
        } else {
            3 * (k - p + 1)
        };
        let c = (j - 1) as usize;
        grid.set(0, c, top);
        grid.set(1, c, -(top + bottom));
        grid.set(2, c, bottom);
    }
    Ok(grid)
}

/// `SMA(5,n)` for even `n > 2`.
pub fn construct_5xeven(n: usize) -> Result<SignedGrid> {
    if !n.is_multiple_of(2) || n < 4 {
        return Err(Error::Unsupported(format!("5 x n needs even n > 2, got n = {n}")));
    }
    let top = construct_3xeven(n)?;
    let mut grid = SignedGrid::new(5, n).paste(&top, 0, 0)?;
    let base = (3 * n / 2) as i64;
    if n.is_multiple_of(4) {
        for b in 0..n / 4 {
            grid = grid.paste(&block_2x4(base + 4 * b as i64), 3, 4 * b)?;
        }
    } else {
        let x1 = grid.get(1, 0).expect("filled");
        let x2 = grid.get(1, 1).expect("filled");
        grid.set(1, 0, x2);
        grid.set(1, 1, x1);
        for b in 0..(n - 2) / 4 {
            grid = grid.paste(&block_2x4(base + 2 + 4 * b as i64), 3, 2 + 4 * b)?;
        }
        grid.set(3, 0, -base - 1);
        grid.set(3, 1, base + 1);
        grid.set(4, 0, base + 2);
        grid.set(4, 1, -base - 2);
    }
    Ok(grid)
}

/// `SMA(m,n)` for odd `m > 1` and even `n > 2`.
pub fn construct_odd_even(m: usize, n: usize) -> Result<SignedGrid> {
    if m.is_multiple_of(2) || m < 3 || !n.is_multiple_of(2) || n < 4 {
        return Err(Error::Unsupported(format!("odd x even needs odd m > 1, even n > 2, got {m} x {n}")));
    }
    match m {
        3 => construct_3xeven(n),
        5 => construct_5xeven(n),
        _ => {
            let upper = construct_odd_even(m - 4, n)?;
            let lower = construct_even_even(4, n)?.shift_magnitudes(half(m - 4, n))?;
            SignedGrid::new(m, n).paste(&upper, 0, 0)?.paste(&lower, m - 4, 0)
        }
    }
}
