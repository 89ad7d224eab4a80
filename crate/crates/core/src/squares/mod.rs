//! Signed magic squares `SMS(n;t)`.

pub mod diagonal;
pub mod paired;
pub mod partition;

pub use diagonal::{sms3_diag, sms5_diag_0mod4, sms5_diag_2mod4, sms7_diag_2mod4, DiagonalSequences};
pub use paired::{sms6_2mod4, PairedPartition};
pub use partition::{odd_partition_columns, odd_partition_rows, sms_odd_odd, PartitionSystem};

use crate::decide::{square_method, SquareMethod};
use crate::error::{Error, Result};
use crate::grid::SignedGrid;
use crate::providers::Providers;
use crate::tight::{construct_3xeven, construct_tight};
use crate::verify::diagonal_band;

/// `SMS(n;t)` for every `(n, t)` that admits one.
pub fn construct_sms(n: usize, t: usize, providers: &Providers) -> Result<SignedGrid> {
    let method = square_method(n, t).map_err(Error::Unsupported)?;
    let grid = match method {
        SquareMethod::Tight(_) => construct_tight(n, n, providers)?,
        SquareMethod::OddPartition => sms_odd_odd(n, t)?,
        SquareMethod::EvenFillOddSide => sms_even_t_odd_n(n, t, providers)?,
        SquareMethod::EvenHeffter | SquareMethod::EvenTwoModFour => sms_even_even(n, t, providers)?,
        SquareMethod::OddFillEvenSide => sms_odd_t_even_n(n, t)?,
    };
    Ok(grid.with_method(method.to_string()))
}

/// Shiftable `SMS(n;4)` on the main diagonal and the three to its right.
pub fn sms4_diagonal(n: usize) -> Result<SignedGrid> {
    if n < 4 {
        return Err(Error::Unsupported(format!("four-diagonal squares need n >= 4, got n = {n}")));
    }
    let ni = n as i64;
    let mut g = SignedGrid::new(n, n);
    let mut put = |i: i64, j: i64, v: i64| g.place((i - 1) as usize, (j - 1) as usize, v);
    for i in 1..ni {
        put(i, i, i)?;
    }
    put(ni, ni, -ni)?;
    for j in 2..ni {
        put(j - 1, j, -(j - 1))?;
    }
    put(ni - 1, ni, ni + 1)?;
    for j in 3..=ni {
        put(j - 2, j, 2 * ni - (j - 2))?;
    }
    for j in 4..=ni {
        put(j - 3, j, -(2 * ni - (j - 3)))?;
    }
    put(ni - 2, 1, -(ni + 2))?;
    put(ni - 1, 1, -(ni - 1))?;
    put(ni, 1, 2 * ni)?;
    put(ni - 1, 2, -(ni + 1))?;
    put(ni, 2, ni)?;
    put(ni, 3, -2 * ni)?;
    Ok(g)
}

/// Adds four filled diagonals to a `k`-diagonal `SMS(n;t)`: the four-diagonal
/// square, shifted past `tn/2`, lands on the diagonals right after the band.
pub fn add_four(grid: &SignedGrid) -> Result<SignedGrid> {
    let n = grid.rows();
    if grid.cols() != n || n == 0 || !grid.filled().is_multiple_of(n) {
        return Err(Error::Argument("add_four needs a square grid with equal row fills".into()));
    }
    let t = grid.filled() / n;
    if t % 2 == 1 && n % 2 == 1 {
        return Err(Error::Composition(format!("add_four needs t or n even, got n = {n}, t = {t}")));
    }
    let (start, width) = diagonal_band(grid).ok_or_else(|| Error::Argument("empty grid".into()))?;
    if width + 4 > n {
        return Err(Error::Composition(format!(
            "{width}-diagonal square of order {n} has no four empty diagonals beside its band"
        )));
    }
    let block = sms4_diagonal(n)?.shift_magnitudes((t * n / 2) as i64)?.permute_columns_cyclic((start + width) as i64);
    grid.paste(&block, 0, 0)
}

/// Shiftable 6-diagonal `SMS(n;6)`, `n >= 7` odd: a tight `SMA(3,n)` moved
/// onto `[1, 3n]`, each entry at `(i', j)` with `i' ≡ 2i + j - 2 (mod n)` and
/// its negative at `(i', j + 1)`.
pub fn sms6_odd(n: usize, providers: &Providers) -> Result<SignedGrid> {
    if n.is_multiple_of(2) || n < 7 {
        return Err(Error::Unsupported(format!("six-diagonal odd squares need odd n >= 7, got n = {n}")));
    }
    let a = construct_tight(3, n, providers)?;
    let lift = (3 * n as i64 + 1) / 2;
    let mut b = SignedGrid::new(n, n);
    for ((i, j), v) in a.entries() {
        let row = (2 * i + j) % n;
        b.place(row, j, v + lift)?;
        b.place(row, (j + 1) % n, -(v + lift))?;
    }
    b.meta.provider_key = a.meta.provider_key.clone();
    Ok(b)
}

/// Shiftable 7-diagonal `SMS(n;6)` for `n ≡ 0 (mod 4)`, `n >= 8`. Every
/// twelve consecutive magnitudes `a+1..a+12` split into the row sets
/// `{1,5,6 | 2,3,7}` and `{4,11,12 | 8,9,10}` (plus `a`), whose two triples
/// have equal sums. Row `2i` carries set `i` with the first triple positive,
/// row `2i + 1` its negation, both in columns `2i..2i+5 (mod n)`.
pub fn sms6_0mod4(n: usize) -> Result<SignedGrid> {
    if !n.is_multiple_of(4) || n < 8 {
        return Err(Error::Unsupported(format!("six-fill staircase needs n ≡ 0 (mod 4), n >= 8, got n = {n}")));
    }
    const SETS: [([i64; 3], [i64; 3]); 2] = [([1, 5, 6], [2, 3, 7]), ([4, 11, 12], [8, 9, 10])];
    let mut g = SignedGrid::new(n, n);
    for i in 0..n / 2 {
        let a = 12 * (i / 2) as i64;
        let (plus, minus) = SETS[i % 2];
        let row: Vec<i64> = plus.iter().zip(minus).flat_map(|(&p, q)| [a + p, -(a + q)]).collect();
        for (j, v) in row.into_iter().enumerate() {
            let col = (2 * i + j) % n;
            g.place(2 * i, col, v)?;
            g.place(2 * i + 1, col, -v)?;
        }
    }
    Ok(g)
}

/// Diagonal shiftable `SMS(n;t)` for odd `n > t > 3`, `t` even.
pub fn sms_even_t_odd_n(n: usize, t: usize, providers: &Providers) -> Result<SignedGrid> {
    if n.is_multiple_of(2) || t % 2 == 1 || t < 4 || t >= n {
        return Err(Error::Unsupported(format!("need odd n > t > 3 with t even, got n = {n}, t = {t}")));
    }
    match t {
        4 => sms4_diagonal(n),
        6 => sms6_odd(n, providers),
        _ => add_four(&sms_even_t_odd_n(n, t - 4, providers)?),
    }
}

/// Where each Heffter entry goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeffterLayout {
    /// Row `i` shifts two columns right of row `i - 1`: entry `a_{i,j}` in
    /// column `2(i-1) + j (mod n)`.
    Staircase,
    /// Column classes from `i - j + 1 ≡ c (mod n/2)` on the left half and
    /// `i - j + 1 + t/2 + n/2 ≡ c (mod n/2)` on the right half.
    Congruence,
}

/// `SMS(n;t)` for even `t <= n` with `4 | n` or `4 | t`: rows `2i - 1` and
/// `2i` carry row `i` of a tight `n/2 x t` Heffter array and its negation.
pub fn sms_via_heffter(n: usize, t: usize, providers: &Providers, layout: HeffterLayout) -> Result<SignedGrid> {
    if n % 2 == 1 || t % 2 == 1 || t > n || (!n.is_multiple_of(4) && !t.is_multiple_of(4)) || n < 6 || t < 4 {
        return Err(Error::Unsupported(format!(
            "Heffter rows need even 4 <= t <= n, n >= 6, with 4 | n or 4 | t, got n = {n}, t = {t}"
        )));
    }
    let h = providers.tight_heffter(n / 2, t)?;
    let half = n / 2;
    let mut g = SignedGrid::new(n, n);
    for ((i, j), v) in h.grid.entries() {
        let col = match layout {
            HeffterLayout::Staircase => (2 * i + j) % n,
            HeffterLayout::Congruence => {
                // 1-based: c ≡ i - j + 1 (+ t/2 + n/2) (mod n/2), in the matching half
                let (i1, j1) = (i as i64 + 1, j as i64 + 1);
                if j < t / 2 {
                    residue_in(i1 - j1 + 1, half) - 1
                } else {
                    half + residue_in(i1 - j1 + 1 + (t / 2 + half) as i64, half) - 1
                }
            }
        };
        g.place(2 * i, col, v)?;
        g.place(2 * i + 1, col, -v)?;
    }
    Ok(g.with_provider_key(h.key))
}

fn residue_in(x: i64, m: usize) -> usize {
    partition::residue(x, m)
}

/// `SMS(n;t)` for even `n >= t > 3`, `t` even.
pub fn sms_even_even(n: usize, t: usize, providers: &Providers) -> Result<SignedGrid> {
    if n % 2 == 1 || t % 2 == 1 || t < 4 || t > n {
        return Err(Error::Unsupported(format!("need even n >= t > 3, got n = {n}, t = {t}")));
    }
    if t == n {
        return construct_tight(n, n, providers);
    }
    if n.is_multiple_of(4) || t.is_multiple_of(4) {
        return sms_via_heffter(n, t, providers, HeffterLayout::Staircase);
    }
    if t == 6 {
        sms6_2mod4(n, None)
    } else {
        add_four(&sms_even_even(n, t - 4, providers)?)
    }
}

/// `SMS(n;3)` for even `n >= 4`: the columns of a tight `SMA(3,n)` as column
/// classes and their negatives as row classes.
pub fn sms3_even(n: usize) -> Result<SignedGrid> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::Unsupported(format!("three-fill even squares need even n >= 4, got n = {n}")));
    }
    let a = construct_3xeven(n)?;
    let mut column_of = std::collections::HashMap::new();
    for ((_, j), v) in a.entries() {
        column_of.insert(v, j);
    }
    let mut g = SignedGrid::new(n, n);
    for ((_, c), v) in a.entries() {
        let r = column_of[&-v];
        g.place(r, c, v)
            .map_err(|_| Error::Composition(format!("row class {} meets column class {} twice", r + 1, c + 1)))?;
    }
    Ok(g)
}

/// `SMS(n;t)` for even `n > t >= 3`, `t` odd; diagonal unless `t = 3` and
/// `n ≡ 2 (mod 4)`.
pub fn sms_odd_t_even_n(n: usize, t: usize) -> Result<SignedGrid> {
    if n % 2 == 1 || t.is_multiple_of(2) || t < 3 || t >= n {
        return Err(Error::Unsupported(format!("need even n > t >= 3 with t odd, got n = {n}, t = {t}")));
    }
    match (t, n % 4) {
        (3, 2) => sms3_even(n),
        (3, _) => sms3_diag(n),
        (5, 0) => sms5_diag_0mod4(n),
        (5, _) => sms5_diag_2mod4(n),
        (7, 2) => sms7_diag_2mod4(n),
        _ => add_four(&sms_odd_t_even_n(n, t - 4)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::ArraySpec;
    use crate::verify::{diagonal_width, verify};

    #[test]
    fn four_diagonal_small_orders() {
        for n in 4..=12 {
            let g = sms4_diagonal(n).unwrap();
            let rep = verify(&g, &ArraySpec::square(n, 4)).unwrap();
            assert!(rep.is_valid_sma && rep.is_shiftable, "n={n}");
            assert_eq!(diagonal_width(&g).unwrap(), 4);
        }
        assert_eq!(sms4_diagonal(5).unwrap().get(2, 0), Some(-7));
    }

    #[test]
    fn six_fill_staircase() {
        for n in (8..=24).step_by(4) {
            let g = sms6_0mod4(n).unwrap();
            let rep = verify(&g, &ArraySpec::square(n, 6)).unwrap();
            assert!(rep.is_valid_sma && rep.is_shiftable, "n={n}");
            assert_eq!(diagonal_width(&g).unwrap(), 7);
        }
    }

    #[test]
    fn add_four_needs_room() {
        let p = Providers::builtin();
        let g = sms6_2mod4(10, None).unwrap();
        assert!(matches!(add_four(&g), Err(Error::Composition(_))));
        let g = sms4_diagonal(8).unwrap();
        let full = add_four(&g).unwrap();
        assert!(verify(&full, &ArraySpec::square(8, 8)).unwrap().is_valid_sma);
        let g = sms_even_even(12, 8, &p).unwrap();
        assert!(verify(&g, &ArraySpec::square(12, 8)).unwrap().is_valid_sma);
    }

    #[test]
    fn congruence_layout_is_valid() {
        let p = Providers::builtin();
        for (n, t) in [(6, 4), (8, 4), (8, 6), (12, 8)] {
            let g = sms_via_heffter(n, t, &p, HeffterLayout::Congruence).unwrap();
            assert!(verify(&g, &ArraySpec::square(n, t)).unwrap().is_valid_sma, "n={n} t={t}");
        }
    }
}
