//! `SMA(m,2m;2t,t)`: an `SMS(m;t)` beside a transformed copy of itself.

use crate::decide::{decide_double_rectangle_with, DoubleMethod, Method, Verdict};
use crate::error::{Error, Result};
use crate::grid::SignedGrid;
use crate::providers::Providers;
use crate::squares::{add_four, sms4_diagonal, sms6_0mod4, sms6_2mod4, sms6_odd};
use crate::tight::construct_even_even;

/// Shiftable `SMS(m;t)`; exists exactly for even `t` with `m >= t >= 4`.
pub fn shiftable_sms(m: usize, t: usize, providers: &Providers) -> Result<SignedGrid> {
    if t % 2 == 1 || t < 4 || t > m {
        return Err(Error::Unsupported(format!(
            "a shiftable SMS(m;t) needs t even and m >= t >= 4, got m = {m}, t = {t}"
        )));
    }
    if t == m {
        return construct_even_even(m, m);
    }
    let mut g = match (t % 4, m % 4) {
        (0, _) => sms4_diagonal(m)?,
        (_, 1 | 3) => sms6_odd(m, providers)?,
        (_, 2) => sms6_2mod4(m, None)?,
        _ => sms6_0mod4(m)?,
    };
    let base = if t.is_multiple_of(4) { 4 } else { 6 };
    for _ in 0..(t - base) / 4 {
        g = add_four(&g)?;
    }
    Ok(g)
}

fn side_by_side(left: &SignedGrid, right: &SignedGrid) -> Result<SignedGrid> {
    let m = left.rows();
    SignedGrid::new(m, 2 * m).paste(left, 0, 0)?.paste(right, 0, m)
}

/// A square Heffter array `H(m;t)` with its negation on the right.
pub fn sma_double_via_heffter(m: usize, t: usize, providers: &Providers) -> Result<SignedGrid> {
    if t < 3 || m < t || !matches!((m * t) % 4, 0 | 3) {
        return Err(Error::Unsupported(format!(
            "the Heffter double needs m >= t >= 3 and mt ≡ 0,3 (mod 4), got m = {m}, t = {t}"
        )));
    }
    let h = providers.square_heffter(m, t)?;
    Ok(side_by_side(&h.grid, &h.grid.negate())?.with_provider_key(h.key))
}

/// A shiftable `SMS(m;t)` with its `mt/2` outward shift on the right.
pub fn sma_double_via_shiftable(m: usize, t: usize, providers: &Providers) -> Result<SignedGrid> {
    let a = shiftable_sms(m, t, providers)?;
    let right = a.shift_magnitudes((m * t / 2) as i64)?;
    let mut g = side_by_side(&a, &right)?;
    g.meta.provider_key = a.meta.provider_key.clone();
    Ok(g)
}

/// `SMA(m,2m;2t,t)` by whichever construction the decision names.
pub fn construct_double_rectangle(m: usize, t: usize, providers: &Providers) -> Result<SignedGrid> {
    let decision = decide_double_rectangle_with(m, t, providers.catalog())?;
    let grid = match (decision.verdict, decision.method) {
        (Verdict::Exists, Some(Method::Double(DoubleMethod::Heffter))) => sma_double_via_heffter(m, t, providers)?,
        (Verdict::Exists, Some(Method::Double(DoubleMethod::Shiftable))) => sma_double_via_shiftable(m, t, providers)?,
        _ => return Err(Error::Unsupported(format!("SMA({m},{};{},{t}): {}", 2 * m, 2 * t, decision.why()))),
    };
    Ok(grid.with_method(decision.method.expect("exists carries a method").to_string()))
}
