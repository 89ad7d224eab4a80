//! Existence decisions for the three characterized families, each tagged
//! with the construction that realizes it.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::providers::Catalog;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Exists,
    NotExists,
    Unknown,
}

/// How a tight `m x n` array is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TightMethod {
    Trivial,
    /// Two rows, or two columns when transposed.
    TwoRows {
        transposed: bool,
    },
    EvenEven,
    /// From a magic rectangle.
    OddOdd,
    /// Odd row count and even column count, or the transpose.
    OddEven {
        transposed: bool,
    },
}

/// How an `SMS(n;t)` is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SquareMethod {
    Tight(TightMethod),
    /// Orthogonal zero-sum partitions; `n` and `t` odd.
    OddPartition,
    /// Four- or six-diagonal base grown by four diagonals at a time; `n` odd, `t` even.
    EvenFillOddSide,
    /// Row pairs from a tight Heffter array; `n`, `t` even with `4 | n` or `4 | t`.
    EvenHeffter,
    /// Paired triple classes grown by four diagonals; `n ≡ t ≡ 2 (mod 4)`.
    EvenTwoModFour,
    /// Three-filled base or odd diagonal sequences; `n` even, `t` odd.
    OddFillEvenSide,
}

/// How an `SMA(m,2m;2t,t)` is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DoubleMethod {
    /// Square Heffter array beside its negation.
    Heffter,
    /// Shiftable square beside its outward shift.
    Shiftable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Tight(TightMethod),
    Square(SquareMethod),
    Double(DoubleMethod),
}

impl fmt::Display for TightMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TightMethod::Trivial => f.write_str("trivial"),
            TightMethod::TwoRows { transposed: false } => f.write_str("two-row"),
            TightMethod::TwoRows { transposed: true } => f.write_str("two-row-transposed"),
            TightMethod::EvenEven => f.write_str("even-even"),
            TightMethod::OddOdd => f.write_str("odd-odd-magic-rectangle"),
            TightMethod::OddEven { transposed: false } => f.write_str("odd-even"),
            TightMethod::OddEven { transposed: true } => f.write_str("odd-even-transposed"),
        }
    }
}

impl fmt::Display for SquareMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquareMethod::Tight(m) => write!(f, "tight:{m}"),
            SquareMethod::OddPartition => f.write_str("odd-partition"),
            SquareMethod::EvenFillOddSide => f.write_str("even-fill-odd-side"),
            SquareMethod::EvenHeffter => f.write_str("even-heffter"),
            SquareMethod::EvenTwoModFour => f.write_str("even-two-mod-four"),
            SquareMethod::OddFillEvenSide => f.write_str("odd-fill-even-side"),
        }
    }
}

impl fmt::Display for DoubleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DoubleMethod::Heffter => f.write_str("heffter"),
            DoubleMethod::Shiftable => f.write_str("shiftable"),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Tight(m) => write!(f, "tight/{m}"),
            Method::Square(m) => write!(f, "square/{m}"),
            Method::Double(m) => write!(f, "double/{m}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub method: Option<Method>,
    pub reason: Option<String>,
}

impl Decision {
    fn exists(method: Method) -> Self {
        Decision { verdict: Verdict::Exists, method: Some(method), reason: None }
    }

    fn not_exists(reason: impl Into<String>) -> Self {
        Decision { verdict: Verdict::NotExists, method: None, reason: Some(reason.into()) }
    }

    fn unknown(reason: impl Into<String>) -> Self {
        Decision { verdict: Verdict::Unknown, method: None, reason: Some(reason.into()) }
    }

    pub fn exists_flag(&self) -> bool {
        self.verdict == Verdict::Exists
    }

    /// The condition that failed, for error messages.
    pub fn why(&self) -> String {
        self.reason.clone().unwrap_or_default()
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.verdict, &self.method, &self.reason) {
            (Verdict::Exists, Some(m), _) => write!(f, "Exists ({m})"),
            (v, _, Some(r)) => write!(f, "{v:?} ({r})"),
            (v, _, None) => write!(f, "{v:?}"),
        }
    }
}

pub fn tight_method(m: usize, n: usize) -> std::result::Result<TightMethod, String> {
    let two_ok = |k: usize| k.is_multiple_of(4) || k % 4 == 3;
    match (m, n) {
        (0, _) | (_, 0) => Err("dimensions must be positive".into()),
        (1, 1) => Ok(TightMethod::Trivial),
        (1, _) | (_, 1) => Err("a single row or column must be 1 x 1".into()),
        (2, 2) => Err("2 x 2 is impossible".into()),
        (2, k) => {
            if two_ok(k) {
                Ok(TightMethod::TwoRows { transposed: false })
            } else {
                Err(format!("2 x n needs n ≡ 0,3 (mod 4), got n = {k}"))
            }
        }
        (k, 2) => {
            if two_ok(k) {
                Ok(TightMethod::TwoRows { transposed: true })
            } else {
                Err(format!("m x 2 needs m ≡ 0,3 (mod 4), got m = {k}"))
            }
        }
        (m, n) => Ok(match (m % 2, n % 2) {
            (0, 0) => TightMethod::EvenEven,
            (1, 1) => TightMethod::OddOdd,
            (1, 0) => TightMethod::OddEven { transposed: false },
            _ => TightMethod::OddEven { transposed: true },
        }),
    }
}

/// Tight `m x n` arrays exist exactly for `1 x 1`, `2 x n` and `m x 2`
/// with the other side `≡ 0,3 (mod 4)`, and whenever both sides exceed 2.
pub fn decide_tight(m: usize, n: usize) -> Decision {
    match tight_method(m, n) {
        Ok(method) => Decision::exists(Method::Tight(method)),
        Err(reason) => Decision::not_exists(reason),
    }
}

pub fn square_method(n: usize, t: usize) -> std::result::Result<SquareMethod, String> {
    if n == 0 || t == 0 {
        return Err("n and t must be positive".into());
    }
    if t > n {
        return Err(format!("t = {t} exceeds n = {n}"));
    }
    if t == n {
        return tight_method(n, n).map(SquareMethod::Tight);
    }
    if t < 3 {
        return Err(format!("t = {t} < 3 with n = {n} > 1"));
    }
    Ok(match (n % 2, t % 2) {
        (1, 1) => SquareMethod::OddPartition,
        (1, 0) => SquareMethod::EvenFillOddSide,
        (0, 1) => SquareMethod::OddFillEvenSide,
        _ => {
            if n.is_multiple_of(4) || t.is_multiple_of(4) {
                SquareMethod::EvenHeffter
            } else {
                SquareMethod::EvenTwoModFour
            }
        }
    })
}

/// `SMS(n;t)` exists exactly when `n = t = 1` or `n >= t >= 3`.
pub fn decide_square(n: usize, t: usize) -> Decision {
    match square_method(n, t) {
        Ok(method) => Decision::exists(Method::Square(method)),
        Err(reason) => Decision::not_exists(reason),
    }
}

/// Decision for `SMA(m,2m;2t,t)` using only the builtin catalog seeds.
pub fn decide_double_rectangle(m: usize, t: usize) -> Result<Decision> {
    decide_double_rectangle_with(m, t, &Catalog::builtin())
}

/// Decision for `SMA(m,2m;2t,t)`. When both constructions apply the Heffter
/// path wins only if the catalog already holds a square Heffter array.
pub fn decide_double_rectangle_with(m: usize, t: usize, catalog: &Catalog) -> Result<Decision> {
    if t < 3 || m < t {
        return Err(Error::Argument(format!("need m >= t >= 3, got m = {m}, t = {t}")));
    }
    let heffter = matches!((m * t) % 4, 0 | 3);
    let shiftable = t.is_multiple_of(2);
    let method = match (heffter, shiftable) {
        (true, true) if catalog.has_square_heffter(m, t) => DoubleMethod::Heffter,
        (_, true) => DoubleMethod::Shiftable,
        (true, false) => DoubleMethod::Heffter,
        (false, false) => {
            return Ok(Decision::unknown(format!("open case: t ≡ {} (mod 4), m ≡ {} (mod 4)", t % 4, m % 4)))
        }
    };
    Ok(Decision::exists(Method::Double(method)))
}
