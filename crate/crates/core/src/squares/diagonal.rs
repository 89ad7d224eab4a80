//! Diagonal `SMS(n;t)` for even `n` and `t ∈ {3, 5, 7}` from sequences laid
//! on `t` consecutive broken diagonals.
//!
//! With `t = 2h + 1`, sequence `q` (0-based) sits on the diagonal `h - q`
//! places right of the main one: above it at `(i, i + h - q)`, below it at
//! `(i + q - h, i)`. Column `i` then sums `S_i` and row `i` sums `S'_i`.

use crate::error::{Error, Result};
use crate::grid::SignedGrid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalSequences {
    pub n: usize,
    /// `sequences[q][i - 1]`, outermost upper diagonal first
    pub sequences: Vec<Vec<i64>>,
}

impl DiagonalSequences {
    pub fn t(&self) -> usize {
        self.sequences.len()
    }

    fn at(&self, q: usize, i: i64) -> i64 {
        self.sequences[q][(i - 1).rem_euclid(self.n as i64) as usize]
    }

    /// 0-based cell of `sequences[q][i - 1]`.
    fn cell(&self, q: usize, i: usize) -> (usize, usize) {
        let (n, h) = (self.n, self.t() / 2);
        let i0 = i - 1;
        if q <= h {
            (i0, (i0 + h - q) % n)
        } else {
            ((i0 + q - h) % n, i0)
        }
    }

    /// Column sums `S_i`, `i = 1..=n`.
    pub fn column_sums(&self) -> Vec<i64> {
        let h = self.t() / 2;
        (1..=self.n as i64)
            .map(|i| (0..self.t()).map(|q| if q <= h { self.at(q, i - (h - q) as i64) } else { self.at(q, i) }).sum())
            .collect()
    }

    /// Row sums `S'_i`, `i = 1..=n`.
    pub fn row_sums(&self) -> Vec<i64> {
        let h = self.t() / 2;
        (1..=self.n as i64)
            .map(|i| (0..self.t()).map(|q| if q <= h { self.at(q, i) } else { self.at(q, i - (q - h) as i64) }).sum())
            .collect()
    }

    pub fn place(&self) -> Result<SignedGrid> {
        let mut g = SignedGrid::new(self.n, self.n);
        for (q, seq) in self.sequences.iter().enumerate() {
            for (i, &v) in seq.iter().enumerate() {
                let (r, c) = self.cell(q, i + 1);
                g.place(r, c, v)?;
            }
        }
        Ok(g)
    }

    /// Reads the sequences back off a grid filled on diagonals `-h..=h`.
    pub fn read(grid: &SignedGrid, t: usize) -> Result<Self> {
        let n = grid.rows();
        let mut s = DiagonalSequences { n, sequences: vec![vec![0; n]; t] };
        for q in 0..t {
            for i in 1..=n {
                let (r, c) = s.cell(q, i);
                s.sequences[q][i - 1] =
                    grid.get(r, c).ok_or_else(|| Error::Argument(format!("cell ({}, {}) is empty", r + 1, c + 1)))?;
            }
        }
        Ok(s)
    }
}

fn need(ok: bool, what: &str, n: usize) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("{what}, got n = {n}")))
    }
}

fn table(n: usize, f: impl Fn(i64) -> i64) -> Vec<i64> {
    (1..=n as i64).map(f).collect()
}

/// Sequences `a, b, c` for `n = 4k`; `b` on the main diagonal, `c = a + 1`.
pub fn sequences3(n: usize) -> Result<DiagonalSequences> {
    need(n.is_multiple_of(4) && n >= 4, "three-diagonal sequences need n ≡ 0 (mod 4)", n)?;
    let k = (n / 4) as i64;
    let a = table(n, |i| {
        if i % 2 == 1 {
            let base = -2 - 3 * ((i - 1) / 2);
            if i < 2 * k {
                base - 3 * k
            } else {
                base + 9 * k
            }
        } else if i < 4 * k {
            -2 + 3 * k - 3 * (i / 2)
        } else {
            -2 + 3 * k
        }
    });
    let b = table(n, |i| {
        if i <= 2 * k {
            3 * i
        } else if i < 4 * k {
            -12 * k + 3 * i
        } else {
            -6 * k
        }
    });
    let c = a.iter().map(|v| v + 1).collect();
    Ok(DiagonalSequences { n, sequences: vec![a, b, c] })
}

// n = 8 base; the general formulas below give a different valid square
const FIVE_IN_EIGHT_A: [i64; 8] = [-13, -8, 12, -3, 17, 2, -18, 7];
const FIVE_IN_EIGHT_B: [i64; 8] = [6, -19, 1, -14, -4, 11, -9, 16];
const FIVE_IN_EIGHT_C: [i64; 8] = [5, 10, 15, 20, -15, -10, -5, -20];

/// Sequences `a..e` for `n = 4k`, `k > 1`, from the general formulas;
/// `d = b + 3`, `e = a + 1`.
pub fn sequences5_0mod4_formula(n: usize) -> Result<DiagonalSequences> {
    need(n.is_multiple_of(4) && n >= 8, "five-diagonal sequences need n ≡ 0 (mod 4), n >= 8", n)?;
    let k = (n / 4) as i64;
    let a = table(n, |i| match i % 4 {
        1 if i == 4 * k - 3 => -8,
        1 => -10 * ((i - 1) / 4) - 18,
        2 if i == 4 * k - 2 => -3,
        2 => -10 * ((i - 2) / 4) - 13,
        3 => 10 * k - 10 * ((i - 3) / 4) - 3,
        _ if i == 4 * k => 10 * k - 8,
        _ => 10 * k - 10 * ((i - 4) / 4) - 18,
    });
    let b = table(n, |i| {
        if i == 4 * k - 3 {
            -5 * k + 6
        } else if i == 4 * k - 1 {
            -5 * k + 1
        } else if i % 2 == 1 {
            let j = (i - 1) / 2;
            if j < k {
                -5 * k - 5 * j - 4
            } else {
                15 * k - 5 * j - 4
            }
        } else {
            -5 * k + 5 * ((i - 2) / 2) + 11
        }
    });
    let c = table(n, |i| {
        if i <= 2 * k {
            5 * i
        } else if i < 4 * k {
            -20 * k + 5 * i
        } else {
            -10 * k
        }
    });
    Ok(five_from(n, a, b, c))
}

fn five_from(n: usize, a: Vec<i64>, b: Vec<i64>, c: Vec<i64>) -> DiagonalSequences {
    let d = b.iter().map(|v| v + 3).collect();
    let e = a.iter().map(|v| v + 1).collect();
    DiagonalSequences { n, sequences: vec![a, b, c, d, e] }
}

/// Sequences `a..e` for `n = 4k`, `k > 1`; the `n = 8` base is fixed.
pub fn sequences5_0mod4(n: usize) -> Result<DiagonalSequences> {
    if n == 8 {
        return Ok(five_from(8, FIVE_IN_EIGHT_A.to_vec(), FIVE_IN_EIGHT_B.to_vec(), FIVE_IN_EIGHT_C.to_vec()));
    }
    sequences5_0mod4_formula(n)
}

/// Sequences `a..g` for `n = 4k + 2`, `k >= 2`; `e = c + 5`, `f = b + 3`,
/// `g = a + 1`.
pub fn sequences7(n: usize) -> Result<DiagonalSequences> {
    need(n % 4 == 2 && n >= 10, "seven-diagonal sequences need n ≡ 2 (mod 4), n >= 10", n)?;
    let k = ((n - 2) / 4) as i64;
    let a = table(n, |i| if i <= 2 * k + 1 { -7 * i + 3 } else { 28 * k - 7 * i + 17 });
    let b = table(n, |i| if i <= 2 * k + 2 { 7 * i - 12 } else { -28 * k + 7 * i - 26 });
    let c = table(n, |i| {
        if i % 2 == 0 {
            if i < 4 * k + 2 {
                7 * k - 7 * (i / 2) + 1
            } else {
                7 * k + 1
            }
        } else {
            let j = (i - 1) / 2;
            if i <= 2 * k + 1 {
                -7 * k - 7 * j - 6
            } else {
                21 * k - 7 * j + 8
            }
        }
    });
    let d = table(n, |i| {
        if i <= 2 * k + 1 {
            7 * i
        } else if i < 4 * k + 2 {
            -28 * k + 7 * i - 14
        } else {
            -14 * k - 7
        }
    });
    let e = c.iter().map(|v| v + 5).collect();
    let f = b.iter().map(|v| v + 3).collect();
    let g = a.iter().map(|v| v + 1).collect();
    Ok(DiagonalSequences { n, sequences: vec![a, b, c, d, e, f, g] })
}

/// Diagonal `SMS(n;3)`, `n ≡ 0 (mod 4)`.
pub fn sms3_diag(n: usize) -> Result<SignedGrid> {
    sequences3(n)?.place()
}

/// Diagonal `SMS(n;5)`, `n ≡ 0 (mod 4)`, `n >= 8`.
pub fn sms5_diag_0mod4(n: usize) -> Result<SignedGrid> {
    sequences5_0mod4(n)?.place()
}

/// Diagonal `SMS(n;5)`, `n ≡ 2 (mod 4)`: the main and two upper diagonals
/// by formula, then `a_{i,j} = a_{i-1,j+1} + 3` on the first lower diagonal
/// and `a_{i,j} = a_{i-2,j+2} + 1` on the second.
pub fn sms5_diag_2mod4(n: usize) -> Result<SignedGrid> {
    need(n % 4 == 2 && n >= 6, "five-diagonal squares need n ≡ 2 (mod 4), n >= 6", n)?;
    let k = ((n - 2) / 4) as i64;
    let ni = n as i64;
    let half = ni / 2;
    let mut g = SignedGrid::new(n, n);
    let at = |i: i64| (i - 1).rem_euclid(ni) as usize;
    for i in 1..=ni {
        let main = if i <= half {
            5 * i
        } else if i < ni {
            -5 * (ni - i)
        } else {
            -5 * half
        };
        let second = if i <= half { -3 - 5 * (i - 1) } else { 5 * (ni - i) + 2 };
        let first = if i % 2 == 1 {
            -9 - 5 * k + 5 * ((i - 1) / 2)
        } else if i < 2 * k + 4 && i < ni {
            5 * k + 1 + 5 * ((i - 2) / 2)
        } else if i < ni {
            5 * k + 1 + 5 * ((i - 2) / 2) - 5 * ni
        } else {
            (5 * ni - 26) / 4
        };
        g.place(at(i), at(i), main)?;
        g.place(at(i), at(i + 1), first)?;
        g.place(at(i), at(i + 2), second)?;
    }
    for i in 1..=ni {
        let up1 = g.get(at(i - 1), at(i)).expect("upper diagonal filled");
        g.place(at(i), at(i - 1), up1 + 3)?;
    }
    for i in 1..=ni {
        let up2 = g.get(at(i - 2), at(i)).expect("upper diagonal filled");
        g.place(at(i), at(i - 2), up2 + 1)?;
    }
    Ok(g)
}

/// Diagonal `SMS(n;7)`, `n ≡ 2 (mod 4)`, `n >= 10`.
pub fn sms7_diag_2mod4(n: usize) -> Result<SignedGrid> {
    sequences7(n)?.place()
}

/// The diagonal sequences behind each supported `(n, t)`.
pub fn sequences(n: usize, t: usize) -> Result<DiagonalSequences> {
    match (t, n % 4) {
        (3, 0) => sequences3(n),
        (5, 0) => sequences5_0mod4(n),
        (5, 2) => DiagonalSequences::read(&sms5_diag_2mod4(n)?, 5),
        (7, 2) => sequences7(n),
        _ => Err(Error::Unsupported(format!("no diagonal sequences for n = {n}, t = {t}"))),
    }
}
