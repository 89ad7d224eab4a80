//! Orthogonal zero-sum partitions of `[-(nt-1)/2, (nt-1)/2]` for odd
//! `n >= t >= 3`.
//!
//! The interval is cut into `t` blocks `D_i` of `n` consecutive integers.
//! Column classes `C_c` take one element from every block and are built by
//! induction on `t`; row classes `R_r` take from `D_i` the element lying in
//! `C_c` with `c ≡ r + s(i) (mod n)`. Indices are 1-based throughout.

use crate::error::{Error, Result};
use crate::grid::SignedGrid;

/// Residue of `x` in `1..=n`.
pub(crate) fn residue(x: i64, n: usize) -> usize {
    ((x - 1).rem_euclid(n as i64) + 1) as usize
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Block {
    /// the j-th element (1-based) is `offset + j`
    offset: i64,
    /// `columns[j - 1]` is the class holding the j-th element
    columns: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSystem {
    pub n: usize,
    pub t: usize,
    blocks: Vec<Block>,
    /// `column_classes[c - 1]` is `C_c`, in block order.
    pub column_classes: Vec<Vec<i64>>,
    /// `row_classes[r - 1]` is `R_r`, in block order; empty until rows are built.
    pub row_classes: Vec<Vec<i64>>,
}

impl PartitionSystem {
    fn from_blocks(n: usize, t: usize, blocks: Vec<Block>) -> Self {
        let mut column_classes = vec![Vec::with_capacity(t); n];
        for b in &blocks {
            for (j, &c) in b.columns.iter().enumerate() {
                column_classes[c - 1].push(b.offset + j as i64 + 1);
            }
        }
        PartitionSystem { n, t, blocks, column_classes, row_classes: Vec::new() }
    }

    /// `δ_i`.
    pub fn offset(&self, i: usize) -> i64 {
        self.blocks[i - 1].offset
    }

    /// The elements of `D_i`, ascending.
    pub fn block(&self, i: usize) -> Vec<i64> {
        let off = self.offset(i);
        (1..=self.n as i64).map(|j| off + j).collect()
    }

    /// `c_{i,j}`: the class holding the j-th element of `D_i`.
    pub fn column_of(&self, i: usize, j: usize) -> usize {
        self.blocks[i - 1].columns[j - 1]
    }

    /// `j_{i,c}`: position within `D_i` of its element in `C_c`.
    pub fn position_in_block(&self, i: usize, c: usize) -> usize {
        let c = residue(c as i64, self.n);
        self.blocks[i - 1].columns.iter().position(|&x| x == c).expect("every class meets every block") + 1
    }

    /// `k_i` with `c_{i,j} ≡ k_i j + b_i (mod n)`.
    pub fn slope(&self, i: usize) -> usize {
        let n = self.n;
        if i == 1 || i == self.t {
            1
        } else if i.is_multiple_of(2) {
            (n - 1) / 2
        } else {
            n.div_ceil(2)
        }
    }

    /// `b_i` with `c_{i,j} ≡ k_i j + b_i (mod n)`.
    pub fn intercept(&self, i: usize) -> usize {
        let n = self.n;
        if i == self.t {
            (n - 1) / 2
        } else if i.is_multiple_of(2) {
            n.div_ceil(2)
        } else {
            n
        }
    }

    /// `k'_i`, the inverse of `k_i` mod n as a small signed integer.
    pub fn inverse_slope(&self, i: usize) -> i64 {
        if i == 1 || i == self.t {
            1
        } else if i.is_multiple_of(2) {
            -2
        } else {
            2
        }
    }

    /// `b'_i` with `j_{i,c} ≡ k'_i c + b'_i (mod n)`.
    pub fn inverse_intercept(&self, i: usize) -> usize {
        if i == self.t {
            self.n.div_ceil(2)
        } else if i.is_multiple_of(2) {
            1
        } else {
            0
        }
    }

    /// `s(i) = (n-1)/2 · (i-1)`.
    pub fn shift(&self, i: usize) -> usize {
        (self.n - 1) / 2 * (i - 1)
    }

    /// `j'_{i,r} = j_{i, r + s(i)}`.
    pub fn position_in_row(&self, i: usize, r: usize) -> usize {
        self.position_in_block(i, r + self.shift(i))
    }

    /// `β_{i,r} = j'_{i,r+1} - j'_{i,r} - k'_i`, indexed `[i - 1][r - 1]`.
    pub fn breaks(&self) -> Vec<Vec<i64>> {
        (1..=self.t)
            .map(|i| {
                (1..=self.n)
                    .map(|r| {
                        self.position_in_row(i, r + 1) as i64
                            - self.position_in_row(i, r) as i64
                            - self.inverse_slope(i)
                    })
                    .collect()
            })
            .collect()
    }

    /// `t x n` grid whose rows are the blocks and whose columns are the classes.
    pub fn block_table(&self) -> SignedGrid {
        let mut g = SignedGrid::new(self.t, self.n);
        for (i, b) in self.blocks.iter().enumerate() {
            for (j, &c) in b.columns.iter().enumerate() {
                g.set(i, c - 1, b.offset + j as i64 + 1);
            }
        }
        g
    }
}

fn check_odd(n: usize, t: usize) -> Result<()> {
    if n.is_multiple_of(2) || t.is_multiple_of(2) || t < 3 || t > n {
        return Err(Error::Unsupported(format!("odd partitions need odd n >= t >= 3, got n = {n}, t = {t}")));
    }
    Ok(())
}

/// Column classes `C_1..C_n` with `t` elements each summing to zero.
pub fn odd_partition_columns(n: usize, t: usize) -> Result<PartitionSystem> {
    check_odd(n, t)?;
    let ni = n as i64;
    let half = (3 * ni - 1) / 2;
    let mid = (ni - 1) / 2;
    // t = 3: C_c = {(c-1) - (3n-1)/2, -(n-1)/2 + x_c, -(c-1) + (3n-1)/2 - x_c + (n-1)/2}
    let mut blocks: Vec<Block> = (0..3).map(|b| Block { offset: -half - 1 + b * ni, columns: vec![0; n] }).collect();
    for c in 1..=ni {
        let x = (2 * (half - (c - 1)) - 1).rem_euclid(ni);
        for v in [(c - 1) - half, -mid + x, -(c - 1) + half - x + mid] {
            let b = ((v + half) / ni) as usize;
            let j = (v - blocks[b].offset) as usize;
            blocks[b].columns[j - 1] = c as usize;
        }
    }
    // t -> t + 2: lower blocks move down by n, the top block up by n, and the
    // freed 2n integers are dealt out with steps (n+1)/2 and (n-1)/2
    for tt in (3..t).step_by(2) {
        let top = blocks.pop().expect("t >= 3 blocks");
        for b in &mut blocks {
            b.offset -= ni;
        }
        let base = (ni * (tt as i64 - 4) + 1) / 2 - 1;
        let up = (ni + 1) / 2;
        let down = (ni - 1) / 2;
        blocks.push(Block { offset: base, columns: (1..=ni).map(|j| residue(up * j, n)).collect() });
        blocks.push(Block { offset: base + ni, columns: (1..=ni).map(|j| residue(ni + down * (j - 1), n)).collect() });
        blocks.push(Block { offset: top.offset + ni, columns: top.columns });
    }
    Ok(PartitionSystem::from_blocks(n, t, blocks))
}

/// Fills the row classes: `R_r` takes from `D_i` the element in `C_c` with
/// `c ≡ r + s(i) (mod n)`.
pub fn odd_partition_rows(mut system: PartitionSystem) -> PartitionSystem {
    let rows = (1..=system.n)
        .map(|r| (1..=system.t).map(|i| system.offset(i) + system.position_in_row(i, r) as i64).collect())
        .collect();
    system.row_classes = rows;
    system
}

/// `SMS(n;t)` for odd `n >= t >= 3`: cell `(r, c)` holds the element of
/// `R_r ∩ C_c`.
pub fn sms_odd_odd(n: usize, t: usize) -> Result<SignedGrid> {
    let system = odd_partition_rows(odd_partition_columns(n, t)?);
    let mut class_of = std::collections::HashMap::new();
    for (c, class) in system.column_classes.iter().enumerate() {
        for &v in class {
            class_of.insert(v, c);
        }
    }
    let mut g = SignedGrid::new(n, n);
    for (r, row) in system.row_classes.iter().enumerate() {
        for v in row {
            g.place(r, class_of[v], *v)
                .map_err(|_| Error::Composition(format!("row class {} meets a column class twice", r + 1)))?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_fill_first_class() {
        let s = odd_partition_columns(7, 3).unwrap();
        let mut c1 = s.column_classes[0].clone();
        c1.sort();
        assert_eq!(c1, vec![-10, 2, 8]);
    }

    #[test]
    fn columns_follow_linear_rule() {
        for n in (3..=15).step_by(2) {
            for t in (3..=n).step_by(2) {
                let s = odd_partition_columns(n, t).unwrap();
                for i in 1..=t {
                    for j in 1..=n {
                        let want = residue((s.slope(i) * j + s.intercept(i)) as i64, n);
                        assert_eq!(s.column_of(i, j), want, "n={n} t={t} i={i} j={j}");
                        let back = residue(s.inverse_slope(i) * want as i64 + s.inverse_intercept(i) as i64, n);
                        assert_eq!(back, j);
                    }
                }
            }
        }
    }

    #[test]
    fn first_row_of_seven_five() {
        let s = odd_partition_rows(odd_partition_columns(7, 5).unwrap());
        let mut r1 = s.row_classes[0].clone();
        r1.sort();
        assert_eq!(r1, vec![-17, -4, 3, 5, 13]);
    }

    #[test]
    fn breaks_cancel_per_row() {
        let s = odd_partition_columns(9, 7).unwrap();
        let beta = s.breaks();
        for r in 0..9 {
            assert_eq!(beta.iter().map(|b| b[r]).sum::<i64>(), 0);
        }
        assert_eq!((1..=7).map(|i| s.inverse_slope(i)).sum::<i64>(), 0);
    }
}
