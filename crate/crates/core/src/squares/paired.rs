//! Shiftable 7-diagonal `SMS(n;6)` for `n ≡ 2 (mod 4)`, `n >= 10`, from
//! triples of `[1, 3n]` paired by equal sums.

use std::collections::BTreeSet;

use super::partition::odd_partition_columns;
use crate::error::{Error, Result};
use crate::grid::SignedGrid;

/// Classes `P_1..P_n` (each ordered as `P_{i,1}, P_{i,2}, P_{i,3}`) and the
/// pairs `B_j = (i_1, i_2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedPartition {
    pub n: usize,
    /// `classes[i - 1]` is `P_i`
    pub classes: Vec<[i64; 3]>,
    /// `pairs[j - 1]` is `B_j` as `(i_1, i_2)`
    pub pairs: Vec<(usize, usize)>,
}

impl PairedPartition {
    pub fn class_sum(&self, i: usize) -> i64 {
        self.classes[i - 1].iter().sum()
    }

    /// True for classes summing to `(9n+2)/2`.
    pub fn is_first_kind(&self, i: usize) -> bool {
        self.class_sum(i) == (9 * self.n as i64 + 2) / 2
    }
}

fn check_n(n: usize) -> Result<()> {
    if n % 4 != 2 || n < 10 {
        return Err(Error::Unsupported(format!("paired six-fill needs n ≡ 2 (mod 4), n >= 10, got n = {n}")));
    }
    Ok(())
}

/// The classes `P_i`: the three-fill partition at `n - 1`, moved onto
/// `[1, 3n-3]`, spread by `p` and completed with `{1, 3n/2, 3n}`; `i ∈ P_i`.
pub fn triple_classes(n: usize) -> Result<Vec<[i64; 3]>> {
    check_n(n)?;
    let m = n - 1;
    let lift = (3 * m as i64 - 1) / 2 + 1;
    let cut = (3 * n as i64 - 2) / 2;
    let p = |x: i64| if x < cut { x + 1 } else { x + 2 };
    let ni = n as i64;
    let mut sets: Vec<Vec<i64>> = odd_partition_columns(m, 3)?
        .column_classes
        .into_iter()
        .map(|c| c.into_iter().map(|x| p(x + lift)).collect())
        .collect();
    sets.push(vec![1, 3 * ni / 2, 3 * ni]);
    let mut classes = vec![[0i64; 3]; n];
    for set in sets {
        let label = *set.iter().filter(|&&x| x >= 1 && x <= ni).min().expect("one label per class") as usize;
        if classes[label - 1] != [0; 3] {
            return Err(Error::Composition(format!("label {label} used twice")));
        }
        classes[label - 1] = order_class(n, label, &set);
    }
    Ok(classes)
}

/// Ascending order, except `P_{1,2} = 1`, `P_{2,2} = 2`, `P_{n,1} = n`,
/// `P_{n,2} = n + 1`.
fn order_class(n: usize, label: usize, set: &[i64]) -> [i64; 3] {
    let ni = n as i64;
    let forced: Vec<(usize, i64)> = match label {
        1 => vec![(1, 1)],
        2 => vec![(1, 2)],
        l if l == n => vec![(0, ni), (1, ni + 1)],
        _ => vec![],
    };
    let mut rest: Vec<i64> = set.iter().copied().filter(|v| !forced.iter().any(|&(_, f)| f == *v)).collect();
    rest.sort();
    let mut out = [0i64; 3];
    let mut it = rest.into_iter();
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = match forced.iter().find(|&&(pos, _)| pos == k) {
            Some(&(_, v)) => v,
            None => it.next().expect("three elements"),
        };
    }
    out
}

/// `B_1 = (P_2, P_1)`; `B_2` joins `P_n` with the lowest-index class of equal
/// sum; the rest pair each lowest remaining index with the next of equal
/// sum. Within a pair the larger index comes first.
pub fn default_pairing(n: usize, classes: &[[i64; 3]]) -> Vec<(usize, usize)> {
    let sum = |i: usize| classes[i - 1].iter().sum::<i64>();
    let mut left: BTreeSet<usize> = (3..n).collect();
    let mut pairs = vec![(2, 1)];
    let take_partner = |i: usize, left: &mut BTreeSet<usize>| {
        let j = *left.iter().find(|&&j| sum(j) == sum(i)).expect("equal-sum partner");
        left.remove(&j);
        (i.max(j), i.min(j))
    };
    pairs.push(take_partner(n, &mut left));
    while let Some(&i) = left.iter().next() {
        left.remove(&i);
        pairs.push(take_partner(i, &mut left));
    }
    pairs
}

pub fn paired_partition(n: usize, pairing: Option<&[(usize, usize)]>) -> Result<PairedPartition> {
    let classes = triple_classes(n)?;
    let pairs = match pairing {
        Some(p) => p.to_vec(),
        None => default_pairing(n, &classes),
    };
    let pp = PairedPartition { n, classes, pairs };
    check_pairing(&pp)?;
    Ok(pp)
}

fn check_pairing(pp: &PairedPartition) -> Result<()> {
    let n = pp.n;
    let bad = |why: String| Err(Error::Argument(format!("pairing: {why}")));
    if pp.pairs.len() != n / 2 {
        return bad(format!("{} pairs, want {}", pp.pairs.len(), n / 2));
    }
    let mut seen = vec![false; n + 1];
    for &(a, b) in &pp.pairs {
        for i in [a, b] {
            if i == 0 || i > n || std::mem::replace(&mut seen[i], true) {
                return bad(format!("class {i} missing or repeated"));
            }
        }
    }
    let first = pp.pairs[0];
    if !matches!(first, (1, 2) | (2, 1)) {
        return bad("the first pair must join P_1 and P_2".into());
    }
    let second = pp.pairs[1];
    if second.0 != n && second.1 != n {
        return bad(format!("P_{n} must be in the second pair"));
    }
    for (j, &(a, b)) in pp.pairs.iter().enumerate().skip(1) {
        if pp.class_sum(a) != pp.class_sum(b) {
            return bad(format!("pair {} joins classes of different sums", j + 1));
        }
    }
    Ok(())
}

/// The 7-diagonal `SMS(n;6)`. `pairing` overrides the default `B_j`.
pub fn sms6_2mod4(n: usize, pairing: Option<&[(usize, usize)]>) -> Result<SignedGrid> {
    let pp = paired_partition(n, pairing)?;
    let ni = n as i64;
    let at = |x: i64| (x - 1).rem_euclid(ni) as usize;
    let mut a = SignedGrid::new(n, n);
    for (j, &(i1, i2)) in pp.pairs.iter().enumerate() {
        let j = j as i64 + 1;
        for k in 1..=3i64 {
            let hi = pp.classes[i1 - 1][k as usize - 1];
            let lo = pp.classes[i2 - 1][k as usize - 1];
            let (r1, r2) = (2 * j + 2 * k - 3, 2 * j + 2 * k - 2);
            a.place(at(r1), at(2 * j - 1), hi)?;
            a.place(at(r1), at(2 * j), -hi)?;
            a.place(at(r2), at(2 * j - 1), -lo)?;
            a.place(at(r2), at(2 * j), lo)?;
        }
    }
    // a'_{3,1} = a_{4,2}, a'_{4,2} = a_{3,1}, a'_{3,3} = a_{5,3},
    // a'_{4,3} = a_{3,3}, a'_{5,3} = a_{4,3}, a'_{4,4} = a_{5,4}, a'_{5,4} = a_{4,4}
    let v = |r: usize, c: usize| a.get(r - 1, c - 1).expect("exception cells are filled");
    let moves = [
        ((3, 1), v(4, 2)),
        ((4, 2), v(3, 1)),
        ((3, 3), v(5, 3)),
        ((4, 3), v(3, 3)),
        ((5, 3), v(4, 3)),
        ((4, 4), v(5, 4)),
        ((5, 4), v(4, 4)),
    ];
    for ((r, c), val) in moves {
        a.set(r - 1, c - 1, val);
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_class_sums() {
        let pp = paired_partition(10, None).unwrap();
        let sums: Vec<i64> = (1..=10).map(|i| pp.class_sum(i)).collect();
        assert_eq!(sums, vec![46, 47, 47, 46, 46, 47, 47, 47, 46, 46]);
        assert_eq!(pp.classes[0], [15, 1, 30]);
        assert_eq!(pp.classes[9], [10, 11, 25]);
    }

    #[test]
    fn rejects_unequal_pairs() {
        let bad = [(2, 1), (10, 3), (7, 8), (4, 6), (9, 5)];
        assert!(matches!(sms6_2mod4(10, Some(&bad)), Err(Error::Argument(_))));
    }
}
