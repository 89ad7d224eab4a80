//! Invariants checked over random parameters.

use proptest::prelude::*;
use sma_core::decide::{decide_square, decide_tight, Method, SquareMethod, Verdict};
use sma_core::rectangles::{construct_double_rectangle, shiftable_sms};
use sma_core::squares::{add_four, construct_sms, sms4_diagonal};
use sma_core::tight::{construct_2xn, construct_even_even, construct_tight};
use sma_core::verify::{diagonal_width, occupied_diagonals};
use sma_core::{count_all, search_one, verify, ArraySpec, OracleVerdict, Providers, SearchLimits, SignedGrid};

fn providers() -> &'static Providers {
    static P: std::sync::OnceLock<Providers> = std::sync::OnceLock::new();
    P.get_or_init(Providers::builtin)
}

fn tight_shape() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=12, 1usize..=12).prop_filter("exists", |&(m, n)| decide_tight(m, n).verdict == Verdict::Exists)
}

fn square_shape() -> impl Strategy<Value = (usize, usize)> {
    (3usize..=14).prop_flat_map(|n| (Just(n), 3..=n)).prop_filter("no large Heffter search", |&(n, t)| {
        n <= 12 || !matches!(decide_square(n, t).method, Some(Method::Square(SquareMethod::EvenHeffter)))
    })
}

/// Shortest covering window by trying every start and length.
fn brute_width(g: &SignedGrid) -> usize {
    let n = g.rows();
    let occ = occupied_diagonals(g);
    if !occ.contains(&true) {
        return 0;
    }
    (1..=n).find(|&k| (0..n).any(|s| (0..n).all(|d| !occ[d] || (d + n - s) % n < k))).unwrap()
}

fn sums_vanish(g: &SignedGrid) -> bool {
    let mut rows = vec![0i64; g.rows()];
    let mut cols = vec![0i64; g.cols()];
    for ((i, j), v) in g.entries() {
        rows[i] += v;
        cols[j] += v;
    }
    rows.iter().chain(&cols).all(|&s| s == 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tight_outputs_verify_and_repeat((m, n) in tight_shape()) {
        let g = construct_tight(m, n, providers()).unwrap();
        let spec = ArraySpec::tight(m, n);
        let r = verify(&g, &spec).unwrap();
        prop_assert!(r.is_valid_sma && r.symbol_coverage_ok);
        prop_assert_eq!(g.clone(), construct_tight(m, n, providers()).unwrap());
        prop_assert!(verify(&g.negate(), &spec).unwrap().is_valid_sma);
        prop_assert!(verify(&g.transpose(), &spec.transpose()).unwrap().is_valid_sma);
    }

    #[test]
    fn even_even_is_shiftable(m in (2usize..=7).prop_map(|k| 2 * k), n in (2usize..=7).prop_map(|k| 2 * k), k in 0i64..50) {
        let g = construct_even_even(m, n).unwrap();
        prop_assert!(verify(&g, &ArraySpec::tight(m, n)).unwrap().is_shiftable);
        prop_assert!(sums_vanish(&g.shift_magnitudes(k).unwrap()));
    }

    #[test]
    fn two_rows_pair_up(n in (1usize..=12).prop_map(|k| 4 * k - (k % 2))) {
        let g = construct_2xn(n).unwrap();
        for i in 0..2 {
            let mut mags: Vec<i64> = g.row(i).map(|(_, v)| v.abs()).collect();
            mags.sort();
            prop_assert_eq!(mags, (1..=n as i64).collect::<Vec<_>>());
        }
        for j in 0..n {
            prop_assert_eq!(g.get(0, j).map(|v| -v), g.get(1, j));
        }
    }

    #[test]
    fn squares_verify((n, t) in square_shape()) {
        let g = construct_sms(n, t, providers()).unwrap();
        let r = verify(&g, &ArraySpec::square(n, t)).unwrap();
        prop_assert!(r.is_valid_sma && r.symbol_coverage_ok);
        prop_assert_eq!(r.diagonal_width, Some(brute_width(&g)));
    }

    #[test]
    fn cyclic_column_moves((n, t) in square_shape(), c in -20i64..20) {
        let g = construct_sms(n, t, providers()).unwrap();
        let moved = g.permute_columns_cyclic(c);
        prop_assert!(verify(&moved, &ArraySpec::square(n, t)).unwrap().is_valid_sma);
        let (before, after) = (occupied_diagonals(&g), occupied_diagonals(&moved));
        for d in 0..n {
            prop_assert_eq!(before[d], after[(d as i64 + c).rem_euclid(n as i64) as usize]);
        }
        prop_assert_eq!(diagonal_width(&g).unwrap(), diagonal_width(&moved).unwrap());
    }

    #[test]
    fn four_more_diagonals(n in 8usize..=20, steps in 0usize..3) {
        let mut g = sms4_diagonal(n).unwrap();
        for _ in 0..steps {
            if diagonal_width(&g).unwrap() + 4 > n {
                break;
            }
            let k = diagonal_width(&g).unwrap();
            let t = g.filled() / n;
            g = add_four(&g).unwrap();
            prop_assert!(verify(&g, &ArraySpec::square(n, t + 4)).unwrap().is_valid_sma);
            prop_assert_eq!(diagonal_width(&g).unwrap(), k + 4);
        }
    }

    #[test]
    fn shiftable_squares_balance(m in 4usize..=16, half_t in 2usize..=8) {
        let t = 2 * half_t;
        prop_assume!(t <= m);
        let g = shiftable_sms(m, t, providers()).unwrap();
        let r = verify(&g, &ArraySpec::square(m, t)).unwrap();
        prop_assert!(r.is_valid_sma && r.is_shiftable);
    }

    #[test]
    fn doubles_pair_halves(m in 3usize..=8, t in 3usize..=8) {
        prop_assume!(t <= m);
        if let Ok(g) = construct_double_rectangle(m, t, providers()) {
            prop_assert!(verify(&g, &ArraySpec::double(m, t)).unwrap().is_valid_sma);
            for i in 0..m {
                for j in 0..m {
                    prop_assert_eq!(g.get(i, j).is_some(), g.get(i, j + m).is_some());
                }
            }
        }
    }

    #[test]
    fn coverage_flag_tracks_symbols((m, n) in tight_shape(), i in 0usize..12, j in 0usize..12, v in -80i64..80) {
        let mut g = construct_tight(m, n, providers()).unwrap();
        let (i, j) = (i % m, j % n);
        let spec = ArraySpec::tight(m, n);
        let old = g.get(i, j).unwrap();
        g.set(i, j, v);
        let mut entries: Vec<i64> = g.values().collect();
        entries.sort();
        let symbols: Vec<i64> = spec.symbols().unwrap().iter().collect();
        prop_assert_eq!(verify(&g, &spec).unwrap().symbol_coverage_ok, entries == symbols);
        prop_assert_eq!(v == old, entries == symbols);
    }
}

#[test]
fn oracle_agrees_with_tight_construction() {
    let limits = SearchLimits::default();
    for m in 1..=12usize {
        for n in 1..=12 / m {
            let spec = ArraySpec::tight(m, n);
            let found = matches!(search_one(&spec, &limits).unwrap(), OracleVerdict::Found(_));
            assert_eq!(found, construct_tight(m, n, providers()).is_ok(), "{spec}");
        }
    }
}

#[test]
fn counts_survive_transposition() {
    let limits = SearchLimits::default();
    for (m, n, s, t) in [(2, 3, 3, 2), (3, 3, 3, 3), (2, 4, 4, 2), (3, 4, 4, 3), (4, 4, 3, 3)] {
        let spec = ArraySpec::new(m, n, s, t).unwrap();
        let a = count_all(&spec, &limits).unwrap();
        assert_eq!(a, count_all(&spec.transpose(), &limits).unwrap(), "{spec}");
        assert_eq!(a, count_all(&spec, &limits).unwrap());
    }
    assert_eq!(count_all(&ArraySpec::square(3, 2), &limits).unwrap(), 0);
}
