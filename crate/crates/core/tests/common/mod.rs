#![allow(dead_code)]

pub mod figures;

use sma_core::grid::SignedGrid;

/// Parses a figure constant.
pub fn grid(text: &str) -> SignedGrid {
    let rows: Vec<Vec<Option<i64>>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|tok| if tok == "." { None } else { Some(tok.parse().expect("integer cell")) })
                .collect()
        })
        .collect();
    SignedGrid::from_rows(&rows).expect("rectangular figure")
}

/// Cell-by-cell equality, ignoring metadata, with a readable diff on failure.
pub fn assert_same(got: &SignedGrid, want: &SignedGrid, what: &str) {
    assert_eq!(got.to_rows(), want.to_rows(), "{what} differs\n--- got\n{got}\n--- want\n{want}");
}
