//! Published example arrays reproduced cell for cell.

mod common;

use common::figures::*;
use common::{assert_same, grid};
use sma_core::squares::{self, HeffterLayout};
use sma_core::tight;
use sma_core::verify::diagonal_width;
use sma_core::{verify, ArraySpec, Providers};

#[test]
fn two_by_four() {
    assert_same(&tight::construct_2xn(4).unwrap(), &grid(SMA_2X4), "2x4");
}

#[test]
fn even_even_bases() {
    assert_same(&tight::construct_even_even(4, 4).unwrap(), &grid(SMA_4X4), "4x4");
    assert_same(&tight::construct_even_even(4, 6).unwrap(), &grid(SMA_4X6), "4x6");
    assert_same(&tight::construct_even_even(6, 6).unwrap(), &grid(SMA_6X6), "6x6");
}

#[test]
fn three_rows() {
    assert_same(&tight::construct_3xeven(2).unwrap(), &grid(SMA_3X2), "3x2");
    assert_same(&tight::construct_3xeven(4).unwrap(), &grid(SMA_3X4), "3x4");
    assert_same(&tight::construct_3xeven(10).unwrap(), &grid(SMA_3X10), "3x10");
}

#[test]
fn five_rows() {
    assert_same(&tight::construct_5xeven(4).unwrap(), &grid(SMA_5X4), "5x4");
    assert_same(&tight::construct_5xeven(6).unwrap(), &grid(SMA_5X6), "5x6");
}

#[test]
fn diagonal_five_three_is_valid() {
    let g = grid(SMS_5_3_DIAGONAL);
    let rep = verify(&g, &ArraySpec::square(5, 3)).unwrap();
    assert!(rep.is_valid_sma);
    assert_eq!(diagonal_width(&g).unwrap(), 3);
}

#[test]
fn four_diagonal_eight() {
    let g = squares::sms4_diagonal(8).unwrap();
    assert_same(&g, &grid(SMS_8_4_DIAGONAL), "SMS(8;4)");
    assert_eq!(diagonal_width(&g).unwrap(), 4);
}

#[test]
fn odd_partition_seven_five() {
    let system = squares::odd_partition_columns(7, 5).unwrap();
    assert_same(&system.block_table(), &grid(PARTITION_7_5), "classes of (7,5)");
    assert_same(&squares::sms_odd_odd(7, 5).unwrap(), &grid(SMS_7_5), "SMS(7;5)");
}

#[test]
fn six_diagonal_seven() {
    let p = Providers::builtin();
    let g = squares::sms6_odd(7, &p).unwrap();
    assert_same(&g, &grid(SMS_7_6_DIAGONAL), "SMS(7;6)");
}

#[test]
fn seven_diagonal_ten_six() {
    let pairing = [(2, 1), (10, 9), (7, 8), (3, 6), (4, 5)];
    let g = squares::sms6_2mod4(10, Some(&pairing)).unwrap();
    assert_same(&g, &grid(SMS_10_6_DIAGONAL), "SMS(10;6)");
    assert_eq!(diagonal_width(&g).unwrap(), 7);
    let pp = squares::paired::paired_partition(10, Some(&pairing)).unwrap();
    assert_eq!(pp.classes, TRIPLES_10.to_vec());
}

#[test]
fn three_fill_six() {
    assert_same(&squares::sms3_even(6).unwrap(), &grid(SMS_6_3), "SMS(6;3)");
}

#[test]
fn diagonal_odd_fills_on_even_sides() {
    assert_same(&squares::sms3_diag(8).unwrap(), &grid(SMS_8_3_DIAGONAL), "SMS(8;3)");
    assert_same(&squares::sms5_diag_0mod4(8).unwrap(), &grid(SMS_8_5_DIAGONAL), "SMS(8;5)");
    assert_same(&squares::sms5_diag_2mod4(10).unwrap(), &grid(SMS_10_5_DIAGONAL), "SMS(10;5)");
    assert_same(&squares::sms7_diag_2mod4(10).unwrap(), &grid(SMS_10_7_DIAGONAL), "SMS(10;7)");
}

#[test]
fn heffter_rows_six_four() {
    let p = Providers::builtin();
    assert_same(&p.tight_heffter(3, 4).unwrap().grid, &grid(HEFFTER_3X4), "H(3,4)");
    let g = squares::sms_via_heffter(6, 4, &p, HeffterLayout::Staircase).unwrap();
    assert_same(&g, &grid(SMS_6_4), "SMS(6;4)");
}

#[test]
fn heffter_double_four_three() {
    let p = Providers::builtin();
    let g = sma_core::rectangles::sma_double_via_heffter(4, 3, &p).unwrap();
    assert_same(&g, &grid(SMA_4X8_HEFFTER), "SMA(4,8;6,3)");
    assert!(verify(&g, &ArraySpec::double(4, 3)).unwrap().is_valid_sma);
}

#[test]
fn shiftable_double_seven_six() {
    let p = Providers::builtin();
    let g = sma_core::rectangles::sma_double_via_shiftable(7, 6, &p).unwrap();
    assert_same(&g, &grid(SMA_7X14_SHIFTABLE), "SMA(7,14;12,6)");
    assert!(verify(&g, &ArraySpec::double(7, 6)).unwrap().is_valid_sma);
}
