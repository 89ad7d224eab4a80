//! Published example arrays, one row per line, `.` for an empty cell.

pub const SMS_5_3_DIAGONAL: &str = "\
 2  3  .  . -5
-7  1  6  .  .
 . -4  0  4  .
 .  . -6 -1  7
 5  .  . -3 -2";

pub const SMA_3X4: &str = "\
 1 -1  2 -2
 5  4 -5 -4
-6 -3  3  6";

pub const SMA_2X4: &str = "\
 1 -2 -3  4
-1  2  3 -4";

pub const SMA_4X4: &str = "\
 1 -2 -3  4
-1  2  3 -4
 5 -6 -7  8
-5  6  7 -8";

pub const SMA_4X6: &str = "\
  1  -2  -3   4   9  -9
 -1   2   3  -4 -10  10
  5  -6  -7   8 -11  11
 -5   6   7  -8  12 -12";

pub const SMA_6X6: &str = "\
  6  -4 -12  -3   2  11
-13  15  16   7  -8 -17
 10 -18  -5 -14  18   9
 -9   1  14   5  -1 -10
 17   8 -16  -7 -15  13
-11  -2   3  12   4  -6";

pub const SMA_3X2: &str = "\
 1 -1
 2 -2
-3  3";

pub const SMA_3X10: &str = "\
  1  -1   2  -2   4  -4   5  -5   7  -7
 14  13 -14  11 -13  10 -11   8 -10  -8
-15 -12  12  -9   9  -6   6  -3   3  15";

pub const SMA_5X4: &str = "\
  1  -1   2  -2
  5   4  -5  -4
 -6  -3   3   6
  7  -8  -9  10
 -7   8   9 -10";

pub const SMA_5X6: &str = "\
  1  -1   2  -2   4  -4
  7   8  -8   5  -7  -5
 -9  -6   6  -3   3   9
-10  10  12 -13 -14  15
 11 -11 -12  13  14 -15";

pub const PARTITION_7_5: &str = "\
-17 -16 -15 -14 -13 -12 -11
 -5  -7  -9  -4  -6  -8 -10
 -2   0   2  -3  -1   1   3
  9   7   5  10   8   6   4
 15  16  17  11  12  13  14";

pub const SMS_7_5: &str = "\
-17   .   5  -4   .  13   3
 -2 -16   .  10  -6   .  14
 15   0 -15   .   8  -8   .
  .  16   2 -14   .   6 -10
 -5   .  17  -3 -13   .   4
  9  -7   .  11  -1 -12   .
  .   7  -9   .  12   1 -11";

pub const SMS_8_4_DIAGONAL: &str = "\
  1  -1  15 -15   .   .   .   .
  .   2  -2  14 -14   .   .   .
  .   .   3  -3  13 -13   .   .
  .   .   .   4  -4  12 -12   .
  .   .   .   .   5  -5  11 -11
-10   .   .   .   .   6  -6  10
 -7  -9   .   .   .   .   7   9
 16   8 -16   .   .   .   .  -8";

pub const MAGIC_3X7_SHIFTED: &str = "\
 1 20  9 14  5 10 18
19 11  3 15 16  6  7
13  2 21  4 12 17  8";

pub const SMS_7_6_DIAGONAL: &str = "\
  1  -1   .   4  -4   6  -6
 -7  20 -20   .  12 -12   7
 19 -19   9  -9   .  17 -17
 -8  11 -11  14 -14   .   8
 13 -13   3  -3   5  -5   .
  .   2  -2  15 -15  10 -10
-18   .  21 -21  16 -16  18";

pub const HEFFTER_3X4: &str = "\
  1   2   3  -6
  8 -12  -7  11
 -9  10   4  -5";

pub const SMS_6_4: &str = "\
  1   2   3  -6   .   .
 -1  -2  -3   6   .   .
  .   .   8 -12  -7  11
  .   .  -8  12   7 -11
  4  -5   .   .  -9  10
 -4   5   .   .   9 -10";

pub const SMS_10_6_DIAGONAL: &str = "\
 19 -19   .   .   .   .  27 -27  14 -14
-15  15   .   .   .   . -21  21 -12  12
  1  -2  11 -10   .   .   .   .  28 -28
 -1   2  10 -11   .   .   .   . -29  29
 26 -26  -9   9   7  -7   .   .   .   .
-30  30 -13  13  -8   8   .   .   .   .
  .   .  25 -25  18 -18   3  -3   .   .
  .   . -24  24 -16  16  -6   6   .   .
  .   .   .   .  22 -22  17 -17   4  -4
  .   .   .   . -23  23 -20  20  -5   5";

pub const SMS_6_3: &str = "\
 . -1 -8  .  .  9
 1  .  6  . -7  .
 8 -6  . -2  .  .
 .  .  2  .  3 -5
 .  7  . -3  . -4
-9  .  .  5  4  .";

pub const SMS_8_3_DIAGONAL: &str = "\
  3  -8   .   .   .   .   .   5
 -7   6   1   .   .   .   .   .
  .   2   9 -11   .   .   .   .
  .   . -10  12  -2   .   .   .
  .   .   .  -1  -9  10   .   .
  .   .   .   .  11  -6  -5   .
  .   .   .   .   .  -4  -3   7
  4   .   .   .   .   .   8 -12";

pub const SMS_8_5_DIAGONAL: &str = "\
  5   6 -13   .   .   . -17  19
  9  10 -19  -8   .   .   .   8
-12 -16  15   1  12   .   .   .
  .  -7   4  20 -14  -3   .   .
  .   .  13 -11 -15  -4  17   .
  .   .   .  -2  -1 -10  11   2
-18   .   .   .  18  14  -5  -9
 16   7   .   .   .   3  -6 -20";

pub const SMS_10_5_DIAGONAL: &str = "\
  5 -19  -3   .   .   .   .   .   8   9
-16  10  11  -8   .   .   .   .   .   3
 -2  14  15 -14 -13   .   .   .   .   .
  .  -7 -11  20  16 -18   .   .   .   .
  .   . -12  19  25  -9 -23   .   .   .
  .   .   . -17  -6 -20  21  22   .   .
  .   .   .   . -22  24 -15  -4  17   .
  .   .   .   .   .  23  -1 -10 -24  12
  7   .   .   .   .   .  18 -21  -5   1
  6   2   .   .   .   .   .  13   4 -25";

pub const SMS_10_7_DIAGONAL: &str = "\
  7 -20  -5  -4   .   .   .  18 -16  20
-15  14   8   2 -11   .   .   .  11  -9
 -2  13  21 -27   9 -18   .   .   .   4
 -3   5 -22  28   1  16 -25   .   .   .
  . -10  12   6  35 -34  23 -32   .   .
  .   . -17  19 -29 -28  -6  30  31   .
  .   .   . -24  26  -1 -21  29 -33  24
 17   .   .   . -31  33  34 -14 -13 -26
-19  10   .   .   .  32 -30  -8  -7  22
 15 -12   3   .   .   .  25 -23  27 -35";

pub const SMA_4X8_HEFFTER: &str = "\
  4   8   . -12  -4  -8   .  12
 -9   3   6   .   9  -3  -6   .
  . -11   1  10   .  11  -1 -10
  5   .  -7   2  -5   .   7  -2";

pub const SMA_7X14_SHIFTABLE: &str = "\
  1  -1   .   4  -4   6  -6  22 -22   .  25 -25  27 -27
 -7  20 -20   .  12 -12   7 -28  41 -41   .  33 -33  28
 19 -19   9  -9   .  17 -17  40 -40  30 -30   .  38 -38
 -8  11 -11  14 -14   .   8 -29  32 -32  35 -35   .  29
 13 -13   3  -3   5  -5   .  34 -34  24 -24  26 -26   .
  .   2  -2  15 -15  10 -10   .  23 -23  36 -36  31 -31
-18   .  21 -21  16 -16  18 -39   .  42 -42  37 -37  39";

/// Ten equal-sum triples for n = 10, listed by class.
pub const TRIPLES_10: [[i64; 3]; 10] = [
    [15, 1, 30],
    [19, 2, 26],
    [3, 17, 27],
    [4, 14, 28],
    [5, 12, 29],
    [6, 20, 21],
    [7, 18, 22],
    [8, 16, 23],
    [9, 13, 24],
    [10, 11, 25],
];
