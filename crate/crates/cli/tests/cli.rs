use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn sma(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sma"))
        .args(args)
        .current_dir(dir)
        .env("SMA_CATALOG_DIR", dir.join("catalog"))
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const SMS_7_5_TEXT: &str = "\
# 7 7 5 5
-17   .   5  -4   .  13   3
 -2 -16   .  10  -6   .  14
 15   0 -15   .   8  -8   .
  .  16   2 -14   .   6 -10
 -5   .  17  -3 -13   .   4
  9  -7   .  11  -1 -12   .
  .   7  -9   .  12   1 -11
";

const SMA_2X4_TEXT: &str = "# 2 4 4 2\n 1 -2 -3  4\n-1  2  3 -4\n";
const SMA_3X4_TEXT: &str = "# 3 4 4 3\n 1 -1  2 -2\n 5  4 -5 -4\n-6 -3  3  6\n";
const HEFFTER_3X4_TEXT: &str = "# 3 4 4 3\n  1   2   3  -6\n  8 -12  -7  11\n -9  10   4  -5\n";

#[test]
fn square_text_rendering() {
    let dir = tempfile::tempdir().unwrap();
    let o = sma(dir.path(), &["construct", "square", "--n", "7", "--t", "5", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), SMS_7_5_TEXT);
}

#[test]
fn unsupported_tight_names_condition() {
    let dir = tempfile::tempdir().unwrap();
    let o = sma(dir.path(), &["construct", "tight", "--rows", "2", "--cols", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("≡ 0,3 (mod 4)"), "{}", stderr(&o));
}

#[test]
fn single_zero() {
    let dir = tempfile::tempdir().unwrap();
    let o = sma(dir.path(), &["construct", "tight", "--rows", "1", "--cols", "1", "--format", "text"]);
    assert_eq!(stdout(&o), "# 1 1 1 1\n0\n");
}

#[test]
fn verify_reports_shiftable_and_failures() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("two.txt"), SMA_2X4_TEXT).unwrap();
    fs::write(d.join("three.txt"), SMA_3X4_TEXT).unwrap();
    fs::write(d.join("broken.txt"), SMA_3X4_TEXT.replace(" 4 -5", " 0 -5")).unwrap();

    let o = sma(d, &["verify", "two.txt"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["is_valid_sma"], true);
    assert_eq!(r["is_shiftable"], true);

    let o = sma(d, &["verify", "three.txt"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["is_shiftable"], false);

    let o = sma(d, &["verify", "broken.txt"]);
    assert_eq!(o.status.code(), Some(1));
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["is_valid_sma"], false);
    assert_eq!(r["failing_rows"], serde_json::json!([2]));
    assert_eq!(r["failing_cols"], serde_json::json!([2]));
}

#[test]
fn verify_rejects_garbage() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "hello").unwrap();
    assert_eq!(sma(dir.path(), &["verify", "bad.txt"]).status.code(), Some(65));
    fs::write(dir.path().join("bad.json"), "{\"m\": 2}").unwrap();
    assert_eq!(sma(dir.path(), &["verify", "bad.json"]).status.code(), Some(65));
}

#[test]
fn decide_lines() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = sma(d, &["decide", "5", "5", "1", "1"]);
    assert!(stdout(&o).contains("NotExists"), "{}", stdout(&o));
    let o = sma(d, &["decide", "5", "10", "10", "5"]);
    assert!(stdout(&o).contains("Unknown"), "{}", stdout(&o));
    let o = sma(d, &["decide", "4", "8", "6", "3"]);
    assert!(stdout(&o).contains("Exists (double/heffter)"), "{}", stdout(&o));
    let o = sma(d, &["decide", "3", "4", "4", "3"]);
    assert!(stdout(&o).contains("Exists"), "{}", stdout(&o));
    let o = sma(d, &["decide", "4", "6", "3", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("family not characterized"));
}

#[test]
fn oracle_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = sma(d, &["oracle", "--spec", "2,5,5,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("none (exhaustive"), "{}", stdout(&o));
    let o = sma(d, &["oracle", "--spec", "6,6,6,6", "--max-cells", "14"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("inconclusive"));
    let o = sma(d, &["oracle", "--spec", "2,3,3,2", "--format", "text"]);
    assert!(stdout(&o).contains(" 1  2 -3"), "{}", stdout(&o));
}

#[test]
fn catalog_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("figure12.txt"), HEFFTER_3X4_TEXT).unwrap();
    let o = sma(d, &["catalog", "add", "figure12.txt"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("tight-heffter/3x4"));

    // the transpose is new
    let transposed = "# 4 3 3 4\n  1   8  -9\n  2 -12  10\n  3  -7   4\n -6  11  -5\n";
    fs::write(d.join("h43.txt"), transposed).unwrap();
    let o = sma(d, &["catalog", "add", "h43.txt"]);
    assert!(stdout(&o).starts_with("stored tight-heffter/4x3"), "{}{}", stdout(&o), stderr(&o));
    let o = sma(d, &["catalog", "list"]);
    assert!(stdout(&o).contains("tight-heffter/4x3\tuser-supplied"));

    fs::write(d.join("catalog").join("junk.json"), "{").unwrap();
    let o = sma(d, &["catalog", "gc"]);
    assert!(stdout(&o).contains("removed junk.json"));

    fs::write(d.join("not.txt"), SMA_3X4_TEXT).unwrap();
    assert_eq!(sma(d, &["catalog", "add", "not.txt"]).status.code(), Some(65));
}

#[test]
fn usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(sma(d, &["bogus"]).status.code(), Some(64));
    assert_eq!(sma(d, &["construct", "square", "--n", "seven"]).status.code(), Some(64));
    assert_eq!(sma(d, &["oracle", "--spec", "2,5"]).status.code(), Some(64));
    assert_eq!(sma(d, &["--help"]).status.code(), Some(0));
}

#[test]
fn own_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let cases: &[&[&str]] = &[
        &["tight", "--rows", "5", "--cols", "6"],
        &["tight", "--rows", "7", "--cols", "9"],
        &["square", "--n", "10", "--t", "6"],
        &["square", "--n", "9", "--t", "4"],
        &["square", "--n", "8", "--t", "8"],
        &["double", "--m", "7", "--t", "6"],
        &["double", "--m", "4", "--t", "3"],
    ];
    for (k, case) in cases.iter().enumerate() {
        for format in ["json", "text"] {
            let file = format!("out{k}.{format}");
            let mut args = vec!["construct"];
            args.extend_from_slice(case);
            args.extend_from_slice(&["--format", format, "--out", &file]);
            let o = sma(d, &args);
            assert_eq!(o.status.code(), Some(0), "{case:?}: {}", stderr(&o));
            let o = sma(d, &["verify", &file]);
            assert_eq!(o.status.code(), Some(0), "{case:?} {format}: {}", stdout(&o));
        }
    }
}

#[test]
fn clean_catalogs_give_identical_bytes() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        let o = sma(dir.path(), &["--seed", "7", "construct", "tight", "--rows", "5", "--cols", "7"]);
        assert_eq!(o.status.code(), Some(0));
        let stored = fs::read(dir.path().join("catalog").join("magic-rectangle_5x7.json")).unwrap();
        (o.stdout, stored)
    };
    assert_eq!(run(), run());
}
