//! Byte-for-byte comparisons of CLI output against checked-in files.
//!
//! Regenerate with `UPDATE_GOLDEN=1 cargo test -p altquad-cli --test golden`.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn data(name: &str) -> String {
    manifest()
        .join("../core/tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_altquad"))
        .args(args)
        .output()
        .expect("spawn altquad");
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn check(name: &str, actual: &str) {
    let path = manifest().join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e} (run with UPDATE_GOLDEN=1)", path.display()));
    // file paths vary between checkouts; the golden files never contain them
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

/// Parses the numeric cells of the row labelled `label` in a human table.
fn row_values(text: &str, label: &str) -> Vec<f64> {
    let line = text
        .lines()
        .find(|l| l.split_whitespace().next() == Some(label))
        .unwrap_or_else(|| panic!("no row {label}"));
    line.split_whitespace()
        .skip(1)
        .map(|v| v.parse().unwrap())
        .collect()
}

#[test]
fn example2_table2() {
    let out = run(&[
        "--input",
        &data("example2.csv"),
        "--ordering",
        "paper-table-2",
        "--show-omega",
    ]);
    check("example2_table2.txt", &out);
    let rows = [
        (
            "A_12",
            vec![
                -2.0024698170,
                -1.9998433802,
                -2.0000010844,
                -1.9999999828,
                -2.0000000005,
            ],
        ),
        (
            "A_6",
            vec![-2.0004999894, -1.9999967037, -2.0000000517, -1.9999999985],
        ),
        ("A_2", vec![-2.0000526243, -1.9999992147, -2.0000000221]),
        ("A_3", vec![-2.0001193864, -1.9999967923]),
        ("A_4", vec![-2.0002147374]),
    ];
    let mut cells = 0;
    for (label, want) in rows {
        let got = row_values(&out, label);
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() <= 1e-9, "{label}: {g} vs {w}");
            cells += 1;
        }
    }
    assert_eq!(cells, 15);
}

#[test]
fn sine_romberg_table3() {
    let out = run(&[
        "--function",
        "sin",
        "--n",
        "32",
        "--method",
        "romberg",
        "--precision",
        "14",
    ]);
    check("sine_romberg_table3.txt", &out);
    let first = row_values(&out, "(b-a)/1");
    assert_eq!(first.len(), 6);
    assert!((first[5] + 2.00000000000133).abs() <= 1e-11);
    assert!((row_values(&out, "(b-a)/2")[0] + std::f64::consts::FRAC_PI_2).abs() <= 1e-11);
}

#[test]
fn sine_compare_table4() {
    let out = run(&[
        "--function",
        "sin",
        "--n",
        "32",
        "--method",
        "compare",
        "--ordering",
        "paper-table-4",
        "--precision",
        "14",
    ]);
    check("sine_compare_table4.txt", &out);
    assert!(out.contains("approximations: alt 15, romberg 21"));
}

#[test]
fn example1_alt() {
    let out = run(&[
        "--input",
        &data("example1.csv"),
        "--precision",
        "4",
        "--show-omega",
    ]);
    check("example1_alt.txt", &out);
    assert!(out.contains("final A_{10,2} = 12500000.0000"));
}

#[test]
fn example1_alt_csv() {
    let out = run(&[
        "--input",
        &data("example1.csv"),
        "--output",
        "csv",
        "--precision",
        "6",
    ]);
    check("example1_alt.csv", &out);
}

#[test]
fn convergence_csv() {
    let out = run(&[
        "--function",
        "sin",
        "--a",
        "0",
        "--b",
        "1",
        "--method",
        "convergence",
        "--output",
        "csv",
    ]);
    check("convergence_sin_alt.csv", &out);
}

#[test]
fn simpson_and_trap_reports() {
    let simpson = run(&["--input", &data("example2.csv"), "--method", "simpson"]);
    check("example2_simpson.txt", &simpson);
    let trap = run(&[
        "--input",
        &data("example2.csv"),
        "--method",
        "trap",
        "--output",
        "csv",
    ]);
    check("example2_trap.csv", &trap);
}
