//! End-to-end tests of the `spanarea` binary: exit codes, report contents,
//! format round-trips, and byte-identical SVG output.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use spanarea::Word;
use spanarea_cli::formats::load_report;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spanarea"))
}

fn write_curve(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

const SQUARE: &str = r#"{ "name": "square", "vertices": [[0,0],[4,0],[4,4],[0,4]] }"#;
const BOWTIE: &str = r#"{ "vertices": [[0,0],[2,2],[2,0],[0,2]] }"#;
const OUT_AND_BACK: &str = r#"{ "vertices": [[0,0],[2,0],[0,0],[0,2]] }"#;
const FIVE_SQUARES: &str = r#"{ "vertices": [
  [0,0],[4,0],[4,4],[0,4],
  [0,0],[4,0],[4,4],[0,4],
  [0,0],[4,0],[4,4],[0,4],
  [0,0],[4,0],[4,4],[0,4],
  [0,0],[4,0],[4,4],[0,4]
] }"#;

#[test]
fn area_on_the_square_reports_16() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_curve(dir.path(), "square.json", SQUARE);
    let report_path = dir.path().join("report.json");
    let out = run(&[
        "area",
        input.to_str().unwrap(),
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{out:?}");
    let report = load_report(&report_path).unwrap();
    assert_eq!(report.area_value, "16/1");
    assert_eq!(report.k_opt, vec![1]);
    assert_eq!(report.areas, vec!["16/1"]);
    assert_eq!(report.name.as_deref(), Some("square"));
}

#[test]
fn area_on_the_bowtie_reports_word_and_value() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_curve(dir.path(), "bowtie.json", BOWTIE);
    let report_path = dir.path().join("report.json");
    let out = run(&[
        "area",
        input.to_str().unwrap(),
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let report = load_report(&report_path).unwrap();
    assert_eq!(report.area_value, "2/1");
    assert_eq!(report.k_opt, vec![1, 1]);
    let word = Word::parse(&report.word).unwrap();
    assert!(word.is_rotation_of(&Word::parse("a1 A2").unwrap()));
}

#[test]
fn exact_rational_and_decimal_coordinates_parse() {
    let dir = tempfile::tempdir().unwrap();
    // A unit square described with mixed exact notations; area 1/4 scaled.
    let body = r#"{ "vertices": [["0/1", 0], [0.5, "0"], ["1/2", 0.5], [0, "0.5"]] }"#;
    let input = write_curve(dir.path(), "mixed.json", body);
    let report_path = dir.path().join("report.json");
    let out = run(&[
        "area",
        input.to_str().unwrap(),
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{out:?}");
    let report = load_report(&report_path).unwrap();
    assert_eq!(report.area_value, "1/4");
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    for body in ["{ not json", r#"{ "vertices": [[0,0],[1,"x"],[0,1]] }"#] {
        let input = write_curve(dir.path(), "bad.json", body);
        let out = run(&[
            "area",
            input.to_str().unwrap(),
            "--report",
            report.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 2, "{body}");
        assert!(!out.stderr.is_empty());
    }
    // Missing file is a read failure, also exit 2.
    let out = run(&[
        "area",
        dir.path().join("absent.json").to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn degenerate_curve_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_curve(
        dir.path(),
        "thin.json",
        r#"{ "vertices": [[0,0],[1,0]] }"#,
    );
    let out = run(&[
        "area",
        input.to_str().unwrap(),
        "--report",
        dir.path().join("r.json").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn word_command_prints_word_and_windings() {
    let dir = tempfile::tempdir().unwrap();
    let doubled = r#"{ "vertices": [[0,0],[4,0],[4,4],[0,4],[0,0],[4,0],[4,4],[0,4]] }"#;
    let input = write_curve(dir.path(), "double.json", doubled);
    let out = run(&["word", input.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("word a1 a1"));
    assert!(stdout.contains("winding 1 2"));

    let input = write_curve(dir.path(), "tree.json", OUT_AND_BACK);
    let out = run(&["word", input.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, "word \n");
}

#[test]
fn truncate_prints_the_chain_and_checks_range() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_curve(dir.path(), "bowtie.json", BOWTIE);
    let out = run(&["truncate", input.to_str().unwrap(), "--upto", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1/1\n2/1\n");

    let input = write_curve(dir.path(), "square.json", SQUARE);
    let out = run(&["truncate", input.to_str().unwrap(), "--upto", "1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "16/1\n");
    let out = run(&["truncate", input.to_str().unwrap(), "--upto", "5"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn verify_agrees_with_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_curve(dir.path(), "bowtie.json", BOWTIE);
    let out = run(&["verify", input.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("dp     2/1"));
    assert!(stdout.contains("oracle 2/1"));

    let input = write_curve(dir.path(), "square.json", SQUARE);
    let out = run(&["verify", input.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("dp     16/1"));
    assert!(stdout.contains("oracle 16/1"));
}

#[test]
fn verify_rejects_words_longer_than_the_bound() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_curve(dir.path(), "five.json", FIVE_SQUARES);
    let out = run(&["verify", input.to_str().unwrap(), "--max-len", "4"]);
    assert_eq!(code(&out), 5);
}

#[test]
fn svg_output_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_curve(dir.path(), "bowtie.json", BOWTIE);
    let mut renders = Vec::new();
    for i in 0..2 {
        let report = dir.path().join(format!("r{i}.json"));
        let svg = dir.path().join(format!("out{i}.svg"));
        let out = run(&[
            "area",
            input.to_str().unwrap(),
            "--report",
            report.to_str().unwrap(),
            "--svg",
            svg.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
        renders.push(fs::read(&svg).unwrap());
    }
    assert_eq!(renders[0], renders[1]);
    let text = String::from_utf8(renders[0].clone()).unwrap();
    assert!(text.starts_with("<svg"));
    assert!(text.contains("<path"));
    assert!(text.contains("k1=1"));
}

#[test]
fn reports_round_trip_and_validate() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_curve(dir.path(), "flower.json", r#"{ "vertices": [
        [0,0],[-4,5],[-8,0],[0,0],[4,0],[4,4],[0,4],[1,2],[2,3],[0,4],[0,0],[0,4],[4,4],[4,0]
    ] }"#);
    let report_path = dir.path().join("report.json");
    let out = run(&[
        "area",
        input.to_str().unwrap(),
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let doc = load_report(&report_path).unwrap();
    // Field-for-field round trip through serialization.
    let json = serde_json::to_string(&doc).unwrap();
    let back: spanarea_cli::formats::ReportDoc = serde_json::from_str(&json).unwrap();
    assert_eq!(doc, back);
    // Canonical rational strings throughout.
    for s in doc.areas.iter().chain([&doc.area_value, &doc.winding_lower_bound]) {
        let (p, q) = s.split_once('/').unwrap();
        assert!(p.parse::<i64>().is_ok());
        assert!(q.parse::<i64>().unwrap() > 0);
    }
    // Tampering with the stated value fails validation on load.
    let tampered = fs::read_to_string(&report_path)
        .unwrap()
        .replace("\"43/2\"", "\"99/2\"");
    fs::write(&report_path, tampered).unwrap();
    assert!(load_report(&report_path).is_err());
}
