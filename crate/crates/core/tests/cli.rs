use std::process::Command;

use higher_llt::cli::Report;
use higher_llt::{canonical_vector, Charge, LaurentPoly, Multipartition};

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_higher-llt"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn term_lines(text: &str) -> Vec<String> {
    text.lines()
        .filter(|l| l.starts_with('|'))
        .map(str::to_owned)
        .collect()
}

#[test]
fn worked_vector_as_text() {
    let (code, out, _) = bin(&["--e", "2", "--charge", "0,0", "--mu", "2,1|1"]);
    assert_eq!(code, 0);
    assert_eq!(
        term_lines(&out),
        [
            "|((2,1),(1))> : 1",
            "|((2),(2))> : q",
            "|((2),(1^2))> : q^2",
            "|((1^2),(2))> : q^2",
            "|((1^2),(1^2))> : q^3",
            "|((1),(2,1))> : q^4",
        ]
    );
}

#[test]
fn size_zero_is_one_line() {
    let (code, out, _) = bin(&["--e", "2", "--charge", "0,0", "--size", "0"]);
    assert_eq!(code, 0);
    assert_eq!(term_lines(&out), ["|(∅,∅)> : 1"]);
}

#[test]
fn e_infinity_vector() {
    let (code, out, err) = bin(&["--e", "inf", "--charge", "0,1,0", "--mu", "2,1|-|1"]);
    assert_eq!(code, 0, "{err}");
    let mut lines = term_lines(&out);
    lines.sort();
    let mut expected = vec![
        "|((2,1),∅,(1))> : 1",
        "|((1^2),(1),(1))> : q",
        "|((1^2),∅,(2))> : q^2",
        "|((2),∅,(1^2))> : q",
        "|((1),(1),(1^2))> : q^2",
        "|((1),∅,(2,1))> : q^3",
    ];
    expected.sort();
    assert_eq!(lines, expected);
    assert!(out.starts_with("# e = inf"));
}

#[test]
fn json_round_trips_and_matches_text() {
    let args = ["--e", "2", "--charge", "1,0", "--size", "4"];
    let (_, text, _) = bin(&args);
    let (code, json, _) = bin(&[&args[..], &["--format", "json"]].concat());
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&json).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&report).unwrap().trim(),
        json.trim()
    );

    let s = Charge::new(2, [1, 0]).unwrap();
    let mut rendered = Vec::new();
    for entry in &report.entries {
        let mu = entry.label().unwrap();
        let g = canonical_vector(&mu, &s).unwrap();
        let terms = entry.terms().unwrap();
        assert!(terms.iter().eq(g.vector().iter()), "{mu}");
        for t in &entry.vector {
            let la = Multipartition::from_parts(t.la.clone()).unwrap();
            rendered.push(format!("|{la}> : {}", t.coeff));
        }
    }
    assert_eq!(term_lines(&text), rendered);
}

#[test]
fn json_exponents_are_strings() {
    let (_, json, _) = bin(&[
        "--e", "2", "--charge", "0,0", "--mu", "2,1|1", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["e"], 2);
    let coeff = &v["entries"][0]["vector"][1]["coeff"];
    assert_eq!(coeff, &serde_json::json!({"1": 1}));
    let p: LaurentPoly = serde_json::from_value(coeff.clone()).unwrap();
    assert_eq!(p, LaurentPoly::q());
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--e", "3", "--charge", "0,1", "--size", "5", "--format", "json",
    ];
    assert_eq!(bin(&args).1, bin(&args).1);
}

#[test]
fn oracle_flag_reports_each_label() {
    let (code, out, err) = bin(&["--e", "2", "--charge", "0,0", "--size", "3", "--oracle"]);
    assert_eq!(code, 0, "{err}");
    let checks: Vec<&str> = out.lines().filter(|l| l.starts_with("oracle ")).collect();
    assert_eq!(checks.len(), 1 + 2 + 3 + 6);
    assert!(checks.iter().all(|l| l.starts_with("oracle PASS")));

    let (code, out, _) = bin(&[
        "--e", "2", "--charge", "0,0", "--size", "3", "--oracle", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("oracle ")).count(), 3);
}

#[test]
fn matrix_and_block() {
    let (code, out, _) = bin(&[
        "--e", "2", "--charge", "0,0", "--size", "4", "--matrix", "--block", "4|-",
    ]);
    assert_eq!(code, 0);
    let header = out.lines().nth(1).unwrap();
    assert!(header.contains("((4),∅)") && header.contains("((2,1),(1))"));
    assert!(!header.contains("((3),∅)"));

    let (_, json, _) = bin(&[
        "--e", "2", "--charge", "0,0", "--size", "2", "--matrix", "--format", "json",
    ]);
    let report: Report = serde_json::from_str(&json).unwrap();
    let m = report.matrix.unwrap();
    assert_eq!(m.cols.len(), report.entries.len());
    assert_eq!(m.cells.len(), m.rows.len());
}

#[test]
fn errors_and_exit_codes() {
    let cases: [(&[&str], i32); 7] = [
        (&["--e", "1", "--charge", "0", "--size", "1"], 2),
        (&["--e", "2", "--charge", "", "--size", "1"], 2),
        (&["--e", "2", "--charge", "0,0", "--mu", "1,2|-"], 2),
        (
            &["--e", "2", "--charge", "0,0", "--mu", "1|1", "--size", "2"],
            2,
        ),
        (&["--e", "2", "--charge", "0,0", "--mu", "1|1|1"], 2),
        (
            &[
                "--e", "2", "--charge", "0,0", "--size", "2", "--format", "xml",
            ],
            2,
        ),
        (
            &["--e", "2", "--charge", "0,0", "--size", "1", "--block", "1"],
            2,
        ),
    ];
    for (args, expected) in cases {
        let (code, out, err) = bin(args);
        assert_eq!(code, expected, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}
