use std::fs;
use std::process::{Command, Output};

use casimir_cli::output::{to_csv, Table, Value};

fn casimir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .output()
        .expect("spawn casimir")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn rows(csv_text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(csv_text.as_bytes());
    let header = r.headers().unwrap().iter().map(str::to_owned).collect();
    let body = r
        .records()
        .map(|rec| rec.unwrap().iter().map(str::to_owned).collect())
        .collect();
    (header, body)
}

fn field(csv_text: &str, row: usize, name: &str) -> f64 {
    let (h, body) = rows(csv_text);
    let c = h.iter().position(|x| x == name).unwrap();
    body[row][c].parse().unwrap()
}

#[test]
fn figure1_defaults() {
    let out = casimir(&["figure1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let (header, body) = rows(&text);
    assert_eq!(header, ["t", "eps_c", "phi_c", "neg_sigma_c"]);
    assert_eq!(body.len(), 301);
    assert_eq!(
        body[0],
        [
            "0.0000000000000000e0",
            "-2.7777777777777779e-3",
            "-2.7777777777777779e-3",
            "-0.0000000000000000e0"
        ]
    );
    assert_eq!(field(&text, 100, "t"), 1.0);
    assert!((field(&text, 100, "eps_c") + 8.8811e-6).abs() < 2e-9);
    assert_eq!(field(&text, 300, "t"), 3.0);
}

#[test]
fn figure1_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2)
        .map(|i| dir.path().join(format!("run{i}.csv")))
        .collect();
    let svgs: Vec<_> = (0..2)
        .map(|i| dir.path().join(format!("run{i}.svg")))
        .collect();
    for (p, s) in paths.iter().zip(&svgs) {
        let out = casimir(&[
            "figure1",
            "--out",
            p.to_str().unwrap(),
            "--svg",
            s.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    assert_eq!(fs::read(&paths[0]).unwrap(), fs::read(&paths[1]).unwrap());
    assert_eq!(fs::read(&svgs[0]).unwrap(), fs::read(&svgs[1]).unwrap());
    let svg = fs::read_to_string(&svgs[0]).unwrap();
    assert_eq!(svg.matches("<polyline").count(), 3);
}

#[test]
fn csv_round_trip_is_exact() {
    let out = casimir(&["figure1", "--steps", "41", "--provenance"]);
    let text = stdout(&out);
    let provenance = text
        .lines()
        .next()
        .unwrap()
        .strip_prefix("# ")
        .unwrap()
        .to_owned();
    assert!(provenance.starts_with("casimir "));
    let (header, body) = rows(&text);
    let mut table = Table::new(header);
    for r in body {
        table.push(r.iter().map(|s| Value::Real(s.parse().unwrap())).collect());
    }
    let again = String::from_utf8(to_csv(&table, Some(&provenance)).unwrap()).unwrap();
    assert_eq!(again, text);
}

#[test]
fn json_uses_csv_column_names() {
    let csv_text = stdout(&casimir(&["kirchhoff"]));
    let json = casimir(&["kirchhoff", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    let (header, body) = rows(&csv_text);
    let row = doc["rows"][0].as_object().unwrap();
    assert_eq!(row.keys().cloned().collect::<Vec<_>>(), header);
    for (name, text) in header.iter().zip(&body[0]) {
        let a: f64 = text.parse().unwrap();
        assert_eq!(row[name].as_f64().unwrap().to_bits(), a.to_bits(), "{name}");
    }
    assert_eq!(doc["meta"]["command"], "kirchhoff");
}

#[test]
fn physical_reports() {
    let text = stdout(&casimir(&[
        "physical",
        "--d",
        "1e-6",
        "--plate-size",
        "1e-2",
        "--temp",
        "0",
    ]));
    assert!((field(&text, 0, "pressure") + 1.3001e-3).abs() < 1e-7);
    assert!((field(&text, 0, "t_c") - 7193.9).abs() < 0.1);
    let hot = stdout(&casimir(&[
        "physical",
        "--d",
        "1e-6",
        "--plate-size",
        "1e-2",
        "--temp",
        "30000",
    ]));
    assert!((field(&hot, 0, "pressure") + 3.962e-2).abs() < 1e-5);

    let small = casimir(&["physical", "--d", "1e-6", "--plate-size", "5e-6"]);
    assert!(small.status.success());
    assert!(String::from_utf8_lossy(&small.stderr).contains("warning"));
}

#[test]
fn kirchhoff_residual_shrinks() {
    let mut previous = f64::INFINITY;
    for t in ["3", "4", "5"] {
        let text = stdout(&casimir(&["kirchhoff", "--t", t]));
        let diff = field(&text, 0, "difference").abs();
        assert!(diff < 1e-12 && diff < previous, "t={t}");
        previous = diff;
    }
    let text = stdout(&casimir(&["kirchhoff"]));
    assert_eq!(field(&text, 0, "estimate"), -1.0 / 360.0);
    assert!(field(&text, 0, "difference").abs() < 1e-20);
}

#[test]
fn gp_table() {
    let out = casimir(&["gp"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let (header, body) = rows(&text);
    let col = |n: &str| header.iter().position(|x| x == n).unwrap();
    assert_eq!(body.len(), 9);
    assert_eq!(body[0][col("exact")], "0");
    assert_eq!(body[1][col("exact")], "-1/360");
    assert_eq!(body[2][col("exact")], "0");
    assert!(field(&text, 0, "extrapolated").abs() < 1e-7);
    assert!((field(&text, 1, "extrapolated") + 1.0 / 360.0).abs() < 1e-6);
    assert!(body.iter().all(|r| r[col("status")] == "ok"));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| casimir(args).status.code();
    assert_eq!(code(&["figure1", "--bogus"]), Some(2));
    assert_eq!(code(&["figure1", "--t-max", "-1"]), Some(2));
    assert_eq!(code(&["figure1", "--steps", "1"]), Some(2));
    assert_eq!(code(&["figure1", "--tol", "0"]), Some(2));
    assert_eq!(
        code(&["physical", "--d", "0", "--plate-size", "1"]),
        Some(2)
    );
    assert_eq!(code(&["kirchhoff", "--t", "2.5"]), Some(2));
    assert_eq!(code(&["gp", "--p-max", "9"]), Some(2));
    assert_eq!(code(&["gp", "--alphas", "0.5,1.5"]), Some(2));

    let slow = casimir(&["figure1", "--max-terms", "1"]);
    assert_eq!(slow.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&slow.stderr).contains("t = "));
    assert_eq!(code(&["gp", "--tol", "1e-20"]), Some(3));

    // Two nearby coarse cutoffs cannot pin the limit; the table is still written.
    let coarse = casimir(&["gp", "--alphas", "1,0.9"]);
    assert_eq!(coarse.status.code(), Some(4));
    assert!(stdout(&coarse).contains("FAIL"));
}
