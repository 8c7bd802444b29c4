use std::process::{Command, Output};

use serde_json::Value;

fn gauss_factor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gauss-factor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = gauss_factor(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn rows(v: &Value) -> &Vec<Value> {
    v["rows"].as_array().unwrap()
}

#[test]
fn gauss_both_methods_agree() {
    let v = json(&["gauss", "--a", "1", "--b", "7", "--method", "both"]);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "gauss");
    let diff = rows(&v).iter().find(|r| r["method"] == "difference").unwrap();
    assert!(diff["re"].as_f64().unwrap() < 1e-9);
    assert!(diff["im"].as_f64().unwrap() < 1e-9);
    let closed = rows(&v).iter().find(|r| r["method"] == "closed").unwrap();
    assert_eq!(closed["coefficient"], "-i");
    assert_eq!(closed["reduced_b"], 7);
}

#[test]
fn gauss_zero_is_one() {
    let v = json(&["gauss", "--a", "0", "--b", "7"]);
    for r in rows(&v).iter().filter(|r| r["method"] != "difference") {
        assert_eq!(r["re"].as_f64(), Some(1.0));
        assert_eq!(r["im"].as_f64(), Some(0.0));
    }
}

#[test]
fn gauss_closed_even_fails_with_exit_2() {
    let o = gauss_factor(&["gauss", "--a", "2", "--b", "4", "--method", "closed"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("closed form requires odd b"));
}

#[test]
fn scan_rows_and_classes() {
    let v = json(&["scan", "--n", "21"]);
    let r = rows(&v);
    assert_eq!(r.len(), 21);
    assert_eq!(r[2]["n"], 3);
    assert_eq!(r[2]["class"], "imag");
    assert!((r[2]["mod2"].as_f64().unwrap() - 1.0 / 7.0).abs() < 1e-9);

    let v = json(&["scan", "--n", "15"]);
    assert_eq!(rows(&v)[2]["class"], "real");

    let v = json(&["scan", "--n", "2"]);
    assert_eq!(rows(&v).len(), 2);
    assert_eq!(rows(&v)[1]["mod2"].as_f64(), Some(1.0));
    assert_eq!(rows(&v)[0]["class"], "none");
}

#[test]
fn scan_csv_matches_json() {
    let csv_out = stdout(&gauss_factor(&["scan", "--n", "33", "--format", "csv"]));
    let v = json(&["scan", "--n", "33"]);
    let mut lines = csv_out.split('\n');
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header, ["n", "re", "im", "mod2", "gcd", "class"]);
    let body: Vec<&str> = lines.filter(|l| !l.is_empty()).collect();
    assert_eq!(body.len(), rows(&v).len());
    for (line, row) in body.iter().zip(rows(&v)) {
        for (cell, col) in line.split(',').zip(&header) {
            let expected = match &row[*col] {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            assert_eq!(cell, expected, "column {col}");
        }
    }
    assert!(!csv_out.contains('\r'));
}

#[test]
fn json_round_trip_is_byte_identical() {
    for args in [
        vec!["scan", "--n", "45", "--format", "json"],
        vec!["gauss", "--a", "5", "--b", "999", "--format", "json"],
        vec![
            "riddle",
            "--n",
            "55",
            "--candidates",
            "5,7",
            "--samples",
            "21",
            "--format",
            "json",
        ],
        vec!["factor", "--n", "105", "--format", "json"],
    ] {
        let text = stdout(&gauss_factor(&args));
        let parsed: Value = serde_json::from_str(&text).unwrap();
        let mut again = serde_json::to_string_pretty(&parsed).unwrap();
        again.push('\n');
        assert_eq!(again, text, "{args:?}");
    }
}

#[test]
fn factor_rotor_reports() {
    let o = gauss_factor(&["factor", "--n", "21", "--mode", "rotor"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("21 = 3 x 7"), "{text}");
    let v = json(&["factor", "--n", "21", "--mode", "rotor"]);
    let signals: Vec<&str> = rows(&v).iter().map(|r| r["signal"].as_str().unwrap()).collect();
    assert_eq!(signals, ["imag", "imag"]);

    let text = stdout(&gauss_factor(&["factor", "--n", "17", "--mode", "rotor"]));
    assert!(text.contains("17 is prime"));

    let v = json(&["factor", "--n", "40"]);
    assert_eq!(v["parameters"]["two_exponent"], 3);
}

#[test]
fn factor_wavepacket_finds_fig1_factors() {
    let o = gauss_factor(&[
        "factor",
        "--n",
        "55",
        "--mode",
        "wavepacket",
        "--dm",
        "10",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let flagged: Vec<u64> = rows(&v)
        .iter()
        .filter(|r| r["flagged"] == true)
        .map(|r| r["ell"].as_u64().unwrap())
        .collect();
    assert_eq!(flagged, [5, 11]);
}

#[test]
fn factor_wavepacket_exit_codes() {
    // prime: nothing to find, still a success
    assert_eq!(
        gauss_factor(&["factor", "--n", "17", "--mode", "wavepacket"])
            .status
            .code(),
        Some(0)
    );
    // 183 = 3 * 61: the cofactor is too large for the revival humps to separate at dm = 10
    assert_eq!(
        gauss_factor(&["factor", "--n", "183", "--mode", "wavepacket"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        gauss_factor(&["factor", "--n", "0", "--mode", "wavepacket"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn riddle_traces() {
    let v = json(&["riddle", "--n", "55", "--dm", "10", "--candidates", "2,3,5,7,11,13"]);
    let r = rows(&v);
    let samples = v["parameters"]["samples"].as_u64().unwrap() as usize;
    assert_eq!(r.len(), 6 * samples);
    for (i, ell) in [2u64, 3, 5, 7, 11, 13].iter().enumerate() {
        let trace = &r[i * samples..(i + 1) * samples];
        assert!(trace.iter().all(|row| row["ell"] == *ell));
        let peak = trace
            .iter()
            .max_by(|a, b| a["mod2"].as_f64().unwrap().total_cmp(&b["mod2"].as_f64().unwrap()))
            .unwrap();
        if *ell == 5 || *ell == 11 {
            assert_eq!(peak["dtau"].as_f64(), Some(0.0), "ell = {ell}");
        }
    }

    let v = json(&["riddle", "--n", "55", "--samples", "1"]);
    assert!(rows(&v).iter().all(|row| row["dtau"].as_f64() == Some(0.0)));

    let text = stdout(&gauss_factor(&[
        "riddle",
        "--n",
        "15",
        "--dm",
        "10",
        "--candidates",
        "3",
    ]));
    assert!(text.starts_with("symmetric maximum at: 3"), "{text}");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("gauss-factor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scan.csv");
    let o = gauss_factor(&["scan", "--n", "9", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 10);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn adversarial_flags_never_panic() {
    let cases: &[&[&str]] = &[
        &["gauss", "--a", "99999999999999999999", "--b", "3"],
        &["gauss", "--a", "1", "--b", "0"],
        &["scan", "--n", "abc"],
        &["riddle", "--n", "55", "--window", "nan"],
        &["riddle", "--n", "55", "--window", "-inf"],
        &["riddle", "--n", "55", "--dm", "0"],
        &["riddle", "--n", "55", "--candidates", "0"],
        &["riddle", "--n", "3"],
        &["factor", "--n", "55", "--mode", "sideways"],
        &["factor", "--n", "55", "--mode", "wavepacket", "--sym-tol", "-1"],
        &["--format", "json"],
        &[],
    ];
    for args in cases {
        let o = gauss_factor(args);
        assert_eq!(
            o.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(!String::from_utf8_lossy(&o.stderr).contains("panicked"));
    }
}
