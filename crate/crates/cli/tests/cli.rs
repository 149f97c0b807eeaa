use std::process::{Command, Output};

use serde_json::Value;

fn sqc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = sqc(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

fn code(args: &[&str]) -> i32 {
    sqc(args).status.code().unwrap()
}

/// Rows of a CSV with header, split on commas.
fn csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    (header, rows)
}

fn f(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn golden_files() {
    let cases: [(&[&str], &str); 3] = [
        (
            &[
                "deform-sweep",
                "--n",
                "30",
                "--l-start",
                "0.01",
                "--l-end",
                "0.05",
                "--steps",
                "9",
            ],
            include_str!("golden/deform_sweep_n30.csv"),
        ),
        (
            &["crossover", "--n", "4", "--format", "json"],
            include_str!("golden/crossover_n4.json"),
        ),
        (
            &[
                "hcurve",
                "--deformation",
                "0.625",
                "--m-min",
                "-2",
                "--m-max",
                "2",
                "--steps",
                "5",
            ],
            include_str!("golden/hcurve_r0625.csv"),
        ),
    ];
    for (args, expected) in cases {
        assert_eq!(stdout(args), expected, "{args:?}");
    }
}

#[test]
fn byte_determinism() {
    for args in [
        &[
            "deform-sweep",
            "--n",
            "30",
            "--l-start",
            "0.01",
            "--l-end",
            "2",
            "--steps",
            "1000",
        ][..],
        &["spectrum", "--n", "4", "--l", "2/3", "--format", "json"],
        &["oracle-compare", "--n", "5", "--l", "0.3", "--u", "1/2"],
        &["crossover", "--n", "300"],
    ] {
        assert_eq!(sqc(args).stdout, sqc(args).stdout, "{args:?}");
    }
}

#[test]
fn deform_points() {
    assert_eq!(
        stdout(&["deform", "--n", "4", "--l", "0.6666666666666666"]),
        "n,l,R\n4,0.6666666666666666,0.625\n"
    );
    let v = json(&["deform", "--n", "4", "--l", "2/3"]);
    assert!((v["R"].as_f64().unwrap() - 0.625).abs() < 1e-12);
    assert_eq!(
        stdout(&["deform", "--n", "1", "--l", "0.3"]),
        "n,l,R\n1,0.3,1\n"
    );
}

#[test]
fn sweep_reproduces_thirty_qubit_minimum() {
    let out = stdout(&[
        "deform-sweep",
        "--n",
        "30",
        "--l-start",
        "0.01",
        "--l-end",
        "2.0",
        "--steps",
        "1000",
    ]);
    let (header, rows) = csv(&out);
    assert_eq!(header, ["l", "R"]);
    assert_eq!(rows.len(), 1000);
    let min = rows.iter().map(|r| f(&r[1])).fold(f64::INFINITY, f64::min);
    assert!((min - 0.4).abs() <= 0.02, "{min}");
}

#[test]
fn hcurve_from_chain() {
    let a = stdout(&["hcurve", "--n", "4", "--l", "2/3", "--steps", "7"]);
    let b = stdout(&["hcurve", "--deformation", "5/8", "--steps", "7"]);
    assert_eq!(a, b);
    assert_eq!(code(&["hcurve", "--n", "4"]), 2);
}

#[test]
fn resonant_four_qubit_spectrum() {
    let v = json(&[
        "spectrum", "--n", "4", "--l", "2/3", "--wq", "1", "--w0", "1", "--eta", "1",
    ]);
    assert_eq!(v["R"].as_f64().unwrap(), 0.625);
    let canonical: Vec<f64> = v["resonant"]["canonical"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    let r = 0.625f64;
    let big = ((15.0 + 3.0 * 17f64.sqrt()) * r).sqrt();
    let small = ((15.0 - 3.0 * 17f64.sqrt()) * r).sqrt();
    for (a, b) in canonical.iter().zip([-big, -small, small, big]) {
        assert!((a - b).abs() < 1e-9);
    }
    let states = v["states"].as_array().unwrap();
    for (s, c) in states.iter().zip(&canonical) {
        assert_eq!(s["v"].as_f64().unwrap(), *c);
    }
    let printed = v["resonant"]["printed"][1].as_f64().unwrap();
    assert!((printed - ((15.0 + 3.0 * 33f64.sqrt()) * r).sqrt()).abs() < 1e-12);
    assert!(v["weak_coupling"].is_null());
}

#[test]
fn spectrum_csv_layout() {
    let out = stdout(&["spectrum", "--n", "4", "--l", "2/3", "--eta", "1"]);
    let (header, rows) = csv(&out);
    assert_eq!(
        header,
        ["kind", "R", "index", "v", "E", "n_min", "c_0", "c_1", "c_2", "c_3"]
    );
    let kinds: Vec<&str> = rows.iter().map(|r| r[0].as_str()).collect();
    for k in [
        "state_unit",
        "state_c0",
        "resonant_canonical",
        "resonant_printed",
    ] {
        assert!(kinds.contains(&k), "{k}");
    }
    for row in rows.iter().filter(|r| r[0] == "state_c0") {
        assert_eq!(row[6], "1");
    }
}

#[test]
fn decoupled_energies_are_bare() {
    let v = json(&[
        "spectrum", "--n", "4", "--l", "2/3", "--u", "1", "--wq", "2", "--w0", "2.5", "--eta", "0",
    ]);
    let energies: Vec<f64> = v["states"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["E"].as_f64().unwrap())
        .collect();
    let expected: Vec<f64> = (0..4).map(|n| 2.0 + 0.5 * f64::from(n)).collect();
    for (a, b) in energies.iter().zip(&expected) {
        assert!((a - b).abs() < 1e-12, "{energies:?}");
    }
}

#[test]
fn weak_coupling_column_tracks_eigensolver() {
    let eta = 0.01;
    let v = json(&[
        "spectrum", "--n", "4", "--l", "2/3", "--wq", "1", "--w0", "2", "--eta", "0.01",
    ]);
    let weak: Vec<f64> = v["weak_coupling"]["E"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    let exact: Vec<f64> = v["states"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["E"].as_f64().unwrap())
        .collect();
    let tol = 40.0 * 0.625 * eta * eta / 1.0;
    for (a, b) in weak.iter().zip(&exact) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }
}

fn max_deviation(l: &str, n: &str) -> f64 {
    json(&["oracle-compare", "--n", n, "--l", l])["max_deviation"]
        .as_f64()
        .unwrap()
}

#[test]
fn oracle_compare_homogeneous_and_gauge() {
    for n in ["2", "4", "6"] {
        let at_zero = max_deviation("0", n);
        assert!(at_zero <= 1e-8, "N={n}: {at_zero}");
        assert!((max_deviation("2", n) - at_zero).abs() <= 1e-10);
    }
    let inhomogeneous = max_deviation("2/3", "4");
    assert!(inhomogeneous > 1e-6);
}

#[test]
fn oracle_compare_csv_summary() {
    let out = stdout(&["oracle-compare", "--n", "3", "--l", "0.1", "--u", "3/2"]);
    let (header, rows) = csv(&out);
    assert_eq!(header, ["kind", "index", "energy", "nearest", "deviation"]);
    let last = rows.last().unwrap();
    assert_eq!(last[0], "max_deviation");
    let worst = rows
        .iter()
        .filter(|r| r[0] == "collective")
        .map(|r| f(&r[4]))
        .fold(0.0, f64::max);
    assert_eq!(f(&last[4]), worst);
}

#[test]
fn table1_routes_agree() {
    let out = stdout(&["table1", "--w0", "1.3", "--eta", "0.8"]);
    let (header, rows) = csv(&out);
    assert_eq!(rows.len(), 16);
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    for row in &rows {
        let rec = f(&row[col("recursive")]);
        let scale = rec.abs().max(1.0);
        for other in ["closed", "table_rederived", "eigenvector"] {
            assert!(
                (f(&row[col(other)]) - rec).abs() <= 1e-10 * scale,
                "{other}: {row:?}"
            );
        }
        if row[col("n")] != "3" {
            assert!((f(&row[col("table_printed")]) - rec).abs() <= 1e-10 * scale);
        }
    }
}

#[test]
fn crossover_values() {
    let v = json(&["crossover", "--n", "1000"]);
    let l = v["crossover_l"].as_f64().unwrap();
    assert!((l - 7.16e-4).abs() <= 5e-6, "{l}");
    let spins = v["spins_per_wavelength"].as_f64().unwrap();
    assert!((spins - 2794.0).abs() <= 10.0);
    assert_eq!(
        json(&["crossover", "--n", "2"])["crossover_l"]
            .as_f64()
            .unwrap(),
        0.5
    );

    let (header, rows) = csv(&stdout(&["crossover", "--n", "4"]));
    assert_eq!(header.last().unwrap(), "stationary_points");
    assert_eq!(rows[0].last().unwrap().split(';').count(), 3);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["crossover", "--n", "1"]), 2);
    assert_eq!(code(&["deform", "--n", "4"]), 2);
    assert_eq!(code(&["deform", "--n", "4", "--l", "2/3", "--bogus"]), 2);
    assert_eq!(code(&["deform", "--n", "4", "--l", "1/0"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["spectrum", "--n", "3", "--l", "0.2", "--u", "1"]), 3);
    assert_eq!(
        code(&["spectrum", "--n", "2", "--l", "0.2", "--u", "-3"]),
        3
    );
    assert_eq!(
        code(&["oracle-compare", "--n", "13", "--l", "0.1", "--u", "1/2"]),
        4
    );
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let p = path.to_str().unwrap();
    let out = sqc(&["deform", "--n", "4", "--l", "2/3", "--out", p]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "n,l,R\n4,0.6666666666666666,0.625\n"
    );
}
