use std::process::{Command, Output};

use num_complex::Complex64;
use serde::Deserialize;
use zernike_core::{ExactValue, Rational};

fn zernike(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zernike"))
        .args(args)
        .env_remove("ZERNIKE_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[derive(Debug, Deserialize)]
struct Record {
    pair: String,
    n: u32,
    row_k1_or_n: i64,
    row_k2_or_m: i64,
    col_k1_or_n: i64,
    col_k2_or_m: i64,
    phase: u8,
    mag_num: String,
    mag_den: String,
    rad_num: String,
    rad_den: String,
    re: f64,
    im: f64,
    route: String,
}

impl Record {
    fn exact(&self) -> ExactValue {
        let q = |a: &str, b: &str| Rational::new(a.parse().unwrap(), b.parse().unwrap());
        ExactValue::new(
            self.phase.into(),
            q(&self.mag_num, &self.mag_den),
            q(&self.rad_num, &self.rad_den),
        )
        .unwrap()
    }
}

fn csv_records(text: &str) -> Vec<Record> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .unwrap()
}

#[test]
fn trivial_multiplet_csv() {
    let out = zernike(&["coeffs", "--pair", "I-II", "--n", "0", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text.lines().next().unwrap(),
        "pair,n,row_k1_or_n,row_k2_or_m,col_k1_or_n,col_k2_or_m,phase,mag_num,mag_den,rad_num,rad_den,re,im,route"
    );
    let rows = csv_records(&text);
    assert_eq!(rows.len(), 1);
    let r = &rows[0];
    assert_eq!((r.pair.as_str(), r.n, r.route.as_str()), ("I-II", 0, "3f2"));
    assert_eq!(
        (r.row_k1_or_n, r.row_k2_or_m, r.col_k1_or_n, r.col_k2_or_m),
        (0, 0, 0, 0)
    );
    assert_eq!(r.exact(), ExactValue::one());
    assert_eq!((r.re, r.im), (1.0, 0.0));
}

#[test]
fn odd_multiplet_json_has_parity_zeros() {
    let out = zernike(&["coeffs", "--pair", "II-III", "--n", "3", "--format", "json"]);
    assert!(out.status.success());
    let rows: Vec<Record> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.len(), 16);
    assert_eq!(rows.iter().filter(|r| r.mag_num == "0").count(), 8);
    assert!(rows.iter().all(|r| r.im == 0.0));
}

#[test]
fn routes_give_identical_numbers() {
    let numeric = |route: &str| -> Vec<String> {
        let out = zernike(&[
            "coeffs", "--pair", "I-II", "--n", "2", "--route", route, "--format", "csv",
        ]);
        assert!(out.status.success());
        stdout(&out)
            .lines()
            .skip(1)
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect()
    };
    assert_eq!(numeric("hahn"), numeric("cg"));
    assert_eq!(numeric("3f2"), numeric("cg"));
}

#[test]
fn floats_round_trip_from_the_exact_columns() {
    for (pair, n) in [("I-II", 5), ("I-III", 4), ("II-III", 6)] {
        let out = zernike(&["coeffs", "--pair", pair, "--n", &n.to_string()]);
        let rows = csv_records(&stdout(&out));
        assert_eq!(rows.len(), (n + 1) * (n + 1));
        for r in &rows {
            assert_eq!(r.exact().to_complex(), Complex64::new(r.re, r.im), "{r:?}");
        }
        let out = zernike(&[
            "coeffs",
            "--pair",
            pair,
            "--n",
            &n.to_string(),
            "--format",
            "json",
        ]);
        let json: Vec<Record> = serde_json::from_slice(&out.stdout).unwrap();
        for (a, b) in json.iter().zip(&rows) {
            assert_eq!((a.re, a.im, &a.mag_num), (b.re, b.im, &b.mag_num));
        }
    }
}

#[test]
fn bad_flags_are_usage_errors() {
    for args in [
        &["coeffs", "--pair", "II-III", "--n", "2", "--route", "hahn"][..],
        &["coeffs", "--pair", "I-IV", "--n", "2"],
        &["coeffs", "--pair", "I-II", "--n", "2", "--format", "ppm"],
        &["verify", "--suite", "nonsense"],
        &["grid", "--system", "I", "--label", "2,1"],
        &[
            "grid",
            "--system",
            "II",
            "--label",
            "1,1",
            "--resolution",
            "16",
        ],
        &["coeffs", "--pair", "I-II"],
    ] {
        let out = zernike(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
    assert_eq!(zernike(&["--help"]).status.code(), Some(0));
}

fn grid_csv(system: &str, label: &str, resolution: usize) -> Vec<Vec<Option<f64>>> {
    let out = zernike(&[
        "grid",
        "--system",
        system,
        "--label",
        label,
        "--resolution",
        &resolution.to_string(),
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let rows: Vec<Vec<Option<f64>>> = stdout(&out)
        .lines()
        .map(|l| {
            l.split(',')
                .map(|c| (!c.is_empty()).then(|| c.parse().unwrap()))
                .collect()
        })
        .collect();
    assert_eq!(rows.len(), resolution);
    assert!(rows.iter().all(|r| r.len() == resolution));
    rows
}

#[test]
fn grids_show_the_reflection_parities() {
    let flat = grid_csv("I", "0,0", 64);
    let inside: Vec<f64> = flat.iter().flatten().flatten().copied().collect();
    assert!(inside.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(flat[0][0], None);

    let r = 256;
    let odd = grid_csv("II", "1,1", r);
    let even = grid_csv("III", "2,0", r);
    let mut nonzero = false;
    for i in 0..r {
        for j in 0..r {
            if let (Some(a), Some(b)) = (odd[i][j], odd[r - 1 - i][j]) {
                assert!((a + b).abs() < 1e-13);
                nonzero |= a.abs() > 0.1;
            }
            if let (Some(a), Some(b)) = (even[i][j], even[i][r - 1 - j]) {
                assert!((a - b).abs() < 1e-13);
            }
        }
    }
    assert!(nonzero);
}

#[test]
fn ppm_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("psi.ppm");
    let out = zernike(&[
        "grid",
        "--system",
        "I",
        "--label",
        "3,-1",
        "--resolution",
        "48",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let bytes = std::fs::read(&path).unwrap();
    let header = b"P6\n48 48\n255\n";
    assert_eq!(&bytes[..header.len()], header);
    assert_eq!(bytes.len(), header.len() + 3 * 48 * 48);
    // corners lie outside the disk and stay white
    assert_eq!(&bytes[header.len()..header.len() + 3], &[255, 255, 255]);
}

#[test]
fn verify_suites_exit_codes() {
    let out = zernike(&["verify", "--suite", "unitarity", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().all(|l| !l.starts_with("FAIL")));

    let out = zernike(&["verify", "--suite", "parity", "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS forbidden entries vanish, n=8"));

    let out = zernike(&[
        "verify",
        "--suite",
        "eigenvalue",
        "--n-max",
        "3",
        "--tolerance",
        "1e-3",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let out = zernike(&[
        "verify",
        "--suite",
        "eigenvalue",
        "--n-max",
        "1",
        "--tolerance",
        "1e-20",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn thread_count_from_flag_or_environment() {
    let a = zernike(&["--threads", "1", "coeffs", "--pair", "II-III", "--n", "4"]);
    let b = Command::new(env!("CARGO_BIN_EXE_zernike"))
        .args(["coeffs", "--pair", "II-III", "--n", "4"])
        .env("ZERNIKE_THREADS", "2")
        .output()
        .unwrap();
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        zernike(&["--threads", "0", "coeffs", "--pair", "I-II", "--n", "1"])
            .status
            .code(),
        Some(1)
    );
}
