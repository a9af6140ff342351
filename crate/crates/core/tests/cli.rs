use std::path::Path;
use std::process::Command;

use cyclic_motion::cli::{self, format_float};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("cyclic").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write_curve(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run(&["validate", "@builtin:ex41"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.lines().next().unwrap(),
        "cross_sum: exactly zero, spherical: false"
    );

    let bad = write_curve(
        dir.path(),
        "bad.json",
        r#"{"components": ["t", "t - 1", "t^2 - t"], "domain": [-2, 3]}"#,
    );
    assert_eq!(run(&["validate", &bad]).0, 2);

    let zero = write_curve(
        dir.path(),
        "zero.json",
        r#"{"components": ["0", "0", "0"], "domain": [0, 1]}"#,
    );
    assert_eq!(run(&["validate", &zero]).0, 3);

    let broken = write_curve(
        dir.path(),
        "broken.json",
        r#"{"components": ["t", "1 +", "0"], "domain": [0, 1]}"#,
    );
    let (code, _, err) = run(&["validate", &broken]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));

    assert_eq!(
        run(&[
            "validate",
            &dir.path().join("missing.json").to_string_lossy()
        ])
        .0,
        1
    );
    assert_eq!(run(&["validate", "@builtin:nope"]).0, 1);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(
        run(&["sweep", "--mode", "spin", "--t0", "0", "--t1", "1", "-n", "3", "@ex41"]).0,
        1
    );
    assert_eq!(
        run(&["sweep", "--mode", "pole", "--t0", "1", "--t1", "0", "-n", "3", "@ex41"]).0,
        1
    );
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn darboux_sweep_of_the_spherical_example() {
    let (code, out, _) = run(&[
        "sweep",
        "--mode",
        "darboux",
        "--t0",
        "-2",
        "--t1",
        "2",
        "-n",
        "101",
        "@builtin:ex51",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out.lines().next().unwrap(),
        "t,wx,wy,wz,omega,det_Sdot,status"
    );
    let rows = rows(&out);
    assert_eq!(rows.len(), 101);
    for r in &rows {
        assert_eq!(r[6], "ok");
        let w: Vec<f64> = r[1..4].iter().map(|x| x.parse().unwrap()).collect();
        assert!((w[0] - w[1]).abs() <= 1e-9 && (w[1] - w[2]).abs() <= 1e-9);
    }
    let mid = &rows[50];
    assert_eq!(mid[0], format_float(0.0));
    assert_eq!(mid[1], format_float(-1.0));
}

#[test]
fn darboux_sweep_needs_a_spherical_curve() {
    assert_eq!(
        run(&[
            "sweep",
            "--mode",
            "darboux",
            "--t0",
            "0",
            "--t1",
            "1",
            "-n",
            "3",
            "@builtin:ex41"
        ])
        .0,
        5
    );
}

#[test]
fn pole_sweep_with_a_translation_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_curve(
        dir.path(),
        "ex41.json",
        r#"{"components": ["t", "1 - t", "t^2 - t"], "translation": ["t", "0", "0"], "domain": [-2, 3]}"#,
    );
    let (code, out, _) = run(&[
        "sweep", "--mode", "pole", "--t0", "0.6", "--t1", "1.4", "-n", "81", &file,
    ]);
    assert_eq!(code, 0);
    let table = rows(&out);
    assert_eq!(table.len(), 81);
    assert!(table.iter().all(|r| r[8] == "ok"));
    let at_one = table.iter().find(|r| r[0] == format_float(1.0)).unwrap();
    let p: Vec<f64> = at_one[1..4].iter().map(|x| x.parse().unwrap()).collect();
    assert!((p[0] + 0.5).abs() <= 1e-12 && p[1].abs() <= 1e-12 && (p[2] + 0.5).abs() <= 1e-12);

    let (code, out, _) = run(&[
        "sweep", "--mode", "pole", "--t0", "0.5", "--t1", "0.5", "-n", "1", &file,
    ]);
    assert_eq!(code, 4);
    assert_eq!(rows(&out)[0][8], "singular");
}

#[test]
fn sweeps_reject_bad_curves() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_curve(
        dir.path(),
        "bad.json",
        r#"{"components": ["t", "t - 1", "t^2 - t"], "domain": [-2, 3]}"#,
    );
    assert_eq!(
        run(&[
            "sweep",
            "--mode",
            "decompose",
            "--t0",
            "0",
            "--t1",
            "1",
            "-n",
            "5",
            &bad
        ])
        .0,
        2
    );
    let origin = write_curve(
        dir.path(),
        "origin.json",
        r#"{"components": ["t", "0", "0"], "domain": [-1, 1]}"#,
    );
    assert_eq!(
        run(&[
            "sweep",
            "--mode",
            "decompose",
            "--t0",
            "-1",
            "--t1",
            "1",
            "-n",
            "5",
            &origin
        ])
        .0,
        3
    );
}

#[test]
fn every_mode_writes_its_header_and_n_rows() {
    let headers = [
        ("decompose", "t,a1,a2,a3,h,orth_residual,status"),
        ("pole", "t,px,py,pz,qx,qy,qz,det_Bdot,status"),
        ("accel", "t,order,xx,xy,xz,residual,status"),
    ];
    for (mode, header) in headers {
        let (_, out, _) = run(&[
            "sweep", "--mode", mode, "--order", "2", "--t0", "-2", "--t1", "3", "-n", "37", "@ex41",
        ]);
        assert_eq!(out.lines().next().unwrap(), header);
        assert!(!out.contains('\r'));
        let rows = rows(&out);
        assert_eq!(rows.len(), 37);
        let ts: Vec<f64> = rows.iter().map(|r| r[0].parse().unwrap()).collect();
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn output_file_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("run{i}.csv"));
        let path = path.to_str().unwrap();
        let code = run(&[
            "sweep", "--mode", "pole", "--t0", "-2", "--t1", "3", "-n", "201", "--out", path,
            "@ex41",
        ])
        .0;
        // t = 1/2 is one of the samples.
        assert_eq!(code, 4);
        files.push(std::fs::read(path).unwrap());
    }
    assert_eq!(files[0], files[1]);
    assert!(!files[0].is_empty());
}

#[test]
fn demos() {
    let (code, out, _) = run(&["demo", "ex41"]);
    assert_eq!(code, 0);
    assert!(out.contains("h(2) = 3 "));
    let (code, out, _) = run(&["demo", "ex51"]);
    assert_eq!(code, 0);
    assert!(out.contains("Omega(0) = S'(0) S(0)^T = [[0, -1, 1], [1, 0, -1], [-1, 1, 0]]"));
    assert!(out.contains("= -1 * [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]"));
    assert_eq!(run(&["demo", "nope"]).0, 1);
}

#[test]
fn binary_matches_the_library_entry_point() {
    let exe = env!("CARGO_BIN_EXE_cyclic");
    let args = [
        "sweep",
        "--mode",
        "accel",
        "--order",
        "2",
        "--t0",
        "-1",
        "--t1",
        "1",
        "-n",
        "9",
        "@builtin:ex41",
    ];
    let output = Command::new(exe).args(args).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(String::from_utf8(output.stdout).unwrap(), run(&args).1);

    let status = Command::new(exe).args(["demo", "nope"]).status().unwrap();
    assert_eq!(status.code(), Some(1));
}
