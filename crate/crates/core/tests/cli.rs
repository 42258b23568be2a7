//! End-to-end tests of the `angle-space` binary: flag handling, output
//! schemas, exit codes, determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_angle-space"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

#[test]
fn angle_l1_diagonal() {
    let out = run(&["angle", "--weight", "lp:1", "--x", "1,0", "--y", "1,1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["weight"], "lp:1");
    assert_eq!(v["csb_ok"], true);
    let rad = v["angle_rad"].as_f64().unwrap();
    let deg = v["angle_deg"].as_f64().unwrap();
    assert!((rad - 0.722734).abs() < 1e-6);
    assert_eq!((deg * 100.0).round() / 100.0, 41.41);
}

#[test]
fn angle_csb_violation_exits_2() {
    let out = run(&["angle", "--weight", "polygon:0.5", "--x", "0.1,0.55", "--y", "-0.1,0.55"]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["csb_ok"], false);
    assert!(v["angle_rad"].is_null());
    assert!((v["product"].as_f64().unwrap() - 1.2).abs() < 1e-6);
}

#[test]
fn angle_generalized_square_gauge() {
    let out = run(&[
        "angle", "--weight", "polygon:0.5", "--generalized", "--x", "1,0", "--y", "0,1",
        "--precision", "17",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let rad = v["angle_rad"].as_f64().unwrap();
    assert_eq!(rad, std::f64::consts::FRAC_PI_2);
}

#[test]
fn theta_curve_l2_matches_closed_form() {
    let out = run(&[
        "theta-curve", "--weight", "lp:2", "--x", "1,0", "--y", "0,1", "--precision", "17",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,theta_rad"));
    let mut rows = 0;
    for line in lines {
        let (t, theta) = line.split_once(',').unwrap();
        let t: f64 = t.parse().unwrap();
        let theta: f64 = theta.parse().unwrap();
        let oracle = (t / (1.0 + t * t).sqrt()).acos();
        assert!((theta - oracle).abs() < 1e-10, "t = {t}: {theta} vs {oracle}");
        rows += 1;
    }
    assert_eq!(rows, 321);
}

#[test]
fn theta_curve_axis_warns_and_shows_jump() {
    let out = run(&[
        "theta-curve", "--weight", "axis", "--x", "1,0", "--y", "1,1", "--t-min", "-3",
        "--t-max", "1", "--steps", "41", "--precision", "17",
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("warning"), "expected a monotonicity warning, got: {stderr}");
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines().skip(1) {
        let (t, theta) = line.split_once(',').unwrap();
        let t: f64 = t.parse().unwrap();
        if let Ok(theta) = theta.parse::<f64>() {
            if t < -1.0 {
                assert_eq!(theta, std::f64::consts::PI, "t = {t}");
            } else if t > -1.0 {
                assert_eq!(theta, 0.0, "t = {t}");
            }
        }
    }
}

#[test]
fn axioms_report_l1() {
    let out = run(&["axioms", "--weight", "lp:1", "--n", "800", "--seed", "5"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["weight"], "lp:1");
    assert_eq!(v["seed"], 5);
    let entries = v["axioms"].as_array().unwrap();
    assert_eq!(entries.len(), 11);
    for e in entries {
        let id = e["id"].as_str().unwrap();
        let status = e["status"].as_str().unwrap();
        match id {
            "An8" | "An9" | "An10" => {
                assert_eq!(status, "fail", "{id}");
                assert!(e["witness"].is_object(), "{id} must carry a witness");
            }
            _ => assert_eq!(status, "pass", "{id}"),
        }
    }
}

#[test]
fn axioms_runs_are_deterministic() {
    let args = ["axioms", "--weight", "polygon:0.5", "--n", "300", "--seed", "9"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sphere_hexagon_vertices() {
    let out = run(&["sphere", "--weight", "polygon:0.5", "--n", "6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut got: Vec<(f64, f64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let (a, b) = l.split_once(',').unwrap();
            (a.parse().unwrap(), b.parse().unwrap())
        })
        .collect();
    got.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut want = vec![
        (0.0, 0.5),
        (1.0, 1.0),
        (1.0, -1.0),
        (0.0, -0.5),
        (-1.0, -1.0),
        (-1.0, 1.0),
    ];
    want.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert_eq!(got, want);
}

#[test]
fn polar_encode_decode_l1() {
    let out = run(&["polar", "encode", "--weight", "lp:1", "--v", "1,1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["rho"].as_f64().unwrap(), 2.0);
    assert!((v["alpha"].as_f64().unwrap() - 0.722734).abs() < 1e-6);

    let out = run(&[
        "polar", "decode", "--weight", "lp:1", "--rho", "2", "--alpha", "0.7227342913365787",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!((v["x1"].as_f64().unwrap() - 1.0).abs() < 1e-6);
    assert!((v["x2"].as_f64().unwrap() - 1.0).abs() < 1e-6);
}

#[test]
fn convexify_emits_square() {
    let out = run(&["convexify", "--weight", "polygon:0.5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    for row in rows {
        let (a, b) = row.split_once(',').unwrap();
        assert_eq!(a.parse::<f64>().unwrap().abs(), 1.0);
        assert_eq!(b.parse::<f64>().unwrap().abs(), 1.0);
    }
}

#[test]
fn corner_spec_check_has_witness_and_exit_2() {
    let out = run(&[
        "corner", "--weight", "polygon:0.5", "--y-hat", "0,0.5", "--x-bar", "1,0", "--eps",
        "1", "--m-minus", "-1", "--m-plus", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    let corner = &v["corners"][0];
    assert_eq!(corner["verified"], true);
    assert!((corner["witness"]["product"].as_f64().unwrap() - 1.2).abs() < 1e-6);
}

#[test]
fn corner_detect_polygon() {
    let out = run(&["corner", "--weight", "polygon:0.5", "--detect"]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["corners"].as_array().unwrap().len(), 2);
}

#[test]
fn corner_detect_norm_finds_none() {
    let out = run(&["corner", "--weight", "lp:1", "--detect"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["corners"].as_array().unwrap().len(), 0);
}

#[test]
fn csb_scan_exit_codes() {
    let out = run(&["csb-scan", "--weight", "lp:2", "--n", "500"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);

    let out = run(&["csb-scan", "--weight", "polygon:0.5", "--n", "500"]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert!(!v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn prove_lemmas_hidden_subcommand() {
    let out = run(&["prove-lemmas", "--n", "1000"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true, "{v}");

    // Hidden from help.
    let help = run(&["--help"]);
    let text = String::from_utf8(help.stdout).unwrap();
    assert!(!text.contains("prove-lemmas"));
}

#[test]
fn sphere_file_weight_roundtrip() {
    let dir = std::env::temp_dir().join("angle_space_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("diamond.csv");
    std::fs::write(&path, "x1,x2\n1,0\n0,1\n").unwrap();
    let spec = format!("sphere-file:{}", path.display());
    let out = run(&["angle", "--weight", &spec, "--x", "1,0", "--y", "1,1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    // The diamond is the ℓ¹ ball.
    assert!((v["angle_rad"].as_f64().unwrap() - 0.722734).abs() < 1e-6);
}

#[test]
fn usage_errors_exit_1() {
    let out = run(&["angle", "--weight", "nope:3", "--x", "1,0", "--y", "0,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    let out = run(&["angle", "--weight", "lp:1", "--x", "1,0"]); // missing --y
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("angle_space_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("angle.json");
    let out = run(&[
        "angle", "--weight", "lp:1", "--x", "1,0", "--y", "0,1", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!((v["angle_rad"].as_f64().unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-4);
}

#[test]
fn seed_env_fallback() {
    let out = Command::new(env!("CARGO_BIN_EXE_angle-space"))
        .args(["axioms", "--weight", "lp:2", "--n", "100"])
        .env("ANGLE_SPACE_SEED", "123")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["seed"], 123);
}
