use std::f64::consts::FRAC_PI_2;
use std::io::Write;
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn fusedrot(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fusedrot"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn fusedrot");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let o = child.wait_with_output().unwrap();
    Run {
        code: o.status.code().unwrap_or(-1),
        out: String::from_utf8(o.stdout).unwrap(),
        err: String::from_utf8(o.stderr).unwrap(),
    }
}

fn numbers(line: &str) -> Vec<f64> {
    line.split_whitespace()
        .map(|v| v.parse().unwrap())
        .collect()
}

fn assert_close(got: &[f64], want: &[f64], tol: f64) {
    assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() <= tol, "{got:?} vs {want:?}");
    }
}

#[test]
fn fused_to_quat_example() {
    let r = fusedrot(
        &[
            "convert", "--from", "fused", "--to", "quat", "--value", "0,0,90,1", "--deg",
        ],
        "",
    );
    assert_eq!(r.code, 0, "{}", r.err);
    let h = 0.5_f64.sqrt();
    assert_close(&numbers(&r.out), &[h, h, 0.0, 0.0], 1e-15);
}

#[test]
fn identity_quat_to_fused() {
    let r = fusedrot(
        &[
            "convert", "--from", "quat", "--to", "fused", "--value", "1,0,0,0",
        ],
        "",
    );
    assert_eq!((r.code, r.out.as_str()), (0, "0 0 0 1\n"));
}

#[test]
fn sine_sum_violation_exits_3() {
    let r = fusedrot(
        &[
            "convert",
            "--from",
            "fused",
            "--to",
            "tilt",
            "--value",
            "0,60,60,1",
            "--deg",
        ],
        "",
    );
    assert_eq!(r.code, 3);
    assert!(r.err.contains("sine sum criterion violated"), "{}", r.err);
}

#[test]
fn parse_failures_exit_2() {
    for args in [
        &[
            "convert", "--from", "quat", "--to", "tilt", "--value", "1,0,0",
        ][..],
        &[
            "convert", "--from", "quat", "--to", "tilt", "--value", "1,a,0,0",
        ],
        &[
            "convert",
            "--from",
            "quat",
            "--to",
            "tilt",
            "--value",
            "1,nan,0,0",
        ],
        &[
            "convert",
            "--from",
            "fused",
            "--to",
            "tilt",
            "--value",
            "0,0,0,0.5",
        ],
        &[
            "convert", "--from", "spinor", "--to", "tilt", "--value", "1,0,0,0",
        ],
        &["random", "--repr", "bogus"],
        &["nonsense"],
    ] {
        assert_eq!(fusedrot(args, "").code, 2, "{args:?}");
    }
}

#[test]
fn domain_failures_exit_3() {
    for args in [
        &[
            "convert", "--from", "quat", "--to", "tilt", "--value", "1,1,0,0",
        ][..],
        &[
            "convert",
            "--from",
            "rotmat",
            "--to",
            "quat",
            "--value",
            "1,0,0,0,1,0,0,0,-1",
        ],
        &["loci", "--pitch", "100", "--deg"],
        &["loci", "--roll", "0", "--samples", "2"],
    ] {
        assert_eq!(fusedrot(args, "").code, 3, "{args:?}");
    }
}

#[test]
fn inverse_example() {
    let r = fusedrot(
        &[
            "inverse",
            "--repr",
            "fused",
            "--value",
            "90,0,90,1",
            "--deg",
        ],
        "",
    );
    assert_eq!(r.code, 0);
    assert_close(&numbers(&r.out), &[-90.0, -90.0, 0.0, 1.0], 1e-12);
}

#[test]
fn remove_yaw_singular() {
    let r = fusedrot(&["remove-yaw", "--value", "0,1,0,0"], "");
    assert_eq!(r.code, 3);
    assert!(r.err.contains("fused yaw singular (alpha = pi)"));
}

#[test]
fn metric_identity_to_z90() {
    let z90 = format!("{},0,0,{}", 0.5_f64.sqrt(), 0.5_f64.sqrt());
    let r = fusedrot(
        &[
            "metric", "--kind", "dR", "--value", "1,0,0,0", "--value", &z90,
        ],
        "",
    );
    assert_eq!(r.code, 0);
    assert_close(&numbers(&r.out), &[FRAC_PI_2], 1e-12);
    let r = fusedrot(
        &[
            "metric", "--kind", "dL", "--value", "1,0,0,0", "--value", &z90,
        ],
        "",
    );
    assert_close(&numbers(&r.out), &[1.0 - 0.5_f64.sqrt()], 1e-12);
}

#[test]
fn binary_ops_from_stdin() {
    let r = fusedrot(
        &["compose", "--repr", "euler", "--deg"],
        "30,0,0;15,0,0\n10,0,0;-10,0,0\n",
    );
    assert_eq!(r.code, 0, "{}", r.err);
    let lines: Vec<_> = r.out.lines().collect();
    assert_close(&numbers(lines[0]), &[45.0, 0.0, 0.0], 1e-12);
    assert_close(&numbers(lines[1]), &[0.0, 0.0, 0.0], 1e-12);
}

#[test]
fn slerp_midpoint_and_range() {
    let r = fusedrot(
        &[
            "slerp", "--t", "0.5", "--repr", "euler", "--deg", "--value", "0,0,0", "--value",
            "90,0,0",
        ],
        "",
    );
    assert_close(&numbers(&r.out), &[45.0, 0.0, 0.0], 1e-12);
    let r = fusedrot(
        &[
            "slerp", "--t", "1.5", "--value", "1,0,0,0", "--value", "1,0,0,0",
        ],
        "",
    );
    assert_eq!(r.code, 3);
}

#[test]
fn loci_rows_satisfy_locus_equations() {
    let r = fusedrot(&["loci", "--pitch", "50", "--deg", "--samples", "4"], "");
    let mut lines = r.out.lines();
    assert_eq!(lines.next(), Some("x,y,z"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 4);
    for row in &rows {
        assert!((row[0] + 50f64.to_radians().sin()).abs() < 1e-12);
        assert!((row.iter().map(|v| v * v).sum::<f64>() - 1.0).abs() < 1e-12);
    }
    let r = fusedrot(&["loci", "--roll", "0", "--samples", "7"], "");
    assert!(r
        .out
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(1) == Some("0")));
    let r = fusedrot(&["loci", "--hemi", "-1", "--samples", "9"], "");
    let zs: Vec<f64> = r
        .out
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(zs.len(), 9);
    assert!(zs.iter().all(|&z| z <= 0.0));
    assert!(!r.out.contains('\r'));
}

#[test]
fn random_is_deterministic_and_valid() {
    let a = fusedrot(
        &["random", "-n", "1000", "--seed", "42", "--repr", "fused"],
        "",
    );
    let b = fusedrot(
        &["random", "-n", "1000", "--seed", "42", "--repr", "fused"],
        "",
    );
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    for line in a.out.lines() {
        let v = numbers(line);
        assert!(v[1].sin().powi(2) + v[2].sin().powi(2) <= 1.0 + 1e-9);
        assert!(v[3] == 1.0 || v[3] == -1.0);
    }
    let q = fusedrot(&["random", "-n", "1", "--seed", "42", "--repr", "quat"], "");
    let v = numbers(q.out.trim());
    assert!((v.iter().map(|c| c * c).sum::<f64>() - 1.0).abs() < 1e-12);
}

#[test]
fn conversions_round_trip_through_cli() {
    let quats = fusedrot(&["random", "-n", "50", "--seed", "3"], "").out;
    for repr in ["rotmat", "tilt", "fused", "euler", "axisangle"] {
        let there = fusedrot(&["convert", "--from", "quat", "--to", repr], &quats);
        assert_eq!(there.code, 0, "{}", there.err);
        let back = fusedrot(&["convert", "--from", repr, "--to", "quat"], &there.out);
        assert_eq!(back.code, 0, "{repr}: {}", back.err);
        let pairs: String = quats
            .lines()
            .zip(back.out.lines())
            .map(|(a, b)| format!("{a};{b}\n"))
            .collect();
        let d = fusedrot(&["metric", "--kind", "dR"], &pairs);
        for line in d.out.lines() {
            assert!(line.parse::<f64>().unwrap() < 1e-9, "{repr}: {line}");
        }
    }
}

#[test]
fn json_round_trip_is_lossless() {
    let once = fusedrot(
        &[
            "random", "-n", "20", "--seed", "8", "--repr", "tilt", "--json",
        ],
        "",
    );
    let again = fusedrot(
        &["convert", "--from", "tilt", "--to", "tilt", "--json"],
        &once.out,
    );
    assert_eq!(again.code, 0, "{}", again.err);
    let parse = |s: &str| -> Vec<serde_json::Value> {
        s.lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect()
    };
    assert_eq!(parse(&once.out), parse(&again.out));
}

#[test]
fn demo_reports_yaw_invariance() {
    let r = fusedrot(&["demo-yaw-compare", "--seed", "5", "-n", "10"], "");
    assert_eq!(r.code, 0);
    let summary = r.out.lines().last().unwrap();
    let cols: Vec<&str> = summary.split_whitespace().collect();
    assert_eq!(cols[0], "max");
    assert!(cols[3].parse::<f64>().unwrap() < 1e-12);
    assert!(cols[4].parse::<f64>().unwrap() > 0.1);
}

#[test]
fn help_exits_zero() {
    let r = fusedrot(&["--help"], "");
    assert_eq!(r.code, 0);
    assert!(r.out.contains("convert"));
}
