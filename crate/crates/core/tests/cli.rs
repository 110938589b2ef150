use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn agile(args: &[&str]) -> Output {
    agile_env(args, None)
}

fn agile_env(args: &[&str], config: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_agile"));
    cmd.args(args).env_remove("AGILE_CONFIG");
    if let Some(path) = config {
        cmd.env("AGILE_CONFIG", path);
    }
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(v["schema_version"], 1);
    v
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("agile-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path).unwrap().write_all(contents.as_bytes()).unwrap();
    path
}

fn triple(v: &Value) -> [f64; 3] {
    [0, 1, 2].map(|i| v[i].as_f64().unwrap())
}

fn wrapped(a: f64, b: f64) -> f64 {
    agile_eye::so3::angle_diff(a, b).abs()
}

#[test]
fn ik_identity_gives_zero_pi_cube() {
    let v = json(&agile(&["ik", "--euler", "0", "0", "0"]));
    let sols = v["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 8);
    for s in sols {
        for x in triple(&s["joints"]) {
            assert!(x == 0.0 || x == std::f64::consts::PI, "{x}");
        }
    }
}

#[test]
fn ik_reference_orientation_contains_reference_joints() {
    let v = json(&agile(&["ik", "--euler", "0.100", "-0.672", "-0.383"]));
    let hit = v["solutions"].as_array().unwrap().iter().any(|s| {
        let j = triple(&s["joints"]);
        wrapped(j[0], -0.3) < 1e-3 && wrapped(j[1], -0.7) < 1e-3 && wrapped(j[2], 0.1) < 1e-3
    });
    assert!(hit);
}

#[test]
fn ik_trivial_matrix_has_arbitrary_legs() {
    let v = json(&agile(&["ik", "--matrix", "0", "-1", "0", "0", "0", "1", "-1", "0", "0"]));
    assert!(v["legs"].as_array().unwrap().iter().all(|l| l["arbitrary"] == true));
    assert_eq!(v["solutions"].as_array().unwrap().len(), 0);
    let filled = json(&agile(&["ik", "--fill-arbitrary", "--matrix", "0", "-1", "0", "0", "0", "1", "-1", "0", "0"]));
    assert_eq!(filled["solutions"].as_array().unwrap().len(), 1);
}

#[test]
fn dk_reference_values() {
    let v = json(&agile(&["dk", "--", "-0.3", "-0.7", "0.1"]));
    assert_eq!(v["branch"], "finite");
    let expected = [
        [0.100, -0.672, -0.383],
        [0.100, -0.672, 2.759],
        [0.100, 2.470, 0.383],
        [0.100, 2.470, 3.525],
    ];
    let sols = v["solutions"].as_array().unwrap();
    for (s, e) in sols.iter().zip(&expected) {
        let got = triple(&s["euler"]);
        for i in 0..3 {
            assert!(wrapped(got[i], e[i]) < 1e-3, "{got:?} vs {e:?}");
        }
    }
    assert_eq!(sols[0]["signature"], "+++");
    assert_eq!(v["trivial"].as_array().unwrap().len(), 4);
}

#[test]
fn dk_negative_numbers_without_separator() {
    let v = json(&agile(&["dk", "-0.3", "-0.7", "0.1"]));
    assert_eq!(v["branch"], "finite");
}

#[test]
fn dk_zero_gives_half_turns() {
    let out = agile(&["--format", "csv", "dk", "0", "0", "0"]);
    assert!(out.status.success());
    let pi = "3.1415926535897931";
    let want = format!(
        "assembly_mode,phi,theta,psi,signature\n1,0,0,0,+++\n2,0,0,{pi},--+\n3,0,{pi},0,+--\n4,0,{pi},{pi},-+-\n"
    );
    assert_eq!(String::from_utf8(out.stdout).unwrap(), want);
}

#[test]
fn dk_condition_pair_reports_self_motion() {
    let v = json(&agile(&["dk", "0.5", "0", "1.5707963"]));
    assert_eq!(v["branch"], "self_motion");
    assert_eq!(v["degeneracy"], "self_motion_1");
    let labels: Vec<&str> = v["self_motion"]["families"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["SM1a", "SM1b"]);
    let strict = json(&agile(&["--tol-structure", "1e-9", "dk", "0.5", "0", "1.5707963"]));
    assert_eq!(strict["branch"], "finite");
}

#[test]
fn classify_examples() {
    let v = json(&agile(&["classify", "--joints", "0", "0", "0", "--euler", "0", "0", "0"]));
    assert_eq!(v["class"], "regular");
    assert_eq!(v["det_a"], 1.0);
    let v = json(&agile(&[
        "classify", "--joints", "0", "0", "0", "--matrix", "0", "-1", "0", "0", "0", "1", "-1", "0", "0",
    ]));
    assert_eq!(v["class"], "lockup");
    assert_eq!(v["trivial_id"], 1);
    let v = json(&agile(&[
        "classify", "--joints", "0.5", "0", "1.5707963267948966", "--euler", "1.5707963267948966", "0.4", "0",
    ]));
    assert_eq!(v["class"], "self_motion");
    assert_eq!(v["family"]["label"], "SM1a");
}

#[test]
fn classify_not_assembled_exits_3() {
    let out = agile(&["classify", "--joints", "0.5", "0", "0", "--euler", "0", "0", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn jacobian_at_reference() {
    let v = json(&agile(&["jacobian", "--joints", "0", "0", "0", "--euler", "0", "0", "0"]));
    assert_eq!(triple(&v["b_diag"]), [1.0, 1.0, 1.0]);
    assert_eq!(v["det_a"], 1.0);
}

#[test]
fn self_motion_members_satisfy_family() {
    let v = json(&agile(&["self-motion", "SM2b", "--param", "0.3", "--param", "-1.2"]));
    assert_eq!(v["family"]["id"], 4);
    let members = v["members"].as_array().unwrap();
    assert_eq!(members.len(), 2);
    let e = triple(&members[0]["canonical_euler"]);
    assert!(e[0].abs() < 1e-12 && (e[2] + std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    assert_eq!(agile(&["self-motion", "9"]).status.code(), Some(2));
}

#[test]
fn parse_failures_exit_2() {
    assert_eq!(agile(&["dk", "1", "2"]).status.code(), Some(2));
    assert_eq!(agile(&["dk", "a", "b", "c"]).status.code(), Some(2));
    assert_eq!(agile(&["ik", "--matrix", "1", "1", "0", "0", "0", "1", "-1", "0", "0"]).status.code(), Some(2));
    assert_eq!(agile(&["--format", "xml", "dk", "0", "0", "0"]).status.code(), Some(2));
}

const REFERENCE_START: [&str; 4] = ["--euler", "0.1", "-0.67159649910841568", "-0.38315152750598358"];

fn track(path: &Path, extra: &[&str]) -> Output {
    let mut args = extra.to_vec();
    args.push("track");
    args.push(path.to_str().unwrap());
    args.extend(REFERENCE_START);
    agile(&args)
}

#[test]
fn track_constant_path() {
    let p = temp_file("const.csv", "theta1,theta2,theta3\n-0.3,-0.7,0.1\n-0.3,-0.7,0.1\n-0.3,-0.7,0.1\n");
    let out = track(&p, &[]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).map(|l| l.split_once(',').unwrap().1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| *r == rows[0]));
    assert_eq!(String::from_utf8(out.stderr).unwrap(), "mode_constant: true\n");
}

#[test]
fn track_loop_closes() {
    let p = temp_file(
        "loop.csv",
        "theta1,theta2,theta3\n-0.3,-0.7,0.1\n0.0,-0.5,0.3\n-0.1,-1.0,0.4\n-0.3,-0.7,0.1\n",
    );
    let v = json(&track(&p, &["--format", "json"]));
    assert_eq!(v["mode_constant"], true);
    let steps = v["steps"].as_array().unwrap();
    let (a, b) = (triple(&steps[0]["euler"]), triple(&steps[3]["euler"]));
    for i in 0..3 {
        assert!(wrapped(a[i], b[i]) < 1e-8);
    }
}

#[test]
fn track_crossing_and_start_errors() {
    let p = temp_file("cross.csv", "theta1,theta2,theta3\n-0.3,-0.7,0.1\n0.3,-0.7,0.1\n1.5,-0.7,0.1\n");
    let out = track(&p, &[]);
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8(out.stderr).unwrap().contains("step 2"));

    let v: Value = serde_json::from_slice(&track(&p, &["--format", "json"]).stdout).unwrap();
    assert_eq!(v["crossing"]["step"], 2);

    let out = agile(&["track", p.to_str().unwrap(), "--euler", "0", "0", "0"]);
    assert_eq!(out.status.code(), Some(4));

    let bad = temp_file("bad.csv", "a,b,c\n0,0,0\n");
    assert_eq!(track(&bad, &[]).status.code(), Some(2));
}

#[test]
fn track_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_agile"))
        .args(["track", "-"])
        .args(REFERENCE_START)
        .env_remove("AGILE_CONFIG")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"theta1,theta2,theta3\n-0.3,-0.7,0.1\n").unwrap();
    assert!(child.wait_with_output().unwrap().status.success());
}

#[test]
fn sweep_grid_8_matches_closed_form() {
    let out = agile(&["sweep", "--grid-n", "8"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theta1,theta2,theta3,det_a,degeneracy,component_id"));
    let mut count = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let t: Vec<f64> = f[..4].iter().map(|x| x.parse().unwrap()).collect();
        let q2 = t[0].sin() * t[1].sin() * t[2].sin() + t[0].cos() * t[1].cos() * t[2].cos();
        assert!((t[3] - q2).abs() < 1e-15);
        let id: i64 = f[5].parse().unwrap();
        assert!(id >= -1);
        count += 1;
    }
    assert_eq!(count, 512);
    assert_eq!(agile(&["sweep", "--grid-n", "4"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["sweep", "--grid-n", "12"],
        vec!["dk", "--", "-0.3", "-0.7", "0.1"],
        vec!["ik", "--euler", "0.2", "0.4", "-1.0"],
    ] {
        assert_eq!(agile(&args).stdout, agile(&args).stdout);
    }
}

#[test]
fn config_file_and_flag_precedence() {
    let cfg = temp_file("agile.cfg", "# test config\ngrid_n = 10\noutput_format = json\n");
    let cfg = cfg.to_str().unwrap();
    let v = json(&agile_env(&["sweep", "--summary-only"], Some(cfg)));
    assert_eq!(v["summary"]["grid_n"], 10);
    let out = agile_env(&["--format", "csv", "sweep", "--grid-n", "8"], Some(cfg));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("theta1,"));

    let bad = temp_file("bad.cfg", "grid_n = 3\n");
    assert_eq!(agile_env(&["dk", "0", "0", "0"], Some(bad.to_str().unwrap())).status.code(), Some(2));
}

#[test]
fn degrees_convert_at_the_boundary() {
    let v = json(&agile(&["--degrees", "dk", "0", "0", "90"]));
    assert_eq!(v["branch"], "self_motion");
    let j = triple(&v["joints"]);
    assert!((j[2] - 90.0).abs() < 1e-12);
    let v = json(&agile(&["--degrees", "dk", "--", "-17.188733853924695", "-40.107045659157627", "5.7295779513082321"]));
    let e = triple(&v["solutions"][0]["euler"]);
    assert!((e[1] - (-0.672f64).to_degrees()).abs() < 0.06);
    let v = json(&agile(&["--degrees", "ik", "--euler", "0", "0", "0"]));
    let all: Vec<f64> = v["solutions"].as_array().unwrap().iter().flat_map(|s| triple(&s["joints"])).collect();
    assert!(all.iter().all(|&x| x == 0.0 || x == 180.0));
}
