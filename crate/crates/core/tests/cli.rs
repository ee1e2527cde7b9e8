use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schroder"))
        .args(args)
        .env("SCHRODER_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn enumerate_strip_csv_has_figure_entry() {
    let out = run(&["enumerate", "strip", "--f", "2", "--k", "5", "--lmax", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("family,m,n,s_or_k,d,A,l,count\n"));
    assert!(text.lines().any(|l| l.starts_with("strip,1,2,5,2,10,2,")));
}

#[test]
fn enumerate_slope_json() {
    let out = run(&[
        "enumerate",
        "slope",
        "--m",
        "2",
        "--n",
        "3",
        "--s",
        "0",
        "--lmax",
        "3",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["table"]["family"]["kind"], "slope");
    assert_eq!(v["table"]["area_unit"], "1/12");
}

#[test]
fn invalid_slope_is_usage_error() {
    let out = run(&[
        "enumerate",
        "slope",
        "--m",
        "2",
        "--n",
        "2",
        "--s",
        "0",
        "--lmax",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        run(&["solve", "nothing", "--lmax", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "all"]).status.code(), Some(2));
}

#[test]
fn solve_slope_totals() {
    let out = run(&[
        "solve", "slope", "--m", "1", "--n", "1", "--lmax", "4", "--s", "0",
    ]);
    let v = stdout_json(&out);
    let totals: Vec<i64> = v[0]["series"]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            c["terms"]
                .as_array()
                .unwrap()
                .iter()
                .map(|t| t["c"].as_str().unwrap().parse::<i64>().unwrap())
                .sum()
        })
        .collect();
    assert_eq!(totals, vec![1, 2, 6, 22, 90]);
}

#[test]
fn solve_h_and_yinf() {
    let h = run(&["solve", "h", "--f", "1", "--lmax", "3", "--qorder", "24"]);
    assert!(h.status.success());
    let v = stdout_json(&h);
    assert!(v["series"]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["terms"]
            .as_array()
            .unwrap()
            .iter()
            .all(|t| !t["c"].as_str().unwrap().starts_with('-'))));
    assert!(
        run(&["solve", "yinf", "--f", "2", "--lmax", "3", "--qorder", "24"])
            .status
            .success()
    );
}

#[test]
fn knot_outputs() {
    let h = stdout_json(&run(&[
        "knot",
        "homfly",
        "--m",
        "1",
        "--n",
        "3",
        "--partition",
        "2",
    ]));
    assert_eq!(h["value"]["grid"], 2);
    let p = stdout_json(&run(&[
        "knot",
        "superpoly",
        "--f",
        "2",
        "--rmax",
        "5",
        "--qorder",
        "32",
    ]));
    assert_eq!(p["series"]["coeffs"][0]["terms"][0]["c"], "1");
    let w = stdout_json(&run(&[
        "knot", "wave", "--m", "2", "--n", "3", "--kmax", "3",
    ]));
    assert_eq!(w["coefficients"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = run(&[
        "verify", "prop13", "--f", "2", "--xorder", "5", "--qorder", "40",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let r = &v[0];
    assert_eq!(r["check"], "prop13");
    assert_eq!(r["status"], "pass");
    assert!(r["discrepancy"].is_null());
    assert_eq!(r["params"]["lmax"], 4);
    assert_eq!(r["params"]["qorder"], 40);
    assert!(r["ms"].is_number());

    let bad = run(&["verify", "oracle", "--m", "4", "--n", "2", "--lmax", "1"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(stdout_json(&bad)[0]["status"], "fail");
}

#[test]
fn desk_profile_is_reproducible() {
    let strip = |out: Output| -> Vec<Value> {
        assert!(out.status.success());
        let mut v = stdout_json(&out);
        v.as_array_mut()
            .unwrap()
            .iter_mut()
            .map(|r| {
                r.as_object_mut().unwrap().remove("ms");
                r.clone()
            })
            .collect()
    };
    let a = strip(run(&["verify", "all", "--profile", "desk"]));
    let b = strip(run(&["verify", "all", "--profile", "desk"]));
    assert_eq!(a, b);
    assert!(a.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pbar.json");
    let out = run(&[
        "verify",
        "pbar",
        "--f",
        "1",
        "--rmax",
        "5",
        "--qorder",
        "40",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}
