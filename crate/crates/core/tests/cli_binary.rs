use std::process::{Command, Output};

fn parton(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parton")).args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("parton-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn passing_suite_exits_zero() {
    let out = parton(&["verify", "wavelets", "--primes", "2,3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("name,params,residual,tolerance,status"));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",pass")));
}

#[test]
fn failing_check_exits_one() {
    let desc = tmp("sparse.stream");
    std::fs::write(&desc, "kind = custom\nweight = 12\nseeds = 2:-24\n").unwrap();
    let out = parton(&["verify", "hecke", "--primes", "3", "--stream", desc.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains(",fail"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(parton(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(parton(&["verify", "wavelets", "--primes", "4"]).status.code(), Some(2));
    assert_eq!(parton(&["emit-table", "pie"]).status.code(), Some(2));
    assert_eq!(parton(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["verify", "mellin", "--primes", "3", "--format", "json"];
    let a = parton(&args);
    let b = parton(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v["rows"].as_array().is_some_and(|r| !r.is_empty()));

    let t1 = parton(&["emit-table", "convolution", "--n-max", "200"]);
    let t2 = parton(&["emit-table", "convolution", "--n-max", "200"]);
    assert_eq!(t1.stdout, t2.stdout);
}

#[test]
fn empty_table_is_header_only() {
    let out = parton(&["emit-table", "tau", "--n-max", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1);
}

#[test]
fn config_file_and_out_flag() {
    let cfg = tmp("run.conf");
    let out_path = tmp("decompose.json");
    std::fs::write(&cfg, "primes = 2\ntruncation = 4\n").unwrap();
    let out = parton(&[
        "parton",
        "decompose",
        "--config",
        cfg.to_str().unwrap(),
        "--truncation",
        "3",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["p"], 2);
    assert_eq!(v["M"], 3);
    assert_eq!(v["coeffs"][1]["re"], -24.0);
}
