use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_takiff-rep")).args(args).output().expect("binary runs")
}

fn run_threads(args: &[&str], threads: usize) -> Output {
    Command::new(env!("CARGO_BIN_EXE_takiff-rep"))
        .args(args)
        .env("RAYON_NUM_THREADS", threads.to_string())
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn payload(out: &Output) -> Value {
    let mut v = json(out);
    v.as_object_mut().unwrap().remove("timing");
    v
}

fn csv_rows(out: &Output) -> Vec<csv::StringRecord> {
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    let header = r.headers().unwrap().clone();
    let mut rows = vec![header];
    rows.extend(r.records().map(Result::unwrap));
    rows
}

#[test]
fn verify_free_grid() {
    let out = run(&["verify-free", "-s", "family=gamma", "-s", "lambda=1,2", "-s", "a=0", "-s", "b=0,1", "--trials", "20"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["schema"], "1");
    assert_eq!(doc["aggregate"], "pass");
    assert_eq!(doc["config"]["seed"], 0);
    let cases = doc["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 4);
    assert_eq!(cases[1]["params"]["lambda"], "1/1");
    assert_eq!(cases[1]["params"]["b"], "1/1");
    assert_eq!(cases[0]["result"]["pairs"].as_array().unwrap().len(), 15);
    assert_eq!(cases[0]["result"]["trials"], 20);
}

#[test]
fn scan_flags_the_predicted_strata() {
    let out = run(&[
        "scan", "-s", "family=M", "-s", "alpha=0,1/2", "-s", "beta=0,1,2,1/2", "-s", "a=0,-1,-4,1", "-s", "b=0,-1,2,1/3",
        "--window=-8:8:2", "--format", "csv",
    ]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    let col = |name: &str| rows[0].iter().position(|h| h == name).unwrap();
    let (ia, ib, ic, id, simple) = (col("alpha"), col("beta"), col("a"), col("b"), col("simple"));
    let num = |s: &str| {
        let (n, d) = s.split_once('/').unwrap();
        n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap()
    };
    assert_eq!(rows.len() - 1, 2 * 4 * 4 * 4);
    let mut reducible = 0;
    for r in &rows[1..] {
        let (al, be, a, b) = (num(&r[ia]), num(&r[ib]), num(&r[ic]), num(&r[id]));
        // reducible iff beta^2 + a = 0 and (alpha + 2n) beta + b = 0 for an integer n
        let expected = if be * be + a != 0.0 {
            true
        } else if be == 0.0 {
            b != 0.0
        } else {
            let n = (-b / be - al) / 2.0;
            n.fract() != 0.0
        };
        assert_eq!(&r[simple] == "true", expected, "{r:?}");
        reducible += usize::from(!expected);
    }
    assert!(reducible > 0);
}

#[test]
fn twist_values() {
    let out = run(&["twist-check", "-s", "z=1,-2,1/2", "-s", "beta=1", "--window=-4:4:4"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["cases"].as_array().unwrap().len(), 3);
    for c in doc["cases"].as_array().unwrap() {
        assert_eq!(c["result"]["intertwines"], true);
        assert_eq!(c["result"]["rank"], 36);
        assert!(c["result"]["failing_probe"].is_null());
    }
}

#[test]
fn deterministic_across_runs_and_threads() {
    let args = ["verify-weight", "-s", "family=M,V", "-s", "alpha=0,1/3", "-s", "beta1=0,1;1/2", "--window=-3:3:3", "--trials", "10", "--seed", "42"];
    let a = run_threads(&args, 1);
    let b = run_threads(&args, 4);
    let c = run_threads(&args, 4);
    assert!(a.status.success());
    assert_eq!(payload(&a), payload(&b));
    assert_eq!(serde_json::to_string(&payload(&b)).unwrap(), serde_json::to_string(&payload(&c)).unwrap());
    assert_eq!(json(&a)["config"]["seed"], 42);
}

#[test]
fn csv_and_json_agree() {
    let args = ["intertwine", "-s", "to_alpha=0,1,2,4", "--window=-2:2:3"];
    let j = json(&run(&args));
    let mut csv_args = args.to_vec();
    csv_args.extend(["--format", "csv"]);
    let rows = csv_rows(&run(&csv_args));
    let cases = j["cases"].as_array().unwrap();
    assert_eq!(rows.len() - 1, cases.len());
    let header: Vec<&str> = rows[0].iter().collect();
    for (c, r) in cases.iter().zip(&rows[1..]) {
        for (k, v) in c["params"].as_object().unwrap() {
            let i = header.iter().position(|h| h == k).unwrap();
            assert_eq!(&r[i], v.as_str().unwrap());
        }
        let i = header.iter().position(|h| *h == "pass").unwrap();
        assert_eq!(&r[i], c["pass"].to_string());
        let i = header.iter().position(|h| *h == "dimension").unwrap();
        assert_eq!(&r[i], c["result"]["dimension"].to_string());
    }
    let dims: Vec<u64> = cases.iter().map(|c| c["result"]["dimension"].as_u64().unwrap()).collect();
    assert_eq!(dims, [1, 0, 1, 1]);
}

#[test]
fn config_file_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    let out = dir.path().join("report.csv");
    std::fs::write(&cfg, "# V to M\nkind = vm\nbeta = 3\na = 1\nbeta1 = 1,1\nwindow = -3:3:3\nformat = csv\n").unwrap();
    let o = run(&["iso-check", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("case,kind,family,alpha,beta,lambda,a,beta1,pass"));
    assert!(text.contains("-6/1,-6/1,true"), "{text}");
}

#[test]
fn failing_case_sets_exit_status() {
    let out = run(&["intertwine", "-s", "expect_dim=2", "--window=-1:1:2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["aggregate"], "fail");
    let out = run(&["verify-weight", "-s", "lambda=0", "--window=-1:1:1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["cases"][0]["result"]["error"].is_string());
}

#[test]
fn usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "alpha = 0\nthis line is wrong\n").unwrap();
    let out = run(&["scan", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = run(&["scann"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("verify-free"));

    let out = run(&["nf", "e*f", "--out", dir.path().join("missing/x.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nf_word() {
    let out = run(&["nf", "eb^-1*f*eb", "--format", "csv"]);
    assert!(out.status.success());
    let rows = csv_rows(&out);
    let i = rows[0].iter().position(|h| h == "normal_form").unwrap();
    assert_eq!(&rows[1][i], "-1*eb^-1*fb^0*f^0*hb^1*h^0*e^0 + 1*eb^0*fb^0*f^1*hb^0*h^0*e^0");
}

#[test]
fn verma_and_quotient_suites() {
    let out = run(&["verma-check", "-s", "beta=1", "-s", "a=-1", "-s", "b=-2"]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["cases"][0]["result"]["dims"], serde_json::json!([1, 2, 3, 4, 5]));
    let out = run(&["omega-quotient", "-s", "lambda=2", "-s", "beta1=1,2", "-s", "layer=0,1,3"]);
    assert!(out.status.success());
    let out = run(&["saturate", "-s", "b=0,1", "-s", "beta1=0,1", "-s", "cap=6:6"]);
    assert!(out.status.success());
}

#[test]
fn empty_grid_entry_is_rejected() {
    let out = run(&["scan", "-s", "alpha="]);
    assert_eq!(out.status.code(), Some(2));
}
