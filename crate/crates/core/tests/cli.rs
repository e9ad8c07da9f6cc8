use std::process::{Command, Output};

fn vwbm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vwbm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn info_json_golden_fields() {
    let o = vwbm(&["info", "2", "7", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "vwbm-report/1");
    assert_eq!(v["params"], serde_json::json!({"n": 2, "m": 7, "N": 28, "gamma": 1, "l": 14}));
    assert_eq!(v["genus"], 3);
    assert_eq!(v["spectrum"], serde_json::json!(["1/5", "3/5", "1"]));
    assert_eq!(v["uniformizer"], "Delta(2,7,∞)");
    assert_eq!(v["trace"]["deg_F"], 3);
    assert_eq!(v["algebraically_primitive"], true);
    let tiling: Vec<bool> = v["summands"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["tiling"].as_bool().unwrap())
        .collect();
    assert_eq!(tiling.iter().filter(|&&t| t).count(), 1);
}

#[test]
fn invalid_input_exit_code() {
    let o = vwbm(&["info", "1", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("n, m must exceed 1 and nm ≥ 6"));
    assert_eq!(vwbm(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(vwbm(&["info", "2", "7", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(vwbm(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_12_green() {
    let o = vwbm(&["verify", "12", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.matches("| PASS |").count(), 7, "{out}");
    assert!(stderr(&o).is_empty());
}

#[test]
fn verify_catches_shifted_sigma4() {
    let o = vwbm(&["verify", "8", "--inject-fault", "sigma4-shift", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.lines().all(|l| l.starts_with("FAIL [lifts] (")), "{err}");
    assert!(err.contains("commutation with σ̃₂ at square"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], false);
}

#[test]
fn verify_trace_only_runs_one_suite() {
    let o = vwbm(&["verify", "20", "--level", "trace-only", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "suite,checked,passed,first_failure\ntrace,360,true,\n");
}

#[test]
fn table_formats() {
    let md = stdout(&vwbm(&["table", "3", "6", "--format", "md"]));
    assert!(md.contains("### T(3,6)"));
    assert!(md.contains("| **(0, 1/6, 1/3)** | **1** |"));
    let csv = stdout(&vwbm(&["table", "3", "6", "--format", "csv"]));
    let rows = vwbm::render::parse_tables_csv(&csv).unwrap();
    let genus_sum: u64 = vwbm::CurveParams::grid(3, 6).iter().map(vwbm::invariants::genus).sum();
    assert_eq!(rows.len() as u64, genus_sum);
    let o = vwbm(&["table", "2", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no valid (n, m)"));
}

#[test]
fn byte_deterministic() {
    for args in [&["table", "8", "8", "--format", "csv"][..], &["info", "8", "8"], &["surface", "4", "4"]] {
        assert_eq!(vwbm(args).stdout, vwbm(args).stdout);
    }
}

#[test]
fn thread_cap_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_vwbm"))
            .args(["table", "9", "9", "--format", "csv"])
            .env("VWBM_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}
