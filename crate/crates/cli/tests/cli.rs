use std::process::{Command, Output};

use diskcp::recursion::LTable;
use diskcp::trigring::TrigPoly;

fn diskcp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diskcp"))
        .args(args)
        .env_remove("DISKCP_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn disk_probability_prints_exact_and_decimal() {
    let o = diskcp(&["pdisk", "--n", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines, ["1 - 35/(12*pi^2)", "0.7044798810"]);
    let o = diskcp(&["pdisk", "--n", "2"]);
    assert_eq!(stdout(&o).lines().next(), Some("1"));
}

#[test]
fn json_output_round_trips() {
    let o = diskcp(&["ln", "--n", "3", "--format", "json"]);
    assert!(o.status.success());
    let back = TrigPoly::from_json(stdout(&o).trim()).unwrap();
    assert_eq!(back, *LTable::shared().get(3).unwrap());
}

#[test]
fn segment_values() {
    let o = diskcp(&["bseg", "--n", "2", "--theta", "pi"]);
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - (1.0 - 16.0 / (3.0 * std::f64::consts::PI.powi(2)))).abs() < 1e-11);
    let o = diskcp(&["bseg", "--n", "3", "--m", "1", "--theta", "4.0"]);
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 0.23363).abs() < 1e-5);
    let o = diskcp(&["pdisk-nm", "--n", "4", "--m", "3"]);
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 35.0 / (12.0 * std::f64::consts::PI.powi(2))).abs() < 1e-10);
}

#[test]
fn errors_are_reported() {
    let o = diskcp(&["pdisk", "--n", "1"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("DomainError"));
    let o = diskcp(&["bseg", "--n", "2", "--theta", "7"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("DomainError"));
    let o = diskcp(&["mc", "--event", "CUBE_CP(3)"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("ParseError"));
    assert!(!diskcp(&["pdisk"]).status.success());
    assert!(!diskcp(&["frobnicate"]).status.success());
}

#[test]
fn simulation_is_seeded() {
    let args = ["mc", "--event", "disk-cp(5)", "--trials", "20000", "--seed", "9"];
    let a = stdout(&diskcp(&args));
    assert_eq!(a, stdout(&diskcp(&args)));
    assert!(a.starts_with("DISK_CP(5): "), "{a}");
    let env_seeded = |seed: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_diskcp"))
            .args(["mc", "--event", "DISK_CP(5)", "--trials", "20000"])
            .env("DISKCP_SEED", seed)
            .output()
            .unwrap();
        stdout(&o)
    };
    assert_eq!(env_seeded("9"), a);
}

#[test]
fn verify_passes_and_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("diskcp-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("report.csv");
    let json = dir.join("report.json");
    let args = |out: &std::path::Path| {
        vec!["verify".to_string(), "--max-n".into(), "5".into(), "--trials".into(), "200000".into(), "--out".into(), out.display().to_string()]
    };
    let run = |out: &std::path::Path| {
        let a = args(out);
        diskcp(&a.iter().map(String::as_str).collect::<Vec<_>>())
    };
    let a = run(&csv);
    assert!(a.status.success(), "{}", stdout(&a));
    let b = run(&json);
    assert_eq!(stdout(&a), stdout(&b));

    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().next(), Some("label,exact,numeric,mc_mean,mc_stderr,paper,status"));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",PASS")));
    let rows: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), text.lines().count() - 1);
    std::fs::remove_dir_all(&dir).ok();
}
