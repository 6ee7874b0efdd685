use std::path::Path;
use std::process::{Command, Output};

use ringoid_cli::format::{parse_ringoid, render_json, render_text, Record};
use ringoid_core::catalog;

fn ringoid(args: &[&str]) -> Output {
    ringoid_env(args, &[])
}

fn ringoid_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ringoid"));
    cmd.args(args).env_remove("RINGOID_WORK_CEILING");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn records(text: &str) -> Vec<Record> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn check_order3_example() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "ex.txt", &render_text(&catalog::order3_examples()[2]));
    let o = ringoid(&[
        "check",
        &f,
        "--json",
        "--require",
        "congruence-simple",
        "--require",
        "k-ideal-simple",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["congruence_simple"], true);
    assert_eq!(v["k_ideal_simple"], true);
    assert_eq!(v["k_ideal_simple_fast"], true);
    assert_eq!(v["flags"]["plus_idempotent"], true);
}

#[test]
fn check_z4_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "z4.json", &render_json(&catalog::zn_ring(4)));
    let o = ringoid(&["check", &f, "--require", "congruence-simple"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness congruence: {0,2}/{1,3}"));
    let failures: serde_json::Value = serde_json::from_str(stderr(&o).trim()).unwrap();
    assert_eq!(failures["failures"][0], "congruence-simple: false");
}

#[test]
fn check_trivial_and_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "one.txt", "1\n0\n\n0\n");
    let o = ringoid(&["check", &f]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("order: 1"));

    let f = write(dir.path(), "bad.txt", "2\n0 1\n1 7\n\n0 0\n0 0\n");
    let o = ringoid(&["check", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3, column 3"), "{}", stderr(&o));

    let f = write(dir.path(), "nd.txt", "2\n0 1\n1 0\n\n1 1\n1 1\n");
    let o = ringoid(&["check", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("distributive: false"));
}

#[test]
fn enumerate_small_orders() {
    let o = ringoid(&["enumerate", "--order", "3", "--filter", "congruence-simple"]);
    assert!(o.status.success());
    let rs = records(&stdout(&o));
    assert_eq!(rs.len(), 5);
    for r in &rs {
        assert!(r.canonical);
        let ring = r.to_ringoid().unwrap();
        assert_eq!(parse_ringoid(&render_text(&ring)).unwrap(), ring);
        assert_eq!(parse_ringoid(&render_json(&ring)).unwrap(), ring);
    }
    let o = ringoid(&["enumerate", "--order", "2"]);
    assert_eq!(records(&stdout(&o)).len(), 2);
    assert!(stderr(&o).contains("general      2"));
}

#[test]
fn enumerate_outputs_are_stable_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for jobs in ["1", "8"] {
        for format in ["jsonl", "text"] {
            let p = dir.path().join(format!("out-{jobs}.{format}"));
            let o = ringoid(&[
                "enumerate",
                "--order",
                "4",
                "--filter",
                "all",
                "--jobs",
                jobs,
                "--format",
                format,
                "--out",
                p.to_str().unwrap(),
            ]);
            assert!(o.status.success(), "{}", stderr(&o));
            files.push(std::fs::read(&p).unwrap());
        }
    }
    assert_eq!(files[0], files[2]);
    assert_eq!(files[1], files[3]);
    let jsonl = String::from_utf8(files[0].clone()).unwrap();
    assert!(jsonl.starts_with("# ringoid "));
    assert_eq!(records(&jsonl).len(), 1116);
}

#[test]
fn enumerate_csv_and_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("run.ckpt");
    let ck = ck.to_str().unwrap();
    let base = [
        "enumerate",
        "--order",
        "4",
        "--count-only",
        "--format",
        "csv",
        "--checkpoint",
        ck,
    ];
    let first = ringoid(&base);
    assert!(first.status.success(), "{}", stderr(&first));
    let csv = stdout(&first);
    let rows: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "order,class,filter,count,seconds");
    assert!(rows[1].starts_with("4,general,congruence-simple,393,"));
    let mut again = base.to_vec();
    again.push("--resume");
    let second = ringoid(&again);
    assert!(second.status.success());
    assert!(stderr(&second).contains("resumed"));
    let data = |s: &str| -> Vec<String> {
        s.lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect()
    };
    assert_eq!(data(&csv), data(&stdout(&second)));

    let o = ringoid(&["enumerate", "--order", "3", "--checkpoint", ck]);
    assert_eq!(o.status.code(), Some(2));
    let o = ringoid(&[
        "enumerate",
        "--order",
        "3",
        "--count-only",
        "--checkpoint",
        ck,
        "--resume",
    ]);
    assert_eq!(o.status.code(), Some(2), "a checkpoint from another search is refused");
}

#[test]
fn work_ceiling_suggests_count_only() {
    let env = [("RINGOID_WORK_CEILING", "5")];
    let o = ringoid_env(&["enumerate", "--order", "4"], &env);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--count-only"));
    let o = ringoid_env(&["enumerate", "--order", "4", "--count-only"], &env);
    assert!(o.status.success());
    let o = ringoid_env(&["enumerate", "--order", "3"], &[("RINGOID_WORK_CEILING", "lots")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn prune_flag_keeps_counts() {
    let on = ringoid(&["enumerate", "--order", "4", "--count-only", "--prune", "on"]);
    let off = ringoid(&["enumerate", "--order", "4", "--count-only", "--prune", "off"]);
    let counts = |o: &Output| stdout(o).lines().take(4).collect::<Vec<_>>().join("\n");
    assert_eq!(counts(&on), counts(&off));
}

#[test]
fn reproduce_table_exit_codes() {
    let o = ringoid(&["reproduce-table", "--max-order", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS general n=3: 5"));
    let o = ringoid(&[
        "reproduce-table",
        "--max-order",
        "5",
        "--class",
        "associative",
        "--json",
    ]);
    assert!(o.status.success());
    let cells: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(cells.as_array().unwrap().len(), 5);
    let o = ringoid(&["reproduce-table", "--max-order", "7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn groupoid_scans_and_demo() {
    let o = ringoid(&["scan-groupoids", "--order", "3", "--full-aut"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("mismatches against the classification: 0"));
    let o = ringoid(&["scan-groupoids", "--order", "4", "--transitive"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("identities hold on 172 of 172"));
    let o = ringoid(&["scan-groupoids", "--order", "2", "--parasemifields", "--list"]);
    assert!(o.status.success());
    let o = ringoid(&["scan-groupoids", "--order", "2", "--semigroup-typo"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ringoid(&[
        "scan-groupoids",
        "--order",
        "3",
        "--commutative",
        "--idempotent",
        "--list",
    ]);
    assert!(o.status.success());

    let o = ringoid(&["demo-examples", "--window", "20"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("sampled, not a proof"));
    assert!(!out.contains("FAIL"));
}
