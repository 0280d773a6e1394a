use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_meshdist"))
        .args(args)
        .env_remove("MESHDIST_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn dist_rows() {
    assert_eq!(
        stdout(&["dist", "--nr", "8", "--n", "4", "--source", "formula"]),
        "6 11 6 1\n"
    );
    assert_eq!(
        stdout(&["dist", "--nr", "10", "--n", "3", "--source", "oracle"]),
        "3 3\n"
    );
    assert_eq!(
        stdout(&[
            "dist",
            "--pattern",
            "tau=12;R=",
            "--n",
            "3",
            "--source",
            "oracle"
        ]),
        "1 2 2 1\n"
    );
    assert_eq!(
        stdout(&["dist", "--pattern", "sfp", "--n-max", "2"]),
        "1\n0 1\n1 0 1\n"
    );
}

#[test]
fn dist_json_round_trips_and_marks_conjectures() {
    let text = stdout(&[
        "dist", "--nr", "3", "--n-max", "5", "--source", "formula", "--format", "json",
    ]);
    let t = meshdist::DistributionTable::from_json(text.trim()).unwrap();
    assert!(t.conjectural && text.contains("\"conjectural\":true"));
    assert_eq!(t.pattern, "nr=3");
    let oracle = stdout(&["dist", "--nr", "3", "--n-max", "5", "--format", "json"]);
    assert!(!oracle.contains("conjectural"));
}

#[test]
fn output_does_not_depend_on_shards() {
    let a = stdout(&["dist", "--nr", "45", "--n-max", "7", "--format", "json"]);
    let b = stdout(&[
        "dist", "--nr", "45", "--n-max", "7", "--format", "json", "--shards", "3",
    ]);
    assert_eq!(a, b);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["dist", "--nr", "2", "--n", "3"][..],
        &["dist", "--nr", "1", "--n", "10"],
        &["dist", "--nr", "23", "--n", "3", "--source", "formula"],
        &["dist", "--pattern", "tau=13;R=", "--n", "3"],
        &["dist", "--nr", "1"],
        &["series", "--theorem", "T3.1", "--order", "17"],
        &["verify", "--theorem", "C6.1"],
        &["bijection", "--perm", "21"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let msg = String::from_utf8(run(&["bijection", "--perm", "21"]).stderr).unwrap();
    assert!(msg.contains("--map f"), "{msg}");
}

#[test]
fn unsafe_n_max_raises_the_ceiling() {
    let out = stdout(&[
        "dist",
        "--nr",
        "64",
        "--n",
        "10",
        "--unsafe-n-max",
        "--shards",
        "2",
    ]);
    let total: u64 = out
        .split_whitespace()
        .map(|v| v.parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 3_628_800);
}

#[test]
fn bijection_examples() {
    let pi = "(15)(17)(16)9(10)6(12)8(13)(11)(14)745321";
    let sigma = "(17)(16)(15)(13)(11)4231975(10)6(12)8(14)";
    let out = stdout(&["bijection", "--perm", pi]);
    assert_eq!(out.lines().next(), Some(sigma));
    assert!(out.contains("nr=48 occurrences: 2\nnr=49 occurrences: 2"));
    let back = stdout(&["bijection", "--perm", sigma, "--inverse"]);
    assert_eq!(back.lines().next(), Some(pi));
    let spaced = stdout(&[
        "bijection",
        "--perm",
        "15 17 16 9 10 6 12 8 13 11 14 7 4 5 3 2 1",
    ]);
    assert!(spaced.starts_with("17 16 15 13 11 4 2 3 1 9 7 5 10 6 12 8 14\n"));
    assert_eq!(
        stdout(&[
            "bijection",
            "--map",
            "f",
            "--nr-pair",
            "48,49",
            "--perm",
            "132",
            "--n",
            "3"
        ]),
        "231\n"
    );
    assert_eq!(
        stdout(&["bijection", "--map", "f", "--perm", "231", "--inverse"]),
        "132\n"
    );
}

#[test]
fn bfile_outputs() {
    assert_eq!(
        stdout(&["bfile", "--nr", "8", "--n-max", "4"]),
        "1 1\n2 1\n3 2\n4 6\n"
    );
    assert_eq!(
        stdout(&[
            "bfile",
            "--pattern",
            "sfp",
            "--n-max",
            "4",
            "--offset",
            "0",
            "--source",
            "formula"
        ]),
        "0 1\n1 0\n2 1\n3 3\n4 14\n"
    );
    let tri = stdout(&[
        "bfile",
        "--nr",
        "14",
        "--n-max",
        "4",
        "--triangle",
        "--source",
        "formula",
    ]);
    let values: Vec<&str> = tri.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(values, ["1", "1", "1", "3", "2", "1", "11", "9", "3", "1"]);
}

#[test]
fn verify_reports() {
    let out = run(&["verify", "--all", "--n-max", "7", "--shards", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_ne!(v["status"], "MISMATCH", "{line}");
    }
    let one = stdout(&["verify", "--theorem", "T3.10", "--n-max", "8"]);
    assert_eq!(one.lines().count(), 9);
    assert!(one
        .lines()
        .all(|l| l.contains("\"status\":\"OK\"") && l.contains("nr=63")));
    let conj = stdout(&[
        "verify",
        "--conjecture",
        "C6.1",
        "--n-max",
        "8",
        "--format",
        "text",
    ]);
    assert_eq!(conj.lines().count(), 9);
    assert!(conj.lines().all(|l| l.starts_with("C6.1 nr=3 ")));
}

#[test]
fn equidist_report() {
    let text = stdout(&[
        "equidist", "--group", "48,49", "--group", "53,54", "--n-max", "7",
    ]);
    assert!(
        text.contains("{48,49}        proved           7  equal"),
        "{text}"
    );
    assert!(
        text.contains("{53,54}        conjectured      7  equal"),
        "{text}"
    );
    let json = stdout(&[
        "equidist", "--group", "1,8", "--n-max", "4", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v["status"], "unclaimed");
    assert_eq!(v["rows"][3]["divergence"]["k"], 0);
}

#[test]
fn avoiders_use_the_cache_dir() {
    let dir = std::env::temp_dir().join(format!("meshdist-cli-{}", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_meshdist"))
        .args(["avoiders", "--nr", "48", "--n", "3"])
        .env("MESHDIST_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 3 2\n3 2 1\n");
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn series_output() {
    assert_eq!(
        stdout(&["series", "--theorem", "J6", "--order", "2"]),
        "1 + q*x + (t + q^2)*x^2 + O(x^3)\n"
    );
}
