use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn r55(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_r55")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn build(dir: &Path, preset: &str) -> PathBuf {
    let path = dir.join(format!("{preset}.cert"));
    let out = r55(&["build", preset, "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn build_prints_certificate() {
    let out = r55(&["build", "exoo42"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("RAMSEY-CERT v1\norder: 43\n"));
    assert_eq!(text.matches("\nflip: ").count(), 16);
    assert!(text.contains("delete: 0\nclaim: mono-k5 red 0\nclaim: mono-k5 blue 0\n"));
}

#[test]
fn verify_with_engine_and_oracle() {
    let dir = TempDir::new().unwrap();
    let exoo = build(dir.path(), "exoo42");
    for extra in [&[][..], &["--oracle"][..]] {
        let mut args = vec!["verify", exoo.to_str().unwrap()];
        args.extend_from_slice(extra);
        let out = r55(&args);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), "PASS mono-k5 red claimed=0 actual=0\nPASS mono-k5 blue claimed=0 actual=0\n");
    }
}

#[test]
fn verify_rejects_false_claim() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.cert");
    fs::write(&path, "RAMSEY-CERT v1\norder: 43\nblue-lengths: 3,4,5,6,8,9,11,15,17,19\nclaim: mono-k5 red 0\n")
        .unwrap();
    let out = r55(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "FAIL mono-k5 red claimed=0 actual=43\n");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("broken.cert");
    fs::write(&path, "RAMSEY-CERT v1\norder: 43\nblue-lengths: 3\nflip: 5 5\n").unwrap();
    let out = r55(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate edge"));

    assert_eq!(r55(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(r55(&["build", "cyc44"]).status.code(), Some(2));
    assert_eq!(r55(&["verify", "/nonexistent/file.cert"]).status.code(), Some(2));
    let cyc = build(dir.path(), "cyc43");
    assert_eq!(r55(&["count", cyc.to_str().unwrap(), "--color", "green", "--k", "5"]).status.code(), Some(2));
    let search = r55(&["search", "--start", "cyc43", "--budget", "10", "--seed", "1", "--policy", "anneal"]);
    assert_eq!(search.status.code(), Some(2));
    let zero = r55(&["search", "--start", "cyc43", "--budget", "0", "--seed", "1", "--policy", "greedy"]);
    assert_eq!(zero.status.code(), Some(2));
}

#[test]
fn count_and_enumerate() {
    let dir = TempDir::new().unwrap();
    let a = build(dir.path(), "varianta");
    let out = r55(&["count", a.to_str().unwrap(), "--color", "blue", "--k", "5"]);
    assert_eq!(stdout(&out), "9\n");
    let out = r55(&["enumerate", a.to_str().unwrap(), "--color", "red", "--k", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 1 2 22 23\n0 1 21 22 23\n0 1 21 22 42\n0 20 21 22 42\n");
}

#[test]
fn lemmas_table() {
    let dir = TempDir::new().unwrap();
    let cyc = build(dir.path(), "cyc43");
    let out = r55(&["lemmas", cyc.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
    assert!(text.contains("file: standard-reduction n=43 red"));

    let exoo = build(dir.path(), "exoo42");
    let out = r55(&["lemmas", exoo.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("SKIP ")).count(), 3);
}

#[test]
fn diagram_matches_golden() {
    let dir = TempDir::new().unwrap();
    let cyc = build(dir.path(), "cyc43");
    let out = r55(&["diagram", cyc.to_str().unwrap(), "--color", "blue", "--vertices", "1,2", "--overlap"]);
    assert_eq!(out.status.code(), Some(0));
    let golden = include_str!("../../core/tests/golden/cyc43_blue_1_2.txt");
    assert_eq!(stdout(&out), golden);
}

#[test]
fn search_is_reproducible_and_exports_best() {
    let dir = TempDir::new().unwrap();
    let log_a = dir.path().join("a.log");
    let log_b = dir.path().join("b.log");
    let best = dir.path().join("best.cert");
    let run = |log: &Path| {
        r55(&[
            "search",
            "--start",
            "varianta",
            "--budget",
            "5000",
            "--seed",
            "11",
            "--policy",
            "tabu",
            "--log",
            log.to_str().unwrap(),
            "--best-out",
            best.to_str().unwrap(),
        ])
    };
    let first = run(&log_a);
    let second = run(&log_b);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first), stdout(&second));
    let log = fs::read(&log_a).unwrap();
    assert_eq!(log, fs::read(&log_b).unwrap());
    let log = String::from_utf8(log).unwrap();
    assert!(!log.is_empty());
    for line in log.lines() {
        let fields: Vec<&str> = line.split(' ').collect();
        assert_eq!(fields.len(), 5, "{line}");
        assert!(
            fields[0].starts_with("step=") && fields[1].starts_with("flip=") && fields[4].starts_with("objective=")
        );
    }

    let summary = stdout(&first);
    let best_line = summary.lines().find(|l| l.starts_with("best_red=")).unwrap();
    let verify = r55(&["verify", best.to_str().unwrap(), "--oracle"]);
    assert_eq!(verify.status.code(), Some(0));
    let counts = stdout(&verify);
    let red: String = best_line.split(' ').next().unwrap().trim_start_matches("best_red=").into();
    assert!(counts.contains(&format!("red claimed={red} actual={red}")));
}

#[test]
fn search_from_certificate_file_red_to_blue_only() {
    let dir = TempDir::new().unwrap();
    let a = build(dir.path(), "varianta");
    let log = dir.path().join("g.log");
    let out = r55(&[
        "search",
        "--start",
        a.to_str().unwrap(),
        "--budget",
        "4000",
        "--seed",
        "2",
        "--policy",
        "greedy",
        "--red-to-blue-only",
        "--log",
        log.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut last_red = 4u64;
    for line in fs::read_to_string(&log).unwrap().lines() {
        let red: u64 = line.split(' ').nth(2).unwrap().trim_start_matches("red=").parse().unwrap();
        assert!(red <= last_red);
        last_red = red;
    }
}
