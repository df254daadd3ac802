use std::io::Write;
use std::process::{Command, Stdio};

use hgpart::format::{parse_instance, parse_report};
use hgpart::{verify_certificate, verify_partition};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn hgpart(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hgpart"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let r = hgpart(&full, None);
    assert_eq!(r.code, 0, "{}", r.stderr);
    r.stdout
}

fn file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn partition_output_parses_and_verifies() {
    let inst = gen(&["cycle", "--n", "6", "--f", "1,1"]);
    let r = hgpart(&["partition", "-"], Some(&inst));
    assert_eq!(r.code, 0);
    let i = parse_instance(&inst).unwrap();
    let part = parse_report(&r.stdout).unwrap().partition(&i.hypergraph, 2).unwrap();
    assert!(verify_partition(&i.hypergraph, i.vector().unwrap(), &part));

    let (fi, fr) = (file(&inst), file(&r.stdout));
    let v = hgpart(&["verify", fi.path().to_str().unwrap(), fr.path().to_str().unwrap()], None);
    assert_eq!(v.code, 0);
    assert!(v.stdout.contains("result verified"));
}

#[test]
fn hard_instance_exits_two_with_certificate() {
    let inst = gen(&["cycle", "--n", "5", "--f", "1,1"]);
    for cmd in ["partition", "is-hard"] {
        let r = hgpart(&[cmd, "-"], Some(&inst));
        assert_eq!(r.code, 2, "{cmd}");
        assert!(r.stdout.contains("type C t=1 n=5 coords 1 2"), "{}", r.stdout);
        let rep = parse_report(&r.stdout).unwrap();
        let i = parse_instance(&inst).unwrap();
        assert!(verify_certificate(&i.hypergraph, i.vector().unwrap(), &rep.certificates[0].1));
    }
}

#[test]
fn tampered_report_is_rejected() {
    let inst = gen(&["cycle", "--n", "4", "--f", "1,1"]);
    let bad = "result partition p=2\nassign v0 1\nassign v1 1\nassign v2 2\nassign v3 2\n";
    let (fi, fr) = (file(&inst), file(bad));
    let v = hgpart(&["verify", fi.path().to_str().unwrap(), fr.path().to_str().unwrap()], None);
    assert_eq!(v.code, 2, "{}", v.stdout);
    assert!(v.stdout.contains("result rejected"));
}

#[test]
fn errors_exit_one() {
    let r = hgpart(&["partition", "/nonexistent/instance"], None);
    assert_eq!(r.code, 1);
    assert!(r.stderr.starts_with("error:"));
    let r = hgpart(&["partition", "-"], Some("hg 1\nv a 1\nv b 1\ne x a a\n"));
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("line 4"), "{}", r.stderr);
    let r = hgpart(&["partition", "-"], Some("hg 1\nv a 0\nv b 1\ne x a b\n"));
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("precondition"), "{}", r.stderr);
    assert_eq!(hgpart(&["no-such-command"], None).code, 1);
}

#[test]
fn small_commands() {
    let k4 = gen(&["complete", "--n", "4"]);
    let r = hgpart(&["col", "-"], Some(&k4));
    assert!(r.stdout.contains("col 4\n") && r.stdout.contains("max-degree 3\n"));

    let p3 = gen(&["path", "--n", "3"]);
    let r = hgpart(&["blocks", "-"], Some(&p3));
    assert!(r.stdout.starts_with("result blocks count=2\n"), "{}", r.stdout);
    assert!(r.stdout.contains("cut v1\n"));

    let c5 = gen(&["cycle", "--n", "5", "--f", "2,3"]);
    assert_eq!(hgpart(&["degenerate", "-", "--coord", "1"], Some(&c5)).code, 2);
    assert_eq!(hgpart(&["degenerate", "-", "--coord", "2"], Some(&c5)).code, 0);

    let k5 = gen(&["complete", "--n", "5"]);
    let r = hgpart(&["alpha", "-", "--s", "2"], Some(&k5));
    assert!(r.stdout.contains("alpha 3\n"), "{}", r.stdout);

    let six = gen(&["catalog", "degree-six"]);
    let r = hgpart(&["refine-degrees", "-", "--k", "3,3"], Some(&six));
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("degree-bounds ok"));

    let lists = gen(&["catalog", "list-example"]);
    let r = hgpart(&["list-color", "-"], Some(&lists));
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(!parse_report(&r.stdout).unwrap().colors.is_empty());
}

#[test]
fn generators_are_seeded() {
    let a = gen(&["random", "--n", "7", "--m", "9", "--seed", "4", "--f", "2,2"]);
    let b = gen(&["random", "--n", "7", "--m", "9", "--seed", "4", "--f", "2,2"]);
    let c = gen(&["random", "--n", "7", "--m", "9", "--seed", "5", "--f", "2,2"]);
    assert_eq!(a, b);
    assert_ne!(a, c);
    let h = gen(&["hard", "--p", "3", "--blocks", "3", "--seed", "9"]);
    assert_eq!(hgpart(&["is-hard", "-"], Some(&h)).code, 2);
}

#[test]
fn in_process_runner_matches_binary() {
    let o = hgpart_cli::run_args(["hgpart", "gen", "cycle", "--n", "5", "--f", "1,1"]);
    assert_eq!(o.code, hgpart_cli::EXIT_OK);
    assert_eq!(o.stdout, gen(&["cycle", "--n", "5", "--f", "1,1"]));
}

#[test]
fn oracle_check_defaults_run_clean() {
    let r = hgpart(&["oracle-check"], None);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("disagreements: 0"), "{}", r.stdout);
}
