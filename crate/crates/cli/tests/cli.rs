use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const SAMPLE: &str = "betweenness\nelem a b c d\ntriple a b c\ntriple b c d\ntriple d b a\n";
const UNSAT: &str = "betweenness\nelem a b c\ntriple a b c\ntriple b a c\n";

fn upbe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_upbe"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

fn put(dir: &TempDir, name: &str, text: &str) -> String {
    let p = path(dir, name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn fold_examples() {
    let out = upbe(&["fold", "MMMM", "--cycle"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "INFEASIBLE");

    let dir = TempDir::new().unwrap();
    let layers = path(&dir, "layers.txt");
    let out = upbe(&["fold", "MM", "--layers", &layers]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "FEASIBLE\nf2 f3 f1\n");
    assert_eq!(fs::read_to_string(&layers).unwrap(), "f2\nf3\nf1\n");

    assert_eq!(code(&upbe(&["fold", "MMMV", "--cycle"])), 0);
    assert_eq!(code(&upbe(&["fold", "MXM"])), 2);
}

#[test]
fn sample_reduction_solves_and_validates() {
    let dir = TempDir::new().unwrap();
    let bw = put(&dir, "sample.bw", SAMPLE);
    let inst = path(&dir, "sample.upbe");
    let labels = path(&dir, "sample.labels");
    let w = path(&dir, "w.txt");

    let out = upbe(&["reduce", "upbe3", &bw, &inst, "--labels", &labels]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read_to_string(&labels).unwrap().lines().count(), 128);

    let out = upbe(&["solve", &inst, "--algorithm", "exact", "--witness", &w]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out).trim(), "FEASIBLE");
    let out = upbe(&["validate", &inst, &w]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "VALID");
}

#[test]
fn witnesses_follow_the_element_order() {
    let dir = TempDir::new().unwrap();
    let bw = put(&dir, "sample.bw", SAMPLE);
    let good = put(&dir, "good.txt", "d\nc\nb\na\n");
    // b comes first, so it is not between a and c.
    let bad = put(&dir, "bad.txt", "b\na\nc\nd\n");
    for target in ["upbe3", "umpbe4"] {
        let inst = path(&dir, &format!("{target}.upbe"));
        let ord = path(&dir, &format!("{target}.ord"));
        assert_eq!(code(&upbe(&["reduce", target, &bw, &inst])), 0);
        let out = upbe(&["witness", target, &bw, &good, &ord]);
        assert_eq!(code(&out), 0, "{}", stdout(&out));
        assert_eq!(code(&upbe(&["validate", &inst, &ord])), 0);
        let out = upbe(&["witness", target, &bw, &bad, &ord]);
        assert_eq!(code(&out), 1);
        assert!(stdout(&out).starts_with("INVALID"));
    }
}

#[test]
fn unsatisfiable_reduction_is_infeasible() {
    let dir = TempDir::new().unwrap();
    let bw = put(&dir, "unsat.bw", UNSAT);
    let inst = path(&dir, "unsat.upbe");
    let out = upbe(&["reduce", "upbe3", &bw, &inst]);
    assert_eq!(stdout(&out).trim(), "wrote 69 vertices, 90 edges on 3 pages");
    let out = upbe(&["solve", &inst]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "INFEASIBLE");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let c4 = "upbe 2\nv v1\nv v2\nv v3\nv v4\ne v1 v2 1\ne v3 v4 1\ne v3 v2 2\ne v1 v4 2\n";
    let inst = put(&dir, "c4.upbe", c4);
    for algorithm in ["auto", "exact", "umpbe2"] {
        let out = upbe(&["solve", &inst, "--algorithm", algorithm]);
        assert_eq!(code(&out), 1, "{algorithm}");
        assert_eq!(stdout(&out).trim(), "INFEASIBLE");
    }

    let crossing = put(&dir, "crossing.ord", "v1\nv3\nv2\nv4\n");
    let out = upbe(&["validate", &inst, &crossing]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("INVALID"));

    let bad = put(&dir, "bad.upbe", "v a\n");
    let out = upbe(&["solve", &bad]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    assert_eq!(code(&upbe(&["solve", &path(&dir, "missing.upbe")])), 2);
    assert_eq!(code(&upbe(&["frobnicate"])), 2);

    let three = put(&dir, "three.upbe", "upbe 3\nv a\nv b\ne a b 3\n");
    assert_eq!(code(&upbe(&["solve", &three, "--algorithm", "umpbe2"])), 2);
}

#[test]
fn budget_exhaustion_is_an_error() {
    let dir = TempDir::new().unwrap();
    let bw = put(&dir, "sample.bw", SAMPLE);
    let inst = path(&dir, "sample.upbe");
    assert_eq!(code(&upbe(&["reduce", "upbe3", &bw, &inst])), 0);
    let out = upbe(&["solve", &inst, "--algorithm", "exact", "--node-budget", "5"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("BUDGET"));
}

#[test]
fn gen_is_reproducible() {
    for shape in ["path", "cycle", "random"] {
        let args = ["gen", shape, "--n", "12", "--k", "3", "--seed", "9"];
        let first = upbe(&args);
        assert_eq!(code(&first), 0);
        assert_eq!(first.stdout, upbe(&args).stdout);
        assert!(stdout(&first).starts_with("upbe 3\n"));
    }
    let other = upbe(&["gen", "random", "--n", "12", "--k", "3", "--seed", "10"]);
    assert_ne!(
        other.stdout,
        upbe(&["gen", "random", "--n", "12", "--k", "3", "--seed", "9"]).stdout
    );
    assert_eq!(code(&upbe(&["gen", "cycle", "--n", "2", "--k", "2"])), 2);
}

#[test]
fn generated_two_page_instances_agree_across_algorithms() {
    let dir = TempDir::new().unwrap();
    for seed in 0..20 {
        let gen = upbe(&[
            "gen",
            "random",
            "--n",
            "8",
            "--k",
            "2",
            "--seed",
            &seed.to_string(),
            "--matching",
        ]);
        let inst = put(&dir, "m.upbe", &stdout(&gen));
        let exact = code(&upbe(&["solve", &inst, "--algorithm", "exact"]));
        assert_eq!(
            exact,
            code(&upbe(&["solve", &inst, "--algorithm", "umpbe2"])),
            "seed {seed}"
        );
        assert_eq!(exact, code(&upbe(&["solve", &inst])), "seed {seed}");
    }
}

fn count(svg: &str, class: &str) -> usize {
    svg.matches(&format!("class=\"{class}\"")).count()
}

#[test]
fn render_counts_and_determinism() {
    let dir = TempDir::new().unwrap();
    let inst = put(
        &dir,
        "p.upbe",
        &stdout(&upbe(&["gen", "path", "--n", "9", "--k", "4", "--seed", "1"])),
    );
    let ord = path(&dir, "p.ord");
    assert_eq!(code(&upbe(&["solve", &inst, "--witness", &ord])), 0);
    let first = path(&dir, "a.svg");
    let second = path(&dir, "b.svg");
    assert_eq!(code(&upbe(&["render", &inst, "--order", &ord, "-o", &first])), 0);
    assert_eq!(code(&upbe(&["render", &inst, "--order", &ord, "-o", &second])), 0);
    let svg = fs::read_to_string(&first).unwrap();
    assert_eq!(svg, fs::read_to_string(&second).unwrap());
    assert_eq!(count(&svg, "arc"), 8);
    assert_eq!(count(&svg, "dot"), 9);

    let short = put(&dir, "short.ord", "v0\n");
    assert_eq!(code(&upbe(&["render", &inst, "--order", &short, "-o", &first])), 2);
    assert!(Path::new(&first).exists());
}
