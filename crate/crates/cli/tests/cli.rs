use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

const SAMPLE: &str = r#"{"alpha": [[0,2,4],[3,0,4],[1,1,0]]}"#;

fn tiled(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiled"))
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

struct Fixtures {
    dir: TempDir,
}

impl Fixtures {
    fn new() -> Self {
        Self {
            dir: TempDir::new().unwrap(),
        }
    }

    fn file(&self, name: &str, body: &str) -> String {
        let p: PathBuf = self.dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    }
}

#[test]
fn validate_exit_codes() {
    let f = Fixtures::new();
    let ok = tiled(&["validate", &f.file("sample.json", SAMPLE)]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "valid, n=3\n");

    let bad = f.file("bad.json", r#"{"alpha": [[0,0,1],[0,0,0],[0,0,0]]}"#);
    let o = tiled(&["validate", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "TriangleViolation(1,2,3)");

    let neg = f.file("neg.json", r#"{"alpha": [[0,-1],[0,0]]}"#);
    let o = tiled(&["validate", &neg]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("NegativeEntry(1,2)"));

    let malformed = f.file("m.json", r#"{"alpha": [[0,1],[0,0]"#);
    let o = tiled(&["validate", &malformed]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parse error"));

    let extra = f.file("x.json", r#"{"alpha": [[0]], "beta": []}"#);
    assert_eq!(tiled(&["validate", &extra]).status.code(), Some(2));

    let missing = f.dir.path().join("missing.json");
    let o = tiled(&["validate", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn quiver_listing_and_dot() {
    let f = Fixtures::new();
    let sample = f.file("sample.json", SAMPLE);
    let o = tiled(&["quiver", &sample]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    let mut expected = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            expected.push(format!("{i} -> {j}"));
        }
    }
    assert_eq!(lines, expected);

    let h3 = f.file("h3.json", r#"{"alpha": [[0,0,0],[1,0,0],[1,1,0]]}"#);
    assert_eq!(stdout(&tiled(&["quiver", &h3])), "1 -> 2\n2 -> 3\n3 -> 1\n");

    let valued = stdout(&tiled(&["quiver", &sample, "--valued"]));
    assert!(valued.lines().any(|l| l == "1 -> 2 [v=2]"));
    assert!(valued.lines().any(|l| l == "2 -> 3 [v=4]"));

    let dot = stdout(&tiled(&["quiver", &h3, "--dot", "--valued"]));
    assert_eq!(
        dot,
        "digraph Q {\n  \"1\";\n  \"2\";\n  \"3\";\n  \"1\" -> \"2\" [label=\"v=0\"];\n  \"2\" -> \"3\" [label=\"v=0\"];\n  \"3\" -> \"1\" [label=\"v=1\"];\n}\n"
    );

    let bad = f.file("bad.json", r#"{"alpha": [[0,0,1],[0,0,0],[0,0,0]]}"#);
    assert_eq!(tiled(&["quiver", &bad]).status.code(), Some(1));
}

#[test]
fn lift_reports() {
    let f = Fixtures::new();
    let sample = f.file("sample.json", SAMPLE);

    let o = tiled(&["lift", &sample, "--perm", "(1 2 3)"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("x = (1,3,0)"), "{s}");
    assert!(s.contains("[[0,pi,0],[0,0,pi^3],[1,0,0]]"), "{s}");
    assert!(
        s.contains("valuation-preserving: no (v(1,2)=2 but v(2,3)=4)"),
        "{s}"
    );

    let u = stdout(&tiled(&["lift", &sample, "--perm", "[2,3,1]", "--unicode"]));
    assert!(u.contains("[[0,π,0],[0,0,π^3],[1,0,0]]"), "{u}");

    let o = tiled(&["lift", &sample, "--perm", "(1 2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not liftable"));

    let id = stdout(&tiled(&["lift", &sample, "--perm", "[1,2,3]"]));
    assert!(id.contains("x = (0,0,0)"));
    assert!(id.contains("[[1,0,0],[0,1,0],[0,0,1]]"));

    let o = tiled(&["lift", &sample, "--perm", "(1 4)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lift_flags_non_automorphisms() {
    let f = Fixtures::new();
    let h3 = f.file("h3.json", r#"{"alpha": [[0,0,0],[1,0,0],[1,1,0]]}"#);
    let o = tiled(&["lift", &h3, "--perm", "(1 2)"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("not an automorphism of Q"), "{s}");
    assert!(s.contains("not liftable"), "{s}");
}

#[test]
fn group_and_report() {
    let f = Fixtures::new();
    let sample = f.file("sample.json", SAMPLE);
    let g = stdout(&tiled(&["group", &sample]));
    assert!(g.starts_with("|Aut(Q)|=6, |O_Lambda|=3, cyclic"), "{g}");

    let swap = f.file("swap.json", r#"{"alpha": [[0,1],[1,0]]}"#);
    let r = stdout(&tiled(&["report", &swap]));
    assert!(r.contains("|O_Lambda|=2"), "{r}");
    assert!(r.contains("all_liftable: yes"), "{r}");

    let json = stdout(&tiled(&["report", &swap, "--json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["o_lambda_order"], 2);
    assert_eq!(v["all_liftable"], true);
    assert_eq!(v["structure"], "Aut_R = Inn ⋊ O_Lambda");

    let h7 = tiled(&["hereditary", "7"]);
    let h7 = f.file("h7.json", &stdout(&h7));
    let g = stdout(&tiled(&["group", &h7]));
    assert!(g.starts_with("|Aut(Q)|=7, |O_Lambda|=7"), "{g}");

    let o = tiled(&["group", &h7, "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--max-n"));
}

#[test]
fn report_json_reparses_and_generators_verify() {
    let f = Fixtures::new();
    let sample = f.file("sample.json", SAMPLE);
    let json = stdout(&tiled(&["report", &sample, "--json"]));
    let doc: tiled_cli::document::ReportDocument = serde_json::from_str(&json).unwrap();
    assert_eq!(doc.aut_q_order, 6);
    assert_eq!(doc.o_lambda_order, 3);
    assert!(!doc.all_liftable);
    assert_eq!(doc.loops, vec![1, 2, 3]);
    let a = tiled_core::ExponentMatrix::validate(&[vec![0, 2, 4], vec![3, 0, 4], vec![1, 1, 0]])
        .unwrap();
    for g in &doc.generators {
        let images: Vec<usize> = g.perm.iter().map(|v| v - 1).collect();
        let sigma = tiled_core::Perm::from_images(images).unwrap();
        let c = a.conjugate(&sigma, &g.x).unwrap();
        assert_eq!(&c, a.as_lattice());
    }
}

#[test]
fn iso_verdicts() {
    let f = Fixtures::new();
    let sample = f.file("sample.json", SAMPLE);
    let o = tiled(&["iso", &sample, &sample]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "isomorphic: sigma=(), x=(0,0,0)");

    let conj = f.file("c.json", r#"{"alpha": [[0,1,3],[4,0,4],[2,1,0]]}"#);
    let o = tiled(&["iso", &sample, &conj]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "isomorphic: sigma=(), x=(1,0,0)");

    let h3 = f.file("h3.json", r#"{"alpha": [[0,0,0],[1,0,0],[1,1,0]]}"#);
    let o = tiled(&["iso", &sample, &h3]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "not isomorphic");

    let two = f.file("two.json", r#"{"alpha": [[0,1],[1,0]]}"#);
    assert_eq!(tiled(&["iso", &sample, &two]).status.code(), Some(2));
}

#[test]
fn hereditary_output() {
    assert_eq!(
        stdout(&tiled(&["hereditary", "3"])),
        "{\"alpha\": [[0,0,0],[1,0,0],[1,1,0]]}\n"
    );
    assert_eq!(stdout(&tiled(&["hereditary", "1"])), "{\"alpha\": [[0]]}\n");
    assert_eq!(
        stdout(&tiled(&["hereditary", "2"])),
        "{\"alpha\": [[0,0],[1,0]]}\n"
    );
    assert_eq!(tiled(&["hereditary", "0"]).status.code(), Some(2));
}

#[test]
fn hereditary_round_trip() {
    let f = Fixtures::new();
    for n in 1..=20 {
        let body = stdout(&tiled(&["hereditary", &n.to_string()]));
        let p = f.file(&format!("h{n}.json"), &body);
        let o = tiled(&["validate", &p]);
        assert_eq!(o.status.code(), Some(0), "n={n}");
        assert_eq!(stdout(&o), format!("valid, n={n}\n"));
    }
}

#[test]
fn output_independent_of_workers() {
    let f = Fixtures::new();
    let h5 = f.file("h5.json", &stdout(&tiled(&["hereditary", "5"])));
    for cmd in [
        &["group"][..],
        &["report", "--json"][..],
        &["quiver", "--dot"][..],
    ] {
        let run = |w: &str| {
            let mut args: Vec<&str> = vec![cmd[0], &h5];
            args.extend_from_slice(&cmd[1..]);
            args.extend_from_slice(&["--workers", w]);
            tiled(&args).stdout
        };
        assert_eq!(run("1"), run("4"), "{cmd:?}");
    }
}
