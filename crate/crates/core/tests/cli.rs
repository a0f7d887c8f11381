use std::path::PathBuf;

use flipsparse::cli;
use flipsparse::graph::generate;
use flipsparse::graph::io::{write_graph, Format};
use flipsparse::Graph;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("flipsparse").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text.lines().next().expect("some output")).unwrap()
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Scratch {
        let dir = std::env::temp_dir().join(format!("flipsparse-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, contents: &str) -> String {
        let path = self.0.join(name);
        std::fs::write(&path, contents).unwrap();
        path.to_string_lossy().into_owned()
    }

    fn graph(&self, name: &str, g: &Graph) -> String {
        self.file(name, &write_graph(g, Format::EdgeList).unwrap())
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

#[test]
fn width_values() {
    let s = Scratch::new("width");
    let p5 = s.graph("p5.el", &generate::path(5));
    let (code, out) = run(&["width", &p5, "--param", "sw", "--r", "2", "--exact"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["value"], 1);
    assert_eq!(v["schema"], 1);

    let k4 = s.graph("k4.el", &generate::complete(4));
    assert_eq!(json(&run(&["width", &k4, "--param", "degeneracy"]).1)["value"], 3);
    let c4 = s.graph("c4.el", &generate::cycle(4));
    assert_eq!(json(&run(&["width", &c4, "--param", "treewidth"]).1)["value"], 2);
    assert_eq!(json(&run(&["width", &c4, "--param", "sw", "--r", "inf"]).1)["value"], 2);
    assert_eq!(json(&run(&["width", &c4, "--param", "wcol", "--order", "0,1,2,3"]).1)["exact"], false);
}

#[test]
fn exit_codes() {
    let s = Scratch::new("codes");
    let k4 = s.graph("k4.el", &generate::complete(4));
    assert_eq!(run(&["width", &k4, "--max-n", "3"]).0, 3);
    assert_eq!(run(&["width", &k4, "--no-such-flag"]).0, 2);
    assert_eq!(run(&["width", "/does/not/exist"]).0, 2);
    let bad = s.file("bad.el", "3 1\n0 7\n");
    assert_eq!(run(&["width", &bad]).0, 2);
    assert_eq!(run(&["width", &k4, "--r", "x"]).0, 2);
    assert_eq!(run(&["sweep", "12"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn sparsify_reports() {
    let s = Scratch::new("sparsify");
    let star = s.graph("star.el", &generate::star(6));
    let (code, out) = run(&["sparsify", &star, "--blocks", "0;1,2,3,4,5", "--t", "2"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["deleted"], serde_json::json!([0]));

    let part = s.file("p.json", "[[0],[1,2,3,4,5]]");
    assert_eq!(json(&run(&["sparsify", &star, "--partition", &part]).1)["deleted"], serde_json::json!([0]));

    let c4 = s.graph("c4.el", &generate::cycle(4));
    let (code, out) = run(&["sparsify", &c4, "--blocks", "0,1,2,3", "--t", "2"]);
    assert_eq!(code, 2);
    let v = json(&out);
    assert_eq!(v["witness"]["left"].as_array().unwrap().len(), 2);

    let g = s.graph("g.el", &generate::random_ktt_free(10, 0.4, 2, 4));
    let (code, out) = run(&["sparsify", &g, "--blocks", "0,1,2;3,4,5;6,7,8,9", "--all-flips"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["verifications"], 64);
    assert_eq!(v["failed"], 0);
}

#[test]
fn mw_round_trip() {
    let s = Scratch::new("mw");
    let p6 = s.graph("p6.el", &generate::path(6));
    let (code, out) = run(&["mw", "build", &p6, "--order", "identity", "--r", "1"]);
    assert_eq!(code, 0);
    assert!(json(&out)["width"].as_u64().unwrap() <= 5);
    let seq = s.file("seq.json", &out);

    let (code, out) = run(&["mw", "verify", &p6, "--seq", &seq]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["valid"], true);

    let (_, compact) = run(&["mw", "build", &p6, "--order", "sw-exact", "--r", "2", "--compact"]);
    let compact = s.file("compact.json", &compact);
    assert_eq!(run(&["mw", "verify", &p6, "--seq", &compact, "--r", "2"]).0, 0);

    let (code, out) = run(&["mw", "normalize", &p6, "--seq", &seq]);
    assert_eq!(code, 0);
    let normal = s.file("normal.json", &out);
    assert_eq!(json(&run(&["mw", "verify", &p6, "--seq", &normal]).1)["normalized"], true);

    let (code, out) = run(&["mw", "to-order", &p6, "--seq", &normal, "--t", "2"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert!(v["certificate"]["measured"].as_u64() <= v["certificate"]["total"].as_u64());

    // a sequence whose first restraint is not all pairs is rejected with exit 1
    let mut broken: Value = serde_json::from_str(std::fs::read_to_string(&seq).unwrap().trim()).unwrap();
    broken["steps"][0]["restraint"] = serde_json::json!([]);
    let broken = s.file("broken.json", &broken.to_string());
    let (code, out) = run(&["mw", "verify", &p6, "--seq", &broken]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["valid"], false);
}

#[test]
fn games() {
    let s = Scratch::new("games");
    let grid = s.graph("grid.el", &generate::grid(2, 3));
    let (code, transcript) = run(&["game", "play", &grid, "--r", "1", "--seed", "3"]);
    assert_eq!(code, 0);
    let t = s.file("t.jsonl", &transcript);
    let (code, out) = run(&["game", "replay", &grid, "--transcript", &t]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["replayed"], true);

    // moving the robber onto a non-adjacent vertex breaks the replay
    let tampered: String = transcript
        .lines()
        .map(|l| {
            let mut v: Value = serde_json::from_str(l).unwrap();
            if v["kind"] == "round" && v["round"] == 1 {
                v["path"] = serde_json::json!([0, 5]);
                v["position"] = serde_json::json!(5);
            }
            v.to_string() + "\n"
        })
        .collect();
    let t = s.file("tampered.jsonl", &tampered);
    assert_eq!(run(&["game", "replay", &grid, "--transcript", &t]).0, 1);

    let c4 = s.graph("c4.el", &generate::cycle(4));
    assert_eq!(json(&run(&["game", "solve", &c4, "--r", "1"]).1)["copwidth"], 3);
    assert_eq!(json(&run(&["game", "solve", &c4, "--r", "1", "--k", "2"]).1)["cops_win"], false);
    let p5 = s.graph("p5.el", &generate::path(5));
    assert_eq!(json(&run(&["game", "solve", &p5, "--r", "3", "--k", "2", "--flipper"]).1)["flipper_wins"], true);
}

#[test]
fn certify_all_trees_on_six_vertices() {
    let s = Scratch::new("trees");
    let (code, trees) = run(&["gen", "all", "--n", "6", "--trees", "--format", "graph6"]);
    assert_eq!(code, 0);
    assert_eq!(trees.lines().count(), 1296);
    let file = s.file("trees.g6", &trees);
    let (code, out) = run(&["game", "certify", &file, "--r", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1296);
    assert!(out.lines().all(|l| json(l)["certified"] == true));
}

#[test]
fn rank_fields() {
    let s = Scratch::new("rank");
    let star = s.graph("star.el", &generate::star(5));
    let (code, out) = run(&["rank", &star, "--k", "2"]);
    assert_eq!(code, 0);
    let v = json(&out);
    for field in ["frk", "srk", "ell", "kprime", "saturated"] {
        assert!(v.get(field).is_some(), "missing {field}");
    }
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "gnp", "--n", "10", "--p", "0.2", "--seed", "7"]);
    let b = run(&["gen", "gnp", "--n", "10", "--p", "0.2", "--seed", "7"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
    assert_ne!(a.1, run(&["gen", "gnp", "--n", "10", "--p", "0.2", "--seed", "8"]).1);
    assert_eq!(run(&["gen", "all", "--n", "4"]).0, 2);
}

#[test]
fn sweep_subcommand() {
    let (code, out) = run(&["sweep", "4", "9", "--seed", "5", "--jobs", "2"]);
    assert_eq!(code, 0);
    let ids: Vec<u64> = out.lines().map(|l| json(l)["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, vec![4, 9]);
}
