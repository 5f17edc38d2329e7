use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supertrop")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn canon_drops_inessential_terms() {
    assert_eq!(stdout(&["canon", "x^2 + 0*x + 1"]), "x^2 + 1\n");
    let j = json(&["canon", "x^2 + 3v*x + 6", "--format", "json"]);
    assert_eq!(j["canonical"], "x^2 + 3v*x + 6");
}

#[test]
fn equal_on_two_factorizations() {
    assert_eq!(stdout(&["equal", "(x+y+0)*(x+y+x*y)", "(x+0)*(y+0)*(x+y)"]), "true\n");
    assert_eq!(stdout(&["equal", "x + 1", "x + 1v"]), "false\n");
}

#[test]
fn eval_factor_root() {
    assert_eq!(stdout(&["eval", "x + 3", "3"]), "3v\n");
    assert_eq!(stdout(&["eval", "x^2 + 2*x + 1", "0"]), "2\n");
    assert_eq!(stdout(&["factor", "x^2 + 2v*x + 4"]), "(x + 2) * (x + 2)\n");
    assert_eq!(stdout(&["root", "x + 4"]), "4\n");
    assert_eq!(stdout(&["root", "3*x^2"]), "none\n");
}

#[test]
fn spectrum_of_superboolean_has_one_point() {
    let j = json(&["spec", "--semiring", "superboolean"]);
    assert_eq!(j["points"].as_array().unwrap().len(), 1);
    assert_eq!(j["krull_dim"], 0);
}

#[test]
fn semiring_commands() {
    let v = json(&["validate", "--semiring", "str-chain:2"]);
    assert_eq!(v["ok"], true);
    let c = json(&["congs", "--semiring", "superboolean"]);
    assert_eq!(c["count"], 3);
    let q = json(&["quotient", "--semiring", "str-chain:2", "--ghostify", "t1"]);
    assert_eq!(q["semiring"]["elements"].as_array().unwrap().len(), 4);
    let l = json(&["localize", "--semiring", "str-trunc:3"]);
    assert_eq!(l["isomorphic_to_source"], true);
    let s = json(&["sections", "--semiring", "str-chain:2", "--f", "t0"]);
    assert_eq!(s["isomorphic_to_source"], true);
    let st = json(&["stalk", "--semiring", "superboolean", "--point", "0"]);
    assert_eq!(st["report"]["local"], true);
    assert_eq!(json(&["nullcheck", "--semiring", "str-trunc:3"])["pass"], true);
    assert_eq!(json(&["krullcheck", "--semiring", "str-chain:3"])["pass"], true);
    let r = json(&["radical", "--semiring", "superboolean", "--kind", "srad", "--elems", "b1"]);
    assert_eq!(r["empty"], true);
    let r = json(&["radical", "--semiring", "superboolean", "--kind", "grad"]);
    assert_eq!(r["empty"], false);
}

#[test]
fn semiring_from_file_and_random() {
    let dir = std::env::temp_dir().join(format!("supertrop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b.json");
    let table = supertrop::FiniteNuSemiring::superboolean().to_json();
    std::fs::write(&path, serde_json::to_string(&table).unwrap()).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(json(&["validate", "--semiring", p])["ok"], true);
    let a = stdout(&["spec", "--semiring", "random", "--seed", "7"]);
    assert_eq!(a, stdout(&["spec", "--semiring", "random", "--seed", "7"]));

    let mut broken = table.clone();
    broken.add[1][1] = "b1".into();
    std::fs::write(&path, serde_json::to_string(&broken).unwrap()).unwrap();
    assert_eq!(code(&["validate", "--semiring", p]), 3);
    assert_eq!(code(&["spec", "--semiring", p]), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["canon", "x +"]), 2);
    assert_eq!(code(&["spec", "--semiring", "nonsense"]), 2);
    assert_eq!(code(&["quotient", "--semiring", "superboolean", "--pairs", "b1=nope"]), 2);
    assert_eq!(code(&["quotient", "--semiring", "superboolean", "--pairs", "b1=b1v"]), 3);
    assert_eq!(code(&["factor", "x + y"]), 3);
    assert_eq!(code(&["localize", "--semiring", "str-chain:2", "--monoid", "t1"]), 3);
    assert_eq!(code(&["congs", "--semiring", "str-chain:3", "--bound", "6"]), 4);
    assert_eq!(code(&["stalk", "--semiring", "superboolean", "--point", "4"]), 3);
    let err = run(&["canon", "x +"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("at 3"));
}

#[test]
fn zlocus_outputs_are_stable() {
    let args = ["zlocus", "2v + x", "2v + y", "0 + -2v*x*y", "--format", "svg"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    assert!(a.starts_with("<svg") && a.contains("ghost-face"));
    let j = json(&["zlocus", "2v + x", "2v + y", "0 + -2v*x*y", "--format", "json"]);
    assert!(j["cells"].as_array().unwrap().len() > 10);
    let s = json(&["zlocus", "x^2*y + x*y^2 + 2*x*y + 0", "--box", "-6,6,-6,6"]);
    assert_eq!(s["curve_cycles"], 1);
    assert_eq!(s["ghost_faces"], 0);
    assert_eq!(code(&["zlocus", "x + y", "--box", "1,1,0,2"]), 3);
    assert_eq!(code(&["zlocus", "x + y", "--box", "1,2"]), 2);
}
