//! Byte-exact reports for the shipped fixtures. Set TARSKI_UPDATE_GOLDEN=1
//! to rewrite the golden files.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

const CASES: &[(&str, &str)] = &[
    ("trivial-action", "eq solve"),
    ("trivial-action", "con compute"),
    ("z3-cycle", "con compute"),
    ("z3-cycle", "eq solve"),
    ("z4-quotient", "coarsen"),
    ("f2-ab-5block", "con compute"),
    ("f2-ab-5block", "eq solve"),
    ("f2-pattern", "paradox pattern"),
    ("f2-classical-decomposition", "paradox verify"),
    ("f2-chain-n2", "paradox chain"),
    ("f2-pingpong-cyclic", "pingpong cyclic"),
    ("s3-nonabelian-witness", "witness nonabelian"),
    ("rank1-infinite-order", "witness infinite-order"),
];

fn root() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn fixture(name: &str) -> PathBuf {
    root().join("fixtures").join(format!("{name}.json"))
}

fn tarski(command: &str, input: &Path) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tarski"))
        .args(command.split(' '))
        .arg("--input")
        .arg(input)
        .output()
        .expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).expect("UTF-8 report"))
}

fn report(name: &str, command: &str) -> Value {
    let (code, text) = tarski(command, &fixture(name));
    assert_eq!(code, 0, "{name} / {command}: {text}");
    serde_json::from_str(&text).unwrap()
}

#[test]
fn reports_match_golden_files() {
    let update = std::env::var_os("TARSKI_UPDATE_GOLDEN").is_some();
    let dir = root().join("tests").join("golden");
    for (name, command) in CASES {
        let (code, first) = tarski(command, &fixture(name));
        assert_eq!(code, 0, "{name} / {command}: {first}");
        let (_, second) = tarski(command, &fixture(name));
        assert_eq!(first, second, "{name} / {command} is not byte-stable");

        let golden = dir.join(format!("{name}.{}.json", command.replace(' ', "-")));
        if update {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&golden, &first).unwrap();
        } else {
            let expected = std::fs::read_to_string(&golden).unwrap_or_else(|_| panic!("missing {}", golden.display()));
            assert_eq!(first, expected, "{name} / {command} differs from {}", golden.display());
        }
    }
}

#[test]
fn trivial_action_has_uniform_solution() {
    let r = report("trivial-action", "eq solve");
    assert_eq!(r["status"], "feasible");
    assert_eq!(r["solution"], serde_json::json!(["1/3", "1/3", "1/3"]));
    assert_eq!(r["verified"], true);
}

#[test]
fn five_block_system_is_infeasible() {
    let r = report("f2-ab-5block", "eq solve");
    assert_eq!(r["status"], "infeasible");
    assert_eq!(r["verified"], true);
    assert_eq!(r["certificate"].as_array().unwrap().len(), r["rows"].as_u64().unwrap() as usize);
}

#[test]
fn fixture_decompositions_have_four_pieces() {
    assert_eq!(report("f2-classical-decomposition", "paradox verify")["status"], "verified");
    let chain = report("f2-chain-n2", "paradox chain");
    assert_eq!(chain["status"], "verified");
    assert_eq!(chain["piece_count"], 4);
    assert_eq!(chain["s"], serde_json::json!(["ababA", "ab", "e"]));
    let pattern = report("f2-pattern", "paradox pattern");
    assert_eq!(pattern["status"], "holds");
    assert_eq!(pattern["equations"]["status"], "infeasible");
}

#[test]
fn z3_configurations() {
    let r = report("z3-cycle", "con compute");
    assert_eq!(r["configurations"], serde_json::json!([[1, 2], [2, 1], [2, 2]]));
    assert_eq!(r["cell_partition"], "ok");
}

#[test]
fn z4_quotient_coarsens_to_halves() {
    let r = report("z4-quotient", "coarsen");
    assert_eq!(r["status"], "verified");
    assert_eq!(r["solution"], serde_json::json!(["1/2", "1/2"]));
}

#[test]
fn witnesses_verify() {
    let s3 = report("s3-nonabelian-witness", "witness nonabelian");
    assert_eq!(s3["status"], "verified");
    assert_eq!(s3["points"].as_array().unwrap().len(), 6);
    assert_eq!(report("rank1-infinite-order", "witness infinite-order")["status"], "verified");
}
