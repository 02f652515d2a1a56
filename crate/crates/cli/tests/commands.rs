//! Command semantics through the library entry point.

use serde_json::{json, Value};

use tarski_cli::{render, run, Command, Options};

fn fixture(name: &str) -> Value {
    let path = format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn exec(command: Command, doc: &Value, options: &Options) -> (i32, Value) {
    let out = run(command, doc.to_string().as_bytes(), options);
    (out.exit_code, out.report)
}

fn ok(command: Command, doc: &Value) -> Value {
    let (code, r) = exec(command, doc, &Options::default());
    assert_eq!(code, 0, "{}", render(&r));
    r
}

fn cone(w: &str) -> Value {
    json!({"kind": "cone", "word": w})
}

#[test]
fn swapped_tableau_fails_at_identity() {
    let mut doc = fixture("f2-pingpong-cyclic");
    let t = &mut doc["tableau"];
    let a0 = t["a_sets"][0].clone();
    t["a_sets"][0] = t["b_sets"][0].clone();
    t["b_sets"][0] = a0;
    let r = ok(Command::PingpongCyclic, &doc);
    assert_eq!(r["status"], "failed");
    assert_eq!(r["witness"], "e");
}

#[test]
fn certificate_and_solution_verify_through_eq_verify() {
    let mut doc = fixture("f2-ab-5block");
    let solved = ok(Command::EqSolve, &doc);
    doc["certificate"] = solved["certificate"].clone();
    assert_eq!(ok(Command::EqVerify, &doc)["status"], "verified");

    let mut doc = fixture("trivial-action");
    doc["solution"] = json!(["1/3", "1/3", "1/3"]);
    assert_eq!(ok(Command::EqVerify, &doc)["status"], "verified");
    doc["solution"] = json!(["1/2", "1/3", "1/3"]);
    let r = ok(Command::EqVerify, &doc);
    assert_eq!(r["status"], "rejected");
    assert!(r["violation"].as_str().unwrap().contains("normalization"), "{r}");
}

#[test]
fn emitted_decompositions_verify_when_fed_back() {
    let action = json!({"kind": "free", "rank": 2});
    for (command, name) in [(Command::ParadoxChain, "f2-chain-n2"), (Command::ParadoxPattern, "f2-pattern")] {
        let r = ok(command, &fixture(name));
        let doc = json!({"action": action, "decomposition": r["decomposition"]});
        assert_eq!(ok(Command::ParadoxVerify, &doc)["status"], "verified", "{name}");
    }
    let found = ok(Command::ParadoxSearch, &json!({"action": action}));
    let doc = json!({"action": action, "decomposition": found["decomposition"]});
    assert_eq!(ok(Command::ParadoxVerify, &doc)["status"], "verified");
}

#[test]
fn strict_partition_flag() {
    let doc = fixture("f2-classical-decomposition");
    let strict = Options { strict_partition: true, ..Options::default() };
    let (code, r) = exec(Command::ParadoxVerify, &doc, &strict);
    assert_eq!(code, 0);
    assert_eq!(r["strict_partition"], true);
    // the identity lies in no piece
    assert_eq!(r["status"], "failed");
    assert_eq!(r["witness"], "e");
    assert_eq!(ok(Command::ParadoxVerify, &doc)["status"], "verified");
}

#[test]
fn overlapping_pieces_fail_with_witness() {
    let doc = json!({
        "action": {"kind": "free", "rank": 2},
        "decomposition": {
            "a": [{"piece": cone("a"), "translator": "e"}, {"piece": cone("A"), "translator": "a"}],
            "b": [{"piece": cone("ab"), "translator": "e"}, {"piece": cone("B"), "translator": "b"}]
        }
    });
    let r = ok(Command::ParadoxVerify, &doc);
    assert_eq!(r["status"], "failed");
    assert_eq!(r["witness"], "ab");
}

#[test]
fn chain_hypothesis_failure() {
    let mut doc = fixture("f2-chain-n2");
    doc["chain"]["elements"] = json!(["b", "ab"]);
    let r = ok(Command::ParadoxChain, &doc);
    assert_eq!(r["status"], "failed");
    assert!(r.get("witness").is_some());
}

#[test]
fn coarsen_modes() {
    let base = json!({
        "action": {"kind": "permutation", "degree": 3, "generators": [[1, 2, 0]]},
        "fine": {"tuple": ["a", "aa"], "partition": [{"kind": "points", "points": [0]}, {"kind": "points", "points": [1]}, {"kind": "points", "points": [2]}]},
        "coarse": {"tuple": ["a"], "partition": [{"kind": "points", "points": [0]}, {"kind": "points", "points": [1, 2]}]}
    });
    for mode in ["composite"] {
        let mut doc = base.clone();
        doc["mode"] = json!(mode);
        let r = ok(Command::Coarsen, &doc);
        assert_eq!(r["status"], "verified");
        assert_eq!(r["solution"], json!(["1/3", "1/3", "1/3"]));
    }
    let mut doc = base.clone();
    doc["mode"] = json!("string");
    let (code, r) = exec(Command::Coarsen, &doc, &Options::default());
    assert_eq!(code, 2, "{r}");

    let mut doc = base;
    doc["mode"] = json!("composite");
    doc["solution"] = json!(["1", "0", "0"]);
    let (code, r) = exec(Command::Coarsen, &doc, &Options::default());
    assert_eq!(code, 2);
    assert_eq!(r["error"]["path"], "$.solution");
}

#[test]
fn coarsen_on_free_action_uses_the_solver() {
    let free_pair = |tuple: Value| json!({"tuple": tuple, "partition": [{"kind": "cone", "word": "a"}, {"kind": "complement", "of": cone("a")}]});
    let doc = json!({
        "action": {"kind": "free", "rank": 2},
        "mode": "string",
        "fine": free_pair(json!(["b", "a"])),
        "coarse": free_pair(json!(["b"]))
    });
    let r = ok(Command::Coarsen, &doc);
    assert_eq!(r["fine_source"], "solver");
    assert_eq!(r["status"], "verified");
}

#[test]
fn compare_configuration_sets() {
    let z4 = json!({"kind": "permutation", "degree": 4, "generators": [[1, 2, 3, 0]]});
    let z2 = json!({"kind": "permutation", "degree": 2, "generators": [[1, 0]]});
    let triv = json!({"kind": "trivial", "points": 2});

    let r = ok(Command::CompareCon, &json!({"first": {"action": z2}, "second": {"action": z4}}));
    assert_eq!(r["status"], "included");
    assert_eq!(r["bounds"], json!({"blocks": 2, "tuple_length": 1, "word_length": 1}));

    let r = ok(Command::CompareCon, &json!({"first": {"action": z2}, "second": {"action": triv}}));
    assert_eq!(r["status"], "counterexample");
    assert!(r["counterexample"]["configurations"].is_array());

    let free = json!({"kind": "free", "rank": 2});
    let (code, _) =
        exec(Command::CompareCon, &json!({"first": {"action": free}, "second": {"action": z2}}), &Options::default());
    assert_eq!(code, 2);
}

#[test]
fn cardinality_probe() {
    let z3 = json!({"kind": "permutation", "degree": 3, "generators": [[1, 2, 0]]});
    assert_eq!(ok(Command::ProbeCardinality, &json!({"action": z3, "blocks": 3}))["splits"], true);
    assert_eq!(ok(Command::ProbeCardinality, &json!({"action": z3, "blocks": 4}))["splits"], false);
    let free = json!({"kind": "free", "rank": 2});
    assert_eq!(ok(Command::ProbeCardinality, &json!({"action": free, "blocks": 40}))["splits"], true);
}

#[test]
fn subgroup_ping_pong() {
    let action = json!({"kind": "free", "rank": 2});
    let x1 = json!({"kind": "union", "of": [cone("a"), cone("A")]});
    let x2 = json!({"kind": "union", "of": [cone("b"), cone("B")]});
    let doc = json!({
        "action": action,
        "subgroups": [{"generator": "a"}, {"generator": "b", "bound": 3}],
        "sets": [x1, x2]
    });
    let opts = Options { bound_length: Some(5), ..Options::default() };
    let (code, r) = exec(Command::PingpongSubgroups, &doc, &opts);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "certified", "{r}");
    assert_eq!(r["exponent_bounds"], json!([5, 3]));
    assert_eq!(r["bounds"]["exponent"], 5);
}

#[test]
fn witness_failures_are_reports() {
    let free = json!({"kind": "free", "rank": 1});
    let r = ok(Command::WitnessNonabelian, &json!({"action": free, "g1": "a", "g2": "aa"}));
    assert_eq!(r["status"], "failed");
    assert!(r["failure"].as_str().unwrap().starts_with("elements commute"));

    let s3 = fixture("s3-nonabelian-witness")["action"].clone();
    let r = ok(Command::WitnessInfiniteOrder, &json!({"action": s3, "element": [1, 0, 2]}));
    assert_eq!(r["status"], "failed");
    assert_eq!(r["failure"], "element has finite order 2");
}

#[test]
fn seed_adds_axiom_check() {
    let opts = Options { seed: Some(11), ..Options::default() };
    let (code, r) = exec(Command::ConCompute, &fixture("z3-cycle"), &opts);
    assert_eq!(code, 0);
    assert_eq!(r["axioms"], json!({"samples": 64, "seed": 11, "status": "ok"}));
    let (_, again) = exec(Command::ConCompute, &fixture("z3-cycle"), &opts);
    assert_eq!(render(&r), render(&again));
}

#[test]
fn pattern_failure_on_trivial_action() {
    let doc = json!({
        "action": {"kind": "trivial", "points": 2},
        "tuple": ["a"],
        "partition": [{"kind": "points", "points": [0]}, {"kind": "points", "points": [1]}],
        "pattern": {"first": [[0, 1]], "second": [[1, 2]]}
    });
    let r = ok(Command::ParadoxPattern, &doc);
    assert_eq!(r["status"], "failed");
    assert_eq!(r["equations"]["status"], "feasible");
}

#[test]
fn every_command_reports_digest_and_bounds() {
    for command in Command::ALL {
        let (code, r) = exec(command, &json!({}), &Options::default());
        assert_eq!(code, 2, "{}", command.name());
        assert_eq!(r["command"], command.name());
        assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);
        assert!(r["bounds"].is_object());
        assert!(r["error"]["path"].as_str().unwrap().starts_with('$'));
    }
}
