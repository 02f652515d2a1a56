//! Command dispatch and report assembly.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use tarski_core::actions::Action;
use tarski_core::config::{
    cardinality_probe, coarsen_solution, compute_configurations, con_included, verify_cell_partition, ConfigurationSet,
    InclusionBounds, InclusionReport, PartitionFamily,
};
use tarski_core::equations::{
    build_equations, counting_solution, solve_feasibility, verify_certificate, verify_solution, FeasibilityResult,
};
use tarski_core::paradox::{
    bounded_paradox_search, chain_to_decomposition, check_pingpong_cyclic, check_pingpong_subgroups,
    make_infinite_order_witness, make_nonabelian_witness, pattern_check, verify_decomposition, verify_infinite_order,
    verify_nonabelian, ChainFailure, DecompositionFailure, ParadoxicalDecomposition, PingPongFailure, SearchBounds,
    SearchOutcome, WitnessFailure,
};
use tarski_core::sets::Point;

use crate::encode;
use crate::error::{CliError, Result};
use crate::parse::{self, Node};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    ConCompute,
    EqSolve,
    EqVerify,
    Coarsen,
    CompareCon,
    ProbeCardinality,
    ParadoxVerify,
    ParadoxChain,
    ParadoxSearch,
    ParadoxPattern,
    PingpongCyclic,
    PingpongSubgroups,
    WitnessNonabelian,
    WitnessInfiniteOrder,
}

impl Command {
    pub const ALL: [Command; 14] = [
        Command::ConCompute,
        Command::EqSolve,
        Command::EqVerify,
        Command::Coarsen,
        Command::CompareCon,
        Command::ProbeCardinality,
        Command::ParadoxVerify,
        Command::ParadoxChain,
        Command::ParadoxSearch,
        Command::ParadoxPattern,
        Command::PingpongCyclic,
        Command::PingpongSubgroups,
        Command::WitnessNonabelian,
        Command::WitnessInfiniteOrder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::ConCompute => "con compute",
            Command::EqSolve => "eq solve",
            Command::EqVerify => "eq verify",
            Command::Coarsen => "coarsen",
            Command::CompareCon => "compare con",
            Command::ProbeCardinality => "probe cardinality",
            Command::ParadoxVerify => "paradox verify",
            Command::ParadoxChain => "paradox chain",
            Command::ParadoxSearch => "paradox search",
            Command::ParadoxPattern => "paradox pattern",
            Command::PingpongCyclic => "pingpong cyclic",
            Command::PingpongSubgroups => "pingpong subgroups",
            Command::WitnessNonabelian => "witness nonabelian",
            Command::WitnessInfiniteOrder => "witness infinite-order",
        }
    }
}

/// Command-line options shared by all commands.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub bound_depth: Option<usize>,
    pub bound_length: Option<usize>,
    pub bound_pieces: Option<usize>,
    pub strict_partition: bool,
    pub seed: Option<u64>,
}

pub struct Outcome {
    pub exit_code: i32,
    pub report: Value,
}

const AXIOM_SAMPLES: usize = 64;
const SEARCH_CANDIDATES: usize = 1_000_000;

struct Ctx<'a> {
    root: Node<'a>,
    options: &'a Options,
    out: Map<String, Value>,
    bounds: Map<String, Value>,
}

impl<'a> Ctx<'a> {
    fn set(&mut self, key: &str, v: Value) {
        self.out.insert(key.to_string(), v);
    }

    fn status(&mut self, s: &str) {
        self.set("status", json!(s));
    }

    fn bound(&mut self, key: &str, v: impl Into<Value>) {
        self.bounds.insert(key.to_string(), v.into());
    }

    /// Parses the `action` field of `node`, spot-checking the axioms when a
    /// seed is given.
    fn action_at(&mut self, node: Node<'_>) -> Result<Action> {
        let a = parse::action(node.field("action")?.node())?;
        if let Some(seed) = self.options.seed {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let status = match a.spot_check_axioms(&mut rng, AXIOM_SAMPLES) {
                Ok(()) => json!("ok"),
                Err(e) => json!(e.to_string()),
            };
            let key = if node.path() == "$" { "axioms".to_string() } else { format!("axioms{}", &node.path()[1..]) };
            self.set(&key, json!({"seed": seed, "samples": AXIOM_SAMPLES, "status": status}));
        }
        Ok(a)
    }

    fn action(&mut self) -> Result<Action> {
        let root = self.root;
        self.action_at(root)
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Runs `command` on the raw input document.
pub fn run(command: Command, input: &[u8], options: &Options) -> Outcome {
    let mut report = Map::new();
    report.insert("command".into(), json!(command.name()));
    report.insert("input_digest".into(), json!(sha256_hex(input)));
    let (result, bounds) = match parse::document(input) {
        Err(e) => (Err(e), Map::new()),
        Ok(doc) => {
            let mut ctx = Ctx { root: Node::root(&doc), options, out: Map::new(), bounds: Map::new() };
            let r = dispatch(command, &mut ctx);
            (r.map(|()| ctx.out), ctx.bounds)
        }
    };
    report.insert("bounds".into(), Value::Object(bounds));
    match result {
        Ok(out) => {
            report.extend(out);
            Outcome { exit_code: 0, report: Value::Object(report) }
        }
        Err(e) => {
            report.insert("status".into(), json!("error"));
            report.insert("error".into(), error_value(&e));
            Outcome { exit_code: e.exit_code(), report: Value::Object(report) }
        }
    }
}

/// Pretty JSON with a trailing newline; keys are sorted and arrays of
/// scalars stay on one line.
pub fn render(report: &Value) -> String {
    let mut s = String::new();
    write_value(&mut s, report, 0);
    s.push('\n');
    s
}

fn is_scalar(v: &Value) -> bool {
    !(v.is_array() || v.is_object())
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, x, indent + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, indent + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn error_value(e: &CliError) -> Value {
    let mut m = Map::new();
    m.insert("message".into(), json!(e.to_string()));
    match e {
        CliError::Io(_) => {
            m.insert("kind".into(), json!("io"));
        }
        CliError::Json { line, column, .. } => {
            m.insert("kind".into(), json!("parse"));
            m.insert("line".into(), json!(line));
            m.insert("column".into(), json!(column));
        }
        CliError::Schema { path, offset, .. } => {
            m.insert("kind".into(), json!(if offset.is_some() { "parse" } else { "schema" }));
            m.insert("path".into(), json!(path));
            if let Some(o) = offset {
                m.insert("offset".into(), json!(o));
            }
        }
        CliError::BoundExceeded(_) => {
            m.insert("kind".into(), json!("bound_exceeded"));
        }
    }
    Value::Object(m)
}

/// Report for an input that could not be read at all.
pub fn io_failure(command: Command, message: String) -> Outcome {
    let e = CliError::Io(message);
    let report = json!({
        "command": command.name(),
        "status": "error",
        "bounds": {},
        "error": error_value(&e),
    });
    Outcome { exit_code: e.exit_code(), report }
}

fn dispatch(command: Command, ctx: &mut Ctx<'_>) -> Result<()> {
    match command {
        Command::ConCompute => con_compute(ctx),
        Command::EqSolve => eq_solve(ctx),
        Command::EqVerify => eq_verify(ctx),
        Command::Coarsen => coarsen(ctx),
        Command::CompareCon => compare_con(ctx),
        Command::ProbeCardinality => probe_cardinality(ctx),
        Command::ParadoxVerify => paradox_verify(ctx),
        Command::ParadoxChain => paradox_chain(ctx),
        Command::ParadoxSearch => paradox_search(ctx),
        Command::ParadoxPattern => paradox_pattern(ctx),
        Command::PingpongCyclic => pingpong_cyclic(ctx),
        Command::PingpongSubgroups => pingpong_subgroups(ctx),
        Command::WitnessNonabelian => witness_nonabelian(ctx),
        Command::WitnessInfiniteOrder => witness_infinite_order(ctx),
    }
}

fn configurations(cs: &ConfigurationSet) -> Value {
    Value::Array(cs.configurations().iter().map(encode::configuration).collect())
}

fn pair_cs(node: Node<'_>, action: &Action) -> Result<ConfigurationSet> {
    let pair = parse::pair(action, node)?;
    compute_configurations(action, &pair).map_err(|e| CliError::core(node.path(), e))
}

fn config_set(ctx: &mut Ctx<'_>, extra: &[&str]) -> Result<(Action, ConfigurationSet)> {
    let root = ctx.root;
    let mut allowed = vec!["action", "tuple", "partition"];
    allowed.extend_from_slice(extra);
    root.keys(&allowed)?;
    let action = ctx.action()?;
    let cs = pair_cs(root, &action)?;
    Ok((action, cs))
}

fn witness_of_decomposition(f: &DecompositionFailure) -> Option<&Point> {
    match f {
        DecompositionFailure::Overlap { witness, .. }
        | DecompositionFailure::CoverGap { witness, .. }
        | DecompositionFailure::NotExhaustive { witness }
        | DecompositionFailure::TranslatesOverlap { witness, .. } => Some(witness),
        _ => None,
    }
}

fn failure(ctx: &mut Ctx<'_>, message: String, witness: Option<&Point>) {
    ctx.status("failed");
    ctx.set("failure", json!(message));
    if let Some(w) = witness {
        ctx.set("witness", encode::point(w));
    }
}

fn decomposition_fields(ctx: &mut Ctx<'_>, d: &ParadoxicalDecomposition) {
    ctx.set("decomposition", encode::decomposition(d));
    ctx.set("piece_count", json!(d.piece_count()));
    ctx.set("summary", json!({"a": encode::summaries(&d.a_pieces), "b": encode::summaries(&d.b_pieces)}));
}

fn con_compute(ctx: &mut Ctx<'_>) -> Result<()> {
    let (_, cs) = config_set(ctx, &[])?;
    ctx.status("ok");
    ctx.set("n", json!(cs.pair().n()));
    ctx.set("m", json!(cs.pair().m()));
    ctx.set("count", json!(cs.len()));
    ctx.set("configurations", configurations(&cs));
    let reps: Vec<Value> = cs
        .configurations()
        .iter()
        .map(|c| cs.base_cell(c).and_then(|s| s.first_point()).map_or(Value::Null, |x| encode::point(&x)))
        .collect();
    ctx.set("representatives", Value::Array(reps));
    let violations = verify_cell_partition(&cs).map_err(|e| CliError::core("$", e))?;
    ctx.set(
        "cell_partition",
        if violations.is_empty() {
            json!("ok")
        } else {
            Value::Array(violations.iter().map(|v| json!(v.to_string())).collect())
        },
    );
    Ok(())
}

fn eq_solve(ctx: &mut Ctx<'_>) -> Result<()> {
    let (_, cs) = config_set(ctx, &[])?;
    let system = build_equations(&cs);
    ctx.set("variables", configurations(&cs));
    ctx.set("rows", json!(system.row_count()));
    // Finite actions always have the counting solution; report it rather
    // than an arbitrary vertex.
    let result = if cs.action().is_finite() {
        ctx.set("method", json!("counting"));
        FeasibilityResult::Solution(counting_solution(&cs).map_err(|e| CliError::core("$", e))?)
    } else {
        ctx.set("method", json!("simplex"));
        solve_feasibility(&system)
    };
    match result {
        FeasibilityResult::Solution(f) => {
            ctx.status("feasible");
            ctx.set("verified", json!(verify_solution(&system, &f).is_ok()));
            ctx.set("solution", encode::rationals(&f));
        }
        FeasibilityResult::Infeasible(y) => {
            ctx.status("infeasible");
            ctx.set("verified", json!(verify_certificate(&system, &y).is_ok()));
            ctx.set("certificate", encode::rationals(&y));
        }
    }
    Ok(())
}

fn eq_verify(ctx: &mut Ctx<'_>) -> Result<()> {
    let (_, cs) = config_set(ctx, &["solution", "certificate"])?;
    let system = build_equations(&cs);
    let root = ctx.root;
    let outcome = match (root.get("solution")?, root.get("certificate")?) {
        (Some(s), None) => {
            ctx.set("checked", json!("solution"));
            verify_solution(&system, &parse::rationals(s.node())?).map_err(|v| v.to_string())
        }
        (None, Some(c)) => {
            ctx.set("checked", json!("certificate"));
            verify_certificate(&system, &parse::rationals(c.node())?).map_err(|v| v.to_string())
        }
        _ => return Err(root.err("expected exactly one of \"solution\" or \"certificate\"")),
    };
    match outcome {
        Ok(()) => ctx.status("verified"),
        Err(v) => {
            ctx.status("rejected");
            ctx.set("violation", json!(v));
        }
    }
    Ok(())
}

fn coarsen(ctx: &mut Ctx<'_>) -> Result<()> {
    let root = ctx.root;
    root.keys(&["action", "mode", "fine", "coarse", "solution"])?;
    let action = ctx.action()?;
    let mode = parse::refinement(root.field("mode")?.node())?;
    let fine_node = root.field("fine")?;
    fine_node.node().keys(&["tuple", "partition"])?;
    let fine = pair_cs(fine_node.node(), &action)?;
    let coarse_node = root.field("coarse")?;
    coarse_node.node().keys(&["tuple", "partition"])?;
    let coarse = pair_cs(coarse_node.node(), &action)?;
    ctx.set("mode", encode::refinement(mode));

    let (z, source) = match root.get("solution")? {
        Some(s) => (parse::rationals(s.node())?, "given"),
        None if action.is_finite() => (counting_solution(&fine).map_err(|e| CliError::core("$.fine", e))?, "counting"),
        None => match solve_feasibility(&build_equations(&fine)) {
            FeasibilityResult::Solution(f) => (f, "solver"),
            FeasibilityResult::Infeasible(y) => {
                ctx.status("infeasible");
                ctx.set("certificate", encode::rationals(&y));
                return Ok(());
            }
        },
    };
    let out = coarsen_solution(mode, &fine, &coarse, &z).map_err(|e| {
        let path = if matches!(e, tarski_core::Error::InvalidSolution(_)) { "$.solution" } else { "$" };
        CliError::core(path, e)
    })?;
    ctx.status("verified");
    ctx.set("fine_source", json!(source));
    ctx.set("fine_solution", encode::rationals(&z));
    ctx.set("solution", encode::rationals(&out));
    ctx.set("variables", configurations(&coarse));
    Ok(())
}

fn family(action: &Action, side: Node<'_>) -> Result<PartitionFamily> {
    match side.get("partitions")? {
        Some(p) => Ok(PartitionFamily::Given(p.node().list(|c| parse::partition(action, c))?)),
        None if action.is_finite() => Ok(PartitionFamily::Generated),
        None => Err(side.err("infinite actions need explicit \"partitions\"")),
    }
}

fn compare_con(ctx: &mut Ctx<'_>) -> Result<()> {
    let root = ctx.root;
    root.keys(&["first", "second"])?;
    let first = root.field("first")?;
    let second = root.field("second")?;
    first.node().keys(&["action", "partitions"])?;
    second.node().keys(&["action", "partitions"])?;
    let a = ctx.action_at(first.node())?;
    let b = ctx.action_at(second.node())?;
    let fa = family(&a, first.node())?;
    let fb = family(&b, second.node())?;
    let bounds = InclusionBounds {
        max_tuple_len: ctx.options.bound_depth.unwrap_or(1),
        max_word_len: ctx.options.bound_length.unwrap_or(1),
        max_blocks: ctx.options.bound_pieces.unwrap_or(2),
    };
    ctx.bound("tuple_length", bounds.max_tuple_len);
    ctx.bound("word_length", bounds.max_word_len);
    ctx.bound("blocks", bounds.max_blocks);
    match con_included(&a, &fa, &b, &fb, bounds).map_err(|e| CliError::core("$", e))? {
        InclusionReport::Included { pairs_checked, .. } => {
            ctx.status("included");
            ctx.set("pairs_checked", json!(pairs_checked));
        }
        InclusionReport::Counterexample { tuple, partition, configurations, .. } => {
            ctx.status("counterexample");
            ctx.set(
                "counterexample",
                json!({
                    "tuple": encode::elements(&tuple),
                    "partition": encode::partition(&partition),
                    "configurations": configurations,
                }),
            );
        }
    }
    Ok(())
}

fn probe_cardinality(ctx: &mut Ctx<'_>) -> Result<()> {
    let root = ctx.root;
    root.keys(&["action", "blocks"])?;
    let action = ctx.action()?;
    let blocks = root.field("blocks")?;
    let n = blocks.node().usize()?;
    let ok = cardinality_probe(&action, n).map_err(|e| CliError::core(blocks.node().path(), e))?;
    ctx.status("ok");
    ctx.set("blocks", json!(n));
    ctx.set("splits", json!(ok));
    Ok(())
}

fn paradox_verify(ctx: &mut Ctx<'_>) -> Result<()> {
    let root = ctx.root;
    root.keys(&["action", "decomposition"])?;
    let action = ctx.action()?;
    let dec = parse::decomposition(&action, root.field("decomposition")?.node())?;
    let strict = ctx.options.strict_partition;
    ctx.set("strict_partition", json!(strict));
    ctx.set("piece_count", json!(dec.piece_count()));
    match verify_decomposition(&action, &dec, strict) {
        Ok(()) => ctx.status("verified"),
        Err(f) => failure(ctx, f.to_string(), witness_of_decomposition(&f)),
    }
    Ok(())
}

fn paradox_chain(ctx: &mut Ctx<'_>) -> Result<()> {
    let root = ctx.root;
    root.keys(&["action", "chain"])?;
    let action = ctx.action()?;
    let chain = parse::chain(&action, root.field("chain")?.node())?;
    match chain_to_decomposition(&action, &chain) {
        Ok(out) => {
            ctx.status("verified");
            decomposition_fields(ctx, &out.decomposition);
            ctx.set("s", encode::elements(&out.s));
            ctx.set("d", encode::sets(&out.d));
            ctx.set("piece_bound", json!(out.bound));
        }
        Err(f) => {
            let witness = match &f {
                ChainFailure::Inclusion { witness, .. } | ChainFailure::CoverGap { witness } => Some(witness),
                ChainFailure::Decomposition(d) => witness_of_decomposition(d),
                _ => None,
            };
            failure(ctx, f.to_string(), witness);
        }
    }
    Ok(())
}

fn paradox_search(ctx: &mut Ctx<'_>) -> Result<()> {
    ctx.root.keys(&["action"])?;
    let action = ctx.action()?;
    let bounds = SearchBounds {
        max_pieces: ctx.options.bound_pieces.unwrap_or(4),
        depth: ctx.options.bound_depth.unwrap_or(1),
        max_word_len: ctx.options.bound_length.unwrap_or(1),
        max_candidates: SEARCH_CANDIDATES,
    };
    ctx.bound("pieces", bounds.max_pieces);
    ctx.bound("depth", bounds.depth);
    ctx.bound("word_length", bounds.max_word_len);
    ctx.bound("candidates", bounds.max_candidates);
    match bounded_paradox_search(&action, bounds).map_err(|e| CliError::core("$", e))? {
        SearchOutcome::Found(dec) => {
            ctx.status("found");
            decomposition_fields(ctx, &dec);
        }
        SearchOutcome::NoneWithinBounds { reason, .. } => {
            ctx.status("none_within_bounds");
            ctx.set("reason", json!(reason));
        }
    }
    Ok(())
}

fn paradox_pattern(ctx: &mut Ctx<'_>) -> Result<()> {
    let (_, cs) = config_set(ctx, &["pattern"])?;
    let root = ctx.root;
    let pattern = parse::pattern(root.field("pattern")?.node())?;
    let system = build_equations(&cs);
    let equations = match solve_feasibility(&system) {
        FeasibilityResult::Solution(f) => json!({"status": "feasible", "solution": encode::rationals(&f)}),
        FeasibilityResult::Infeasible(y) => json!({"status": "infeasible", "certificate": encode::rationals(&y)}),
    };
    ctx.set("equations", equations);
    match pattern_check(&cs, &pattern).map_err(|e| CliError::core("$", e))? {
        Ok(dec) => {
            ctx.status("holds");
            decomposition_fields(ctx, &dec);
        }
        Err(f) => failure(ctx, f.to_string(), None),
    }
    Ok(())
}

fn pingpong_witness(f: &PingPongFailure) -> Option<&Point> {
    match f {
        PingPongFailure::Overlap { witness, .. }
        | PingPongFailure::Cyclic { witness, .. }
        | PingPongFailure::Subgroup { witness, .. } => Some(witness),
        PingPongFailure::Precondition(_) => None,
    }
}

fn pingpong_cyclic(ctx: &mut Ctx<'_>) -> Result<()> {
    let root = ctx.root;
    root.keys(&["action", "tableau"])?;
    let action = ctx.action()?;
    let t = parse::tableau(&action, root.field("tableau")?.node())?;
    match check_pingpong_cyclic(&action, &t) {
        Ok(cert) => {
            ctx.status("certified");
            ctx.set("inclusions", json!(cert.inclusions));
            ctx.set("conclusion", json!(cert.conclusion));
        }
        Err(f) => failure(ctx, f.to_string(), pingpong_witness(&f)),
    }
    Ok(())
}

const DEFAULT_EXPONENT_BOUND: usize = 8;

fn pingpong_subgroups(ctx: &mut Ctx<'_>) -> Result<()> {
    let root = ctx.root;
    root.keys(&["action", "subgroups", "sets"])?;
    let action = ctx.action()?;
    let default = ctx.options.bound_length.unwrap_or(DEFAULT_EXPONENT_BOUND);
    let default = u32::try_from(default).map_err(|_| CliError::schema("--bound-length", "bound too large"))?;
    ctx.bound("exponent", default);
    let groups = root.field("subgroups")?.node().list(|c| parse::subgroup(&action, c, default))?;
    let sets = parse::sets(&action, root.field("sets")?.node())?;
    match check_pingpong_subgroups(&action, &groups, &sets) {
        Ok(cert) => {
            ctx.status("certified");
            ctx.set("orders", json!(cert.orders));
            ctx.set("inclusions_checked", json!(cert.inclusions_checked));
            ctx.set("exponent_bounds", json!(cert.bounds));
            ctx.set("exhaustive", json!(cert.exhaustive));
            ctx.set("conclusion", json!(cert.conclusion));
        }
        Err(f) => failure(ctx, f.to_string(), pingpong_witness(&f)),
    }
    Ok(())
}

fn witness_failure_point(f: &WitnessFailure) -> Option<&Point> {
    match f {
        WitnessFailure::Overlap { witness, .. } => Some(witness),
        _ => None,
    }
}

fn witness_nonabelian(ctx: &mut Ctx<'_>) -> Result<()> {
    let root = ctx.root;
    root.keys(&["action", "g1", "g2"])?;
    let action = ctx.action()?;
    let g1 = parse::acting_element(&action, root.field("g1")?.node())?;
    let g2 = parse::acting_element(&action, root.field("g2")?.node())?;
    let wit = match make_nonabelian_witness(&action, &g1, &g2) {
        Ok(w) => w,
        Err(tarski_core::Error::Precondition(reason)) => {
            failure(ctx, reason, None);
            return Ok(());
        }
        Err(e) => return Err(CliError::core("$", e)),
    };
    ctx.set("sets", encode::sets(&wit.sets));
    ctx.set("summary", encode::summaries(&wit.sets));
    ctx.set("g1", encode::element(&wit.g1));
    ctx.set("g2", encode::element(&wit.g2));
    if let Action::FiniteRegular(group) = &action {
        // point k of a regular action is the k-th group element
        ctx.set("points", Value::Array(group.elements().iter().map(encode::permutation).collect()));
    }
    match verify_nonabelian(&action, &wit) {
        Ok(()) => ctx.status("verified"),
        Err(f) => failure(ctx, f.to_string(), witness_failure_point(&f)),
    }
    Ok(())
}

fn witness_infinite_order(ctx: &mut Ctx<'_>) -> Result<()> {
    let root = ctx.root;
    root.keys(&["action", "element"])?;
    let action = ctx.action()?;
    let a = parse::acting_element(&action, root.field("element")?.node())?;
    let wit = match make_infinite_order_witness(&action, &a) {
        Ok(w) => w,
        Err(tarski_core::Error::Precondition(reason)) => {
            failure(ctx, reason, None);
            return Ok(());
        }
        Err(e) => return Err(CliError::core("$", e)),
    };
    let sets = [wit.e1.clone(), wit.e2.clone()];
    ctx.set("sets", encode::sets(&sets));
    ctx.set("summary", encode::summaries(&sets));
    ctx.set("element", encode::element(&wit.a));
    match verify_infinite_order(&action, &wit) {
        Ok(()) => ctx.status("verified"),
        Err(f) => failure(ctx, f.to_string(), witness_failure_point(&f)),
    }
    Ok(())
}
