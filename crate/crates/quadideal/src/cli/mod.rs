//! Command-line front end.
//!
//! One invocation runs one subcommand against one ring. Output is
//! human-readable text by default; `--structured` emits a single
//! self-describing JSON object instead, with byte-stable field order so
//! identical invocations diff clean.
//!
//! Exit status: 0 on success, 1 on domain errors (`not_divisible`,
//! `invalid_ideal`, ...), 2 on usage or parse errors. `check-cdr` is
//! script-friendly: verdict `cdr_up_to_bound` exits 0 and `not_cdr`
//! exits 1, and `classify` does the same with its consistency flag.

mod literal;

pub use literal::{parse_generators, parse_ideal_literal};

use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::cdr::{check_cdr, classify_ring, default_norm_bound, CdrReport, Verdict};
use crate::error::{Error, Result};
use crate::factor::{check_dicc_chain, factor_ideal, DivisorChain};
use crate::ideal::{enumerate_up_to, Ideal};
use crate::oracle::{brute_divide, count_ideals};
use crate::order::RingSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Captured outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "quadideal",
    version,
    about = "Exact ideal arithmetic in quadratic orders, with containment-division checking"
)]
struct Cli {
    /// Ring specification `d=<int>,f=<int>`, e.g. `d=-5,f=1`
    #[arg(long, global = true, value_name = "SPEC")]
    ring: Option<String>,

    /// Emit one structured JSON report on stdout
    #[arg(long, global = true)]
    structured: bool,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print the ring invariants: minimal polynomial, discriminant, maximality
    RingInfo,
    /// Canonical HNF basis of the ideal generated by --I
    Hnf {
        #[arg(long = "I", value_name = "IDEAL")]
        i: String,
    },
    /// Product of the ideals --I and --J
    Mul {
        #[arg(long = "I", value_name = "IDEAL")]
        i: String,
        #[arg(long = "J", value_name = "IDEAL")]
        j: String,
    },
    /// Test whether --I is contained in --J
    Contains {
        #[arg(long = "I", value_name = "IDEAL")]
        i: String,
        #[arg(long = "J", value_name = "IDEAL")]
        j: String,
    },
    /// Exact division: print H with I = H*J, or fail if J does not divide I
    Divide {
        #[arg(long = "I", value_name = "IDEAL")]
        i: String,
        #[arg(long = "J", value_name = "IDEAL")]
        j: String,
    },
    /// Factor --I into prime ideals along a divisor chain
    Factor {
        #[arg(long = "I", value_name = "IDEAL")]
        i: String,
        /// Step budget; defaults to floor(log2 norm) + 1
        #[arg(long, value_name = "N")]
        max_steps: Option<usize>,
    },
    /// Check a list of ideals for the divisor-chain property and stationarity
    Chain {
        /// Ideal literals forming the chain, in order
        #[arg(value_name = "IDEAL", num_args = 1.., required = true)]
        ideals: Vec<String>,
    },
    /// Scan all ideal pairs up to a norm bound for containment-division violations
    CheckCdr {
        /// Universe bound; defaults to 30 for maximal orders, 50 otherwise
        #[arg(long, value_name = "N")]
        norm_bound: Option<u64>,
    },
    /// Compare the Dedekind classification (f = 1) with the bounded verdict
    Classify {
        #[arg(long, value_name = "N")]
        norm_bound: Option<u64>,
    },
    /// List every ideal of norm up to the bound, with per-norm counts
    Enumerate {
        #[arg(long, value_name = "N")]
        norm_bound: u64,
    },
    /// Brute-force witness search for I = H*J (the oracle behind divide)
    OracleDivide {
        #[arg(long = "I", value_name = "IDEAL")]
        i: String,
        #[arg(long = "J", value_name = "IDEAL")]
        j: String,
        /// Largest witness norm to search; defaults to norm(I)
        #[arg(long, value_name = "N")]
        cap: Option<u64>,
    },
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::RingInfo => "ring-info",
            Cmd::Hnf { .. } => "hnf",
            Cmd::Mul { .. } => "mul",
            Cmd::Contains { .. } => "contains",
            Cmd::Divide { .. } => "divide",
            Cmd::Factor { .. } => "factor",
            Cmd::Chain { .. } => "chain",
            Cmd::CheckCdr { .. } => "check-cdr",
            Cmd::Classify { .. } => "classify",
            Cmd::Enumerate { .. } => "enumerate",
            Cmd::OracleDivide { .. } => "oracle-divide",
        }
    }
}

/// Entry point used by the binary: wires up `std::env::args`.
pub fn main_from_env() -> i32 {
    let result = run_from_args(std::env::args());
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    result.exit_code
}

/// Run one invocation from an explicit argument list (the first element
/// is the program name, as in `std::env::args`). Nothing is printed;
/// the captured streams and exit code come back in the result.
pub fn run_from_args<I, S>(args: I) -> RunResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    RunResult { exit_code: EXIT_OK, stdout: rendered, stderr: String::new() }
                }
                _ => RunResult { exit_code: EXIT_USAGE, stdout: String::new(), stderr: rendered },
            };
        }
    };
    execute(cli)
}

fn execute(cli: Cli) -> RunResult {
    let command = cli.command.name();
    let ring_arg = match &cli.ring {
        Some(spec) => spec,
        None => {
            let err = Error::ParseError {
                position: 0,
                message: "missing required --ring <SPEC>".to_string(),
            };
            return failure(None, command, cli.structured, &err);
        }
    };
    let ring: RingSpec = match ring_arg.parse() {
        Ok(ring) => ring,
        Err(err) => return failure(None, command, cli.structured, &err),
    };
    match dispatch(&ring, &cli.command) {
        Ok(outcome) => {
            let stdout = if cli.structured {
                let mut object = Map::new();
                object.insert("ring".into(), ring_json(&ring));
                object.insert("command".into(), Value::String(command.to_string()));
                object.insert("inputs".into(), Value::Object(outcome.inputs));
                object.insert("result".into(), outcome.result);
                if let Some(violations) = outcome.violations {
                    object.insert("violations".into(), violations);
                }
                if let Some(chain) = outcome.chain {
                    object.insert("chain".into(), chain);
                }
                let mut rendered = serde_json::to_string_pretty(&Value::Object(object))
                    .expect("report serializes");
                rendered.push('\n');
                rendered
            } else {
                outcome.text
            };
            RunResult { exit_code: outcome.exit_code, stdout, stderr: String::new() }
        }
        Err(err) => failure(Some(&ring), command, cli.structured, &err),
    }
}

fn failure(ring: Option<&RingSpec>, command: &str, structured: bool, err: &Error) -> RunResult {
    let exit_code = match err {
        Error::ParseError { .. } => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    };
    if structured {
        let object = json!({
            "ring": ring.map(ring_json).unwrap_or(Value::Null),
            "command": command,
            "error": { "code": err.code(), "message": err.to_string() },
        });
        let mut stdout = serde_json::to_string_pretty(&object).expect("error report serializes");
        stdout.push('\n');
        RunResult { exit_code, stdout, stderr: String::new() }
    } else {
        RunResult {
            exit_code,
            stdout: String::new(),
            stderr: format!("error[{}]: {}\n", err.code(), err),
        }
    }
}

/// What a subcommand hands back to the driver: text for humans, report
/// pieces for --structured, and the exit code.
struct Outcome {
    text: String,
    inputs: Map<String, Value>,
    result: Value,
    violations: Option<Value>,
    chain: Option<Value>,
    exit_code: i32,
}

impl Outcome {
    fn new(text: String, inputs: Map<String, Value>, result: Value) -> Self {
        Outcome { text, inputs, result, violations: None, chain: None, exit_code: EXIT_OK }
    }
}

fn dispatch(ring: &RingSpec, cmd: &Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::RingInfo => ring_info(ring),
        Cmd::Hnf { i } => hnf(ring, i),
        Cmd::Mul { i, j } => mul(ring, i, j),
        Cmd::Contains { i, j } => contains(ring, i, j),
        Cmd::Divide { i, j } => divide(ring, i, j),
        Cmd::Factor { i, max_steps } => factor(ring, i, *max_steps),
        Cmd::Chain { ideals } => chain(ring, ideals),
        Cmd::CheckCdr { norm_bound } => check_cdr_cmd(ring, *norm_bound),
        Cmd::Classify { norm_bound } => classify_cmd(ring, *norm_bound),
        Cmd::Enumerate { norm_bound } => enumerate_cmd(ring, *norm_bound),
        Cmd::OracleDivide { i, j, cap } => oracle_divide_cmd(ring, i, j, *cap),
    }
}

fn parse_flag_literal(ring: &RingSpec, flag: &str, literal: &str) -> Result<Ideal> {
    parse_ideal_literal(ring, literal).map_err(|err| match err {
        Error::ParseError { position, message } => Error::ParseError {
            position,
            message: format!("in --{flag} literal {literal:?}: {message}"),
        },
        other => other,
    })
}

fn json_int(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse().expect("integer literal is a JSON number"))
}

fn json_triple(ideal: &Ideal) -> Value {
    Value::Array(vec![json_int(ideal.a()), json_int(ideal.b()), json_int(ideal.c())])
}

fn ring_json(ring: &RingSpec) -> Value {
    let mut object = Map::new();
    object.insert("d".into(), json_int(ring.d()));
    object.insert("f".into(), json_int(ring.conductor()));
    object.insert("T".into(), json_int(ring.theta_trace()));
    object.insert("Nc".into(), json_int(ring.theta_norm()));
    object.insert("disc".into(), json_int(ring.disc()));
    Value::Object(object)
}

fn chain_json(chain: &DivisorChain) -> Value {
    json!({
        "start": json_triple(&chain.start),
        "steps": chain
            .steps
            .iter()
            .map(|s| json!({ "prime": json_triple(&s.prime), "quotient": json_triple(&s.quotient) }))
            .collect::<Vec<_>>(),
        "stationary": chain.stationary,
    })
}

fn violations_json(report: &CdrReport) -> Value {
    Value::Array(
        report
            .violations
            .iter()
            .map(|v| json!({ "I": json_triple(&v.i), "J": json_triple(&v.j) }))
            .collect(),
    )
}

fn inputs(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn ring_info(ring: &RingSpec) -> Result<Outcome> {
    let mut text = String::new();
    let _ = writeln!(text, "ring: {ring}");
    let _ = writeln!(text, "theta minimal polynomial: {}", ring.min_poly_string());
    let _ = writeln!(text, "theta trace (T): {}", ring.theta_trace());
    let _ = writeln!(text, "theta norm (Nc): {}", ring.theta_norm());
    let _ = writeln!(text, "discriminant: {}", ring.disc());
    let _ = writeln!(text, "maximal order: {}", if ring.is_maximal() { "yes" } else { "no" });
    let result = json!({
        "maximal": ring.is_maximal(),
        "min_poly": ring.min_poly_string(),
    });
    Ok(Outcome::new(text, inputs(vec![]), result))
}

fn hnf(ring: &RingSpec, literal: &str) -> Result<Outcome> {
    let ideal = parse_flag_literal(ring, "I", literal)?;
    let text = format!("{ideal}\n");
    let result = json!({ "hnf": json_triple(&ideal) });
    Ok(Outcome::new(text, inputs(vec![("I", json_triple(&ideal))]), result))
}

fn mul(ring: &RingSpec, lit_i: &str, lit_j: &str) -> Result<Outcome> {
    let i = parse_flag_literal(ring, "I", lit_i)?;
    let j = parse_flag_literal(ring, "J", lit_j)?;
    let product = i.mul(&j)?;
    let mut text = String::new();
    let _ = writeln!(text, "I = {i}");
    let _ = writeln!(text, "J = {j}");
    let _ = writeln!(text, "I*J = {product}");
    let result = json!({ "product": json_triple(&product) });
    Ok(Outcome::new(
        text,
        inputs(vec![("I", json_triple(&i)), ("J", json_triple(&j))]),
        result,
    ))
}

fn contains(ring: &RingSpec, lit_i: &str, lit_j: &str) -> Result<Outcome> {
    let i = parse_flag_literal(ring, "I", lit_i)?;
    let j = parse_flag_literal(ring, "J", lit_j)?;
    let verdict = j.contains(&i)?;
    let mut text = String::new();
    let _ = writeln!(text, "I = {i}");
    let _ = writeln!(text, "J = {j}");
    let _ = writeln!(text, "I contained in J: {verdict}");
    let result = json!({ "contains": verdict });
    Ok(Outcome::new(
        text,
        inputs(vec![("I", json_triple(&i)), ("J", json_triple(&j))]),
        result,
    ))
}

fn divide(ring: &RingSpec, lit_i: &str, lit_j: &str) -> Result<Outcome> {
    let i = parse_flag_literal(ring, "I", lit_i)?;
    let j = parse_flag_literal(ring, "J", lit_j)?;
    match i.divide_exact(&j)? {
        Some(witness) => {
            let mut text = String::new();
            let _ = writeln!(text, "I = {i}");
            let _ = writeln!(text, "J = {j}");
            let _ = writeln!(text, "witness H with I = H*J: {witness}");
            let result = json!({ "witness": json_triple(&witness) });
            Ok(Outcome::new(
                text,
                inputs(vec![("I", json_triple(&i)), ("J", json_triple(&j))]),
                result,
            ))
        }
        None => {
            if j.contains(&i)? {
                // The interesting failure: the containment-division
                // property itself is violated on this pair.
                Err(Error::NotDivisible { i: i.to_string(), j: j.to_string() })
            } else {
                Err(Error::NotDivisible {
                    i: format!("{i} (not even contained in the divisor)"),
                    j: j.to_string(),
                })
            }
        }
    }
}

fn factor(ring: &RingSpec, lit_i: &str, max_steps: Option<usize>) -> Result<Outcome> {
    let i = parse_flag_literal(ring, "I", lit_i)?;
    let factorization = factor_ideal(&i, max_steps)?;
    let mut product = Ideal::unit(ring);
    for prime in &factorization.factors {
        product = product.mul(prime)?;
    }
    if product != i {
        return Err(Error::InternalArithmeticBug {
            details: format!("factor product {product} does not rebuild {i}"),
        });
    }
    let mut text = String::new();
    let _ = writeln!(text, "I = {i} (norm {})", i.norm());
    for (k, step) in factorization.chain.steps.iter().enumerate() {
        let _ = writeln!(
            text,
            "step {}: prime {} (norm {}), quotient {}",
            k + 1,
            step.prime,
            step.prime.norm(),
            step.quotient
        );
    }
    let rendered: Vec<String> =
        factorization.factors.iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "factors: {}", if rendered.is_empty() { "(none)".into() } else { rendered.join(" * ") });
    let _ = writeln!(text, "product reconstructs I: {product}");
    let _ = writeln!(text, "chain stationary: {}", factorization.chain.stationary);
    let result = json!({
        "factors": factorization.factors.iter().map(json_triple).collect::<Vec<_>>(),
        "product": json_triple(&product),
    });
    let mut inputs_map = inputs(vec![("I", json_triple(&i))]);
    if let Some(max_steps) = max_steps {
        inputs_map.insert("max_steps".into(), Value::from(max_steps));
    }
    let mut outcome = Outcome::new(text, inputs_map, result);
    outcome.chain = Some(chain_json(&factorization.chain));
    Ok(outcome)
}

fn chain(ring: &RingSpec, literals: &[String]) -> Result<Outcome> {
    let mut ideals = Vec::with_capacity(literals.len());
    for (index, literal) in literals.iter().enumerate() {
        ideals.push(parse_ideal_literal(ring, literal).map_err(|err| match err {
            Error::ParseError { position, message } => Error::ParseError {
                position,
                message: format!("in chain entry {index} {literal:?}: {message}"),
            },
            other => other,
        })?);
    }
    let check = check_dicc_chain(&ideals)?;
    let mut text = String::new();
    let _ = writeln!(text, "chain entries: {}", ideals.len());
    for (k, ideal) in ideals.iter().enumerate() {
        let _ = writeln!(text, "  {k}: {ideal} (norm {})", ideal.norm());
    }
    let _ = writeln!(text, "is divisor chain: {}", check.is_divisor_chain);
    match check.stationary_at {
        Some(index) => {
            let _ = writeln!(text, "stationary at index: {index}");
        }
        None => {
            let _ = writeln!(text, "stationary at index: none (last two entries differ)");
        }
    }
    let result = json!({
        "is_divisor_chain": check.is_divisor_chain,
        "stationary_at": check.stationary_at,
    });
    let input_triples: Vec<Value> = ideals.iter().map(json_triple).collect();
    Ok(Outcome::new(text, inputs(vec![("ideals", Value::Array(input_triples))]), result))
}

fn check_cdr_cmd(ring: &RingSpec, norm_bound: Option<u64>) -> Result<Outcome> {
    let bound = norm_bound.unwrap_or_else(|| default_norm_bound(ring));
    let report = check_cdr(ring, bound)?;
    let mut text = String::new();
    let _ = writeln!(
        text,
        "ring {ring}: {} (Dedekind expected: {})",
        if ring.is_maximal() { "maximal order" } else { "non-maximal order" },
        report.dedekind_expected
    );
    let _ = writeln!(
        text,
        "universe: {} ideals of norm <= {}, {} ordered pairs",
        report.universe_size, report.norm_bound, report.pairs_checked
    );
    let _ = writeln!(text, "violations: {}", report.violations.len());
    for violation in &report.violations {
        let _ = writeln!(
            text,
            "  I = {} contained in J = {}, but J does not divide I",
            violation.i, violation.j
        );
    }
    let _ = writeln!(text, "verdict: {}", report.verdict);
    let result = json!({
        "verdict": report.verdict.as_str(),
        "universe_size": report.universe_size,
        "pairs_checked": report.pairs_checked,
        "dedekind_expected": report.dedekind_expected,
    });
    let mut outcome = Outcome::new(
        text,
        inputs(vec![("norm_bound", Value::from(report.norm_bound))]),
        result,
    );
    outcome.violations = Some(violations_json(&report));
    outcome.exit_code = match report.verdict {
        Verdict::CdrUpToBound => EXIT_OK,
        Verdict::NotCdr => EXIT_DOMAIN,
    };
    Ok(outcome)
}

fn classify_cmd(ring: &RingSpec, norm_bound: Option<u64>) -> Result<Outcome> {
    let bound = norm_bound.unwrap_or_else(|| default_norm_bound(ring));
    let classification = classify_ring(ring, bound)?;
    let mut text = String::new();
    let _ = writeln!(text, "ring {ring}");
    let _ = writeln!(text, "dedekind (conductor = 1): {}", classification.dedekind);
    let _ = writeln!(text, "cdr verdict (bound {bound}): {}", classification.verdict);
    let _ = writeln!(text, "consistent: {}", classification.consistent);
    let note = (!classification.consistent && !classification.dedekind).then(|| {
        format!(
            "no violation found up to norm bound {bound}; raise --norm-bound: \
             a bounded check can only refute the containment-division property"
        )
    });
    if let Some(note) = &note {
        let _ = writeln!(text, "note: {note}");
    }
    let mut result = Map::new();
    result.insert("dedekind".into(), Value::Bool(classification.dedekind));
    result.insert("cdr_verdict".into(), Value::String(classification.verdict.as_str().into()));
    result.insert("consistent".into(), Value::Bool(classification.consistent));
    if let Some(note) = note {
        result.insert("note".into(), Value::String(note));
    }
    let mut outcome = Outcome::new(
        text,
        inputs(vec![("norm_bound", Value::from(bound))]),
        Value::Object(result),
    );
    outcome.exit_code = if classification.consistent { EXIT_OK } else { EXIT_DOMAIN };
    Ok(outcome)
}

fn enumerate_cmd(ring: &RingSpec, norm_bound: u64) -> Result<Outcome> {
    let universe = enumerate_up_to(ring, norm_bound);
    let counts = count_ideals(ring, norm_bound);
    let mut text = String::new();
    let _ = writeln!(
        text,
        "ideals of norm <= {} in {}: {}",
        norm_bound,
        ring,
        universe.len()
    );
    for ideal in universe.iter() {
        let _ = writeln!(text, "  norm {}: {}", ideal.norm(), ideal);
    }
    let result = json!({
        "count": universe.len(),
        "counts_by_norm": counts,
        "ideals": universe.iter().map(json_triple).collect::<Vec<_>>(),
    });
    Ok(Outcome::new(
        text,
        inputs(vec![("norm_bound", Value::from(norm_bound))]),
        result,
    ))
}

fn oracle_divide_cmd(
    ring: &RingSpec,
    lit_i: &str,
    lit_j: &str,
    cap: Option<u64>,
) -> Result<Outcome> {
    let i = parse_flag_literal(ring, "I", lit_i)?;
    let j = parse_flag_literal(ring, "J", lit_j)?;
    let cap_big = cap.map(BigInt::from).unwrap_or_else(|| i.norm());
    let witness = brute_divide(&i, &j, &cap_big)?;
    let mut text = String::new();
    let _ = writeln!(text, "I = {i}");
    let _ = writeln!(text, "J = {j}");
    let _ = writeln!(text, "search cap (witness norm): {cap_big}");
    match &witness {
        Some(h) => {
            let _ = writeln!(text, "witness: {h}");
        }
        None => {
            let _ = writeln!(text, "witness: none");
        }
    }
    let result = json!({
        "witness": witness.as_ref().map(json_triple).unwrap_or(Value::Null),
    });
    Ok(Outcome::new(
        text,
        inputs(vec![
            ("I", json_triple(&i)),
            ("J", json_triple(&j)),
            ("cap", json_int(&cap_big)),
        ]),
        result,
    ))
}
