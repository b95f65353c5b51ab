//! Command-line front end: argument parsing, dispatch and report rendering.
//!
//! Every invocation produces one [`Report`]. Exit codes: 0 when all identity
//! checks hold, 1 when one is violated, 2 for usage and input errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use narydiff::bench::run_bench;
use narydiff::theta::{self, DecompositionResidual, TRANSLATION_TOLERANCE};
use narydiff::verify::{run_checks, Kernels, VerifyConfig, VerifyReport};
use narydiff::{
    build_matrix, coefficients_from_roots, decompose, det_fraction_free, det_product,
    difference_nary, distance_nary, doubled_determinant, expand_reciprocal, recombine, Backend,
    Complex, Error, Float64, PointList, Rational, Scalar,
};
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const SEED_ENV: &str = "NARYDIFF_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "narydiff",
    version,
    about = "Exact n-ary differences from Vandermonde determinants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Arithmetic backend.
    #[arg(long, value_enum, default_value_t = BackendArg::Exact, global = true)]
    pub backend: BackendArg,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub output: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Exact,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct PointsArgs {
    /// Comma-separated rationals, e.g. `0,1/2,-0.25`.
    #[arg(long, allow_hyphen_values = true)]
    pub points: Option<String>,

    /// File with one rational per line; `#` lines are comments.
    #[arg(long, conflicts_with = "points")]
    pub points_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Signed difference of the points (their Vandermonde determinant).
    Diff(PointsArgs),
    /// Split the difference into substitution terms around a pivot.
    Decompose {
        #[command(flatten)]
        points: PointsArgs,
        #[arg(long, allow_hyphen_values = true)]
        pivot: Option<String>,
    },
    /// Determinant of the doubled matrix, compared with twice the difference.
    Doubled {
        #[command(flatten)]
        points: PointsArgs,
        #[arg(long, allow_hyphen_values = true)]
        pivot: Option<String>,
    },
    /// Absolute difference of distances measured from a common origin.
    Distance(PointsArgs),
    /// Simple-fraction expansion of 1 / prod(x - x_i).
    Partfrac(PointsArgs),
    /// Root-of-unity difference (always evaluated in complex floating point).
    Theta {
        #[command(flatten)]
        points: PointsArgs,
        /// Shift used for the translation check.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        shift: String,
        /// Five values a,b,c,d,f for the claimed three-term split; reported only.
        #[arg(long, allow_hyphen_values = true)]
        claim: Option<String>,
    },
    /// Seeded randomized checks of the exact identities.
    Verify {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Overridden by the NARYDIFF_SEED environment variable.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time the product formula against fraction-free elimination.
    Bench {
        /// Comma-separated sizes.
        #[arg(long = "n", value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Diff(_) => "diff",
            Command::Decompose { .. } => "decompose",
            Command::Doubled { .. } => "doubled",
            Command::Distance(_) => "distance",
            Command::Partfrac(_) => "partfrac",
            Command::Theta { .. } => "theta",
            Command::Verify { .. } => "verify",
            Command::Bench { .. } => "bench",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

impl IdentityCheck {
    fn new(name: &str, holds: bool, lhs: impl ToString, rhs: impl ToString) -> Self {
        IdentityCheck {
            name: name.to_string(),
            holds,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// One invocation's output. Key order is fixed by field order.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub backend: String,
    pub inputs: Value,
    pub results: Value,
    pub identity_checks: Vec<IdentityCheck>,
    pub timing_ms: f64,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.identity_checks.iter().all(|c| c.holds) {
            EXIT_OK
        } else {
            EXIT_IDENTITY_VIOLATED
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "backend: {}", self.backend);
        write_text_fields(&mut out, "", &self.inputs);
        write_text_fields(&mut out, "", &self.results);
        for c in &self.identity_checks {
            let status = if c.holds { "holds" } else { "VIOLATED" };
            let _ = writeln!(
                out,
                "check {}: {} (lhs {}, rhs {})",
                c.name, status, c.lhs, c.rhs
            );
        }
        let _ = writeln!(out, "timing_ms: {:.3}", self.timing_ms);
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Text => self.to_text(),
        }
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            items.iter().map(text_value).collect::<Vec<_>>().join(",")
        }
        Value::Object(map)
            if map.len() == 2 && map.contains_key("re") && map.contains_key("im") =>
        {
            format!("({}, {})", map["re"], map["im"])
        }
        other => other.to_string(),
    }
}

fn write_text_fields(out: &mut String, prefix: &str, v: &Value) {
    if let Value::Object(map) = v {
        for (k, val) in map {
            match val {
                Value::Object(inner) if !(inner.len() == 2 && inner.contains_key("re")) => {
                    write_text_fields(out, &format!("{prefix}{k}."), val)
                }
                Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                    for (i, item) in items.iter().enumerate() {
                        write_text_fields(out, &format!("{prefix}{k}[{i}]."), item);
                    }
                }
                Value::Null => {}
                _ => {
                    let _ = writeln!(out, "{prefix}{k}: {}", text_value(val));
                }
            }
        }
    }
}

/// A failed invocation: what to print and which exit code to use.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e.to_string())
    }
}

/// Short synopsis printed with usage errors.
pub fn synopsis() -> String {
    Cli::command().render_usage().to_string()
}

// ---------------------------------------------------------------------------
// Input handling
// ---------------------------------------------------------------------------

/// Splits a comma-separated list, trimming blanks.
pub fn split_list(text: &str) -> Vec<String> {
    text.split(',').map(|s| s.trim().to_string()).collect()
}

/// Reads a points file: one value per line, blank and `#` lines skipped.
pub fn read_points_file(path: &Path) -> Result<Vec<String>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_points_text(&text))
}

pub fn parse_points_text(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

fn point_strings(args: &PointsArgs) -> Result<Vec<String>, Failure> {
    match (&args.points, &args.points_file) {
        (Some(list), None) => Ok(split_list(list)),
        (None, Some(path)) => read_points_file(path),
        _ => Err(Failure::usage(
            "one of --points or --points-file is required",
        )),
    }
}

fn parse_all<S: FromStr<Err = Error>>(items: &[String]) -> Result<Vec<S>, Failure> {
    items
        .iter()
        .map(|s| s.parse::<S>().map_err(Failure::from))
        .collect()
}

fn parse_point_list<S: Scalar + FromStr<Err = Error>>(
    items: &[String],
) -> Result<PointList<S>, Failure> {
    Ok(PointList::new(parse_all(items)?)?)
}

fn require_pivot(pivot: &Option<String>, command: &str) -> Result<String, Failure> {
    pivot
        .clone()
        .ok_or_else(|| Failure::usage(format!("{command} requires --pivot")))
}

fn strings<S: ToString>(values: impl IntoIterator<Item = S>) -> Vec<String> {
    values.into_iter().map(|v| v.to_string()).collect()
}

/// Rounds to 12 significant digits for reproducible logs.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn complex_json(z: Complex) -> Value {
    json!({ "re": round_sig12(z.re), "im": round_sig12(z.im) })
}

fn residual_json(r: &DecompositionResidual) -> Value {
    json!({
        "claim": r.claim,
        "lhs": complex_json(r.lhs),
        "rhs": complex_json(r.rhs),
        "residual": complex_json(r.residual),
        "magnitude": round_sig12(r.magnitude()),
    })
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

type Outcome = (Value, Value, Vec<IdentityCheck>);

fn oracle_check<S: Scalar>(pts: &PointList<S>) -> IdentityCheck {
    let product = det_product(pts);
    let eliminated = det_fraction_free(&build_matrix(pts));
    IdentityCheck::new(
        "oracle_agreement",
        product.agrees_with(&eliminated, &product),
        &product,
        &eliminated,
    )
}

fn run_points_command<S: Scalar + FromStr<Err = Error>>(
    command: &Command,
) -> Result<Outcome, Failure> {
    match command {
        Command::Diff(args) => {
            let raw = point_strings(args)?;
            let pts = parse_point_list::<S>(&raw)?;
            let v = difference_nary(&pts)?;
            Ok((
                json!({ "points": strings(pts.iter()) }),
                json!({ "difference": v.to_string() }),
                vec![oracle_check(&pts)],
            ))
        }
        Command::Distance(args) => {
            let pts = parse_point_list::<S>(&point_strings(args)?)?;
            let d = distance_nary(&pts)?;
            Ok((
                json!({ "points": strings(pts.iter()) }),
                json!({ "distance": d.to_string() }),
                vec![oracle_check(&pts)],
            ))
        }
        Command::Decompose { points, pivot } => {
            let pivot_text = require_pivot(pivot, "decompose")?;
            let pts = parse_point_list::<S>(&point_strings(points)?)?;
            let pivot: S = pivot_text.parse()?;
            let d = decompose(&pts, &pivot)?;
            let check = IdentityCheck::new("decomposition", d.holds(), &d.total, &d.reference);
            Ok((
                json!({ "points": strings(pts.iter()), "pivot": pivot.to_string() }),
                json!({
                    "terms": strings(d.term_values()),
                    "total": d.total.to_string(),
                    "reference": d.reference.to_string(),
                }),
                vec![check],
            ))
        }
        Command::Doubled { points, pivot } => {
            let pivot_text = require_pivot(pivot, "doubled")?;
            let pts = parse_point_list::<S>(&point_strings(points)?)?;
            let pivot: S = pivot_text.parse()?;
            let rep = doubled_determinant(&pts, &pivot)?;
            let check = IdentityCheck::new(
                "doubled_determinant",
                rep.holds(),
                &rep.det_doubled,
                &rep.expected,
            );
            Ok((
                json!({ "points": strings(pts.iter()), "pivot": pivot.to_string() }),
                json!({
                    "det_doubled": rep.det_doubled.to_string(),
                    "expected": rep.expected.to_string(),
                }),
                vec![check],
            ))
        }
        Command::Partfrac(args) => {
            let roots = parse_point_list::<S>(&point_strings(args)?)?;
            let exp = expand_reciprocal(&roots)?;
            let recombined = recombine(&exp);
            let monic = coefficients_from_roots(&roots);
            let derivative = monic.poly.derivative();
            let residues_hold = exp
                .terms
                .iter()
                .all(|(r, c)| (c.clone() * derivative.eval(r)).agrees_with(&S::one(), &S::one()));
            let holds = match S::BACKEND {
                Backend::Exact => recombined.is_one(),
                Backend::Float => recombined.approx_one(),
            };
            let mut checks = vec![
                IdentityCheck::new("recombination", holds, &recombined, "1"),
                IdentityCheck::new("residues", residues_hold, "c_i * P'(x_i)", "1"),
            ];
            if roots.len() >= 2 {
                let sum = exp.coefficient_sum();
                let scale = exp.coefficients().fold(S::zero(), |a, c| a + c.abs());
                checks.push(IdentityCheck::new(
                    "coefficient_sum",
                    sum.agrees_with(&S::zero(), &scale),
                    &sum,
                    "0",
                ));
            }
            Ok((
                json!({ "points": strings(roots.iter()) }),
                json!({
                    "coefficients": strings(exp.coefficients()),
                    "polynomial": strings(monic.poly.coeffs()),
                    "recombination": strings(recombined.coeffs()),
                }),
                checks,
            ))
        }
        _ => unreachable!("not a points command"),
    }
}

fn run_theta(points: &PointsArgs, shift: &str, claim: &Option<String>) -> Result<Outcome, Failure> {
    let mut inputs = serde_json::Map::new();
    let mut results = serde_json::Map::new();
    let mut checks = Vec::new();
    let has_points = points.points.is_some() || points.points_file.is_some();
    if !has_points && claim.is_none() {
        return Err(Failure::usage(
            "theta requires --points, --points-file or --claim",
        ));
    }
    if has_points {
        let values: Vec<f64> = parse_all::<Rational>(&point_strings(points)?)?
            .iter()
            .map(Rational::to_f64)
            .collect();
        let t = shift.parse::<Rational>()?.to_f64();
        let td = theta::theta_diff(&values)?;
        let translation = theta::theta_translation_check(&values, t)?;
        inputs.insert("points".into(), json!(values));
        inputs.insert("shift".into(), json!(t));
        results.insert("order".into(), json!(td.order));
        results.insert("theta".into(), complex_json(td.theta));
        results.insert("value".into(), complex_json(td.value));
        results.insert("translation".into(), residual_json(&translation));
        checks.push(IdentityCheck::new(
            "translation_invariance",
            translation.magnitude() <= TRANSLATION_TOLERANCE,
            format!("{:e}", round_sig12(translation.magnitude())),
            format!("<= {TRANSLATION_TOLERANCE:e}"),
        ));
    }
    if let Some(claim) = claim {
        let v: Vec<f64> = parse_all::<Rational>(&split_list(claim))?
            .iter()
            .map(Rational::to_f64)
            .collect();
        let [a, b, c, d, f] = v[..] else {
            return Err(Failure::usage(
                "--claim takes exactly five values a,b,c,d,f",
            ));
        };
        inputs.insert("claim".into(), json!(v));
        let residual = theta::theta_claimed_decomposition_residual(a, b, c, d, f)?;
        results.insert("claim".into(), residual_json(&residual));
    }
    Ok((Value::Object(inputs), Value::Object(results), checks))
}

fn seed_with_env(seed: u64) -> Result<u64, Failure> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(seed),
    }
}

/// Converts a verification run into the common report shape.
pub fn verify_outcome(report: &VerifyReport) -> Outcome {
    let cfg = report.config;
    let checks_json: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "passed": c.passed,
                "failed": c.failed,
                "counterexample": c.first_failure.as_ref().map(|ce| json!({
                    "case": ce.case,
                    "points": strings(ce.points.iter()),
                    "pivot": ce.pivot.as_ref().map(|p| p.to_string()),
                    "lhs": ce.lhs,
                    "rhs": ce.rhs,
                })),
            })
        })
        .collect();
    let identity = report
        .checks
        .iter()
        .map(|c| {
            let (lhs, rhs) = match &c.first_failure {
                Some(ce) => (ce.lhs.clone(), ce.rhs.clone()),
                None => (
                    format!("{} passed", c.passed),
                    format!("{} cases", c.passed + c.failed),
                ),
            };
            IdentityCheck::new(c.name, c.holds(), lhs, rhs)
        })
        .collect();
    (
        json!({ "n_max": cfg.n_max, "cases": cfg.cases, "seed": cfg.seed }),
        json!({ "checks": checks_json }),
        identity,
    )
}

/// Runs the randomized checks with the given operations.
pub fn run_verify_with(
    n_max: usize,
    cases: usize,
    seed: u64,
    kernels: &Kernels,
) -> Result<Outcome, Failure> {
    let cfg = VerifyConfig { n_max, cases, seed };
    let report = run_checks(&cfg, kernels)?;
    Ok(verify_outcome(&report))
}

fn run_bench_command(
    sizes: &[usize],
    repeats: usize,
    seed: u64,
    backend: Backend,
) -> Result<Outcome, Failure> {
    let rows = run_bench(sizes, repeats, backend, seed)?;
    let rows_json: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "product_median_ms": r.product_median_ms,
                "fraction_free_median_ms": r.fraction_free_median_ms,
            })
        })
        .collect();
    Ok((
        json!({ "n": sizes, "repeats": repeats, "seed": seed }),
        json!({ "rows": rows_json }),
        Vec::new(),
    ))
}

/// Executes a parsed command line.
pub fn run(cli: &Cli) -> Result<Report, Failure> {
    let start = Instant::now();
    let mut backend: Backend = cli.backend.into();
    let (inputs, results, identity_checks) = match &cli.command {
        Command::Theta {
            points,
            shift,
            claim,
        } => {
            backend = Backend::Float;
            run_theta(points, shift, claim)?
        }
        Command::Verify { n_max, cases, seed } => {
            backend = Backend::Exact;
            run_verify_with(*n_max, *cases, seed_with_env(*seed)?, &Kernels::default())?
        }
        Command::Bench {
            sizes,
            repeats,
            seed,
        } => run_bench_command(sizes, *repeats, seed_with_env(*seed)?, backend)?,
        other => match backend {
            Backend::Exact => run_points_command::<Rational>(other)?,
            Backend::Float => run_points_command::<Float64>(other)?,
        },
    };
    Ok(Report {
        command: cli.command.name().to_string(),
        backend: backend.to_string(),
        inputs,
        results,
        identity_checks,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Parses arguments, runs, and returns (stdout, stderr, exit code).
pub fn main_with_args<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                (text, String::new(), code)
            } else {
                (String::new(), text, code)
            };
        }
    };
    match run(&cli) {
        Ok(report) => {
            let code = report.exit_code();
            let mut err = String::new();
            for c in report.identity_checks.iter().filter(|c| !c.holds) {
                let _ = writeln!(
                    err,
                    "identity {} violated: lhs {} rhs {}",
                    c.name, c.lhs, c.rhs
                );
            }
            if let Some(checks) = report.results.get("checks").and_then(Value::as_array) {
                for c in checks {
                    if let Some(ce) = c.get("counterexample").filter(|v| !v.is_null()) {
                        let _ = writeln!(err, "counterexample for {}: {}", c["name"], ce);
                    }
                }
            }
            let mut out = report.render(cli.output);
            if !out.ends_with('\n') {
                out.push('\n');
            }
            (out, err, code)
        }
        Err(f) => (
            String::new(),
            format!("error: {}\n{}\n", f.message, synopsis()),
            f.code,
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (String, String, i32) {
        main_with_args(std::iter::once("narydiff").chain(args.iter().copied()))
    }

    fn json_of(args: &[&str]) -> (Value, i32) {
        let mut full = args.to_vec();
        full.extend(["--output", "json"]);
        let (out, _, code) = run_args(&full);
        (serde_json::from_str(&out).unwrap(), code)
    }

    #[test]
    fn points_file_parsing() {
        let text = "# header\n1/2\n\n  -3 \n# trailing\n0.25\n";
        assert_eq!(parse_points_text(text), vec!["1/2", "-3", "0.25"]);
    }

    #[test]
    fn missing_pivot_is_usage_error() {
        let (_, err, code) = run_args(&["decompose", "--points", "0,1,2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("requires --pivot"));
        assert!(err.contains("Usage"));
        let (_, _, code) = run_args(&["doubled", "--points", "0,1,2"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn bad_inputs_are_usage_errors() {
        for args in [
            vec!["diff", "--points", "0,1,x"],
            vec!["diff", "--points", "1/0,2"],
            vec!["diff", "--points", "3"],
            vec!["diff"],
            vec!["partfrac", "--points", "1,2,1"],
            vec!["bench", "--n", "1"],
            vec!["bench", "--n", "201", "--backend", "exact"],
            vec!["verify", "--n-max", "9"],
            vec!["theta"],
            vec!["theta", "--claim", "1,2,3"],
            vec!["frobnicate"],
        ] {
            let (_, _, code) = run_args(&args);
            assert_eq!(code, EXIT_USAGE, "{args:?}");
        }
    }

    #[test]
    fn float_backend_outputs() {
        let (v, code) = json_of(&["diff", "--points", "0,1,2", "--backend", "float"]);
        assert_eq!(code, 0);
        assert_eq!(v["backend"], "float");
        assert_eq!(v["results"]["difference"], "2");
        let (v, code) = json_of(&["partfrac", "--points", "0,1,2", "--backend", "float"]);
        assert_eq!(code, 0);
        assert_eq!(v["results"]["coefficients"], json!(["0.5", "-1", "0.5"]));
    }

    #[test]
    fn theta_reports() {
        let (v, code) = json_of(&["theta", "--points", "5,3"]);
        assert_eq!(code, 0);
        assert_eq!(v["backend"], "float");
        assert_eq!(v["results"]["value"], json!({"re": 2.0, "im": 0.0}));
        let (v, code) = json_of(&["theta", "--claim", "1,2,3,0,0"]);
        assert_eq!(code, 0);
        assert_eq!(v["results"]["claim"]["magnitude"], json!(1.0));
        assert!(v["identity_checks"].as_array().unwrap().is_empty());
    }

    #[test]
    fn rounding_to_twelve_digits() {
        assert_eq!(round_sig12(0.1 + 0.2), 0.3);
        assert_eq!(round_sig12(-1e-20), -1e-20);
        assert_eq!(round_sig12(-0.0), 0.0);
        assert_eq!(round_sig12(123456789.0123456), 123456789.012);
    }

    #[test]
    fn report_exit_codes() {
        let kernels = Kernels {
            difference: |p| difference_nary(p).map(|v| -v),
            ..Kernels::default()
        };
        let (_, _, checks) = run_verify_with(3, 4, 7, &kernels).unwrap();
        let report = Report {
            command: "verify".into(),
            backend: "exact".into(),
            inputs: Value::Null,
            results: Value::Null,
            identity_checks: checks,
            timing_ms: 0.0,
        };
        assert_eq!(report.exit_code(), EXIT_IDENTITY_VIOLATED);
    }

    #[test]
    fn text_output_shape() {
        let (out, _, code) = run_args(&["decompose", "--points", "0,1,2", "--pivot", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("terms: 2,-6,6"), "{out}");
        assert!(out.contains("total: 2"));
        assert!(out.contains("check decomposition: holds"));
    }
}
