//! Command-line front end: `compute`, `verify` and `table`.
//!
//! All output is assembled in memory and written only once the command has
//! succeeded, so a failing run never leaves partial output behind.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 malformed input or
//! unknown identity, 3 a size bound was exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Number, Value};

use crate::error::Error;
use crate::hall_littlewood::{gaussian, p_lambda, r_lambda, schur_p_coset, schur_s, v_m};
use crate::identities::{self, Identity, Instance, InstanceFamily, Mode, VerificationReport};
use crate::perm::DEFAULT_PERMUTATION_BOUND;
use crate::poly::Polynomial;
use crate::sequence::IntSequence;

/// Largest `m`, `a` or `b` accepted for polynomials in `t` alone.
pub const T_INDEX_BOUND: usize = 64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hlgysin", version, about = "Exact push-forward formulas for Hall-Littlewood classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one polynomial.
    Compute(ComputeArgs),
    /// Run a verification suite and print one report line per instance.
    Verify(VerifyArgs),
    /// Print a table of polynomials over a range of parameters.
    Table(TableArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    R,
    P,
    SchurS,
    SchurP,
    Gaussian,
    V,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::R => "r",
            Kind::P => "p",
            Kind::SchurS => "schur-s",
            Kind::SchurP => "schur-p",
            Kind::Gaussian => "gaussian",
            Kind::V => "v",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, Default)]
enum Format {
    #[default]
    Text,
    Latex,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default)]
enum SuiteMode {
    #[default]
    Exhaustive,
    Random,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated sequence, e.g. `2,1,0`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    identity: String,
    /// Check a single rank; shorthand for `--n-min N --n-max N`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long, default_value_t = 4)]
    n_max: usize,
    /// Restrict Grassmann splits to this `q`.
    #[arg(long)]
    q: Option<usize>,
    #[arg(long, default_value_t = 2)]
    entry_max: u32,
    #[arg(long, value_enum, default_value_t)]
    mode: SuiteMode,
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Single instance instead of a family.
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    nu: Option<String>,
    #[arg(long)]
    sigma: Option<String>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    /// Print elapsed milliseconds in the last field instead of `-`.
    #[arg(long)]
    timing: bool,
    /// Directory for witness files of failing instances.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    entry_max: u32,
    #[arg(long, default_value_t = 4)]
    m_max: usize,
    #[arg(long, default_value_t = 2)]
    a_max: usize,
    #[arg(long, default_value_t = 2)]
    b_max: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failed command: exit code and message.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundExceeded { .. } => EXIT_BOUND,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn check_bound(n: usize, bound: usize) -> Result<(), Failure> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound }.into());
    }
    Ok(())
}

fn required<T: Copy>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| usage(format!("missing --{flag}")))
}

fn sequence(text: Option<&String>, flag: &str) -> Result<IntSequence, Failure> {
    let text = text.ok_or_else(|| usage(format!("missing --{flag}")))?;
    Ok(text.parse::<IntSequence>()?)
}

/// One computed entry: a kind, its parameters, and the polynomial.
struct Entry {
    kind: Kind,
    params: Vec<(&'static str, Value)>,
    result: Result<Polynomial, Error>,
}

impl Entry {
    fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| match v {
                Value::Array(items) => {
                    let parts: Vec<String> = items.iter().map(Value::to_string).collect();
                    format!("{k}=({})", parts.join(","))
                }
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn to_json(&self) -> Value {
        let params: Map<String, Value> = self.params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        let mut object = json!({ "kind": self.kind.name(), "params": params });
        match &self.result {
            Ok(p) => object["terms"] = terms_json(p),
            Err(e) => {
                object["terms"] = Value::Null;
                object["error"] = Value::String(e.to_string());
            }
        }
        object
    }
}

fn terms_json(p: &Polynomial) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| {
                let coeff: Number = c.to_string().parse().expect("integers are JSON numbers");
                json!({
                    "coeff": coeff,
                    "x_exponents": e.x_exponents(),
                    "t_exponent": e.t_exponent(),
                })
            })
            .collect(),
    )
}

fn seq_json(s: &IntSequence) -> Value {
    json!(s.entries())
}

fn polynomial_entry(kind: Kind, n: usize, lambda: &IntSequence) -> Entry {
    let result = match kind {
        Kind::R => r_lambda(n, lambda),
        Kind::P => p_lambda(n, lambda),
        Kind::SchurS => schur_s(lambda, n),
        Kind::SchurP => schur_p_coset(lambda, n),
        Kind::Gaussian | Kind::V => unreachable!("indexed by integers"),
    };
    Entry {
        kind,
        params: vec![("n", json!(n)), ("lambda", seq_json(lambda))],
        result,
    }
}

fn gaussian_entry(a: usize, b: usize) -> Entry {
    Entry {
        kind: Kind::Gaussian,
        params: vec![("a", json!(a)), ("b", json!(b))],
        result: Ok(gaussian(a, b)),
    }
}

fn v_entry(m: usize) -> Entry {
    Entry {
        kind: Kind::V,
        params: vec![("m", json!(m))],
        result: Ok(v_m(m)),
    }
}

/// Sequences accepted by `compute` for each kind. Padding is never implied:
/// `r`, `p` and `schur-s` take exactly `n` entries.
fn check_sequence(kind: Kind, n: usize, lambda: &IntSequence) -> Result<(), Failure> {
    match kind {
        Kind::SchurP => {
            if !lambda.is_strict_partition() {
                return Err(Error::NotStrict(lambda.to_string()).into());
            }
            if lambda.len() > n {
                return Err(Error::LengthMismatch { expected: n, actual: lambda.len() }.into());
            }
        }
        _ => {
            if lambda.len() != n {
                return Err(Error::LengthMismatch { expected: n, actual: lambda.len() }.into());
            }
            if kind == Kind::SchurS && !lambda.is_partition() {
                return Err(Error::NotAPartition(lambda.to_string()).into());
            }
        }
    }
    Ok(())
}

fn compute(args: &ComputeArgs) -> Result<String, Failure> {
    let entry = match args.kind {
        Kind::Gaussian => {
            let (a, b) = (required(args.a, "a")?, required(args.b, "b")?);
            check_bound(a.max(b), T_INDEX_BOUND)?;
            gaussian_entry(a, b)
        }
        Kind::V => {
            let m = required(args.m, "m")?;
            check_bound(m, T_INDEX_BOUND)?;
            v_entry(m)
        }
        kind => {
            let n = required(args.n, "n")?;
            let lambda = sequence(args.lambda.as_ref(), "lambda")?;
            check_sequence(kind, n, &lambda)?;
            check_bound(n, DEFAULT_PERMUTATION_BOUND)?;
            polynomial_entry(kind, n, &lambda)
        }
    };
    let p = entry.result.as_ref().map_err(|e| Failure::from(e.clone()))?;
    Ok(match args.format {
        Format::Text => format!("{p}\n"),
        Format::Latex => format!("{}\n", p.to_latex()),
        Format::Json => format!("{}\n", entry.to_json()),
    })
}

fn table(args: &TableArgs) -> Result<String, Failure> {
    let entries: Vec<Entry> = match args.kind {
        Kind::Gaussian => {
            check_bound(args.a_max.max(args.b_max), T_INDEX_BOUND)?;
            (0..=args.a_max)
                .flat_map(|a| (0..=args.b_max).map(move |b| gaussian_entry(a, b)))
                .collect()
        }
        Kind::V => {
            check_bound(args.m_max, T_INDEX_BOUND)?;
            (0..=args.m_max).map(v_entry).collect()
        }
        kind => {
            let n = required(args.n, "n")?;
            check_bound(n, DEFAULT_PERMUTATION_BOUND)?;
            let e = args.entry_max;
            let indices = match kind {
                Kind::R | Kind::P => IntSequence::all_bounded(n, e),
                Kind::SchurS => IntSequence::partitions_in_box(n, e),
                _ => IntSequence::strict_partitions(n, e),
            };
            indices.iter().map(|lambda| polynomial_entry(kind, n, lambda)).collect()
        }
    };
    let render = |entry: &Entry, latex: bool| match (&entry.result, latex) {
        (Ok(p), false) => p.to_text(),
        (Ok(p), true) => format!("${}$", p.to_latex()),
        (Err(e), _) => format!("error: {e}"),
    };
    Ok(match args.format {
        Format::Text => entries
            .iter()
            .map(|e| format!("{}: {}\n", e.params_text(), render(e, false)))
            .collect(),
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{ll}\n");
            for e in &entries {
                out.push_str(&format!("${}$ & {} \\\\\n", e.params_text(), render(e, true)));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
        Format::Json => format!("{}\n", Value::Array(entries.iter().map(Entry::to_json).collect())),
    })
}

/// The instance described by the single-instance flags, if any were given.
fn single_instance(identity: Identity, args: &VerifyArgs) -> Result<Option<Instance>, Failure> {
    let given = args.lambda.is_some()
        || args.mu.is_some()
        || args.nu.is_some()
        || args.sigma.is_some()
        || args.a.is_some()
        || args.b.is_some();
    if !given {
        return Ok(None);
    }
    let instance = match identity {
        Identity::LemmaSum => Instance::Rank { n: required(args.n, "n")? },
        Identity::Divisibility | Identity::StraightenS | Identity::JacobiTrudi => {
            let lambda = sequence(args.lambda.as_ref(), "lambda")?;
            Instance::Sequence { n: args.n.unwrap_or(lambda.len()), lambda }
        }
        Identity::SchurP => {
            let nu = sequence(args.nu.as_ref().or(args.lambda.as_ref()), "nu")?;
            Instance::Sequence { n: required(args.n, "n")?, lambda: nu }
        }
        Identity::Juxtaposition | Identity::TheoremMain | Identity::T0Jlp => {
            let lambda = sequence(args.lambda.as_ref(), "lambda")?;
            let mu = sequence(args.mu.as_ref(), "mu")?;
            let n = args.n.unwrap_or(lambda.len() + mu.len());
            Instance::Split { n, q: args.q.unwrap_or(lambda.len()), lambda, mu }
        }
        Identity::TMinusOne | Identity::CorGaussian => {
            let nu = sequence(args.nu.as_ref(), "nu")?;
            let sigma = sequence(args.sigma.as_ref(), "sigma")?;
            Instance::StrictSplit { n: required(args.n, "n")?, q: required(args.q, "q")?, nu, sigma }
        }
        Identity::GaussianMinusOne => Instance::Gaussian { a: required(args.a, "a")?, b: required(args.b, "b")? },
    };
    Ok(Some(instance))
}

fn instance_rank(instance: &Instance) -> usize {
    match instance {
        Instance::Rank { n } | Instance::Sequence { n, .. } => *n,
        Instance::Split { n, .. } | Instance::StrictSplit { n, .. } => *n,
        Instance::Gaussian { a, b } => (*a).max(*b) as usize,
    }
}

fn verify(args: &VerifyArgs, stderr: &mut dyn Write) -> Result<(String, bool), Failure> {
    let identity: Identity = args.identity.parse()?;
    let bound = if identity == Identity::GaussianMinusOne {
        T_INDEX_BOUND
    } else {
        DEFAULT_PERMUTATION_BOUND
    };
    let reports: Vec<VerificationReport> = match single_instance(identity, args)? {
        Some(instance) => {
            check_bound(instance_rank(&instance), bound)?;
            vec![identities::verify_instance(identity, &instance)?]
        }
        None => {
            let n_max = args.n.unwrap_or(args.n_max);
            let n_min = args.n.or(args.n_min).unwrap_or(1);
            if identity == Identity::GaussianMinusOne {
                check_bound(args.entry_max as usize, bound)?;
            } else {
                check_bound(n_max, bound)?;
            }
            let family = InstanceFamily {
                n_min,
                n_max,
                q: args.q,
                entry_bound: args.entry_max,
                mode: match args.mode {
                    SuiteMode::Exhaustive => Mode::Exhaustive,
                    SuiteMode::Random => Mode::Randomized { count: args.count, seed: args.seed },
                },
            };
            identities::run_suite(&family, identity)
        }
    };
    let mut out = String::new();
    for report in &reports {
        out.push_str(&report.line(args.timing));
        out.push('\n');
        if let identities::Outcome::Fail { reason, .. } = &report.outcome {
            let _ = writeln!(stderr, "{}, {}: {reason}", report.identity, report.instance);
        }
    }
    if let Some(dir) = &args.out {
        identities::write_witnesses(&reports, dir).map_err(|e| usage(format!("writing witnesses: {e}")))?;
    }
    let failed = reports.iter().filter(|r| r.failed()).count();
    let skipped = reports.iter().filter(|r| r.status() == "SKIP").count();
    let _ = writeln!(
        stderr,
        "{} instances: {} passed, {failed} failed, {skipped} skipped",
        reports.len(),
        reports.len() - failed - skipped
    );
    Ok((out, failed == 0))
}

fn emit(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("writing {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| usage(format!("writing output: {e}"))),
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute(args) => compute(args).and_then(|text| emit(&text, args.out.as_ref(), stdout).map(|_| EXIT_OK)),
        Command::Table(args) => table(args).and_then(|text| emit(&text, args.out.as_ref(), stdout).map(|_| EXIT_OK)),
        Command::Verify(args) => verify(args, stderr).and_then(|(text, ok)| {
            emit(&text, None, stdout)?;
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hlgysin").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_examples() {
        assert_eq!(run_args(&["compute", "--kind", "v", "--m", "3"]).1, "1 + 2*t + 2*t^2 + t^3\n");
        assert_eq!(run_args(&["compute", "--kind", "p", "--n", "2", "--lambda", "1,1"]).1, "1 * x1^1 x2^1\n");
        assert_eq!(run_args(&["compute", "--kind", "gaussian", "--a", "1", "--b", "1"]).1, "1 + t\n");
    }

    #[test]
    fn compute_formats() {
        let (code, out, _) = run_args(&["compute", "--kind", "r", "--n", "2", "--lambda", "2,0", "--format", "latex"]);
        assert_eq!(code, 0);
        assert_eq!(out, "x_{1}^{2} + x_{1} x_{2} - x_{1} x_{2} t + x_{2}^{2}\n");
        let (_, out, _) = run_args(&["compute", "--kind", "p", "--n", "2", "--lambda", "1,1", "--format", "json"]);
        let value: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(value["kind"], "p");
        assert_eq!(value["params"]["lambda"], json!([1, 1]));
        assert_eq!(value["terms"], json!([{"coeff": 1, "x_exponents": [1, 1], "t_exponent": 0}]));
    }

    #[test]
    fn compute_errors() {
        assert_eq!(run_args(&["compute", "--kind", "r", "--n", "2", "--lambda", "1,x"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["compute", "--kind", "r", "--n", "3", "--lambda", "1,0"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["compute", "--kind", "r", "--n", "2"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["compute", "--kind", "nope"]).0, EXIT_USAGE);
        let (code, out, _) = run_args(&["compute", "--kind", "r", "--n", "9", "--lambda", "0,0,0,0,0,0,0,0,0"]);
        assert_eq!((code, out.as_str()), (EXIT_BOUND, ""));
    }

    #[test]
    fn verify_examples() {
        let (code, out, _) = run_args(&["verify", "--identity", "lemma-sum", "--n-max", "5"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 5);
        assert!(out.lines().all(|l| l.contains(", PASS, ")));
        let (code, out, _) = run_args(&[
            "verify", "--identity", "theorem-main", "--n-max", "3", "--entry-max", "2", "--mode", "exhaustive",
        ]);
        assert_eq!(code, 0);
        assert!(out.lines().count() > 0 && out.lines().all(|l| l.contains(", PASS, ")));
        assert_eq!(run_args(&["verify", "--identity", "bogus"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "--identity", "lemma-sum", "--n-max", "12"]).0, EXIT_BOUND);
    }

    #[test]
    fn verify_single_instance_and_failure_code() {
        let (code, out, _) = run_args(&["verify", "--identity", "theorem-main", "--lambda", "2,0", "--mu", "2,0"]);
        assert_eq!(code, 0);
        assert_eq!(out, "theorem-main, n=4 q=2 lambda=(2,0) mu=(2,0), PASS, -\n");
        let (code, out, err) = run_args(&["verify", "--identity", "divisibility", "--lambda", "0,0,2,0"]);
        assert_eq!(code, EXIT_FAILED);
        assert!(out.contains("FAIL"));
        assert!(err.contains("does not divide"));
    }

    #[test]
    fn verify_is_deterministic() {
        let args = ["verify", "--identity", "divisibility", "--n-max", "4", "--entry-max", "2", "--mode", "random", "--count", "20", "--seed", "3"];
        assert_eq!(run_args(&args).1, run_args(&args).1);
    }

    #[test]
    fn table_examples() {
        let (code, out, _) = run_args(&["table", "--kind", "gaussian", "--a-max", "2", "--b-max", "2", "--format", "text"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 9);
        assert!(out.starts_with("a=0 b=0: 1\n"));
        let (_, out, _) = run_args(&["table", "--kind", "p", "--n", "2", "--entry-max", "1", "--format", "json"]);
        let value: Value = serde_json::from_str(&out).unwrap();
        let lambdas: Vec<Value> = value.as_array().unwrap().iter().map(|e| e["params"]["lambda"].clone()).collect();
        assert_eq!(lambdas, vec![json!([0, 0]), json!([0, 1]), json!([1, 0]), json!([1, 1])]);
        assert_eq!(run_args(&["table", "--kind", "v", "--m-max", "0"]).1, "m=0: 1\n");
        let (_, out, _) = run_args(&["table", "--kind", "v", "--m-max", "1", "--format", "latex"]);
        assert_eq!(out, "\\begin{tabular}{ll}\n$m=0$ & $1$ \\\\\n$m=1$ & $1$ \\\\\n\\end{tabular}\n");
    }
}
