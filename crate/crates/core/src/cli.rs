//! Command-line front end. Every command returns an [`Outcome`] instead of
//! printing, so the binary stays a two-line wrapper and tests can drive the
//! commands in-process.
//!
//! Exit codes: 0 success, 1 internal error or failed identity, 2 malformed
//! input, 3 failed hypothesis (suppressed by `--force`), 4 unstable fit.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::algebra::{poly_parse, MonomialOrder, RingContext, DEFAULT_CHARACTERISTIC};
use crate::error::Error;
use crate::hilbert::hilbert_values;
use crate::ideal::Ideal;
use crate::resolution::betti_table;
use crate::verify::{check_hypotheses, coefficient_summary, verify, ProblemInstance, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_UNSTABLE: i32 = 4;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderName {
    #[default]
    Grevlex,
    Lex,
}

fn default_characteristic() -> u64 {
    DEFAULT_CHARACTERISTIC
}

/// The JSON problem format.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default = "default_characteristic")]
    pub characteristic: u64,
    pub variables: Vec<String>,
    #[serde(default)]
    pub monomial_order: OrderName,
    pub ideals: Vec<Vec<String>>,
    pub parameters: Vec<String>,
    #[serde(default)]
    pub max_power: Option<u32>,
}

/// Why a problem could not be turned into an instance.
#[derive(Debug)]
pub struct LoadError {
    pub code: i32,
    pub message: String,
}

impl LoadError {
    fn schema(message: impl Into<String>) -> Self {
        LoadError {
            code: EXIT_SCHEMA,
            message: message.into(),
        }
    }
}

impl From<Error> for LoadError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inhomogeneous(_) => EXIT_HYPOTHESIS,
            _ => EXIT_SCHEMA,
        };
        LoadError {
            code,
            message: e.to_string(),
        }
    }
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, LoadError> {
        serde_json::from_str(text)
            .map_err(|e| LoadError::schema(format!("invalid problem file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, LoadError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| LoadError::schema(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn ring(&self) -> Result<RingContext, LoadError> {
        let order = match self.monomial_order {
            OrderName::Grevlex => MonomialOrder::Grevlex,
            OrderName::Lex => MonomialOrder::Lex,
        };
        Ok(RingContext::new(
            &self.variables,
            self.characteristic,
            order,
        )?)
    }

    /// Parses every polynomial and derives the instance; `max_power`
    /// overrides the file's value.
    pub fn instance(&self, max_power: Option<u32>) -> Result<ProblemInstance, LoadError> {
        let ring = self.ring()?;
        let ideals = self
            .ideals
            .iter()
            .map(|gens| Ideal::parse(&ring, gens))
            .collect::<Result<Vec<_>, _>>()?;
        let parameters = self
            .parameters
            .iter()
            .map(|p| poly_parse(p, &ring))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(p) = parameters.iter().find(|p| !p.is_homogeneous()) {
            return Err(Error::Inhomogeneous(p.to_string()).into());
        }
        Ok(ProblemInstance::new(
            &ring,
            ideals,
            parameters,
            max_power.or(self.max_power),
        )?)
    }
}

/// Captured result of a command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr,
            code,
        }
    }

    fn warn(mut self, warning: &str) -> Self {
        if !warning.is_empty() {
            self.stderr.insert_str(0, warning);
        }
        self
    }
}

fn compute_error(e: Error) -> Outcome {
    match e {
        Error::FitUnstable(msg) => Outcome::fail(
            EXIT_UNSTABLE,
            format!("error: Hilbert polynomial fit unstable ({msg}); increase --max-power\n"),
        ),
        e => Outcome::fail(EXIT_FAILURE, format!("error: {e}\n")),
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct FileArgs {
    /// Problem file (JSON).
    pub file: PathBuf,
    /// Largest power n of the parameter ideal.
    #[arg(long)]
    pub max_power: Option<u32>,
    /// Emit JSON instead of a table.
    #[arg(long)]
    pub json: bool,
    /// Continue when a hypothesis check fails.
    #[arg(long)]
    pub force: bool,
}

/// Loads the instance and applies the hypothesis gate. On success returns
/// the instance and any warning to prefix to stderr.
fn prepare(args: &FileArgs) -> Result<(ProblemInstance, String), Outcome> {
    let inst = ProblemFile::load(&args.file)
        .and_then(|f| f.instance(args.max_power))
        .map_err(|e| Outcome::fail(e.code, format!("error: {}\n", e.message)))?;
    let report = check_hypotheses(&inst);
    let mut msg = String::new();
    for c in report.failures() {
        let _ = writeln!(msg, "hypothesis {} failed: {}", c.name, c.witness);
    }
    if msg.is_empty() {
        Ok((inst, msg))
    } else if args.force {
        Ok((
            inst,
            format!("warning: continuing despite failed hypotheses\n{msg}"),
        ))
    } else {
        Err(Outcome::fail(EXIT_HYPOTHESIS, msg))
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

pub fn cmd_hilbert(args: &FileArgs) -> Outcome {
    let (inst, warning) = match prepare(args) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let values = match hilbert_values(inst.core(), inst.parameter_ideal(), inst.max_power()) {
        Ok(v) => v,
        Err(e) => return compute_error(e).warn(&warning),
    };
    let out = if args.json {
        #[derive(Serialize)]
        struct Row {
            n: u32,
            length: String,
        }
        let rows: Vec<Row> = values
            .iter()
            .map(|(n, h)| Row {
                n: *n,
                length: h.to_string(),
            })
            .collect();
        to_json(&rows)
    } else {
        let mut s = format!("{:>4}  {}\n", "n", "length");
        for (n, h) in &values {
            let _ = writeln!(s, "{n:>4}  {h}");
        }
        s
    };
    Outcome::ok(out).warn(&warning)
}

pub fn cmd_coeffs(args: &FileArgs) -> Outcome {
    let (inst, warning) = match prepare(args) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let summary = match coefficient_summary(&inst) {
        Ok(s) => s,
        Err(e) => return compute_error(e).warn(&warning),
    };
    let out = if args.json {
        to_json(&summary)
    } else {
        let e: Vec<String> = summary.e.iter().map(|x| x.to_string()).collect();
        format!(
            "e          = ({})\nn0         = {}\nlambda(R/K) = {}\nlambda(L)  = {}\ncm         = {}\nchern_sign = {}\n",
            e.join(", "),
            summary.n0,
            summary.colength,
            summary.lambda_l,
            summary.cm,
            summary.chern_sign
        )
    };
    Outcome::ok(out).warn(&warning)
}

pub fn cmd_verify(args: &FileArgs) -> Outcome {
    let (inst, warning) = match prepare(args) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let report = match verify(&inst) {
        Ok(r) => r,
        Err(e) => return compute_error(e).warn(&warning),
    };
    let out = if args.json {
        to_json(&report)
    } else {
        let h = &report.hypotheses;
        let mut s = format!("g = {}, d = {}, h = {}\n", h.g, h.d, h.h);
        for c in &h.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "  {mark} {:<22} {}", c.name, c.witness);
        }
        let e: Vec<String> = report
            .hilbert_k
            .coefficients
            .iter()
            .map(|x| x.to_string())
            .collect();
        let _ = writeln!(
            s,
            "e = ({}), n0 = {}, lambda(L) = {}, J annihilates L: {}",
            e.join(", "),
            report.hilbert_k.stabilization_index,
            report.lambda_l,
            report.annihilates
        );
        for i in &report.identities {
            let status = match i.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::NotApplicable => "n/a ",
            };
            let _ = writeln!(s, "  {status} {:<22} {}", i.name, i.message);
        }
        let _ = writeln!(
            s,
            "overall: {}",
            if report.passed() { "pass" } else { "FAIL" }
        );
        s
    };
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    Outcome {
        stdout: out,
        stderr: String::new(),
        code,
    }
    .warn(&warning)
}

pub fn cmd_betti(d: u32, n: u32, json: bool) -> Outcome {
    let table = match betti_table(d, n) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_SCHEMA, format!("error: {e}\n")),
    };
    if json {
        return Outcome::ok(to_json(&table));
    }
    let mut s = format!("{:>3}  {}\n", "i", "beta_i");
    for (i, b) in table.betti.iter().enumerate() {
        let _ = writeln!(s, "{i:>3}  {b}");
    }
    let _ = writeln!(s, "euler characteristic: {}", table.euler_characteristic);
    Outcome::ok(s)
}

#[derive(Debug, Parser)]
#[command(
    name = "chernlab",
    version,
    about = "Hilbert coefficients of parameter ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lengths λ(R/K^n) for n = 1..max_power.
    Hilbert(FileArgs),
    /// Fitted Hilbert coefficients, Cohen-Macaulay test and sign of e_1.
    Coeffs(FileArgs),
    /// Full verification report.
    Verify(FileArgs),
    /// Betti numbers of S/J^n for a complete intersection J of d elements.
    Betti {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
}

/// Parses `args` (program name first) and runs the selected command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, text)
            };
        }
    };
    match cli.command {
        Command::Hilbert(a) => cmd_hilbert(&a),
        Command::Coeffs(a) => cmd_coeffs(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Betti { d, n, json } => cmd_betti(d, n, json),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema() {
        let f = ProblemFile::from_json(
            r#"{"variables": ["x","y"], "ideals": [["x"]], "parameters": ["y"]}"#,
        )
        .unwrap();
        assert_eq!(f.characteristic, 32003);
        assert_eq!(f.monomial_order, OrderName::Grevlex);
        let unknown = ProblemFile::from_json(
            r#"{"variables": ["x"], "ideals": [], "parameters": [], "extra": 1}"#,
        );
        assert_eq!(unknown.unwrap_err().code, EXIT_SCHEMA);
        let composite = ProblemFile::from_json(
            r#"{"characteristic": 12, "variables": ["x","y"], "ideals": [["x"]], "parameters": ["y"]}"#,
        )
        .unwrap();
        assert_eq!(composite.instance(None).unwrap_err().code, EXIT_SCHEMA);
        let inhomogeneous = ProblemFile::from_json(
            r#"{"variables": ["x","y"], "ideals": [["x+y^2"]], "parameters": ["y"]}"#,
        )
        .unwrap();
        assert_eq!(
            inhomogeneous.instance(None).unwrap_err().code,
            EXIT_HYPOTHESIS
        );
        let bad_poly = ProblemFile::from_json(
            r#"{"variables": ["x","y"], "ideals": [["2x"]], "parameters": ["y"]}"#,
        )
        .unwrap();
        assert_eq!(bad_poly.instance(None).unwrap_err().code, EXIT_SCHEMA);
    }

    #[test]
    fn betti_output() {
        let o = cmd_betti(3, 2, false);
        assert_eq!(o.code, 0);
        assert_eq!(
            o.stdout,
            "  i  beta_i\n  0  1\n  1  6\n  2  8\n  3  3\neuler characteristic: 0\n"
        );
        assert_eq!(cmd_betti(0, 2, false).code, EXIT_SCHEMA);
        let o = run(["chernlab", "betti", "--d", "2", "--n", "1", "--json"]);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["betti"], serde_json::json!(["1", "2", "1"]));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(["chernlab", "frobnicate"]).code, 2);
        assert_eq!(run(["chernlab", "--help"]).code, 0);
    }
}
