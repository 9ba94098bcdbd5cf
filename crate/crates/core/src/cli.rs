//! Command-line front end. [`run`] parses arguments and returns the exit
//! status together with the document to print.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::inner::lincomb_to_poly;
use crate::json::{lincomb_to_json, poly_to_json, series_to_json};
use crate::lincomb::{Basis, LinComb};
use crate::partition::{IntVector, StrictPartition};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::tau::{self, Method, Series};
use crate::verify::{run_suite, Config, Report, Suite};
use crate::vertex::{characters, hall_littlewood, Rho};
use crate::wops::{
    apply_named, apply_p_brute, apply_p_closed, apply_p_modes, closed_action_named, coeff_c,
    coeff_d, coeff_g, coeff_h, NamedOp,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "schurq",
    version,
    about = "Vertex operators, W-operators and tau functions on Schur and Schur Q-functions"
)]
pub struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Character polynomial S_lambda, Q_lambda or H_lambda(t; rho).
    Fn(FnArgs),
    /// Apply P^(k)_m or a named operator to a basis element.
    Act(ActArgs),
    /// Evaluate a coefficient function.
    Coef(CoefArgs),
    /// Tau-function expansion.
    Tau(TauArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FnBasis {
    Schur,
    Q,
    Hl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ActBasis {
    Schur,
    Q,
}

impl From<ActBasis> for Basis {
    fn from(b: ActBasis) -> Basis {
        match b {
            ActBasis::Schur => Basis::Schur,
            ActBasis::Q => Basis::Q,
        }
    }
}

#[derive(Args, Debug)]
pub struct FnArgs {
    #[arg(long, value_enum)]
    pub basis: FnBasis,
    /// Comma-separated integers, e.g. 2,1 (empty for the unit).
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    pub lambda: String,
    /// Rational parameter, required for --basis hl.
    #[arg(long, allow_hyphen_values = true)]
    pub rho: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ActMode {
    Closed,
    Brute,
    Modes,
    All,
}

#[derive(Args, Debug)]
pub struct ActArgs {
    /// `P` for P^(k)_m, or one of L, Lhat, W, What, Nhat, W0, WBGW, WKW, WKWperp, What3.
    #[arg(long)]
    pub op: String,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[arg(long, value_enum)]
    pub basis: ActBasis,
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    pub lambda: String,
    #[arg(long, value_enum, default_value = "closed")]
    pub mode: ActMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoefName {
    D,
    C,
    H,
    G,
    #[value(name = "E")]
    E,
    #[value(name = "A")]
    A,
    /// `A` through the Pfaffian recursion.
    #[value(name = "A-pfaffian")]
    APfaffian,
    /// `a_lambda` without its hbar power.
    #[value(name = "a")]
    ASmall,
    #[value(name = "c-chain")]
    CChain,
    Dfact,
}

#[derive(Args, Debug)]
pub struct CoefArgs {
    #[arg(long, value_enum)]
    pub name: CoefName,
    /// d: k n; c: k m n; h, g: k b rho; E, c-chain: strict partition;
    /// A, A-pfaffian, a: integer vector; dfact: odd n.
    #[arg(long, num_args = 0.., allow_hyphen_values = true, value_delimiter = ',')]
    pub args: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Bgw,
    Kw,
}

#[derive(Args, Debug)]
pub struct TauArgs {
    #[arg(long, value_enum)]
    pub model: Model,
    #[arg(long)]
    pub order: u32,
    #[arg(long, default_value = "both")]
    pub method: Method,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: Suite,
    /// Cap on label weights in the sweeps (default: full acceptance sizes).
    #[arg(long)]
    pub max_weight: Option<i64>,
}

/// Output of a command before rendering.
pub enum Output {
    Poly(Poly),
    LinComb(LinComb),
    Rational(Rational),
    Series(Series),
    Act(Value, String),
    Reports(Suite, Vec<Report>),
}

impl Output {
    fn to_json(&self) -> Value {
        match self {
            Output::Poly(p) => poly_to_json(p),
            Output::LinComb(l) => lincomb_to_json(l),
            Output::Rational(r) => Value::String(r.to_string()),
            Output::Series(s) => series_to_json(s),
            Output::Act(v, _) => v.clone(),
            Output::Reports(suite, reports) => json!({
                "suite": suite.name(),
                "passed": reports.iter().all(Report::passed),
                "checks": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
            }),
        }
    }

    fn to_pretty(&self) -> String {
        match self {
            Output::Poly(p) => format!("{p:?}"),
            Output::LinComb(l) => format!("{l:?}"),
            Output::Rational(r) => r.to_string(),
            Output::Series(s) => s
                .components
                .iter()
                .map(|(n, p)| format!("hbar^{n}: {p:?}"))
                .collect::<Vec<_>>()
                .join("\n"),
            Output::Act(_, text) => text.clone(),
            Output::Reports(_, reports) => reports
                .iter()
                .map(|r| {
                    let mut line = format!(
                        "{} {} ({} cases, {} failed)",
                        if r.passed() { "PASS" } else { "FAIL" },
                        r.name,
                        r.checks,
                        r.failed
                    );
                    for f in &r.failures {
                        line.push_str(&format!("\n  {}: {}", f.case, f.detail));
                    }
                    line
                })
                .collect::<Vec<_>>()
                .join("\n"),
        }
    }

    fn failed(&self) -> bool {
        match self {
            Output::Act(v, _) => v.get("agree") == Some(&Value::Bool(false)),
            Output::Reports(_, reports) => !reports.iter().all(Report::passed),
            _ => false,
        }
    }
}

fn parse_label(s: &str) -> Result<IntVector> {
    s.parse()
}

fn int_arg(args: &[String], i: usize) -> Result<i64> {
    let s = args
        .get(i)
        .ok_or_else(|| Error::InvalidArgument(format!("missing argument {}", i + 1)))?;
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

fn k_arg(args: &[String], i: usize) -> Result<u32> {
    u32::try_from(int_arg(args, i)?)
        .map_err(|_| Error::InvalidArgument("k must be non-negative".into()))
}

fn exact_arity(args: &[String], n: usize) -> Result<()> {
    if args.len() != n {
        return Err(Error::InvalidArgument(format!(
            "expected {n} arguments, got {}",
            args.len()
        )));
    }
    Ok(())
}

fn vector_args(args: &[String]) -> Result<IntVector> {
    let parts = (0..args.len())
        .map(|i| int_arg(args, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntVector::new(parts))
}

fn run_fn(a: &FnArgs) -> Result<Output> {
    let lambda = parse_label(&a.lambda)?;
    let rho = match (a.basis, &a.rho) {
        (FnBasis::Hl, Some(r)) => Rho::new(r.parse()?)?,
        (FnBasis::Hl, None) => return Err(Error::InvalidArgument("--basis hl needs --rho".into())),
        (_, Some(_)) => {
            return Err(Error::InvalidArgument(
                "--rho only applies to --basis hl".into(),
            ))
        }
        (FnBasis::Schur, None) => Rho::schur(),
        (FnBasis::Q, None) => Rho::q(),
    };
    let p = match a.basis {
        FnBasis::Schur => (*characters().get(Basis::Schur, lambda.parts())).clone(),
        FnBasis::Q => (*characters().get(Basis::Q, lambda.parts())).clone(),
        FnBasis::Hl => hall_littlewood(&lambda, &rho),
    };
    Ok(Output::Poly(p))
}

enum ActOp {
    P(u32, i64),
    Named(NamedOp),
}

fn run_act(a: &ActArgs) -> Result<Output> {
    let basis: Basis = a.basis.into();
    let lambda = parse_label(&a.lambda)?;
    let op = if a.op == "P" {
        let k =
            a.k.ok_or_else(|| Error::InvalidArgument("--op P needs --k".into()))?;
        let m =
            a.m.ok_or_else(|| Error::InvalidArgument("--op P needs --m".into()))?;
        ActOp::P(k, m)
    } else {
        if a.k.is_some() {
            return Err(Error::InvalidArgument(format!(
                "--k does not apply to {}",
                a.op
            )));
        }
        let op = NamedOp::parse(&a.op, a.m)?;
        op.validate()?;
        if op.basis() != basis {
            return Err(Error::InvalidArgument(format!(
                "{op} acts on the {} basis",
                op.basis().name()
            )));
        }
        ActOp::Named(op)
    };
    let rho = Rho::for_basis(basis);
    let input = (*characters().get(basis, lambda.parts())).clone();

    let closed = || -> Result<LinComb> {
        match &op {
            ActOp::P(k, m) => Ok(apply_p_closed(basis, *k, *m, &lambda)),
            ActOp::Named(n) => closed_action_named(*n, &lambda),
        }
    };
    // named operators have a single polynomial action: their mode form
    let brute = || -> Result<Poly> {
        match &op {
            ActOp::P(k, m) => apply_p_brute(*k, *m, &rho, &input),
            ActOp::Named(n) => apply_named(*n, &input),
        }
    };
    let modes = || -> Result<Poly> {
        match &op {
            ActOp::P(k, m) => apply_p_modes(*k, *m, &rho, &input),
            ActOp::Named(n) => apply_named(*n, &input),
        }
    };

    Ok(match a.mode {
        ActMode::Closed => Output::LinComb(closed()?),
        ActMode::Brute => Output::Poly(brute()?),
        ActMode::Modes => Output::Poly(modes()?),
        ActMode::All => {
            let c = closed()?;
            let cp = lincomb_to_poly(&c);
            let b = brute()?;
            let m = match modes() {
                Ok(p) => Some(p),
                Err(Error::ModesUnavailable(_)) => None,
                Err(e) => return Err(e),
            };
            let agree = cp == b && m.as_ref().is_none_or(|m| *m == b);
            let v = json!({
                "closed": lincomb_to_json(&c),
                "closed_poly": poly_to_json(&cp),
                "brute": poly_to_json(&b),
                "modes": m.as_ref().map(poly_to_json),
                "agree": agree,
            });
            let text = format!(
                "closed: {c:?}\n  as polynomial: {cp:?}\nbrute: {b:?}\nmodes: {}\n{}",
                m.as_ref()
                    .map_or("unavailable".to_string(), |m| format!("{m:?}")),
                if agree { "agree" } else { "DISAGREE" }
            );
            Output::Act(v, text)
        }
    })
}

fn run_coef(a: &CoefArgs) -> Result<Output> {
    let args = &a.args;
    let value = match a.name {
        CoefName::D => {
            exact_arity(args, 2)?;
            coeff_d(k_arg(args, 0)?, int_arg(args, 1)?)
        }
        CoefName::C => {
            exact_arity(args, 3)?;
            coeff_c(k_arg(args, 0)?, int_arg(args, 1)?, int_arg(args, 2)?)
        }
        CoefName::H | CoefName::G => {
            exact_arity(args, 3)?;
            let rho = Rho::new(args[2].parse()?)?;
            let (k, b) = (k_arg(args, 0)?, int_arg(args, 1)?);
            if a.name == CoefName::H {
                coeff_h(k, b, &rho)
            } else {
                coeff_g(k, b, &rho)
            }
        }
        CoefName::E => tau::e_coeff(&StrictPartition::new(vector_args(args)?.0)?),
        CoefName::A => tau::a_coeff(&vector_args(args)?),
        CoefName::APfaffian => tau::a_pfaffian(&vector_args(args)?)?,
        CoefName::ASmall => tau::a_small(&vector_args(args)?),
        CoefName::CChain => Rational::from_bigint(tau::chain_count(&StrictPartition::new(
            vector_args(args)?.0,
        )?)),
        CoefName::Dfact => {
            exact_arity(args, 1)?;
            tau::double_fact(int_arg(args, 0)?)?
        }
    };
    Ok(Output::Rational(value))
}

fn run_tau(a: &TauArgs) -> Result<Output> {
    let s = match a.model {
        Model::Bgw => tau::tau_bgw(a.order, a.method)?,
        Model::Kw => tau::tau_kw(a.order, a.method)?,
    };
    Ok(Output::Series(s))
}

fn run_verify(a: &VerifyArgs) -> Result<Output> {
    let cfg = match a.max_weight {
        Some(w) if w < 0 => return Err(Error::InvalidArgument("--max-weight must be >= 0".into())),
        Some(w) => Config::with_max_weight(w),
        None => Config::default(),
    };
    Ok(Output::Reports(a.suite, run_suite(a.suite, &cfg)))
}

pub fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Fn(a) => run_fn(a),
        Command::Act(a) => run_act(a),
        Command::Coef(a) => run_coef(a),
        Command::Tau(a) => run_tau(a),
        Command::Verify(a) => run_verify(a),
    }
}

/// Exit status for a library error: discrepancies are failures, anything
/// else is a usage problem.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Discrepancy(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

/// Result of a command line: exit status, stdout document and stderr text.
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if status == EXIT_OK {
                Outcome {
                    status,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    status,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let stdout = if cli.pretty {
                out.to_pretty()
            } else {
                out.to_json().to_string()
            };
            Outcome {
                status: if out.failed() { EXIT_FAILURE } else { EXIT_OK },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            status: exit_code(&e),
            stdout: String::new(),
            stderr: json!({ "error": e.to_string() }).to_string(),
        },
    }
}
