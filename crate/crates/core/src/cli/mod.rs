//! Command-line front end.
//!
//! [`run`] executes a fully parsed [`Request`] and returns the exit status
//! with the rendered output, so it can be driven without a process.

mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::branching::{
    branch, branch_factorized_traced, verify_result, BranchingResult, CheckStatus, EngineOptions, Method,
};
use crate::error::{Error, Result};
use crate::injection::{fan_direct, xi_set_checked, Injection};
use crate::rootsys::Weight;

pub use render::{charge_scale, render_json, BranchDoc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Branch,
    Fan,
    Xi,
    Verify,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    #[default]
    Dynkin,
    E,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    #[default]
    Fan,
    Weyl,
    Partition,
    Oracle,
    All,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Fan => vec![Method::Fan],
            MethodArg::Weyl => vec![Method::Weyl],
            MethodArg::Partition => vec![Method::Partition],
            MethodArg::Oracle => vec![Method::Oracle],
            MethodArg::All => Method::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ChargeNorm {
    #[default]
    Raw,
    /// Scale charges by the least common denominator.
    Integerized,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Request {
    pub command: Command,
    pub algebra: String,
    pub subalgebra: String,
    pub hw: Option<String>,
    pub basis: Basis,
    pub method: MethodArg,
    pub format: Format,
    pub charge_norm: ChargeNorm,
    pub hw_file: Option<PathBuf>,
    pub parallel: bool,
    pub trace: bool,
}

/// Exit status and captured streams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(e: &Error) -> Self {
        Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "fanbranch", version, about = "Branching rules for classical Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Decompose an irreducible representation.
    Branch(HwArgs),
    /// Print the fan of an injection.
    Fan(CommonArgs),
    /// Print the set Ξ of an injection.
    Xi(CommonArgs),
    /// Run every engine and the consistency checks.
    Verify(HwArgs),
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Ambient algebra, e.g. B4.
    #[arg(long)]
    algebra: String,
    /// Subalgebra, e.g. A3xU1.
    #[arg(long = "sub")]
    subalgebra: String,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct HwArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Highest weight, e.g. 0,1,1,0.
    #[arg(long, allow_hyphen_values = true)]
    hw: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    basis: Basis,
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    #[arg(long = "charge-norm", value_enum, default_value_t)]
    charge_norm: ChargeNorm,
    /// File with one highest weight per line; `#` starts a comment.
    #[arg(long = "hw-file")]
    hw_file: Option<PathBuf>,
    /// Process batch entries in parallel (output stays in file order).
    #[arg(long)]
    parallel: bool,
    /// Append the level-by-level state of the fan recursion.
    #[arg(long)]
    trace: bool,
}

impl Request {
    /// Parses command-line arguments (including the program name).
    pub fn parse_from<I, T>(args: I) -> std::result::Result<Request, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        let plain = |command, c: CommonArgs| Request {
            command,
            algebra: c.algebra,
            subalgebra: c.subalgebra,
            hw: None,
            basis: Basis::default(),
            method: MethodArg::default(),
            format: c.format,
            charge_norm: ChargeNorm::default(),
            hw_file: None,
            parallel: false,
            trace: false,
        };
        let with_hw = |command, a: HwArgs| Request {
            command,
            algebra: a.common.algebra,
            subalgebra: a.common.subalgebra,
            hw: a.hw,
            basis: a.basis,
            method: a.method.unwrap_or(if command == Command::Verify { MethodArg::All } else { MethodArg::Fan }),
            format: a.common.format,
            charge_norm: a.charge_norm,
            hw_file: a.hw_file,
            parallel: a.parallel,
            trace: a.trace,
        };
        Ok(match cli.command {
            Sub::Branch(a) => with_hw(Command::Branch, a),
            Sub::Verify(a) => with_hw(Command::Verify, a),
            Sub::Fan(c) => plain(Command::Fan, c),
            Sub::Xi(c) => plain(Command::Xi, c),
        })
    }

    fn validate(&self) -> Result<()> {
        let needs_hw = matches!(self.command, Command::Branch | Command::Verify);
        if needs_hw && self.hw.is_some() == self.hw_file.is_some() {
            return Err(Error::Parse("exactly one of --hw and --hw-file is required".into()));
        }
        if !needs_hw && (self.hw.is_some() || self.hw_file.is_some()) {
            return Err(Error::Parse("this command takes no highest weight".into()));
        }
        if self.method == MethodArg::All && self.command != Command::Verify {
            return Err(Error::Parse("--method all is only valid for verify".into()));
        }
        if self.trace && self.method != MethodArg::Fan {
            return Err(Error::Parse("--trace requires --method fan".into()));
        }
        Ok(())
    }
}

/// Entry point shared by the binary and the tests.
pub fn main_with_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Request::parse_from(args) {
        Ok(req) => run(&req),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn run(req: &Request) -> Outcome {
    if let Err(e) = req.validate() {
        return Outcome::error(&e);
    }
    let inj = match Injection::from_tokens(&req.algebra, &req.subalgebra) {
        Ok(i) => i,
        Err(e) => return Outcome::error(&e),
    };
    match req.command {
        Command::Fan => single(fan_output(&inj, req)),
        Command::Xi => single(xi_output(&inj, req)),
        Command::Branch | Command::Verify => {
            let weights: Vec<String> = match (&req.hw, &req.hw_file) {
                (Some(hw), _) => vec![hw.clone()],
                (None, Some(path)) => match read_hw_file(path) {
                    Ok(w) => w,
                    Err(e) => return Outcome::error(&e),
                },
                (None, None) => unreachable!("validated"),
            };
            let one = |hw: &String| -> Outcome {
                match parse_hw(&inj, hw, req.basis) {
                    Ok(lam) if req.command == Command::Branch => branch_output(&inj, &lam, req),
                    Ok(lam) => verify_output(&inj, &lam, req),
                    Err(e) => Outcome::error(&e),
                }
            };
            let outcomes: Vec<Outcome> = if req.parallel {
                weights.par_iter().map(one).collect()
            } else {
                weights.iter().map(one).collect()
            };
            let mut out = Outcome::default();
            for o in outcomes {
                out.stdout.push_str(&o.stdout);
                out.stderr.push_str(&o.stderr);
                if out.code == 0 {
                    out.code = o.code;
                }
            }
            out
        }
    }
}

fn single(r: Result<String>) -> Outcome {
    match r {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome::error(&e),
    }
}

fn read_hw_file(path: &std::path::Path) -> Result<Vec<String>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    Ok(text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}

/// Parses a highest weight given as Dynkin labels or e-basis coordinates.
pub fn parse_hw(inj: &Injection, text: &str, basis: Basis) -> Result<Weight> {
    let lam = match basis {
        Basis::E => {
            let w: Weight = text.parse()?;
            w.check_dim(&Weight::zero(inj.g.dim))?;
            w
        }
        Basis::Dynkin => {
            let body = text.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
            let labels = body
                .split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("invalid Dynkin label `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            inj.g.dynkin_to_e(&labels)?
        }
    };
    inj.g.require_dominant_integral(&lam)?;
    Ok(lam)
}

fn with_checks(inj: &Injection, lam: &Weight, mut r: BranchingResult) -> BranchingResult {
    r.checks = verify_result(inj, lam, &r);
    r
}

fn failed_checks(r: &BranchingResult) -> String {
    r.checks
        .iter()
        .filter(|c| c.status == CheckStatus::Failed)
        .map(|c| format!("error: check {} failed: {}\n", c.name, c.detail.clone().unwrap_or_default()))
        .collect()
}

fn branch_output(inj: &Injection, lam: &Weight, req: &Request) -> Outcome {
    let method = req.method.methods()[0];
    let computed = if req.trace {
        branch_factorized_traced(inj, lam, EngineOptions::default()).map(|(r, t)| (r, Some(t)))
    } else {
        branch(inj, lam, method).map(|r| (r, None))
    };
    let (r, trace) = match computed {
        Ok(x) => x,
        Err(e) => return Outcome::error(&e),
    };
    let r = with_checks(inj, lam, r);
    let stdout = match req.format {
        Format::Text => render::branch_text(&r, req.charge_norm, trace.as_ref()),
        Format::Json => render_json(&r, req.charge_norm, trace.as_ref()),
    };
    let stderr = failed_checks(&r);
    Outcome {
        code: if stderr.is_empty() { 0 } else { 4 },
        stdout,
        stderr,
    }
}

fn verify_output(inj: &Injection, lam: &Weight, req: &Request) -> Outcome {
    let mut results = Vec::new();
    for m in req.method.methods() {
        match branch(inj, lam, m) {
            Ok(r) => results.push(r),
            Err(e) => return Outcome::error(&e),
        }
    }
    let reference = with_checks(inj, lam, results[0].clone());
    let disagreeing: Vec<&BranchingResult> = results
        .iter()
        .filter(|r| r.components != reference.components)
        .collect();
    let stdout = match req.format {
        Format::Text => render::verify_text(&reference, &results, disagreeing.is_empty()),
        Format::Json => render::verify_json(&reference, &results, disagreeing.is_empty()),
    };
    let mut stderr = failed_checks(&reference);
    for r in &disagreeing {
        stderr.push_str(&format!(
            "error: method {} disagrees with method {}\n",
            r.method, reference.method
        ));
    }
    Outcome {
        code: if stderr.is_empty() { 0 } else { 4 },
        stdout,
        stderr,
    }
}

fn fan_output(inj: &Injection, req: &Request) -> Result<String> {
    let fan = fan_direct(inj)?;
    Ok(match req.format {
        Format::Text => render::fan_text(&fan),
        Format::Json => render::fan_json(inj, &fan),
    })
}

fn xi_output(inj: &Injection, req: &Request) -> Result<String> {
    let xi = xi_set_checked(inj)?;
    match req.format {
        Format::Text => render::xi_text(inj, &xi),
        Format::Json => render::xi_json(inj, &xi),
    }
}
