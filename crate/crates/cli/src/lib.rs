//! Command-line front end: read variety files, run the pipeline with
//! explicit seeds, primes, and trial budgets, and emit a machine report
//! on standard output plus a human summary (with wall time) on standard
//! error.
//!
//! Exit codes: 0 success and all checks pass, 2 input problems, 3
//! genericity budget exhausted, 4 resource limits hit, 5 an expectation
//! or identity check failed.

pub mod file;
pub mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use euob_core::{
    global_euler_obstruction, polar_profile, recursion_check, slice_identity_check,
    solve_unknown_local_eu, weighted_eu, EngineLimits, Error, Field, Fp, GenericityCertificate,
    Rationals, RecursionVerdict, DEFAULT_PRIME,
};

use file::VarietyFile;
use report::{CheckStatus, CheckVerdict, RunReport, REPORT_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GENERICITY: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "euob",
    version,
    about = "Polar invariant profiles and global Euler obstructions of affine varieties"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the global Euler obstruction together with the profile
    Eu(RunArgs),
    /// Compute the invariant profile only
    Profile(RunArgs),
    /// Run every applicable consistency check and report verdicts
    Check(RunArgs),
}

impl Command {
    pub fn args(&self) -> &RunArgs {
        match self {
            Command::Eu(a) | Command::Profile(a) | Command::Check(a) => a,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Eu(_) => "eu",
            Command::Profile(_) => "profile",
            Command::Check(_) => "check",
        }
    }
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Variety file (TOML)
    pub file: PathBuf,
    /// Master seed for all randomized choices
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Prime modulus for the default modular mode
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    pub prime: u64,
    /// Budget of redraws per randomized stage
    #[arg(long, default_value_t = 8)]
    pub trials: usize,
    /// Emit the machine report as JSON instead of plain lines
    #[arg(long)]
    pub json: bool,
    /// Compute over exact rationals instead of a prime field
    #[arg(long)]
    pub rational: bool,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Engine(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "{m}"),
            CliError::Engine(e) => write!(f, "{e}"),
        }
    }
}

pub fn exit_code(err: &CliError) -> i32 {
    match err {
        CliError::Input(_) => EXIT_INPUT,
        CliError::Engine(e) => match e {
            Error::GenericityExhausted { .. } | Error::RadicalityIndeterminate { .. } => {
                EXIT_GENERICITY
            }
            Error::ResourceLimit { .. } => EXIT_RESOURCE,
            Error::DegreeMismatch { .. } => EXIT_MISMATCH,
            _ => EXIT_INPUT,
        },
    }
}

/// Parse, compute, render, and return the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let started = Instant::now();
    match execute(cli) {
        Ok(report) => {
            let machine = if cli.command.args().json {
                report.to_json()
            } else {
                report.to_plain()
            };
            print!("{machine}");
            eprint!("{}", report.to_human(started.elapsed().as_secs_f64() * 1e3));
            if report.any_check_failed() {
                EXIT_MISMATCH
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

struct Computation {
    dimension: usize,
    alphas: Vec<u64>,
    eu: Option<i64>,
    certificate: GenericityCertificate,
    recursion: Option<RecursionVerdict>,
}

fn execute(cli: &Cli) -> Result<RunReport, CliError> {
    let args = cli.command.args();
    let vf = VarietyFile::load(&args.file)?;
    let limits = EngineLimits::default();
    let comp = if args.rational {
        compute(&Rationals, &vf, &cli.command, args, &limits)?
    } else {
        let f = Fp::new(args.prime)?;
        compute(&f, &vf, &cli.command, args, &limits)?
    };
    let is_check = matches!(cli.command, Command::Check(_));
    let checks = assemble_checks(&vf, &comp, is_check);
    let degree = *comp.alphas.last().expect("a profile is never empty");
    Ok(RunReport {
        format_version: REPORT_VERSION,
        command: cli.command.name().to_string(),
        file: args.file.display().to_string(),
        mode: if args.rational { "rational" } else { "modular" }.to_string(),
        prime: if args.rational { None } else { Some(args.prime) },
        seed: args.seed,
        trials: args.trials,
        dimension: comp.dimension,
        alphas: comp.alphas,
        degree,
        eu: comp.eu,
        checks,
        certificate: comp.certificate,
    })
}

fn compute<F: Field>(
    f: &F,
    vf: &VarietyFile,
    cmd: &Command,
    args: &RunArgs,
    limits: &EngineLimits,
) -> Result<Computation, Error> {
    let spec = vf.to_spec(f, limits)?;
    let d = spec.dim();
    match cmd {
        Command::Profile(_) => {
            let (profile, certificate) = polar_profile(f, &spec, args.seed, args.trials, limits)?;
            Ok(Computation {
                dimension: d,
                alphas: profile.alphas,
                eu: None,
                certificate,
                recursion: None,
            })
        }
        Command::Eu(_) => {
            let r = global_euler_obstruction(f, &spec, args.seed, args.trials, limits)?;
            Ok(Computation {
                dimension: d,
                alphas: r.profile.alphas,
                eu: Some(r.eu),
                certificate: r.certificate,
                recursion: None,
            })
        }
        Command::Check(_) => {
            let r = global_euler_obstruction(f, &spec, args.seed, args.trials, limits)?;
            let recursion = if d >= 1 {
                Some(recursion_check(f, &spec, args.seed, args.trials, limits)?)
            } else {
                None
            };
            Ok(Computation {
                dimension: d,
                alphas: r.profile.alphas,
                eu: Some(r.eu),
                certificate: r.certificate,
                recursion,
            })
        }
    }
}

fn verdict(name: &'static str, ok: bool, detail: String) -> CheckVerdict {
    CheckVerdict {
        name,
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        detail,
    }
}

fn skip(name: &'static str, why: impl Into<String>) -> CheckVerdict {
    CheckVerdict {
        name,
        status: CheckStatus::Skipped,
        detail: why.into(),
    }
}

/// Expectation comparisons for every command; the identity checks (which
/// consume stratification data the engine treats as trusted fixtures)
/// only for `check`.
fn assemble_checks(vf: &VarietyFile, comp: &Computation, is_check: bool) -> Vec<CheckVerdict> {
    let mut checks = Vec::new();
    let expected = vf.expected.as_ref();
    if let (Some(eu), Some(want)) = (comp.eu, expected.and_then(|e| e.eu)) {
        checks.push(verdict(
            "expected-eu",
            eu == want,
            format!("computed {eu}, expected {want}"),
        ));
    }
    if let Some(want) = expected.and_then(|e| e.alphas.as_ref()) {
        checks.push(verdict(
            "expected-alphas",
            &comp.alphas == want,
            format!("computed {:?}, expected {want:?}", comp.alphas),
        ));
    }
    if !is_check {
        return checks;
    }

    let eu = comp.eu.expect("the check command always computes eu");
    match vf.strata_table() {
        None => {
            checks.push(skip("weighted-sum", "no stratification data"));
            checks.push(skip("slice-identity", "no stratification data"));
        }
        Some(table) => match table.validate() {
            Err(e) => checks.push(verdict("strata-table", false, e.to_string())),
            Ok(()) => {
                let unknowns: Vec<String> = table
                    .unknowns()
                    .iter()
                    .map(|s| s.name.clone())
                    .collect();
                match unknowns.len() {
                    0 => match weighted_eu(&table) {
                        Ok(w) => checks.push(verdict(
                            "weighted-sum",
                            w == eu,
                            format!("weighted sum {w}, computed {eu}"),
                        )),
                        Err(e) => checks.push(skip("weighted-sum", e.to_string())),
                    },
                    1 => {
                        match solve_unknown_local_eu(&table, eu) {
                            Ok(v) => checks.push(CheckVerdict {
                                name: "solved-local-eu",
                                status: CheckStatus::Info,
                                detail: format!(
                                    "stratum `{}` gets local value {v}",
                                    unknowns[0]
                                ),
                            }),
                            Err(e) => checks.push(skip("solved-local-eu", e.to_string())),
                        }
                        checks.push(skip(
                            "weighted-sum",
                            format!("local value of `{}` unknown", unknowns[0]),
                        ));
                    }
                    _ => checks.push(skip(
                        "weighted-sum",
                        format!("{} local values unknown", unknowns.len()),
                    )),
                }
                if comp.dimension == 0 {
                    checks.push(skip("slice-identity", "zero-dimensional input"));
                } else {
                    match slice_identity_check(&table, comp.dimension, comp.alphas[0], eu) {
                        Ok(v) => checks.push(verdict(
                            "slice-identity",
                            v.holds,
                            format!(
                                "lhs {}, rhs {} (weighted {}, signed critical term {})",
                                v.lhs, v.rhs, v.weighted_slice_sum, v.sign_term
                            ),
                        )),
                        Err(e) => checks.push(skip("slice-identity", e.to_string())),
                    }
                }
                // a single-stratum table asserts smoothness, where the
                // obstruction must equal the Euler characteristic
                if table.strata.len() == 1 {
                    if let Some(chi) = expected.and_then(|e| e.chi) {
                        checks.push(verdict(
                            "smooth-euler-characteristic",
                            eu == chi,
                            format!("obstruction {eu}, characteristic {chi}"),
                        ));
                    }
                }
            }
        },
    }
    match &comp.recursion {
        Some(v) => checks.push(verdict(
            "slice-recursion",
            v.holds,
            format!(
                "lhs {}, rhs {} (slice obstruction {}, critical count {})",
                v.lhs, v.rhs, v.eu_slice, v.alpha1
            ),
        )),
        None => checks.push(skip("slice-recursion", "zero-dimensional input")),
    }
    checks
}
