//! Batch driver: `classify`, `verify` and `branch` verbs.
//!
//! Every verb prints its report to stdout and, when `--out` is given or
//! `FMETHOD_OUT_DIR` is set, also writes it to a file. Exit codes: 0 when
//! every check passes, 1 on a mathematical mismatch, 2 on a usage error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{parse_rational, Rational};
use crate::branch::verify_branching;
use crate::error::{Error, Result};
use crate::fmethod::{classify, classify_ido, ClassRow, ClassifyConfig, Equivariance, Target};
use crate::liealg::Flavor;
use crate::operators::{
    build_sbo, check_equivariance, image_computations, sbo_target, verify_factorization_sbo, Status,
};
use crate::params::{Sign, SignPair};
use crate::rep::{ScalarRepParams, Weight};
use crate::report::{render, to_json, write_file, Format, Tabular};
use crate::verma::{verify_factorization_verma, HomRow};

/// Environment variable naming the default output directory.
pub const OUT_DIR_VAR: &str = "FMETHOD_OUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "fmethod",
    version,
    about = "Exact F-method computations for (SL(n+1), SL(n)) and (GL(n+1), GL(n))"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads for parameter scans (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file; defaults to a file named after the run in `$FMETHOD_OUT_DIR` when the variable is set.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Scan parameters and compare solution dimensions with the classification.
    Classify(ClassifyArgs),
    /// Check operator identities, equivariance and image statements.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Truncated branching of a scalar Verma module to the subgroup.
    Branch(BranchArgs),
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, value_enum, default_value = "sl")]
    pub flavor: Flavor,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub m_max: u32,
    #[arg(long, default_value_t = 3)]
    pub l_max: u32,
    /// Extra `lambda` samples (first component), as `p/q`.
    #[arg(long = "lambda", value_parser = rational_arg, allow_hyphen_values = true)]
    pub lambdas: Vec<Rational>,
    /// Impose only the identity component of the target Levi group.
    #[arg(long)]
    pub connected: bool,
    /// Scan invariant differential operators (`G' = G`) for `k <= k-max` instead.
    #[arg(long)]
    pub ido: bool,
    #[arg(long, default_value_t = 4)]
    pub k_max: u32,
    /// Report the dual Verma homomorphisms `(s, r) = (-lambda, -nu)`.
    #[arg(long)]
    pub verma: bool,
}

#[derive(Debug, Args, Clone)]
pub struct OperatorArgs {
    #[arg(long, value_enum, default_value = "sl")]
    pub flavor: Flavor,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub m: u32,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Degree (or grade) cap of the check.
    #[arg(long, default_value_t = 6)]
    pub deg: u32,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Both factorization identities of `D_(m,l)`, plus the Verma-side three routes.
    Factorization(OperatorArgs),
    /// Intertwining property of `D_(m,l)` between the given source and its target.
    Equivariance {
        #[command(flatten)]
        op: OperatorArgs,
        /// `lambda` (first component); defaults to `1 - m - l`.
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        lambda: Option<Rational>,
        /// Second component of `lambda` (GL only).
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        lambda2: Option<Rational>,
        /// Overrides the first component of `nu` (to probe non-members).
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        nu: Option<Rational>,
        /// Sign `alpha` of the source: `plus` or `minus`.
        #[arg(long, default_value = "plus")]
        alpha: Sign,
    },
    /// Stability, annihilation, image and surjectivity statements.
    Images(OperatorArgs),
    /// Three-route factorization of the Verma homomorphism `Phi_(m,l)`.
    Verma(OperatorArgs),
}

#[derive(Debug, Args)]
pub struct BranchArgs {
    #[arg(long)]
    pub n: usize,
    /// Highest weight `s`, as `p/q`.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, conflicts_with = "p", required_unless_present = "p")]
    pub s: Option<Rational>,
    /// Nonnegative integer `s = p`, also checking `Im(phi_{p+1})`.
    #[arg(long)]
    pub p: Option<u32>,
    /// Truncation depth `D`: weights `>= s - D`.
    #[arg(long, default_value_t = 8)]
    pub deg: u32,
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Result of one verb.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    /// Human-readable mismatches, empty on success.
    pub mismatches: Vec<String>,
    pub written: Option<PathBuf>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.mismatches.is_empty() {
            0
        } else {
            1
        }
    }
}

/// One line of a verification summary.
#[derive(Debug, Serialize)]
pub struct CheckLine {
    pub check: String,
    pub status: Status,
    pub detail: String,
}

impl Tabular for CheckLine {
    fn header() -> Vec<&'static str> {
        vec!["check", "status", "detail"]
    }

    fn row(&self) -> Vec<String> {
        let status = if self.status.ok() { "pass" } else { "fail" };
        vec![self.check.clone(), status.to_string(), self.detail.clone()]
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParams(format!(
            "n must be at least 2, got {n}"
        )));
    }
    Ok(())
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let run = || match &cli.command {
        Command::Classify(a) => run_classify(a, cli.format.unwrap_or(Format::Table)),
        Command::Verify { what } => run_verify(what, cli.format.unwrap_or(Format::Json)),
        Command::Branch(a) => run_branch(a, cli.format.unwrap_or(Format::Json)),
    };
    let (name, mut outcome) = match cli.jobs {
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::InvalidParams(e.to_string()))?;
            pool.install(run)?
        }
        None => run()?,
    };
    let format = cli.format.unwrap_or(match cli.command {
        Command::Classify(_) => Format::Table,
        _ => Format::Json,
    });
    let path = cli.out.clone().or_else(|| {
        std::env::var_os(OUT_DIR_VAR)
            .map(|d| PathBuf::from(d).join(format!("{name}.{}", format.extension())))
    });
    if let Some(p) = &path {
        write_file(p, &outcome.text)?;
    }
    outcome.written = path;
    Ok(outcome)
}

fn outcome(text: String, mismatches: Vec<String>) -> Outcome {
    Outcome {
        text,
        mismatches,
        written: None,
    }
}

fn run_classify(a: &ClassifyArgs, format: Format) -> Result<(String, Outcome)> {
    check_n(a.n)?;
    let rows: Vec<ClassRow> = if a.ido {
        classify_ido(a.n, a.flavor, a.k_max, &a.lambdas)?
    } else {
        let mut cfg = ClassifyConfig::new(a.n, a.flavor, a.m_max, a.l_max);
        cfg.extra_lambdas = a.lambdas.clone();
        if a.connected {
            cfg.mode = Equivariance::Connected;
        }
        classify(&cfg)?
    };
    let mismatches: Vec<String> = rows
        .iter()
        .filter(|r| !r.matches())
        .map(|r| {
            format!(
                "predicted {} computed {}: {}",
                r.predicted_dim,
                r.computed_dim,
                r.row().join(" ")
            )
        })
        .collect();
    let text = if a.verma {
        let homs: Vec<_> = rows.iter().map(HomRow::from_class_row).collect();
        render(&homs, format)?
    } else {
        render(&rows, format)?
    };
    let name = format!(
        "classify-{}-n{}{}",
        a.flavor,
        a.n,
        if a.ido { "-ido" } else { "" }
    );
    Ok((name, outcome(text, mismatches)))
}

fn summary(lines: Vec<CheckLine>, full: String, format: Format) -> Result<Outcome> {
    let mismatches = lines
        .iter()
        .filter(|l| !l.status.ok())
        .map(|l| format!("{}: {}", l.check, l.detail))
        .collect();
    let text = match format {
        Format::Json => full,
        _ => render(&lines, format)?,
    };
    Ok(outcome(text, mismatches))
}

fn run_verify(what: &VerifyCommand, format: Format) -> Result<(String, Outcome)> {
    match what {
        VerifyCommand::Factorization(o) => {
            check_n(o.n)?;
            let mut reports = verify_factorization_sbo(o.m, o.l, o.n, o.deg)?;
            reports.push(verify_factorization_verma(
                o.m,
                o.l,
                o.n,
                o.flavor,
                o.deg.min(4),
            )?);
            let lines = reports
                .iter()
                .map(|r| CheckLine {
                    check: r.identity.clone(),
                    status: r.status,
                    detail: r
                        .counterexample
                        .clone()
                        .unwrap_or_else(|| format!("{} vectors", r.checked)),
                })
                .collect();
            let name = format!("factorization-n{}-m{}-l{}", o.n, o.m, o.l);
            Ok((name, summary(lines, to_json(&reports)?, format)?))
        }
        VerifyCommand::Equivariance {
            op: o,
            lambda,
            lambda2,
            nu,
            alpha,
        } => {
            check_n(o.n)?;
            let lam = lambda
                .clone()
                .unwrap_or_else(|| Rational::from_integer((1 - (o.m + o.l) as i64).into()));
            let source = match o.flavor {
                Flavor::SL => ScalarRepParams::sl(o.n, *alpha, lam),
                Flavor::GL => ScalarRepParams::gl(
                    o.n,
                    SignPair(*alpha, Sign::Plus),
                    Weight::gl(lam, lambda2.clone().unwrap_or_default()),
                ),
            };
            let mut target = sbo_target(&source, o.m, o.l);
            if let Some(v) = nu {
                target.nu.first = v.clone();
            }
            let d = build_sbo(o.m, o.l, o.n);
            let report = check_equivariance(&d.op, &source, &Target::Restricted(target), o.deg, 5)?;
            let detail = match report.violations.first() {
                Some(v) => format!("{} on {}", v.element, v.monomial),
                None => format!("{} checks", report.checked),
            };
            let lines = vec![CheckLine {
                check: report.operator.clone(),
                status: report.status,
                detail,
            }];
            let name = format!("equivariance-n{}-m{}-l{}", o.n, o.m, o.l);
            Ok((name, summary(lines, to_json(&report)?, format)?))
        }
        VerifyCommand::Images(o) => {
            check_n(o.n)?;
            let r = image_computations(o.m, o.l, o.n, o.deg)?;
            let flag = |b: bool| Status::from_bool(b);
            let lines = vec![
                CheckLine {
                    check: "F_G(1-k) stable".into(),
                    status: flag(r.stable),
                    detail: String::new(),
                },
                CheckLine {
                    check: "D(m,l) annihilates F_G(1-k)".into(),
                    status: flag(r.annihilated),
                    detail: String::new(),
                },
                CheckLine {
                    check: "D(m,0) F_G(1-k) = degree < l".into(),
                    status: flag(r.onto),
                    detail: format!("rank {} of {}", r.image_rank, r.expected_rank),
                },
                CheckLine {
                    check: "D(m,0) x_n^m".into(),
                    status: r.status,
                    detail: r.witness.clone(),
                },
                CheckLine {
                    check: "D(m,0) surjective".into(),
                    status: flag(r.surjective),
                    detail: format!("d <= {}", r.surjectivity_cap),
                },
            ];
            let name = format!("images-n{}-m{}-l{}", o.n, o.m, o.l);
            Ok((name, summary(lines, to_json(&r)?, format)?))
        }
        VerifyCommand::Verma(o) => {
            check_n(o.n)?;
            let r = verify_factorization_verma(o.m, o.l, o.n, o.flavor, o.deg)?;
            let lines = vec![CheckLine {
                check: r.identity.clone(),
                status: r.status,
                detail: r
                    .counterexample
                    .clone()
                    .unwrap_or_else(|| format!("{} vectors", r.checked)),
            }];
            let name = format!("verma-{}-n{}-m{}-l{}", o.flavor, o.n, o.m, o.l);
            Ok((name, summary(lines, to_json(&r)?, format)?))
        }
    }
}

fn run_branch(a: &BranchArgs, format: Format) -> Result<(String, Outcome)> {
    check_n(a.n)?;
    let s = match (&a.s, a.p) {
        (Some(s), _) => s.clone(),
        (None, Some(p)) => Rational::from_integer((p as i64).into()),
        (None, None) => return Err(Error::InvalidParams("one of --s or --p is required".into())),
    };
    let r = verify_branching(a.n, &s, a.deg)?;
    let lines = r
        .checks
        .iter()
        .map(|c| CheckLine {
            check: c.name.clone(),
            status: Status::from_bool(c.pass),
            detail: String::new(),
        })
        .collect();
    let name = format!("branch-n{}-s{}", a.n, r.s.replace('/', "_"));
    Ok((name, summary(lines, to_json(&r)?, format)?))
}

/// Parses `args` and runs; returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            use std::io::Write;
            // A closed pipe (e.g. `| head`) is not an error of the run.
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(o.text.as_bytes());
            if !o.text.ends_with('\n') {
                let _ = out.write_all(b"\n");
            }
            if let Some(p) = &o.written {
                eprintln!("wrote {}", p.display());
            }
            for m in &o.mismatches {
                eprintln!("mismatch: {m}");
            }
            o.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
