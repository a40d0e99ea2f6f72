//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use extshift_core::{
    check_corollary_join, check_rank_monotonicity, check_theorem_bound, exterior_shift, Field, ShiftConfig,
    TermOrder, DEFAULT_PRIME,
};

use crate::demo::NevoDemo;
use crate::error::{CliError, ExitCode};
use crate::facet_file;
use crate::fuzz::{self, Checker, Tally};
use crate::json::{ComplexJson, Meta, ReportJson};
use crate::report;
use crate::transform::TransformSpec;

fn parse_order(s: &str) -> Result<TermOrder, String> {
    s.parse().map_err(|e: extshift_core::Error| e.to_string())
}

fn parse_transform(s: &str) -> Result<TransformSpec, String> {
    s.parse().map_err(|e: CliError| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "extshift", version, about = "Exterior algebraic shifting and shifted-join comparisons")]
pub struct Cli {
    /// Prime modulus, at least 65536 and below 2^32.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    pub prime: u64,
    /// Random matrices per shift; all must agree.
    #[arg(long, global = true, default_value_t = 3)]
    pub trials: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Term order used for shifting: revlex or lex.
    #[arg(long, global = true, default_value = "revlex", value_parser = parse_order)]
    pub order: TermOrder,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Shift a complex read from a facet file.
    Shift { file: PathBuf },
    /// Compare counts of a shifted complex against a second shifted complex.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Run all three checks on random inputs.
    Fuzz {
        #[arg(long, default_value_t = 200)]
        cases: u64,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
    /// Worked examples.
    #[command(subcommand)]
    Demo(DemoCommand),
}

#[derive(Debug, Args)]
pub struct CountOrder {
    /// Order in which subsets are counted.
    #[arg(long, default_value = "revlex", value_parser = parse_order)]
    pub count_order: TermOrder,
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// shift(sigma) against shift(shift_phi(sigma)).
    Theorem {
        file: PathBuf,
        /// identity, random[:<seed>], permutation:<p1,..,pn>, unitriangular:<seed>,
        /// block:<k>[@<offset>] or file:<path>.
        #[arg(long, default_value = "random", value_parser = parse_transform)]
        phi: TransformSpec,
        #[command(flatten)]
        count: CountOrder,
    },
    /// shift(sigma * tau) against shift(shift(sigma) * shift(tau)).
    Corollary {
        sigma: PathBuf,
        tau: PathBuf,
        #[command(flatten)]
        count: CountOrder,
    },
    /// Generic rank profiles of psi(J) against its initial ideal.
    Proposition {
        file: PathBuf,
        #[arg(long, default_value = "random", value_parser = parse_transform)]
        psi: TransformSpec,
        /// Order for the initial ideal.
        #[arg(long, default_value = "lex", value_parser = parse_order)]
        inner: TermOrder,
        /// Order for the generic initial ideals and the counts.
        #[arg(long, default_value = "revlex", value_parser = parse_order)]
        gin: TermOrder,
    },
}

#[derive(Debug, Subcommand)]
pub enum DemoCommand {
    /// Suspension of two disjoint edges.
    Nevo,
}

impl Cli {
    pub fn shift_config(&self) -> Result<ShiftConfig, CliError> {
        let cfg = ShiftConfig {
            field: Field::for_sampling(self.prime)?,
            order: self.order,
            trials: self.trials,
            seed: self.seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { ExitCode::Usage.code() } else { 0 };
            let text = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code.code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code().code()
        }
    }
}

fn verdict_code(passed: bool) -> ExitCode {
    if passed {
        ExitCode::Pass
    } else {
        ExitCode::Violation
    }
}

fn to_json(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Runs a parsed command, returning its stdout text and exit code.
pub fn execute(cli: &Cli) -> Result<(String, ExitCode), CliError> {
    let cfg = cli.shift_config()?;
    match &cli.command {
        Command::Shift { file } => {
            let sigma = facet_file::read(file)?;
            let out = exterior_shift(&sigma, &cfg)?;
            let meta = Meta::from(&out);
            let text = if cli.json {
                to_json(serde_json::to_value(ComplexJson::new(&out.complex, Some(meta))).unwrap())
            } else {
                report::complex_text(&out.complex, Some(&meta))
            };
            Ok((text, if out.consensus { ExitCode::Pass } else { ExitCode::NoConsensus }))
        }
        Command::Check(CheckCommand::Theorem { file, phi, count }) => {
            let sigma = facet_file::read(file)?;
            let phi = phi.resolve(cfg.field, sigma.n(), cfg.seed)?;
            let c = check_theorem_bound(&sigma, &phi, &cfg, count.count_order)?;
            let text = if cli.json {
                to_json(json!({
                    "check": "theorem",
                    "shifted": ComplexJson::new(&c.shifted, None),
                    "initial": ComplexJson::new(&c.initial, None),
                    "reshifted": ComplexJson::new(&c.reshifted, None),
                    "report": ReportJson::from(&c.report),
                }))
            } else {
                report::labelled_complex("shift(sigma)", &c.shifted)
                    + &report::labelled_complex("shift_phi(sigma)", &c.initial)
                    + &report::labelled_complex("shift(shift_phi(sigma))", &c.reshifted)
                    + &report::margin_table(&c.report)
            };
            Ok((text, verdict_code(c.report.verdict.passed())))
        }
        Command::Check(CheckCommand::Corollary { sigma, tau, count }) => {
            let (sigma, tau) = (facet_file::read(sigma)?, facet_file::read(tau)?);
            let c = check_corollary_join(&sigma, &tau, &cfg, count.count_order)?;
            let text = if cli.json {
                to_json(json!({
                    "check": "corollary",
                    "shiftedJoin": ComplexJson::new(&c.shifted_join, None),
                    "joinOfShifts": ComplexJson::new(&c.join_of_shifts, None),
                    "reshifted": ComplexJson::new(&c.reshifted, None),
                    "report": ReportJson::from(&c.report),
                }))
            } else {
                report::labelled_complex("shift(sigma*tau)", &c.shifted_join)
                    + &report::labelled_complex("shift(sigma)*shift(tau)", &c.join_of_shifts)
                    + &report::labelled_complex("shift(shift(sigma)*shift(tau))", &c.reshifted)
                    + &report::margin_table(&c.report)
            };
            Ok((text, verdict_code(c.report.verdict.passed())))
        }
        Command::Check(CheckCommand::Proposition { file, psi, inner, gin }) => {
            let sigma = facet_file::read(file)?;
            let psi = psi.resolve(cfg.field, sigma.n(), cfg.seed)?;
            let c = check_rank_monotonicity(&sigma, &psi, *inner, *gin, &cfg)?;
            let text = if cli.json {
                to_json(json!({
                    "check": "proposition",
                    "inner": inner.name(),
                    "gin": gin.name(),
                    "initial": ComplexJson::new(&c.initial, None),
                    "report": ReportJson::from(&c.report),
                }))
            } else {
                format!("initial ideal order: {inner}, generic initial order: {gin}\n")
                    + &report::labelled_complex("complex of in(psi(J))", &c.initial)
                    + "left = generic counts of psi(J), right = generic counts of in(psi(J))\n"
                    + &report::margin_table(&c.report)
            };
            Ok((text, verdict_code(c.report.verdict.passed())))
        }
        Command::Fuzz { cases, n_max } => {
            if !(2..=extshift_core::MAX_VERTICES).contains(n_max) {
                return Err(CliError::Usage(format!("--n-max must be between 2 and 62, got {n_max}")));
            }
            let reports = fuzz::run(&cfg, &Checker::ALL, *n_max, *cases);
            let failed = reports.iter().any(|r| !r.passed());
            let text = if cli.json {
                let per: serde_json::Map<String, serde_json::Value> = Checker::ALL
                    .iter()
                    .map(|c| {
                        let t = Tally::of(reports.iter().filter(|r| r.checker == *c));
                        (
                            c.name().to_string(),
                            json!({
                                "run": t.run, "violations": t.violations, "errors": t.errors,
                                "strict": t.strict, "fVectorFailures": t.f_vector_failures,
                                "consensusFailures": t.consensus_failures,
                            }),
                        )
                    })
                    .collect();
                let failures: Vec<serde_json::Value> = reports
                    .iter()
                    .filter(|r| !r.passed())
                    .map(|r| {
                        json!({
                            "checker": r.checker.name(), "index": r.index, "n": r.n,
                            "verdict": r.verdict.map(|v| v.name()), "error": r.error, "replay": r.replay,
                        })
                    })
                    .collect();
                to_json(json!({
                    "cases": cases, "nMax": n_max, "seed": cfg.seed, "prime": cfg.field.modulus(),
                    "trials": cfg.trials, "checkers": per, "failures": failures,
                }))
            } else {
                fuzz::render(&cfg, *n_max, *cases, &reports)
            };
            Ok((text, verdict_code(!failed)))
        }
        Command::Demo(DemoCommand::Nevo) => {
            let d = NevoDemo::run(&cfg)?;
            let list = |v: &[extshift_core::FaceSet]| -> Vec<Vec<usize>> {
                v.iter().map(|s| s.iter().collect()).collect()
            };
            let text = if cli.json {
                to_json(json!({
                    "suspensionSkeleton": list(&d.suspension_skeleton),
                    "reshiftedSkeleton": list(&d.reshifted_skeleton),
                    "revlexVerdict": d.rev_verdict.name(),
                    "revlexWitness": d.rev_witness.map(|w| w.iter().collect::<Vec<_>>()),
                    "lexCounts": [d.lex_counts.0, d.lex_counts.1],
                    "lexVerdict": d.lex_verdict.name(),
                    "lexWitness": d.lex_witness.map(|w| w.iter().collect::<Vec<_>>()),
                    "allMatch": d.all_match(),
                }))
            } else {
                d.render()
            };
            Ok((text, verdict_code(d.all_match())))
        }
    }
}
