//! Randomized validation of the three comparison checks.
//!
//! Every case is generated from its own ChaCha8 stream, keyed by the run seed,
//! the checker and the case index, so results do not depend on scheduling.
//! Cases run on the rayon pool and are reported in index order.

use std::fmt::Write as _;

use rayon::prelude::*;

use extshift_core::{
    check_corollary_join, check_rank_monotonicity, check_theorem_bound, Error, FieldMatrix, Sampler,
    ShiftConfig, SimplicialComplex, TermOrder, TransformKind, Verdict,
};

use crate::facet_file;

/// Most facets drawn for one random complex.
pub const MAX_FACETS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Checker {
    Theorem,
    Corollary,
    Proposition,
}

impl Checker {
    pub const ALL: [Checker; 3] = [Checker::Theorem, Checker::Corollary, Checker::Proposition];

    pub fn name(self) -> &'static str {
        match self {
            Checker::Theorem => "theorem",
            Checker::Corollary => "corollary",
            Checker::Proposition => "proposition",
        }
    }

    fn stream_key(self) -> u64 {
        match self {
            Checker::Theorem => 0x7465_6f72_656d_0000,
            Checker::Corollary => 0x636f_726f_6c6c_0000,
            Checker::Proposition => 0x7072_6f70_6f73_0000,
        }
    }
}

/// Outcome of one case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub index: u64,
    pub checker: Checker,
    pub n: usize,
    pub verdict: Option<Verdict>,
    pub strict: usize,
    pub f_vector_ok: bool,
    pub consensus: bool,
    pub error: Option<String>,
    /// Everything needed to rerun the case by hand.
    pub replay: String,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self.f_vector_ok
            && self.consensus
            && self.verdict.is_some_and(Verdict::passed)
    }

    fn from_result<T>(
        index: u64,
        checker: Checker,
        n: usize,
        replay: String,
        result: Result<T, Error>,
        inspect: impl FnOnce(&T) -> (Verdict, usize, bool),
    ) -> Self {
        let mut r = CaseReport {
            index,
            checker,
            n,
            verdict: None,
            strict: 0,
            f_vector_ok: true,
            consensus: true,
            error: None,
            replay,
        };
        match result {
            Ok(v) => {
                let (verdict, strict, f_ok) = inspect(&v);
                r.verdict = Some(verdict);
                r.strict = strict;
                r.f_vector_ok = f_ok;
            }
            Err(e) => {
                if matches!(e, Error::NoConsensus { .. }) {
                    r.consensus = false;
                }
                if matches!(e, Error::Inconsistent(_)) {
                    r.f_vector_ok = !e.to_string().contains("f-vector");
                }
                r.error = Some(e.to_string());
            }
        }
        r
    }
}

fn matrix_text(m: &FieldMatrix) -> String {
    let mut out = format!("{}\n", m.rows());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(u64::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

fn indent(label: &str, body: &str) -> String {
    let mut out = format!("  {label}:\n");
    for line in body.lines() {
        writeln!(out, "    {line}").unwrap();
    }
    out
}

fn case_config(base: &ShiftConfig, rng: &mut Sampler) -> ShiftConfig {
    base.with_seed(rng.next_u64())
}

fn header(cfg: &ShiftConfig, extra: &str) -> String {
    format!(
        "  prime {}  trials {}  shift seed {}  shift order {}{extra}\n",
        cfg.field.modulus(),
        cfg.trials,
        cfg.seed,
        cfg.order
    )
}

pub fn theorem_case(base: &ShiftConfig, seed: u64, index: u64, n_max: usize) -> CaseReport {
    let mut rng = Sampler::for_case(seed ^ Checker::Theorem.stream_key(), index);
    let cfg = case_config(base, &mut rng);
    let n = rng.range(1, n_max);
    let kind = TransformKind::ALL[(index % 3) as usize];
    let sigma = rng.complex(n, MAX_FACETS).expect("n within range");
    let phi = rng.transform(cfg.field, n, kind).expect("n within range");
    let replay = header(&cfg, &format!("  phi {}", kind.name()))
        + &indent("sigma", &facet_file::format(&sigma))
        + &indent("phi", &matrix_text(&phi));
    let f = sigma.f_vector();
    CaseReport::from_result(
        index,
        Checker::Theorem,
        n,
        replay,
        check_theorem_bound(&sigma, &phi, &cfg, TermOrder::RevLex),
        |c| {
            (
                c.report.verdict,
                c.report.strict_count(),
                c.initial.f_vector() == f && c.shifted.f_vector() == f,
            )
        },
    )
}

pub fn corollary_case(base: &ShiftConfig, seed: u64, index: u64, n_max: usize) -> CaseReport {
    let mut rng = Sampler::for_case(seed ^ Checker::Corollary.stream_key(), index);
    let cfg = case_config(base, &mut rng);
    let k = rng.range(1, 4.min(n_max - 1));
    let l = rng.range(1, 4.min(n_max - k));
    let sigma = rng.complex(k, MAX_FACETS).expect("k within range");
    let tau = rng.complex(l, MAX_FACETS).expect("l within range");
    corollary_report(&cfg, index, &sigma, &tau)
}

/// Runs the join comparison on a given pair.
pub fn corollary_report(
    cfg: &ShiftConfig,
    index: u64,
    sigma: &SimplicialComplex,
    tau: &SimplicialComplex,
) -> CaseReport {
    let replay = header(cfg, "")
        + &indent("sigma", &facet_file::format(sigma))
        + &indent("tau", &facet_file::format(tau));
    let n = sigma.n() + tau.n();
    let f: Vec<usize> = sigma.join(tau).map(|j| j.f_vector()).unwrap_or_default();
    CaseReport::from_result(
        index,
        Checker::Corollary,
        n,
        replay,
        check_corollary_join(sigma, tau, cfg, TermOrder::RevLex),
        |c| {
            (
                c.report.verdict,
                c.report.strict_count(),
                c.shifted_join.f_vector() == f && c.join_of_shifts.f_vector() == f,
            )
        },
    )
}

/// Even cases use inner = lex, gin = revlex; odd cases the reverse.
pub fn proposition_case(base: &ShiftConfig, seed: u64, index: u64, n_max: usize) -> CaseReport {
    let mut rng = Sampler::for_case(seed ^ Checker::Proposition.stream_key(), index);
    let cfg = case_config(base, &mut rng);
    let n = rng.range(1, n_max);
    let kind = TransformKind::ALL[((index / 2) % 3) as usize];
    let (inner, gin) = if index.is_multiple_of(2) {
        (TermOrder::Lex, TermOrder::RevLex)
    } else {
        (TermOrder::RevLex, TermOrder::Lex)
    };
    let sigma = rng.complex(n, MAX_FACETS).expect("n within range");
    let psi = rng.transform(cfg.field, n, kind).expect("n within range");
    let replay = header(&cfg, &format!("  psi {}  inner {inner}  gin {gin}", kind.name()))
        + &indent("sigma", &facet_file::format(&sigma))
        + &indent("psi", &matrix_text(&psi));
    let f = sigma.f_vector();
    CaseReport::from_result(
        index,
        Checker::Proposition,
        n,
        replay,
        check_rank_monotonicity(&sigma, &psi, inner, gin, &cfg),
        |c| (c.report.verdict, c.report.strict_count(), c.initial.f_vector() == f),
    )
}

pub fn run_case(checker: Checker, base: &ShiftConfig, seed: u64, index: u64, n_max: usize) -> CaseReport {
    match checker {
        Checker::Theorem => theorem_case(base, seed, index, n_max),
        Checker::Corollary => corollary_case(base, seed, index, n_max),
        Checker::Proposition => proposition_case(base, seed, index, n_max),
    }
}

/// `cases` cases of each listed checker, in (index, checker) order.
pub fn run(base: &ShiftConfig, checkers: &[Checker], n_max: usize, cases: u64) -> Vec<CaseReport> {
    assert!(n_max >= 2, "n_max must be at least 2");
    let jobs: Vec<(u64, Checker)> = (0..cases).flat_map(|i| checkers.iter().map(move |&c| (i, c))).collect();
    jobs.par_iter().map(|&(i, c)| run_case(c, base, base.seed, i, n_max)).collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub run: usize,
    pub violations: usize,
    pub errors: usize,
    pub strict: usize,
    pub f_vector_failures: usize,
    pub consensus_failures: usize,
}

impl Tally {
    pub fn of<'a>(reports: impl IntoIterator<Item = &'a CaseReport>) -> Self {
        let mut t = Tally::default();
        for r in reports {
            t.run += 1;
            t.violations += usize::from(r.verdict == Some(Verdict::Violated));
            t.errors += usize::from(r.error.is_some());
            t.strict += usize::from(r.strict > 0);
            t.f_vector_failures += usize::from(!r.f_vector_ok);
            t.consensus_failures += usize::from(!r.consensus);
        }
        t
    }

    pub fn failures(&self) -> usize {
        self.violations + self.errors + self.f_vector_failures
    }
}

/// Text summary: one line per checker, then every failing case verbatim.
pub fn render(base: &ShiftConfig, n_max: usize, cases: u64, reports: &[CaseReport]) -> String {
    let mut out = format!(
        "fuzz: {cases} cases per checker, n <= {n_max}, seed {}, prime {}, trials {}\n",
        base.seed,
        base.field.modulus(),
        base.trials
    );
    for checker in Checker::ALL {
        let t = Tally::of(reports.iter().filter(|r| r.checker == checker));
        if t.run == 0 {
            continue;
        }
        writeln!(
            out,
            "{:<12} {} run, {} passed, {} violations, {} errors, {} with a strict margin",
            checker.name(),
            t.run,
            t.run - reports.iter().filter(|r| r.checker == checker && !r.passed()).count(),
            t.violations,
            t.errors,
            t.strict
        )
        .unwrap();
    }
    let all = Tally::of(reports);
    writeln!(out, "f-vector preserved: {}/{}", all.run - all.f_vector_failures, all.run).unwrap();
    writeln!(out, "consensus: {}/{}", all.run - all.consensus_failures, all.run).unwrap();
    for r in reports.iter().filter(|r| !r.passed()) {
        let status = match (&r.error, r.verdict) {
            (Some(e), _) => format!("error: {e}"),
            (None, Some(v)) if !v.passed() => format!("verdict {v}"),
            _ => "f-vector changed".to_string(),
        };
        writeln!(out, "FAILED {} case {} (n = {}): {status}", r.checker.name(), r.index, r.n).unwrap();
        out.push_str(&r.replay);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases_are_reproducible_and_pass() {
        let cfg = ShiftConfig::default();
        let a = run(&cfg, &Checker::ALL, 5, 6);
        let b = run(&cfg, &Checker::ALL, 5, 6);
        assert_eq!(a, b);
        assert_eq!(a.len(), 18);
        assert!(a.iter().all(CaseReport::passed), "{}", render(&cfg, 5, 6, &a));
        let order: Vec<(u64, Checker)> = a.iter().map(|r| (r.index, r.checker)).collect();
        assert_eq!(order[..3], [(0, Checker::Theorem), (0, Checker::Corollary), (0, Checker::Proposition)]);
    }

    #[test]
    fn corollary_sizes_stay_in_bounds() {
        let cfg = ShiftConfig::default();
        for i in 0..40 {
            let r = corollary_case(&cfg, 3, i, 8);
            assert!((2..=8).contains(&r.n));
        }
        assert!((2..=3).contains(&corollary_case(&cfg, 3, 0, 3).n));
    }

    #[test]
    fn empty_run_renders_zero_counts() {
        let cfg = ShiftConfig::default();
        let text = render(&cfg, 7, 0, &run(&cfg, &Checker::ALL, 7, 0));
        assert!(text.contains("f-vector preserved: 0/0"));
        assert!(!text.contains("FAILED"));
    }
}
