//! The two-disjoint-edges example: suspension of `closure{12,34}` against the
//! suspension of its shift.

use std::fmt::Write as _;

use extshift_core::analysis::m_leq;
use extshift_core::{
    exterior_shift_strict, rev_dominance, FaceSet, Result, ShiftConfig, SimplicialComplex, TermOrder, Verdict,
};

fn faces(sets: &[&[usize]]) -> Vec<FaceSet> {
    sets.iter().map(|s| FaceSet::from_vertices(s.iter().copied()).unwrap()).collect()
}

pub fn two_edges() -> SimplicialComplex {
    SimplicialComplex::from_facets(4, faces(&[&[1, 2], &[3, 4]])).unwrap()
}

/// Two isolated vertices.
pub fn two_points() -> SimplicialComplex {
    SimplicialComplex::from_facets(2, faces(&[&[1], &[2]])).unwrap()
}

pub fn expected_suspension_skeleton() -> Vec<FaceSet> {
    faces(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 2, 6]])
}

pub fn expected_reshifted_skeleton() -> Vec<FaceSet> {
    faces(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4]])
}

#[derive(Debug, Clone)]
pub struct NevoDemo {
    /// `Δ(σ)`
    pub shifted: SimplicialComplex,
    /// `Δ(Σσ)`
    pub suspension_shift: SimplicialComplex,
    /// `Δ(Σ(Δσ))`
    pub reshifted: SimplicialComplex,
    /// Size-3 faces of each, ascending in revlex.
    pub suspension_skeleton: Vec<FaceSet>,
    pub reshifted_skeleton: Vec<FaceSet>,
    pub rev_verdict: Verdict,
    pub rev_witness: Option<FaceSet>,
    /// `m⪯lex{1,3,4}` of `Δ(Σσ)` and of `Δ(Σ(Δσ))`.
    pub lex_counts: (usize, usize),
    pub lex_verdict: Verdict,
    pub lex_witness: Option<FaceSet>,
}

impl NevoDemo {
    pub fn lex_probe() -> FaceSet {
        FaceSet::from_vertices([1, 3, 4]).unwrap()
    }

    pub fn expected_witness() -> FaceSet {
        FaceSet::from_vertices([1, 2, 6]).unwrap()
    }

    /// Shifting is always revlex here; only the field, trials and seed of
    /// `config` are used.
    pub fn run(config: &ShiftConfig) -> Result<Self> {
        let cfg = config.with_order(TermOrder::RevLex);
        let sigma = two_edges();
        let shifted = exterior_shift_strict(&sigma, &cfg)?;
        let suspension_shift = exterior_shift_strict(&sigma.suspension()?, &cfg)?;
        let reshifted = exterior_shift_strict(&shifted.suspension()?, &cfg)?;
        let rev = rev_dominance(&suspension_shift, &reshifted, TermOrder::RevLex)?;
        let lex = rev_dominance(&suspension_shift, &reshifted, TermOrder::Lex)?;
        let probe = Self::lex_probe();
        Ok(NevoDemo {
            suspension_skeleton: suspension_shift.faces_of_size_sorted(3, TermOrder::RevLex),
            reshifted_skeleton: reshifted.faces_of_size_sorted(3, TermOrder::RevLex),
            rev_verdict: rev.verdict,
            rev_witness: rev.witness,
            lex_counts: (
                m_leq(&suspension_shift, probe, TermOrder::Lex),
                m_leq(&reshifted, probe, TermOrder::Lex),
            ),
            lex_verdict: lex.verdict,
            lex_witness: lex.witness,
            shifted,
            suspension_shift,
            reshifted,
        })
    }

    pub fn skeletons_match(&self) -> bool {
        self.suspension_skeleton == expected_suspension_skeleton()
            && self.reshifted_skeleton == expected_reshifted_skeleton()
    }

    pub fn rev_matches(&self) -> bool {
        self.rev_verdict == Verdict::Dominates && self.rev_witness == Some(Self::expected_witness())
    }

    pub fn lex_matches(&self) -> bool {
        self.lex_counts == (2, 3)
            && self.lex_verdict == Verdict::Violated
            && self.lex_witness == Some(Self::lex_probe())
    }

    pub fn all_match(&self) -> bool {
        self.skeletons_match() && self.rev_matches() && self.lex_matches()
    }

    pub fn render(&self) -> String {
        let list = |v: &[FaceSet]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let ok = |b: bool| if b { "ok" } else { "MISMATCH" };
        let mut out = String::new();
        writeln!(out, "sigma = closure{{12,34}} on [4]").unwrap();
        writeln!(out, "shift of sigma: facets {}", list(&self.shifted.facets())).unwrap();
        writeln!(
            out,
            "2-skeleton of shift(susp sigma):        {}  [{}]",
            list(&self.suspension_skeleton),
            ok(self.suspension_skeleton == expected_suspension_skeleton())
        )
        .unwrap();
        writeln!(
            out,
            "2-skeleton of shift(susp shift(sigma)): {}  [{}]",
            list(&self.reshifted_skeleton),
            ok(self.reshifted_skeleton == expected_reshifted_skeleton())
        )
        .unwrap();
        let wit = |w: Option<FaceSet>| w.map_or_else(|| "none".to_string(), |w| w.to_string());
        writeln!(
            out,
            "revlex counts: {}, first difference at {}  [{}]",
            self.rev_verdict,
            wit(self.rev_witness),
            ok(self.rev_matches())
        )
        .unwrap();
        writeln!(
            out,
            "lex counts at {}: {} vs {}, {} at {}  [{}]",
            Self::lex_probe(),
            self.lex_counts.0,
            self.lex_counts.1,
            self.lex_verdict,
            wit(self.lex_witness),
            ok(self.lex_matches())
        )
        .unwrap();
        writeln!(out, "result: {}", if self.all_match() { "all match" } else { "MISMATCH" }).unwrap();
        out
    }
}
