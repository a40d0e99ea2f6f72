//! Counting functions `m⪯S`, `m⪰S` and the comparison checks built on them.
//!
//! `m⪯S(σ)` counts faces of `σ` of size `|S|` that are `⪯ S`; it lives on
//! the complex side. `m⪰S(J)` counts monomials of a monomial ideal `J` of
//! degree `|S|` that are `⪰ S` (weak, so `S` itself counts); it lives on
//! the ideal side. For a complex `τ` the two are linked by
//!
//! ```text
//! m⪯S(τ) = |τ_{d-1}| − #{R ∈ ([n] choose d) : R ≻ S} + #{e_R ∈ J_τ : R ≻ S}
//! ```

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{block_embed, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{k_subsets, FaceSet, MAX_VERTICES};
use crate::field::Field;
use crate::matrix::FieldMatrix;
use crate::order::{Direction, TermOrder};
use crate::shifting::{
    build_degree_matrix, delta_phi, exterior_shift_strict, generic_rank_profile, initial_degree_component,
    trial_seeds, ShiftConfig,
};

/// Direct count of faces `R` with `|R| = |S|` and `R ⪯ S`, cross-checked
/// against the ideal-side identity above.
pub fn m_leq(sigma: &SimplicialComplex, s: FaceSet, order: TermOrder) -> usize {
    let d = s.len();
    let faces = sigma.faces_of_size(d);
    let direct = faces.iter().filter(|r| !order.less(s, **r)).count();

    let above_all = k_subsets(sigma.n(), d).filter(|r| order.less(s, *r)).count();
    let above_in_ideal = sigma.nonfaces_of_degree(d).into_iter().filter(|r| order.less(s, *r)).count();
    let via_ideal = faces.len() + above_in_ideal - above_all;
    assert_eq!(direct, via_ideal, "m⪯ count disagrees with the face-ideal identity at {s}");
    direct
}

/// `#{e_R ∈ J_σ : |R| = |S|, R ⪰ S}`.
pub fn m_geq_ideal(sigma: &SimplicialComplex, s: FaceSet, order: TermOrder) -> usize {
    sigma.nonfaces_of_degree(s.len()).into_iter().filter(|r| !order.less(*r, s)).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// All margins nonnegative, at least one positive.
    Dominates,
    /// All margins zero.
    Equal,
    /// Some margin negative.
    Violated,
}

impl Verdict {
    pub fn passed(self) -> bool {
        self != Verdict::Violated
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Dominates => "dominates",
            Verdict::Equal => "equal",
            Verdict::Violated => "violated",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarginRow {
    pub face: FaceSet,
    pub left: usize,
    pub right: usize,
}

impl MarginRow {
    pub fn margin(&self) -> i64 {
        self.left as i64 - self.right as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMargins {
    /// Cardinality of the subsets in this block.
    pub size: usize,
    /// One row per `size`-subset, ascending in the counting order.
    pub rows: Vec<MarginRow>,
    /// Smallest element of the symmetric difference of the two families,
    /// when they differ (complex-side reports only).
    pub witness: Option<FaceSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceReport {
    pub order: TermOrder,
    pub per_degree: Vec<DegreeMargins>,
    pub verdict: Verdict,
    /// First `S` with a negative margin if violated, otherwise the witness of
    /// the lowest degree where the families differ.
    pub witness: Option<FaceSet>,
}

impl DominanceReport {
    pub fn from_degrees(order: TermOrder, per_degree: Vec<DegreeMargins>) -> Self {
        let rows = || per_degree.iter().flat_map(|d| d.rows.iter());
        let first_negative = rows().find(|r| r.margin() < 0).map(|r| r.face);
        let (verdict, witness) = if first_negative.is_some() {
            (Verdict::Violated, first_negative)
        } else if rows().all(|r| r.margin() == 0) {
            (Verdict::Equal, None)
        } else {
            (Verdict::Dominates, per_degree.iter().find_map(|d| d.witness))
        };
        Self { order, per_degree, verdict, witness }
    }

    pub fn rows(&self) -> impl Iterator<Item = &MarginRow> {
        self.per_degree.iter().flat_map(|d| d.rows.iter())
    }

    pub fn row(&self, s: FaceSet) -> Option<&MarginRow> {
        self.rows().find(|r| r.face == s)
    }

    pub fn min_margin(&self) -> Option<i64> {
        self.rows().map(MarginRow::margin).min()
    }

    pub fn strict_count(&self) -> usize {
        self.rows().filter(|r| r.margin() > 0).count()
    }
}

/// `m⪯S(left) − m⪯S(right)` for every nonempty `S ⊆ [n]`.
pub fn rev_dominance(
    left: &SimplicialComplex,
    right: &SimplicialComplex,
    order: TermOrder,
) -> Result<DominanceReport> {
    if left.n() != right.n() {
        return Err(Error::Dimension(format!(
            "complexes on [{}] and [{}] cannot be compared",
            left.n(),
            right.n()
        )));
    }
    let n = left.n();
    let mut per_degree = Vec::with_capacity(n);
    for size in 1..=n {
        let subsets = order.enumerate(n, size, Direction::Ascending);
        let (mut lc, mut rc) = (0usize, 0usize);
        let mut witness = None;
        let mut rows = Vec::with_capacity(subsets.len());
        for s in subsets {
            let (in_l, in_r) = (left.contains(s), right.contains(s));
            lc += usize::from(in_l);
            rc += usize::from(in_r);
            if witness.is_none() && in_l != in_r {
                witness = Some(s);
            }
            rows.push(MarginRow { face: s, left: lc, right: rc });
        }
        per_degree.push(DegreeMargins { size, rows, witness });
    }
    let report = DominanceReport::from_degrees(order, per_degree);
    debug_assert!(report.rows().all(|r| r.left == m_leq(left, r.face, order)));
    Ok(report)
}

/// Everything computed for `m⪯S(Δ(σ)) ≥ m⪯S(Δ(Δφ(σ)))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    /// `Δ(σ)`
    pub shifted: SimplicialComplex,
    /// `Δφ(σ)`
    pub initial: SimplicialComplex,
    /// `Δ(Δφ(σ))`
    pub reshifted: SimplicialComplex,
    pub report: DominanceReport,
}

/// Compares `Δ(σ)` with `Δ(Δφ(σ))`, counting in `count_order`. Shifting
/// uses `config.order`; both shifts must reach consensus.
pub fn check_theorem_bound(
    sigma: &SimplicialComplex,
    phi: &FieldMatrix,
    config: &ShiftConfig,
    count_order: TermOrder,
) -> Result<TheoremCheck> {
    let shifted = exterior_shift_strict(sigma, config)?;
    let initial = delta_phi(sigma, phi, config.order)?;
    let reshifted = exterior_shift_strict(&initial, config)?;
    let report = rev_dominance(&shifted, &reshifted, count_order)?;
    Ok(TheoremCheck { shifted, initial, reshifted, report })
}

/// Everything computed for `m⪯S(Δ(σ∗τ)) ≥ m⪯S(Δ(Δ(σ)∗Δ(τ)))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryCheck {
    /// `Δ(σ∗τ)`
    pub shifted_join: SimplicialComplex,
    /// `Δ(σ)∗Δ(τ)`
    pub join_of_shifts: SimplicialComplex,
    /// `Δ(Δ(σ)∗Δ(τ))`
    pub reshifted: SimplicialComplex,
    pub report: DominanceReport,
}

/// `σ` on `[k]`, `τ` on `[l]` (relabelled to `k+1..=k+l` in the join).
///
/// Besides the comparison itself this confirms that `Δ(σ)∗Δ(τ)` is reached
/// as `Δ_φ̄(Δ_ψ̄(σ∗τ))` with `φ̄`, `ψ̄` random blocks acting on the two vertex
/// ranges, i.e. that the right-hand side really is `Δ(Δ_χ(σ∗τ))` for one
/// invertible `χ = φ̄ψ̄`.
pub fn check_corollary_join(
    sigma: &SimplicialComplex,
    tau: &SimplicialComplex,
    config: &ShiftConfig,
    count_order: TermOrder,
) -> Result<CorollaryCheck> {
    let (k, l) = (sigma.n(), tau.n());
    let n = k + l;
    let joined = sigma.join(tau)?;
    let shifted_join = exterior_shift_strict(&joined, config)?;
    let shifted_sigma = exterior_shift_strict(sigma, config)?;
    let shifted_tau = exterior_shift_strict(tau, config)?;
    let join_of_shifts = shifted_sigma.join(&shifted_tau)?;

    let seeds = trial_seeds(config.seed ^ 0xb10c_e3be_d000_0000, 2);
    let phi_bar = block_embed(&FieldMatrix::random_invertible(config.field, k, seeds[0]), n, 0)?;
    let psi_bar = block_embed(&FieldMatrix::random_invertible(config.field, l, seeds[1]), n, k)?;
    let via_blocks = delta_phi(&delta_phi(&joined, &psi_bar, config.order)?, &phi_bar, config.order)?;
    if via_blocks != join_of_shifts {
        return Err(Error::Inconsistent(
            "block-embedded shifting does not reproduce the join of the shifts".into(),
        ));
    }

    let reshifted = exterior_shift_strict(&join_of_shifts, config)?;
    let report = rev_dominance(&shifted_join, &reshifted, count_order)?;
    Ok(CorollaryCheck { shifted_join, join_of_shifts, reshifted, report })
}

/// Everything computed for `m⪰S(Gin(J)) ≥ m⪰S(Gin(in(J)))`, `J = ψ(J_σ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityCheck {
    /// Complex whose face ideal is `in_inner(ψ(J_σ))`.
    pub initial: SimplicialComplex,
    pub inner: TermOrder,
    pub gin: TermOrder,
    pub report: DominanceReport,
}

/// Ideal-side comparison for an arbitrary pair of term orders. Margins are
/// `m⪰S(Gin_gin(J)) − m⪰S(Gin_gin(in_inner(J)))`, each obtained as a
/// generic rank profile; rows ascend in `gin`.
pub fn check_rank_monotonicity(
    sigma: &SimplicialComplex,
    psi: &FieldMatrix,
    inner: TermOrder,
    gin: TermOrder,
    config: &ShiftConfig,
) -> Result<MonotonicityCheck> {
    let initial = delta_phi(sigma, psi, inner)?;
    let left = generic_rank_profile(sigma, Some(psi), gin, config)?;
    let right = generic_rank_profile(&initial, None, gin, config)?;
    let n = sigma.n();
    let per_degree = (1..=n)
        .map(|size| DegreeMargins {
            size,
            rows: gin
                .enumerate(n, size, Direction::Ascending)
                .into_iter()
                .map(|s| MarginRow { face: s, left: left[&s], right: right[&s] })
                .collect(),
            witness: None,
        })
        .collect();
    Ok(MonotonicityCheck { initial, inner, gin, report: DominanceReport::from_degrees(gin, per_degree) })
}

/// Weights `d_k = 2^{n-k}`: for equal-size `S`, `R`, `S ≺rev R` iff
/// `Σ_{k∈S} d_k > Σ_{k∈R} d_k`.
pub fn revlex_weights(n: usize) -> Result<Vec<u64>> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Ok((1..=n).map(|k| 1u64 << (n - k)).collect())
}

/// Degree-`d` initial monomials of `φ_{t0}(ψ(J_σ))` under revlex, where
/// `φ_{t0}(e_i) = t0^{d_i} e_i`.
pub fn diagonal_specialize(
    sigma: &SimplicialComplex,
    psi: &FieldMatrix,
    weights: &[u64],
    t0: u64,
    d: usize,
) -> Result<Vec<FaceSet>> {
    let field: Field = psi.field();
    if weights.len() != sigma.n() {
        return Err(Error::Dimension(format!("{} weights for n = {}", weights.len(), sigma.n())));
    }
    if weights.contains(&0) {
        return Err(Error::InvalidArgument("weights must be positive".into()));
    }
    if field.reduce(t0) == 0 {
        return Err(Error::InvalidArgument("t0 must be nonzero".into()));
    }
    let diag: Vec<u64> = weights.iter().map(|&w| field.pow(t0, w)).collect();
    let scaled = FieldMatrix::diagonal(field, &diag).mul(psi)?;
    let m = build_degree_matrix(sigma, &scaled, d, TermOrder::RevLex)?;
    Ok(initial_degree_component(&m))
}

/// `m⪰S` read off a complex's face ideal for every nonempty `S`, keyed by
/// `S`. Used to compare against generic rank profiles.
pub fn ideal_counts(sigma: &SimplicialComplex, order: TermOrder) -> BTreeMap<FaceSet, usize> {
    let n = sigma.n();
    let mut out = BTreeMap::new();
    for d in 1..=n {
        let mut count = 0;
        for s in order.enumerate(n, d, Direction::Descending) {
            count += usize::from(!sigma.contains(s));
            out.insert(s, count);
        }
    }
    out
}
