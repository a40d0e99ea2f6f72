//! Initial ideals, generic initial ideals and exterior algebraic shifting.
//!
//! `J_σ` is generated by the non-face monomials, and its degree-`d` part is
//! spanned by the non-faces of size `d`. Hence `in(φ(J_σ))` can be read off
//! degree by degree: row-reduce the coefficient vectors of `φ(e_T)` over the
//! `d`-subsets listed in *descending* term order, and the pivot columns are
//! exactly the initial monomials. A prefix of the column list is the set of
//! monomials `⪰ S`, so the pivot count up to column `S` is
//! `rank M_{⪰S}(J, d)`.
//!
//! Genericity of `φ` is witnessed by repeating the computation with several
//! independently seeded random matrices and requiring agreement.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exterior::MinorCache;
use crate::face::{colex_rank, k_subsets, FaceSet};
use crate::field::{Field, MIN_SHIFT_PRIME};
use crate::matrix::FieldMatrix;
use crate::order::{Direction, TermOrder};

/// Parameters for every randomized computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftConfig {
    pub field: Field,
    pub order: TermOrder,
    pub trials: usize,
    pub seed: u64,
}

impl Default for ShiftConfig {
    fn default() -> Self {
        Self { field: Field::default(), order: TermOrder::RevLex, trials: 3, seed: 0 }
    }
}

impl ShiftConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidArgument("trial count must be at least 1".into()));
        }
        let p = self.field.modulus();
        if p < MIN_SHIFT_PRIME {
            return Err(Error::PrimeTooSmall { p, min: MIN_SHIFT_PRIME });
        }
        Ok(())
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    pub fn with_order(self, order: TermOrder) -> Self {
        Self { order, ..self }
    }
}

/// `M(J_σ, d)` after applying `φ`: one row per non-face of size `d`, one
/// column per `d`-subset in strictly descending order.
#[derive(Debug, Clone)]
pub struct DegreeMatrix {
    pub degree: usize,
    pub order: TermOrder,
    pub columns: Vec<FaceSet>,
    pub row_labels: Vec<FaceSet>,
    pub matrix: FieldMatrix,
}

impl DegreeMatrix {
    fn pivots(&self) -> Vec<usize> {
        self.matrix.row_echelon_pivots().pivots
    }

    /// `rank M_{⪰S}` for each column `S`, in column order.
    pub fn prefix_ranks(&self) -> Vec<usize> {
        let pivots = self.pivots();
        let mut out = Vec::with_capacity(self.columns.len());
        let mut next = 0;
        for c in 0..self.columns.len() {
            if next < pivots.len() && pivots[next] == c {
                next += 1;
            }
            out.push(next);
        }
        out
    }
}

fn check_transform(sigma: &SimplicialComplex, phi: &FieldMatrix) -> Result<()> {
    if !phi.is_square() || phi.rows() != sigma.n() {
        return Err(Error::Dimension(format!(
            "transform is {}x{} but the complex lives on [{}]",
            phi.rows(),
            phi.cols(),
            sigma.n()
        )));
    }
    Ok(())
}

fn degree_matrix_with(
    cache: &mut MinorCache<'_>,
    field: Field,
    sigma: &SimplicialComplex,
    d: usize,
    order: TermOrder,
) -> Result<DegreeMatrix> {
    let n = sigma.n();
    let columns = order.enumerate(n, d, Direction::Descending);
    // position of each colex index in the descending column list
    let mut position = alloc::vec![0usize; columns.len()];
    for (pos, s) in columns.iter().enumerate() {
        position[colex_rank(*s)] = pos;
    }
    let row_labels = sigma.nonfaces_of_degree(d);
    let cols = columns.len();
    let mut data = alloc::vec![0u64; row_labels.len() * cols];
    for (i, t) in row_labels.iter().enumerate() {
        let minors = cache.column(*t)?;
        for (idx, &v) in minors.iter().enumerate() {
            data[i * cols + position[idx]] = v;
        }
    }
    let matrix = FieldMatrix::from_residues(field, row_labels.len(), cols, data)?;
    Ok(DegreeMatrix { degree: d, order, columns, row_labels, matrix })
}

/// Rows are the images `φ(e_T)` of the non-faces `T` with `|T| = d`.
pub fn build_degree_matrix(
    sigma: &SimplicialComplex,
    phi: &FieldMatrix,
    d: usize,
    order: TermOrder,
) -> Result<DegreeMatrix> {
    check_transform(sigma, phi)?;
    if d > sigma.n() {
        return Err(Error::Dimension(format!("degree {d} exceeds n = {}", sigma.n())));
    }
    let mut cache = MinorCache::new(phi)?;
    degree_matrix_with(&mut cache, phi.field(), sigma, d, order)
}

/// Degree-`d` monomials of the initial ideal, largest first.
pub fn initial_degree_component(m: &DegreeMatrix) -> Vec<FaceSet> {
    m.pivots().into_iter().map(|c| m.columns[c]).collect()
}

/// `S ↦ rank M_{⪰S}(φ(J_σ), d)` for every `d`-subset `S`.
pub fn rank_profile(
    sigma: &SimplicialComplex,
    phi: &FieldMatrix,
    d: usize,
    order: TermOrder,
) -> Result<BTreeMap<FaceSet, usize>> {
    let m = build_degree_matrix(sigma, phi, d, order)?;
    Ok(m.columns.iter().copied().zip(m.prefix_ranks()).collect())
}

/// `Δφ(σ)`: the complex whose face ideal is `in(φ(J_σ))`.
pub fn delta_phi(
    sigma: &SimplicialComplex,
    phi: &FieldMatrix,
    order: TermOrder,
) -> Result<SimplicialComplex> {
    check_transform(sigma, phi)?;
    if !phi.is_invertible() {
        return Err(Error::Singular);
    }
    let n = sigma.n();
    let mut cache = MinorCache::new(phi)?;
    let mut faces: Vec<FaceSet> = alloc::vec![FaceSet::EMPTY];
    for d in 1..=n {
        let nonfaces = sigma.nonfaces_of_degree(d);
        if nonfaces.is_empty() {
            faces.extend(k_subsets(n, d));
            continue;
        }
        let m = degree_matrix_with(&mut cache, phi.field(), sigma, d, order)?;
        let initial: BTreeSet<FaceSet> = initial_degree_component(&m).into_iter().collect();
        if initial.len() != nonfaces.len() {
            return Err(Error::Inconsistent(format!(
                "degree {d}: {} initial monomials for {} independent generators",
                initial.len(),
                nonfaces.len()
            )));
        }
        if initial.len() == m.columns.len() {
            // every higher degree is then entirely in the ideal as well
            break;
        }
        faces.extend(k_subsets(n, d).filter(|s| !initial.contains(s)));
    }
    SimplicialComplex::from_faces(n, faces).map_err(|e| match e {
        Error::NotDownwardClosed { face } => {
            Error::Inconsistent(format!("initial complex is not downward closed at {face}"))
        }
        other => other,
    })
}

/// `Δ(σ)` plus how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftOutcome {
    pub complex: SimplicialComplex,
    pub prime: u64,
    /// Seeds of the random matrices in the reported batch.
    pub seeds: Vec<u64>,
    pub trials: usize,
    /// All trials of the reported batch agreed.
    pub consensus: bool,
    /// The first batch disagreed and a batch of twice the size was run.
    pub escalated: bool,
}

/// Value agreed on by a batch of random-matrix evaluations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Consensus<T> {
    pub value: T,
    pub seeds: Vec<u64>,
    pub consensus: bool,
    pub escalated: bool,
}

/// Per-trial seeds: successive `next_u64` outputs of ChaCha8 seeded with
/// `seed`.
pub fn trial_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.next_u64()).collect()
}

/// Runs `eval` on `trials` random invertible `n×n` matrices. If they
/// disagree, a fresh batch of `2·trials` is run once; if that batch also
/// disagrees the most frequent value is returned with `consensus = false`.
pub fn consensus<T, F>(config: &ShiftConfig, n: usize, mut eval: F) -> Result<Consensus<T>>
where
    T: Clone + PartialEq,
    F: FnMut(&FieldMatrix) -> Result<T>,
{
    config.validate()?;
    let t = config.trials;
    let all_seeds = trial_seeds(config.seed, 3 * t);
    let mut run = |seeds: &[u64]| -> Result<Vec<T>> {
        seeds.iter().map(|&s| eval(&FieldMatrix::random_invertible(config.field, n, s))).collect()
    };
    let first = run(&all_seeds[..t])?;
    if first.iter().all(|v| *v == first[0]) {
        let value = first.into_iter().next().unwrap();
        return Ok(Consensus { value, seeds: all_seeds[..t].to_vec(), consensus: true, escalated: false });
    }
    let seeds = all_seeds[t..].to_vec();
    let second = run(&seeds)?;
    let agreed = second.iter().all(|v| *v == second[0]);
    let value = if agreed { second[0].clone() } else { plurality(first.iter().chain(second.iter())) };
    Ok(Consensus { value, seeds, consensus: agreed, escalated: true })
}

fn plurality<'a, T: PartialEq + Clone + 'a>(values: impl Iterator<Item = &'a T>) -> T {
    let mut tally: Vec<(&T, usize)> = Vec::new();
    for v in values {
        match tally.iter_mut().find(|(u, _)| *u == v) {
            Some(entry) => entry.1 += 1,
            None => tally.push((v, 1)),
        }
    }
    let best = tally.iter().map(|(_, c)| *c).max().unwrap();
    tally.into_iter().find(|(_, c)| *c == best).unwrap().0.clone()
}

/// Exterior algebraic shifting `Δ(σ)` with respect to `config.order`.
pub fn exterior_shift(sigma: &SimplicialComplex, config: &ShiftConfig) -> Result<ShiftOutcome> {
    let f = sigma.f_vector();
    let c = consensus(config, sigma.n(), |phi| {
        let shifted = delta_phi(sigma, phi, config.order)?;
        if shifted.f_vector() != f {
            return Err(Error::Inconsistent(format!(
                "f-vector changed from {:?} to {:?}",
                f,
                shifted.f_vector()
            )));
        }
        Ok(shifted)
    })?;
    Ok(ShiftOutcome {
        complex: c.value,
        prime: config.field.modulus(),
        trials: c.seeds.len(),
        seeds: c.seeds,
        consensus: c.consensus,
        escalated: c.escalated,
    })
}

/// Like [`exterior_shift`] but fails unless the trials agree.
pub fn exterior_shift_strict(sigma: &SimplicialComplex, config: &ShiftConfig) -> Result<SimplicialComplex> {
    let out = exterior_shift(sigma, config)?;
    if !out.consensus {
        return Err(Error::NoConsensus { trials: out.trials });
    }
    Ok(out.complex)
}

/// `S ↦ rank M_{⪰S}(pre(J_σ), d)` for a generic matrix, over all degrees
/// `1..=n`. Equivalently `m_{⪰S}(Gin(pre(J_σ)))`.
pub fn generic_rank_profile(
    sigma: &SimplicialComplex,
    pre: Option<&FieldMatrix>,
    order: TermOrder,
    config: &ShiftConfig,
) -> Result<BTreeMap<FaceSet, usize>> {
    if let Some(pre) = pre {
        check_transform(sigma, pre)?;
    }
    let n = sigma.n();
    let c = consensus(config, n, |phi| {
        let composed;
        let total = match pre {
            Some(pre) => {
                composed = phi.mul(pre)?;
                &composed
            }
            None => phi,
        };
        let mut cache = MinorCache::new(total)?;
        let mut out = BTreeMap::new();
        for d in 1..=n {
            let m = degree_matrix_with(&mut cache, config.field, sigma, d, order)?;
            out.extend(m.columns.iter().copied().zip(m.prefix_ranks()));
        }
        Ok(out)
    })?;
    if !c.consensus {
        return Err(Error::NoConsensus { trials: c.seeds.len() });
    }
    Ok(c.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(v: &[usize]) -> FaceSet {
        FaceSet::from_vertices(v.iter().copied()).unwrap()
    }

    fn two_edges() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, [fs(&[1, 2]), fs(&[3, 4])]).unwrap()
    }

    #[test]
    fn identity_degree_matrix() {
        let f = Field::default();
        let id = FieldMatrix::identity(f, 4);
        let m = build_degree_matrix(&two_edges(), &id, 2, TermOrder::RevLex).unwrap();
        assert_eq!(m.matrix.rows(), 4);
        assert_eq!(m.matrix.cols(), 6);
        for (i, t) in m.row_labels.iter().enumerate() {
            for (j, s) in m.columns.iter().enumerate() {
                assert_eq!(m.matrix.get(i, j), u64::from(s == t));
            }
        }
        let mut initial = initial_degree_component(&m);
        initial.sort();
        let mut nonfaces = two_edges().nonfaces_of_degree(2);
        nonfaces.sort();
        assert_eq!(initial, nonfaces);
    }

    #[test]
    fn columns_strictly_descending() {
        let f = Field::default();
        let phi = FieldMatrix::random_invertible(f, 5, 2);
        let sigma = SimplicialComplex::empty(5).unwrap();
        for order in [TermOrder::RevLex, TermOrder::Lex] {
            let m = build_degree_matrix(&sigma, &phi, 3, order).unwrap();
            assert_eq!(m.columns.len(), 10);
            assert!(m.columns.windows(2).all(|w| order.less(w[1], w[0])));
        }
    }

    #[test]
    fn full_simplex_is_fixed() {
        let f = Field::default();
        let full = SimplicialComplex::simplex(4).unwrap();
        let phi = FieldMatrix::random_invertible(f, 4, 5);
        let m = build_degree_matrix(&full, &phi, 2, TermOrder::RevLex).unwrap();
        assert_eq!(m.matrix.rows(), 0);
        assert!(initial_degree_component(&m).is_empty());
        assert_eq!(delta_phi(&full, &phi, TermOrder::RevLex).unwrap(), full);
        let out = exterior_shift(&full, &ShiftConfig::default()).unwrap();
        assert!(out.consensus);
        assert_eq!(out.complex, full);
        assert!(rank_profile(&full, &phi, 2, TermOrder::RevLex).unwrap().values().all(|&r| r == 0));
    }

    #[test]
    fn identity_transform_fixes_everything() {
        let f = Field::default();
        let id = FieldMatrix::identity(f, 4);
        assert_eq!(delta_phi(&two_edges(), &id, TermOrder::RevLex).unwrap(), two_edges());
        assert_eq!(delta_phi(&two_edges(), &id, TermOrder::Lex).unwrap(), two_edges());
    }

    #[test]
    fn two_edges_shift_to_star_pair() {
        // vertex 4 stays: the f-vector (1, 4, 2) is preserved
        let expected = SimplicialComplex::from_facets(4, [fs(&[1, 2]), fs(&[1, 3]), fs(&[4])]).unwrap();
        let out = exterior_shift(&two_edges(), &ShiftConfig::default()).unwrap();
        assert!(out.consensus && !out.escalated);
        assert_eq!(out.trials, 3);
        assert_eq!(out.seeds, trial_seeds(0, 3));
        assert_eq!(out.complex, expected);
    }

    /// Among all shifted complexes on [4] with f-vector (1,4,2) exactly one
    /// exists, so it must be the shift of two disjoint edges.
    #[test]
    fn star_pair_is_the_only_shifted_candidate() {
        let edges: Vec<FaceSet> = k_subsets(4, 2).collect();
        let mut found = Vec::new();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let mut facets: Vec<FaceSet> = (1..=4).map(|v| FaceSet::singleton(v).unwrap()).collect();
                facets.extend([edges[i], edges[j]]);
                let c = SimplicialComplex::from_facets(4, facets).unwrap();
                if c.is_shifted() {
                    found.push(c);
                }
            }
        }
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].facets().iter().filter(|s| s.len() == 2).count(), 2);
        assert!(found[0].contains(fs(&[1, 2])) && found[0].contains(fs(&[1, 3])));
    }

    #[test]
    fn nevo_suspension_two_skeleton() {
        let susp = two_edges().suspension().unwrap();
        let shifted = exterior_shift_strict(&susp, &ShiftConfig::default()).unwrap();
        assert_eq!(
            shifted.faces_of_size_sorted(3, TermOrder::RevLex),
            [fs(&[1, 2, 3]), fs(&[1, 2, 4]), fs(&[1, 2, 5]), fs(&[1, 2, 6])]
        );
        assert!(shifted.is_shifted());
    }

    #[test]
    fn rejects_bad_transforms() {
        let f = Field::default();
        let sigma = two_edges();
        let singular = FieldMatrix::zeros(f, 4, 4);
        assert_eq!(delta_phi(&sigma, &singular, TermOrder::RevLex), Err(Error::Singular));
        let wrong = FieldMatrix::identity(f, 3);
        assert!(matches!(delta_phi(&sigma, &wrong, TermOrder::RevLex), Err(Error::Dimension(_))));
        assert!(matches!(
            build_degree_matrix(&sigma, &FieldMatrix::identity(f, 4), 5, TermOrder::RevLex),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn config_validation() {
        let sigma = two_edges();
        let zero = ShiftConfig { trials: 0, ..ShiftConfig::default() };
        assert!(matches!(exterior_shift(&sigma, &zero), Err(Error::InvalidArgument(_))));
        let small = ShiftConfig { field: Field::new(101).unwrap(), ..ShiftConfig::default() };
        assert!(matches!(exterior_shift(&sigma, &small), Err(Error::PrimeTooSmall { .. })));
    }

    #[test]
    fn consensus_escalates_then_reports_plurality() {
        let cfg = ShiftConfig { trials: 2, ..ShiftConfig::default() };
        let mut calls = 0;
        let c = consensus(&cfg, 2, |_| {
            calls += 1;
            Ok(calls % 2)
        })
        .unwrap();
        assert_eq!(calls, 6);
        assert!(c.escalated && !c.consensus);
        assert_eq!(c.seeds.len(), 4);
        assert_eq!(c.value, 1);

        let mut calls = 0;
        let c = consensus(&cfg, 2, |_| {
            calls += 1;
            Ok(u8::from(calls == 1))
        })
        .unwrap();
        assert!(c.escalated && c.consensus);
        assert_eq!(c.value, 0);
    }

    #[test]
    fn rank_profile_top_column_is_zero_or_one() {
        let f = Field::default();
        let sigma = two_edges();
        for seed in 0..5 {
            let phi = FieldMatrix::random_invertible(f, 4, seed);
            for d in 1..=4 {
                let prof = rank_profile(&sigma, &phi, d, TermOrder::RevLex).unwrap();
                let top = TermOrder::RevLex.enumerate(4, d, Direction::Descending)[0];
                assert!(prof[&top] <= 1);
            }
        }
    }
}
