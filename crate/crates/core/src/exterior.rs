//! Homogeneous elements of the exterior algebra and the `GL_n` action on them.
//!
//! A matrix `φ = (a_ij)` acts by `φ(e_j) = Σ_i a_ij e_i`, so on a monomial
//! `φ(e_S) = Σ_R det(φ[R, S]) e_R` with `R` ranging over `|S|`-subsets.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::face::{colex_rank, k_subsets, FaceSet};
use crate::field::Field;
use crate::matrix::FieldMatrix;

/// Sign of `e_S ∧ e_T` relative to `e_{S∪T}`: zero on overlap, otherwise
/// `(-1)^k` with `k = |{(s, t) ∈ S×T : s > t}|`.
pub fn wedge_sign(s: FaceSet, t: FaceSet) -> i8 {
    if !s.is_disjoint(t) {
        return 0;
    }
    let mut inversions = 0u32;
    for v in t.iter() {
        // elements of S above v
        inversions += (s.mask() >> (v + 1)).count_ones();
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Homogeneous element `Σ α_S e_S` of a fixed degree; zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorElement {
    field: Field,
    degree: usize,
    terms: BTreeMap<FaceSet, u64>,
}

impl ExteriorElement {
    pub fn zero(field: Field, degree: usize) -> Self {
        Self { field, degree, terms: BTreeMap::new() }
    }

    pub fn monomial(field: Field, s: FaceSet) -> Self {
        let mut x = Self::zero(field, s.len());
        x.terms.insert(s, 1);
        x
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (FaceSet, u64)> + '_ {
        self.terms.iter().map(|(s, c)| (*s, *c))
    }

    pub fn coefficient(&self, s: FaceSet) -> u64 {
        self.terms.get(&s).copied().unwrap_or(0)
    }

    /// Adds `c · e_S`.
    pub fn add_term(&mut self, s: FaceSet, c: u64) -> Result<()> {
        if s.len() != self.degree {
            return Err(Error::Dimension(format!("{s} in an element of degree {}", self.degree)));
        }
        let c = self.field.reduce(c);
        let entry = self.terms.entry(s).or_insert(0);
        *entry = self.field.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&s);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if other.degree != self.degree {
            return Err(Error::Dimension(format!("degrees {} and {}", self.degree, other.degree)));
        }
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        let terms = self.terms().map(|(s, a)| (s, f.mul(a, f.reduce(c)))).filter(|(_, a)| *a != 0).collect();
        Self { field: f, degree: self.degree, terms }
    }

    /// `e_T ∧ self`.
    pub fn wedge_left(&self, t: FaceSet) -> Self {
        let f = self.field;
        let mut out = Self::zero(f, self.degree + t.len());
        for (s, c) in self.terms() {
            match wedge_sign(t, s) {
                0 => {}
                1 => out.add_term(t.union(s), c).unwrap(),
                _ => out.add_term(t.union(s), f.neg(c)).unwrap(),
            }
        }
        out
    }

    /// Largest monomial with a nonzero coefficient.
    pub fn leading(&self, order: crate::order::TermOrder) -> Option<FaceSet> {
        self.terms.keys().copied().max_by(|a, b| order.compare(*a, *b))
    }
}

/// Memoized minors `det(φ[R, C])` of a fixed square matrix.
///
/// Entries are keyed by the column set `C`; each holds one minor per row set
/// `R` with `|R| = |C|`, indexed by the colex rank of `R`. A column set is
/// filled by Laplace expansion along its largest column from the entry of
/// the remaining columns, so columns sharing a prefix share work.
pub struct MinorCache<'a> {
    phi: &'a FieldMatrix,
    n: usize,
    memo: BTreeMap<FaceSet, Vec<u64>>,
}

impl<'a> MinorCache<'a> {
    pub fn new(phi: &'a FieldMatrix) -> Result<Self> {
        if !phi.is_square() {
            return Err(Error::Dimension(format!(
                "transform must be square, got {}x{}",
                phi.rows(),
                phi.cols()
            )));
        }
        let mut memo = BTreeMap::new();
        memo.insert(FaceSet::EMPTY, vec![1 % phi.field().modulus()]);
        Ok(Self { phi, n: phi.rows(), memo })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minors on column set `cols` for every row set, in colex order.
    pub fn column(&mut self, cols: FaceSet) -> Result<&[u64]> {
        if !cols.within(self.n) {
            return Err(Error::Dimension(format!("{cols} outside [1, {}]", self.n)));
        }
        self.fill(cols);
        Ok(&self.memo[&cols])
    }

    fn fill(&mut self, cols: FaceSet) {
        if self.memo.contains_key(&cols) {
            return;
        }
        let last = cols.max().expect("empty column set is seeded");
        let prefix = cols.without(last);
        self.fill(prefix);
        let f = self.phi.field();
        let prev = &self.memo[&prefix];
        let j = cols.len();
        let mut out = Vec::with_capacity(prev.len());
        for rows in k_subsets(self.n, j) {
            let mut acc = 0u64;
            for (pos, r) in rows.iter().enumerate() {
                let a = self.phi.get(r - 1, last - 1);
                if a == 0 {
                    continue;
                }
                let sub = prev[colex_rank(rows.without(r))];
                let term = f.mul(a, sub);
                // (-1)^{(pos+1) + j}
                acc = if (pos + 1 + j).is_multiple_of(2) { f.add(acc, term) } else { f.sub(acc, term) };
            }
            out.push(acc);
        }
        self.memo.insert(cols, out);
    }

    /// `φ(e_S)` as an element.
    pub fn image(&mut self, s: FaceSet) -> Result<ExteriorElement> {
        let n = self.n;
        let f = self.phi.field();
        let col = self.column(s)?;
        let mut out = ExteriorElement::zero(f, s.len());
        for (r, &v) in k_subsets(n, s.len()).zip(col) {
            if v != 0 {
                out.terms.insert(r, v);
            }
        }
        Ok(out)
    }
}

/// `φ(x)` for a homogeneous element `x`.
pub fn apply_transform(phi: &FieldMatrix, x: &ExteriorElement) -> Result<ExteriorElement> {
    if phi.field() != x.field() {
        return Err(Error::InvalidArgument(format!(
            "transform over F_{} applied to an element over F_{}",
            phi.field().modulus(),
            x.field().modulus()
        )));
    }
    let mut cache = MinorCache::new(phi)?;
    let f = phi.field();
    let n = cache.n();
    let rows: Vec<FaceSet> = k_subsets(n, x.degree()).collect();
    let mut acc = vec![0u64; rows.len()];
    for (s, c) in x.terms() {
        let col = cache.column(s)?;
        for (slot, &m) in acc.iter_mut().zip(col) {
            *slot = f.add(*slot, f.mul(c, m));
        }
    }
    let terms = rows.into_iter().zip(acc).filter(|(_, v)| *v != 0).collect();
    Ok(ExteriorElement { field: f, degree: x.degree(), terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fs(v: &[usize]) -> FaceSet {
        FaceSet::from_vertices(v.iter().copied()).unwrap()
    }

    #[test]
    fn wedge_sign_examples() {
        assert_eq!(wedge_sign(fs(&[1]), fs(&[2])), 1);
        assert_eq!(wedge_sign(fs(&[2]), fs(&[1])), -1);
        assert_eq!(wedge_sign(fs(&[1, 3]), fs(&[3])), 0);
        assert_eq!(wedge_sign(fs(&[2, 4]), fs(&[1, 3])), -1);
        assert_eq!(wedge_sign(FaceSet::EMPTY, fs(&[1, 3])), 1);
    }

    #[test]
    fn wedge_sign_graded_commutativity() {
        let all: Vec<FaceSet> = FaceSet::full(6).unwrap().subsets().collect();
        for &s in &all {
            for &t in &all {
                if s.is_disjoint(t) {
                    let sign = if (s.len() * t.len()) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(wedge_sign(s, t), sign * wedge_sign(t, s));
                }
            }
        }
    }

    /// `φ(e_S)` expanded as the product of the linear forms `φ(e_s)`,
    /// independent of the minor recursion.
    fn image_by_products(phi: &FieldMatrix, s: FaceSet) -> ExteriorElement {
        let f = phi.field();
        let mut acc = ExteriorElement::monomial(f, FaceSet::EMPTY);
        for col in s.iter().rev() {
            let mut next = ExteriorElement::zero(f, acc.degree() + 1);
            for i in 1..=phi.rows() {
                let a = phi.get(i - 1, col - 1);
                if a != 0 {
                    next = next.add(&acc.wedge_left(FaceSet::singleton(i).unwrap()).scale(a)).unwrap();
                }
            }
            acc = next;
        }
        acc
    }

    #[test]
    fn identity_and_top_degree() {
        let f = Field::default();
        let id = FieldMatrix::identity(f, 4);
        let mut x = ExteriorElement::zero(f, 2);
        x.add_term(fs(&[1, 3]), 5).unwrap();
        x.add_term(fs(&[2, 4]), 7).unwrap();
        assert_eq!(apply_transform(&id, &x).unwrap(), x);

        let phi = FieldMatrix::random_invertible(f, 2, 11);
        let top = ExteriorElement::monomial(f, fs(&[1, 2]));
        let img = apply_transform(&phi, &top).unwrap();
        assert_eq!(img.terms().collect::<Vec<_>>(), [(fs(&[1, 2]), phi.determinant().unwrap())]);
    }

    #[test]
    fn diagonal_action_scales_by_weight() {
        let f = Field::default();
        let t = 3u64;
        let weights = [4u64, 2, 1];
        let diag: Vec<u64> = weights.iter().map(|&w| f.pow(t, w)).collect();
        let phi = FieldMatrix::diagonal(f, &diag);
        for s in FaceSet::full(3).unwrap().subsets() {
            let ds: u64 = s.iter().map(|k| weights[k - 1]).sum();
            let img = apply_transform(&phi, &ExteriorElement::monomial(f, s)).unwrap();
            assert_eq!(img.terms().collect::<Vec<_>>(), [(s, f.pow(t, ds))]);
        }
    }

    #[test]
    fn minors_match_direct_determinants() {
        let f = Field::default();
        let phi = FieldMatrix::random_invertible(f, 5, 1);
        let mut cache = MinorCache::new(&phi).unwrap();
        for d in 0..=5 {
            for cols in k_subsets(5, d) {
                let col = cache.column(cols).unwrap().to_vec();
                for (rows, v) in k_subsets(5, d).zip(col) {
                    assert_eq!(phi.minor_determinant(rows, cols).unwrap(), v);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        let f = Field::default();
        let rect = FieldMatrix::zeros(f, 2, 3);
        assert!(matches!(MinorCache::new(&rect), Err(Error::Dimension(_))));
        let phi = FieldMatrix::identity(f, 3);
        let x = ExteriorElement::monomial(f, fs(&[1, 4]));
        assert!(matches!(apply_transform(&phi, &x), Err(Error::Dimension(_))));
        let mut y = ExteriorElement::zero(f, 2);
        assert!(y.add_term(fs(&[1]), 1).is_err());
    }

    proptest! {
        #[test]
        fn matches_product_expansion(seed in any::<u64>(), n in 1usize..=5, pick in any::<u64>()) {
            let f = Field::default();
            let phi = FieldMatrix::random_invertible(f, n, seed);
            let s = FaceSet::from_mask((pick << 1) & FaceSet::full(n).unwrap().mask()).unwrap();
            let fast = apply_transform(&phi, &ExteriorElement::monomial(f, s)).unwrap();
            prop_assert_eq!(fast, image_by_products(&phi, s));
        }

        #[test]
        fn composition_is_multiplicative(seed in any::<u64>(), n in 1usize..=5, d in 0usize..=5) {
            let d = d.min(n);
            let f = Field::default();
            let phi = FieldMatrix::random_invertible(f, n, seed);
            let psi = FieldMatrix::random_invertible(f, n, seed ^ 0x9e37);
            let mut x = ExteriorElement::zero(f, d);
            for (i, s) in k_subsets(n, d).enumerate() {
                x.add_term(s, (i as u64 + 1) * 7919).unwrap();
            }
            let lhs = apply_transform(&phi, &apply_transform(&psi, &x).unwrap()).unwrap();
            let rhs = apply_transform(&phi.mul(&psi).unwrap(), &x).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn linear_in_the_element(seed in any::<u64>(), c in 1u64..1000) {
            let f = Field::default();
            let phi = FieldMatrix::random_invertible(f, 4, seed);
            let x = ExteriorElement::monomial(f, fs(&[1, 3]));
            let mut y = ExteriorElement::monomial(f, fs(&[2, 4]));
            y.add_term(fs(&[1, 2]), 3).unwrap();
            let lhs = apply_transform(&phi, &x.scale(c).add(&y).unwrap()).unwrap();
            let rhs = apply_transform(&phi, &x).unwrap().scale(c).add(&apply_transform(&phi, &y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
