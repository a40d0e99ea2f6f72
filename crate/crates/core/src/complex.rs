//! Simplicial complexes on `[n]` with every face stored explicitly.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::face::{k_subsets, FaceSet, MAX_VERTICES};
use crate::field::Field;
use crate::matrix::FieldMatrix;
use crate::order::TermOrder;

/// A nonempty, downward-closed family of subsets of `[n]`. The smallest
/// complex is `{∅}`; the void complex is not representable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    faces: BTreeSet<FaceSet>,
}

impl SimplicialComplex {
    /// `{∅}` on `[n]`.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_facets(n, [])
    }

    /// The full simplex `2^[n]`.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::from_facets(n, [FaceSet::full(n)?])
    }

    /// Downward closure of `facets` together with `∅`.
    pub fn from_facets<I: IntoIterator<Item = FaceSet>>(n: usize, facets: I) -> Result<Self> {
        check_ground(n)?;
        let mut faces = BTreeSet::new();
        faces.insert(FaceSet::EMPTY);
        for facet in facets {
            check_face(facet, n)?;
            if faces.contains(&facet) {
                continue;
            }
            faces.extend(facet.subsets());
        }
        Ok(Self { n, faces })
    }

    /// Takes a full face list and verifies it is downward closed.
    pub fn from_faces<I: IntoIterator<Item = FaceSet>>(n: usize, faces: I) -> Result<Self> {
        check_ground(n)?;
        let faces: BTreeSet<FaceSet> = faces.into_iter().collect();
        for &s in &faces {
            check_face(s, n)?;
        }
        if !faces.contains(&FaceSet::EMPTY) {
            return Err(Error::NotDownwardClosed { face: FaceSet::EMPTY });
        }
        for &s in &faces {
            for v in s.iter() {
                let sub = s.without(v);
                if !faces.contains(&sub) {
                    return Err(Error::NotDownwardClosed { face: sub });
                }
            }
        }
        Ok(Self { n, faces })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> impl Iterator<Item = FaceSet> + '_ {
        self.faces.iter().copied()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    #[inline]
    pub fn contains(&self, s: FaceSet) -> bool {
        self.faces.contains(&s)
    }

    /// Faces with exactly `size` vertices, in mask order.
    pub fn faces_of_size(&self, size: usize) -> Vec<FaceSet> {
        self.faces.iter().copied().filter(|s| s.len() == size).collect()
    }

    /// Faces with `size` vertices sorted ascending in `order`.
    pub fn faces_of_size_sorted(&self, size: usize, order: TermOrder) -> Vec<FaceSet> {
        let mut out = self.faces_of_size(size);
        out.sort_by(|a, b| order.compare(*a, *b));
        out
    }

    /// Maximal faces, in mask order.
    pub fn facets(&self) -> Vec<FaceSet> {
        self.faces
            .iter()
            .copied()
            .filter(|&s| (1..=self.n).all(|v| s.contains(v) || !self.faces.contains(&s.with(v))))
            .collect()
    }

    /// `max |S| − 1`; `{∅}` has dimension −1.
    pub fn dimension(&self) -> isize {
        self.faces.iter().map(|s| s.len()).max().unwrap_or(0) as isize - 1
    }

    /// `(f_{-1}, f_0, …, f_dim)`: `f_{k-1}` counts faces with `k` vertices.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0usize; (self.dimension() + 2) as usize];
        for s in &self.faces {
            f[s.len()] += 1;
        }
        f
    }

    /// Non-faces with `d` vertices in colex order; they span `(J_σ)_d`.
    pub fn nonfaces_of_degree(&self, d: usize) -> Vec<FaceSet> {
        k_subsets(self.n, d).filter(|s| !self.faces.contains(s)).collect()
    }

    /// Join with `other`, whose vertices are relabelled `v ↦ v + n`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let n = self.n + other.n;
        check_ground(n)?;
        let mut faces = BTreeSet::new();
        for t in &other.faces {
            let t = t.shifted(self.n)?;
            for s in &self.faces {
                faces.insert(s.union(t));
            }
        }
        Ok(Self { n, faces })
    }

    /// Join with a single new vertex `n + 1`.
    pub fn cone(&self) -> Result<SimplicialComplex> {
        self.join(&Self::from_facets(1, [FaceSet::singleton(1)?])?)
    }

    /// Join with two isolated vertices `n + 1`, `n + 2`.
    pub fn suspension(&self) -> Result<SimplicialComplex> {
        let two_points = Self::from_facets(2, [FaceSet::singleton(1)?, FaceSet::singleton(2)?])?;
        self.join(&two_points)
    }

    /// Restriction to the faces inside `[1, k]`, as a complex on `[k]`.
    pub fn restrict(&self, k: usize) -> Result<SimplicialComplex> {
        check_ground(k)?;
        let faces = self.faces.iter().copied().filter(|s| s.within(k)).collect();
        Ok(Self { n: k, faces })
    }

    /// Same faces on a larger ground set.
    pub fn extend_ground(&self, n: usize) -> Result<SimplicialComplex> {
        if n < self.n {
            return Err(Error::Dimension(format!("cannot shrink ground set {} to {n}", self.n)));
        }
        check_ground(n)?;
        Ok(Self { n, faces: self.faces.clone() })
    }

    /// For `i < j`, replacing `j` by `i` in any face gives a face.
    pub fn is_shifted(&self) -> bool {
        self.faces.iter().all(|&s| {
            s.iter().all(|j| (1..j).all(|i| s.contains(i) || self.faces.contains(&s.without(j).with(i))))
        })
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Ok(())
}

fn check_face(s: FaceSet, n: usize) -> Result<()> {
    if !s.within(n) {
        return Err(Error::VertexOutOfRange { vertex: s.max().unwrap(), n });
    }
    Ok(())
}

/// Embeds a `k×k` matrix into the identity of size `n`, occupying rows and
/// columns `offset+1 ..= offset+k`.
pub fn block_embed(phi: &FieldMatrix, n: usize, offset: usize) -> Result<FieldMatrix> {
    if !phi.is_square() {
        return Err(Error::Dimension(format!("block must be square, got {}x{}", phi.rows(), phi.cols())));
    }
    let k = phi.rows();
    if offset + k > n {
        return Err(Error::Dimension(format!("{k}x{k} block at offset {offset} exceeds size {n}")));
    }
    let field: Field = phi.field();
    let mut out = FieldMatrix::identity(field, n);
    for i in 0..k {
        for j in 0..k {
            out.set(offset + i, offset + j, phi.get(i, j));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fs(v: &[usize]) -> FaceSet {
        FaceSet::from_vertices(v.iter().copied()).unwrap()
    }

    fn two_edges() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, [fs(&[1, 2]), fs(&[3, 4])]).unwrap()
    }

    #[test]
    fn closure_examples() {
        let s = two_edges();
        assert_eq!(s.face_count(), 7);
        let expected = [&[][..], &[1], &[2], &[3], &[4], &[1, 2], &[3, 4]];
        for v in expected {
            assert!(s.contains(fs(v)));
        }
        assert_eq!(
            SimplicialComplex::from_facets(3, []).unwrap().faces().collect::<Vec<_>>(),
            [FaceSet::EMPTY]
        );
        assert_eq!(SimplicialComplex::simplex(3).unwrap().face_count(), 8);
        assert_eq!(
            SimplicialComplex::from_facets(3, [fs(&[1, 4])]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
    }

    #[test]
    fn from_faces_validates() {
        assert!(SimplicialComplex::from_faces(3, [FaceSet::EMPTY, fs(&[1])]).is_ok());
        assert_eq!(
            SimplicialComplex::from_faces(3, [FaceSet::EMPTY, fs(&[1, 2]), fs(&[1])]),
            Err(Error::NotDownwardClosed { face: fs(&[2]) })
        );
        assert!(SimplicialComplex::from_faces(3, [fs(&[1])]).is_err());
    }

    #[test]
    fn f_vectors_and_facets() {
        assert_eq!(two_edges().f_vector(), [1, 4, 2]);
        assert_eq!(SimplicialComplex::simplex(3).unwrap().f_vector(), [1, 3, 3, 1]);
        assert_eq!(SimplicialComplex::empty(5).unwrap().f_vector(), [1]);
        assert_eq!(SimplicialComplex::empty(5).unwrap().dimension(), -1);
        assert_eq!(two_edges().facets(), [fs(&[1, 2]), fs(&[3, 4])]);
    }

    #[test]
    fn nonfaces() {
        let s = two_edges();
        assert_eq!(s.nonfaces_of_degree(2), [fs(&[1, 3]), fs(&[2, 3]), fs(&[1, 4]), fs(&[2, 4])]);
        assert!(s.nonfaces_of_degree(1).is_empty());
        assert_eq!(s.nonfaces_of_degree(3).len(), 4);
        let full = SimplicialComplex::simplex(4).unwrap();
        assert!((0..=4).all(|d| full.nonfaces_of_degree(d).is_empty()));
    }

    #[test]
    fn joins() {
        let s = two_edges();
        let susp = s.suspension().unwrap();
        assert_eq!(susp.n(), 6);
        assert_eq!(susp.face_count(), 21);
        assert_eq!(susp.dimension(), s.dimension() + 1);
        assert_eq!(susp.f_vector(), [1, 6, 10, 4]);
        assert_eq!(susp.faces_of_size(3), [fs(&[1, 2, 5]), fs(&[3, 4, 5]), fs(&[1, 2, 6]), fs(&[3, 4, 6])]);

        let pts = SimplicialComplex::empty(0).unwrap().suspension().unwrap();
        assert_eq!(pts.facets(), [fs(&[1]), fs(&[2])]);

        let cone = s.cone().unwrap();
        let point = SimplicialComplex::from_facets(1, [fs(&[1])]).unwrap();
        assert_eq!(cone, s.join(&point).unwrap());
        assert_eq!(cone.facets(), [fs(&[1, 2, 5]), fs(&[3, 4, 5])]);

        // {∅} is a two-sided identity up to ground-set size
        let unit = SimplicialComplex::empty(0).unwrap();
        assert_eq!(s.join(&unit).unwrap(), s);
        assert_eq!(unit.join(&s).unwrap(), s);
    }

    #[test]
    fn shiftedness() {
        let shifted = SimplicialComplex::from_facets(4, [fs(&[1, 2]), fs(&[1, 3])]).unwrap();
        assert!(shifted.is_shifted());
        assert!(!two_edges().is_shifted());
        assert!(SimplicialComplex::simplex(4).unwrap().is_shifted());
    }

    #[test]
    fn block_embedding() {
        let f = Field::default();
        let id = block_embed(&FieldMatrix::identity(f, 3), 5, 1).unwrap();
        assert_eq!(id, FieldMatrix::identity(f, 5));
        let phi = FieldMatrix::random_invertible(f, 3, 8);
        let big = block_embed(&phi, 5, 2).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let expected = if i >= 2 && j >= 2 { phi.get(i - 2, j - 2) } else { u64::from(i == j) };
                assert_eq!(big.get(i, j), expected);
            }
        }
        assert!(block_embed(&phi, 4, 2).is_err());
        for k in 1..=5 {
            let phi = FieldMatrix::random_invertible(f, k, k as u64);
            assert_eq!(block_embed(&phi, 5, 0).unwrap().determinant(), phi.determinant());
        }
    }

    fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
        (1..=max_n).prop_flat_map(|n| {
            let full = FaceSet::full(n).unwrap().mask();
            proptest::collection::vec(any::<u64>(), 0..5).prop_map(move |masks| {
                let facets = masks.into_iter().map(|m| FaceSet::from_mask((m << 1) & full).unwrap());
                SimplicialComplex::from_facets(n, facets).unwrap()
            })
        })
    }

    fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    proptest! {
        #[test]
        fn closure_is_downward_closed(c in arb_complex(7)) {
            prop_assert!(SimplicialComplex::from_faces(c.n(), c.faces()).is_ok());
            prop_assert_eq!(SimplicialComplex::from_facets(c.n(), c.facets()).unwrap(), c);
        }

        #[test]
        fn join_counts(a in arb_complex(4), b in arb_complex(4), c in arb_complex(3)) {
            let ab = a.join(&b).unwrap();
            prop_assert_eq!(ab.face_count(), a.face_count() * b.face_count());
            prop_assert_eq!(ab.f_vector(), convolve(&a.f_vector(), &b.f_vector()));
            prop_assert_eq!(ab.join(&c).unwrap(), a.join(&b.join(&c).unwrap()).unwrap());
        }
    }
}
