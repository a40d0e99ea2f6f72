//! Seeded random inputs for randomized checks.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::face::FaceSet;
use crate::field::Field;
use crate::matrix::FieldMatrix;

/// Which kind of transform to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    Generic,
    Permutation,
    Unitriangular,
}

impl TransformKind {
    pub const ALL: [TransformKind; 3] =
        [TransformKind::Generic, TransformKind::Permutation, TransformKind::Unitriangular];

    pub fn name(self) -> &'static str {
        match self {
            TransformKind::Generic => "generic",
            TransformKind::Permutation => "permutation",
            TransformKind::Unitriangular => "unitriangular",
        }
    }
}

/// ChaCha8-backed source for case generation.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Independent stream for case `index` of a run seeded with `seed`.
    pub fn for_case(seed: u64, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        Self { rng }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        let zone = u64::MAX - (u64::MAX % span);
        loop {
            let v = self.rng.next_u64();
            if v < zone {
                return lo + (v % span) as usize;
            }
        }
    }

    /// Fisher–Yates shuffle of `1..=n`.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = self.range(0, i);
            perm.swap(i, j);
        }
        perm
    }

    /// Closure of `1..=max_facets` random facets, each vertex included with
    /// probability `1/2`.
    pub fn complex(&mut self, n: usize, max_facets: usize) -> Result<SimplicialComplex> {
        let count = self.range(1, max_facets.max(1));
        let full = FaceSet::full(n)?.mask();
        let facets: Vec<FaceSet> = (0..count)
            .map(|_| FaceSet::from_mask((self.rng.next_u64() << 1) & full))
            .collect::<Result<_>>()?;
        SimplicialComplex::from_facets(n, facets)
    }

    pub fn transform(&mut self, field: Field, n: usize, kind: TransformKind) -> Result<FieldMatrix> {
        match kind {
            TransformKind::Generic => Ok(FieldMatrix::random_invertible(field, n, self.next_u64())),
            TransformKind::Permutation => {
                let perm = self.permutation(n);
                FieldMatrix::permutation(field, &perm)
            }
            TransformKind::Unitriangular => Ok(FieldMatrix::random_unitriangular(field, n, self.next_u64())),
        }
    }
}
