//! Exterior algebraic shifting over prime fields.
//!
//! The crate computes initial and generic initial ideals of exterior face
//! ideals by degree-wise row reduction, and the comparison counts that relate
//! `Δ(σ ∗ τ)` to `Δ(Δ(σ) ∗ Δ(τ))`. Everything here is pure computation over
//! `alloc` collections; file formats, the CLI and parallel fuzzing live in the
//! `extshift` crate.
//!
//! Layout:
//! - [`field`] and [`matrix`]: arithmetic in `F_p` and dense elimination.
//! - [`face`], [`order`], [`exterior`]: monomials `e_S`, term orders, and the
//!   action of `GL_n` on degree-`d` monomials through minors.
//! - [`complex`]: simplicial complexes, joins, face-ideal bases.
//! - [`shifting`]: degree matrices, `Δφ(σ)`, `Δ(σ)` with multi-seed consensus.
//! - [`analysis`]: `m⪯S` counts, dominance reports and the comparison checks.

#![no_std]

extern crate alloc;
#[cfg(test)]
#[macro_use]
extern crate std;

pub mod analysis;
pub mod complex;
pub mod error;
pub mod exterior;
pub mod face;
pub mod field;
pub mod matrix;
pub mod order;
pub mod sample;
pub mod shifting;

pub use analysis::{
    check_corollary_join, check_rank_monotonicity, check_theorem_bound, diagonal_specialize, ideal_counts,
    m_geq_ideal, m_leq, rev_dominance, revlex_weights, CorollaryCheck, DegreeMargins, DominanceReport,
    MarginRow, MonotonicityCheck, TheoremCheck, Verdict,
};
pub use complex::{block_embed, SimplicialComplex};
pub use error::{Error, Result};
pub use exterior::{apply_transform, wedge_sign, ExteriorElement, MinorCache};
pub use face::{FaceSet, MAX_VERTICES};
pub use field::{Field, DEFAULT_PRIME, MIN_SHIFT_PRIME};
pub use matrix::{Echelon, FieldMatrix};
pub use order::{Direction, TermOrder};
pub use sample::{Sampler, TransformKind};
pub use shifting::{
    build_degree_matrix, consensus, delta_phi, exterior_shift, exterior_shift_strict, generic_rank_profile,
    initial_degree_component, rank_profile, trial_seeds, Consensus, DegreeMatrix, ShiftConfig, ShiftOutcome,
};
