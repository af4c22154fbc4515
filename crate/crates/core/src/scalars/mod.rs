//! Maximal rings of scalars.
//!
//! For a full non-degenerate bilinear map `f : N₁ × N₂ → M` between
//! finitely presented abelian groups, the maximal ring of scalars is the
//! largest commutative unitary ring acting compatibly on both sides of
//! `f`. It is carved out of `End(N₁) × End(N₂)` by four homogeneous linear
//! systems (endomorphism conditions, symmetry, centrality, and extension
//! of the action to `M`), all solved over the groups involved.
//!
//! For a finite ℤ-algebra `R` the same machinery runs on the multiplication
//! map `R⁺/Annλ(R) × R⁺/Annρ(R) → R²`, with two extra conditions that make
//! the action descend to `R/Ann(R)`: compatibility with the canonical map
//! `R² → R⁺/Ann`, and invariance of the diagonal image of `R`.
//!
//! The result is returned both as endomorphism-pair generators and as a
//! ℤ-algebra presentation `ℤ[y₁…y_r]/⟨unit relation, linear relations,
//! rewriting rules y_iy_j − Σ t_{ijk}y_k⟩`.
//!
//! Constructors record whether the supplied structure constants are
//! compatible with the group relations (`is_well_defined`). The solver
//! pipeline operates on the structure constants as given, so inconsistent
//! presentations are processed formally; `checked` constructors reject
//! them instead.

mod algebra;
mod bilinear;

pub use algebra::{
    annihilators, max_scalars_algebra, multiplication_map, quotient_presentation,
    r_squared_presentation, r_squared_reduced, Annihilators, ZAlgebra,
};
pub use bilinear::{
    endo_solution_space, max_scalars_bilinear, scalar_presentation, scalars_lattice,
    BilinearMap, EndoPair, ScalarRing,
};

use crate::exactlin::ExactLinError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarsError {
    #[error("structure tensor shape does not match the group presentations")]
    ShapeMismatch,
    #[error("structure constants are not compatible with the group relations")]
    IllDefined,
    #[error("bilinear map is degenerate")]
    Degenerate,
    #[error("bilinear map is not full: its values do not generate the target group")]
    NotFull,
    #[error("generators do not span a unitary ring: identity combination unsolvable")]
    UnitUnsolvable,
    #[error("product of generators left the generated module: structure constants unsolvable")]
    StructureUnsolvable,
    #[error("sublattice does not contain the relation lattice")]
    ContainmentViolation,
    #[error(transparent)]
    ExactLin(#[from] ExactLinError),
}
