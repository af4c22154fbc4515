//! Exact linear algebra over ℤ and over finitely presented abelian groups.
//!
//! Everything downstream (annihilators, endomorphism rings, scalar rings)
//! reduces to solving systems of linear equations over a finitely presented
//! abelian group, which in turn reduces to Smith normal form computations
//! over ℤ. This module provides:
//!
//! * [`IntMatrix`] — dense arbitrary-precision integer matrices,
//! * [`smith_normal_form`] — `L·A·R = D` with unimodular `L`, `R` and
//!   divisibility chain `d₁ | d₂ | …`,
//! * [`kernel_basis`] / [`solve_particular`] — integer kernels and
//!   particular solutions of `A·x = b`,
//! * [`hermite_basis`] — canonical (row Hermite) bases of integer lattices,
//!   plus lattice membership, intersection, sum and equality,
//! * [`FpAbelianGroup`] — groups `ℤⁿ/Λ` with canonical element normal
//!   forms and [`solve_over_group`],
//! * [`GroupSolver`] — homogeneous and inhomogeneous systems whose
//!   equations live in several groups at once, solved by iterative
//!   restriction of the solution lattice.
//!
//! All bases returned by this module are Hermite-reduced with positive
//! pivots, so outputs are canonical and reproducible.

mod group;
mod hermite;
mod lattice;
mod matrix;
mod smith;
mod solver;

pub use group::{solve_over_group, ExactLinError, FpAbelianGroup, GroupElement};
pub use hermite::hermite_basis;
pub use lattice::{
    lattice_contains, lattice_eq, lattice_intersect, lattice_member, lattice_sum,
};
pub use matrix::IntMatrix;
pub use smith::{kernel_basis, smith_normal_form, solve_particular, SmithDecomposition};
pub use solver::{GroupEquation, GroupSolver};
