//! Exact computer algebra for finite ℤ-algebras.
//!
//! Given a ring `R` whose additive group is a finitely generated abelian
//! group (presented by generators and an integer relation matrix) and whose
//! multiplication is given by integer structure constants, this crate
//! computes a direct decomposition of `R/Ann(R)` into factors induced by
//! the primitive idempotents of the maximal ring of scalars of `R`.
//!
//! The pipeline is built from four layers:
//!
//! * [`exactlin`] — exact linear algebra over ℤ and over finitely presented
//!   abelian groups (Smith normal form, kernels, Hermite bases, lattice
//!   arithmetic, linear systems over groups).
//! * [`polyring`] — multivariate polynomials over ℤ, ℚ and 𝔽_p with strong
//!   Gröbner bases over ℤ, reduced Gröbner bases over fields, and the ideal
//!   operations (intersection, quotient, saturation, contraction, lifting).
//! * [`factorize`] — integer factorization (trial division + Pollard rho
//!   with Brent cycles) and univariate polynomial factorization over 𝔽_p
//!   (Cantor–Zassenhaus) and over ℚ (Hensel lifting + recombination).
//! * [`primdec`] / [`idempotents`] — primary decomposition of ideals
//!   `I ⊆ ℤ[x₁…xₙ]` with finite quotient, connected components of the
//!   decomposition, and the primitive idempotents of `ℤ[x₁…xₙ]/I`.
//!
//! On top of those, [`scalars`] computes annihilators, the maximal ring of
//! scalars of a bilinear map or a finite ℤ-algebra together with a ℤ-algebra
//! presentation, and [`decompose`] evaluates the idempotents back on the
//! algebra to produce the factor decomposition and its certificates.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! every randomized subroutine takes an explicit seed and is deterministic
//! per seed.

pub mod decompose;
pub mod exactlin;
pub mod factorize;
pub mod idempotents;
pub mod polyring;
pub mod primdec;
pub mod rng;
pub mod scalars;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
