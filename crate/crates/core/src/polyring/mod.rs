//! Multivariate polynomials over ℤ, ℚ and 𝔽_p with Gröbner machinery.
//!
//! The central object is the strong Gröbner basis of an ideal in
//! `ℤ[x₁…xₙ]`: a basis such that the leading monomial of every nonzero
//! ideal member is divisible — coefficient included — by the leading
//! monomial of some basis element. Strong bases are computed by a
//! Buchberger loop that processes both S-polynomials and gcd-polynomials,
//! then minimalized and tail-reduced into a canonical form. Normal forms
//! modulo a strong basis are canonical coset representatives, so residue
//! classes can be compared exactly.
//!
//! Over ℚ and 𝔽_p the same loop with field inverses produces reduced
//! Gröbner bases. On top of the bases sit the ideal operations used by the
//! primary-decomposition pipeline: intersection (elimination of an
//! auxiliary variable), quotient, saturation, comaximal one-representations
//! with cofactor tracking, coefficient maps, contraction from ℚ, canonical
//! lifting from 𝔽_p, and the constant generator of `I ∩ ℤ`.

mod coeff;
mod fideal;
mod order;
mod parse;
mod poly;
#[cfg(test)]
mod tests;
mod zideal;

pub use coeff::{Coeff, FieldCoeff, Fp};
pub use fideal::{field_groebner, normal_form_field, IdealF, IdealFp, IdealQ};
pub use order::TermOrder;
pub use parse::{parse_poly, parse_poly_q, PolyParseError};
pub use poly::{render_poly, Poly, PolyFp, PolyQ, PolyZ, Term};
pub use zideal::{
    contract_to_z, elim_constant, ideal_intersect, ideal_power, ideal_product, ideal_quotient,
    ideal_sum, lift_from_fp, one_representation, saturate, strong_groebner, strong_normal_form,
    verify_strong_gb, IdealError, IdealZ,
};
