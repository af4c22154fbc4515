//! Integer and univariate polynomial factorization.
//!
//! Integer factorization is trial division up to 10⁴ followed by Pollard
//! rho with Brent cycle detection, recursing on composite cofactors; the
//! primality test is Miller–Rabin with a fixed witness set, deterministic
//! for inputs below 3.3·10²⁴. Polynomial factorization over 𝔽_p runs
//! squarefree decomposition, distinct-degree splitting and seeded
//! Cantor–Zassenhaus equal-degree splitting; factorization over ℚ clears
//! denominators, factors modulo a good prime, Hensel-lifts and recombines
//! factor subsets.
//!
//! Every randomized routine takes an explicit seed; identical seeds give
//! identical outputs.

mod int;
mod unifp;
mod uniq;

pub use int::{factor_integer, is_prime, is_prime_u64, IntFactorization};
pub use unifp::{factor_mod_p, fp_roots, FpPoly};
pub use uniq::{factor_over_q, QPolyFactorization};

/// Irreducible factorization of a univariate polynomial: `unit · ∏ fᵢ^mᵢ`
/// reconstructs the input exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFactorization<P, U> {
    pub unit: U,
    pub factors: Vec<(P, u32)>,
}
