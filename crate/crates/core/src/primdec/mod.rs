//! Primary decomposition of ideals `I ⊆ ℤ[x₁…xₙ]` with finite quotient.
//!
//! The torsion-free and torsion parts of `P/I` are handled separately:
//! with `N` the lcm of the leading coefficients of a minimal strong basis,
//! `I = (I : ⟨N⟩) ∩ (I + ⟨N⟩)`. The first part is decomposed over ℚ and
//! contracted back; the second intersects ℤ nontrivially and is decomposed
//! prime by prime over 𝔽_p — directly lifting the primary components when
//! the prime appears with exponent one, and extracting the primary
//! component as `I + 𝔓ᵏ` (smallest `k` with `(I + 𝔓ᵏ) ∩ (I : 𝔓^∞) = I`)
//! otherwise. Redundant components are pruned by containment.

mod zerodim;
#[cfg(test)]
mod tests;

pub use zerodim::{primary_spot_check_q, zerodim_decompose_fp, zerodim_decompose_q};

use crate::factorize::factor_integer;
use crate::polyring::{
    elim_constant, ideal_intersect, ideal_power, ideal_sum, lift_from_fp, saturate, IdealError,
    IdealZ, Poly,
};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PrimdecError {
    #[error("quotient ring is not a finitely generated Z-module")]
    NotFinite,
    #[error("ideal is not zero-dimensional over the coefficient field")]
    NotZeroDimensional,
    #[error("torsion split requires an ideal with trivial integer part")]
    NonTrivialIntegerPart,
    #[error("prime modulus {0} exceeds the machine word range")]
    PrimeTooLarge(BigInt),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Height classification of a primary component: components containing a
/// nonzero integer sit over a maximal ideal, the rest contract to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeightClass {
    Generic,
    Maximal,
}

#[derive(Clone, Debug)]
pub struct PrimaryComponent {
    pub primary: IdealZ,
    pub prime: Option<IdealZ>,
    pub height_class: HeightClass,
}

#[derive(Clone, Debug)]
pub struct DecompositionResult {
    pub components: Vec<PrimaryComponent>,
}

impl DecompositionResult {
    /// Intersection of all primary components.
    pub fn intersection(&self) -> Option<IdealZ> {
        let mut acc: Option<IdealZ> = None;
        for c in &self.components {
            acc = Some(match acc {
                None => c.primary.clone(),
                Some(cur) => ideal_intersect(&cur, &c.primary),
            });
        }
        acc
    }
}

/// Split `I` (with `I ∩ ℤ = 0`) into its torsion-free and torsion-carrying
/// parts: returns `(I : ⟨N⟩, I + ⟨N⟩, N)` with `N` the lcm of the leading
/// coefficients of the minimal strong basis.
pub fn torsion_split(i: &IdealZ) -> Result<(IdealZ, IdealZ, BigInt), PrimdecError> {
    if !elim_constant(i).is_zero() {
        return Err(PrimdecError::NonTrivialIntegerPart);
    }
    let mut n = BigInt::one();
    for g in i.strong_gb() {
        n = num_integer::Integer::lcm(&n, g.leading_coeff());
    }
    let by = IdealZ::new(i.nvars, i.order, vec![Poly::constant(i.nvars, n.clone())]);
    // By the strong-basis divisibility argument the quotient by N is
    // already saturated, but computing the quotient directly is as cheap.
    let generic = crate::polyring::ideal_quotient(i, &by)?;
    let torsion_side = ideal_sum(i, &by);
    Ok((generic, torsion_side, n))
}

/// Primary decomposition of `I` (finite quotient required), without prime
/// components.
pub fn primary_decomposition(
    i: &IdealZ,
    seed: u64,
) -> Result<DecompositionResult, PrimdecError> {
    let mut result = primary_decomposition_with_primes(i, seed)?;
    for c in result.components.iter_mut() {
        c.prime = None;
    }
    Ok(result)
}

/// Primary decomposition together with the prime component (radical) of
/// every primary component.
pub fn primary_decomposition_with_primes(
    i: &IdealZ,
    seed: u64,
) -> Result<DecompositionResult, PrimdecError> {
    if !i.has_finite_quotient() {
        return Err(PrimdecError::NotFinite);
    }
    let mut components = decompose_rec(i, seed)?;
    components.sort_by_key(component_sort_key);
    Ok(DecompositionResult { components })
}

fn decompose_rec(i: &IdealZ, seed: u64) -> Result<Vec<PrimaryComponent>, PrimdecError> {
    if i.is_unit() {
        return Ok(Vec::new());
    }
    let q = elim_constant(i);
    if q.is_zero() {
        // Torsion-free side over Q, torsion side (I + <N>) by recursion.
        let mut n = BigInt::one();
        for g in i.strong_gb() {
            n = num_integer::Integer::lcm(&n, g.leading_coeff());
        }
        let torsion_side = ideal_sum(
            i,
            &IdealZ::new(i.nvars, i.order, vec![Poly::constant(i.nvars, n.clone())]),
        );
        let rationals = zerodim_decompose_q(&i.to_q(), seed)?;
        let generic_components: Vec<PrimaryComponent> = rationals
            .into_iter()
            .map(|(qq, pp)| PrimaryComponent {
                primary: crate::polyring::contract_to_z(&qq),
                prime: Some(crate::polyring::contract_to_z(&pp)),
                height_class: HeightClass::Generic,
            })
            .collect();
        let torsion_components = if n.is_one() {
            Vec::new()
        } else {
            decompose_rec(&torsion_side, seed)?
        };
        // Prune torsion components containing the intersection of the
        // generic ones.
        let mut kept = generic_components;
        let generic_meet = DecompositionResult { components: kept.clone() }.intersection();
        if let Some(j) = generic_meet {
            for c in torsion_components {
                if !c.primary.contains_ideal(&j) {
                    kept.push(c);
                }
            }
        } else {
            kept.extend(torsion_components);
        }
        Ok(kept)
    } else {
        let fact = factor_integer(&q, seed);
        let mut out = Vec::new();
        for (p, nu) in &fact.factors {
            let p_u64 = p
                .to_u64()
                .ok_or_else(|| PrimdecError::PrimeTooLarge(p.clone()))?;
            let modp = i.to_fp(p_u64)?;
            let comps = zerodim_decompose_fp(&modp, seed)?;
            if *nu == 1 {
                for (qq, pp) in comps {
                    out.push(PrimaryComponent {
                        primary: lift_from_fp(&qq, p_u64),
                        prime: Some(lift_from_fp(&pp, p_u64)),
                        height_class: HeightClass::Maximal,
                    });
                }
            } else {
                for (_, pp) in comps {
                    let prime = lift_from_fp(&pp, p_u64);
                    let sat = saturate(i, &prime)?;
                    let mut k = 1u32;
                    let primary = loop {
                        let candidate = ideal_sum(i, &ideal_power(&prime, k));
                        if ideal_intersect(&candidate, &sat).eq_ideal(i) {
                            break candidate;
                        }
                        k += 1;
                    };
                    out.push(PrimaryComponent {
                        primary,
                        prime: Some(prime),
                        height_class: HeightClass::Maximal,
                    });
                }
            }
        }
        Ok(out)
    }
}

fn component_sort_key(c: &PrimaryComponent) -> String {
    let vars: Vec<String> = (0..c.primary.nvars).map(|i| format!("v{i}")).collect();
    let mut parts: Vec<String> = c
        .primary
        .strong_gb()
        .iter()
        .map(|g| crate::polyring::render_poly(g, &vars))
        .collect();
    parts.sort();
    format!("{}|{}", parts.len(), parts.join(";"))
}
