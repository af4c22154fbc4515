//! Connected components of a primary decomposition and the primitive
//! idempotents of a commutative finite ℤ-algebra `ℤ[x₁…xₙ]/I`.
//!
//! Two primary components belong to the same connected component of the
//! spectrum iff their prime components are not comaximal; the transitive
//! closure is taken by union-find over the comaximality graph. For each
//! cluster `Cᵢ` with `Jᵢ = ∩_{Q ∈ Cᵢ} Q`, the clusters are pairwise
//! comaximal and intersect to `I`, so a cofactor-tracked one-representation
//! `pᵢ + qᵢ = 1` with `pᵢ ∈ Jᵢ`, `qᵢ ∈ ∩_{j≠i} Jⱼ` yields the idempotent
//! `qᵢ`; its normal form modulo `I` is the canonical representative.

#[cfg(test)]
mod tests;

use crate::polyring::{
    ideal_intersect, ideal_sum, one_representation, IdealError, IdealZ, Poly, PolyZ,
};
use crate::primdec::{
    primary_decomposition_with_primes, DecompositionResult, PrimdecError,
};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdempotentError {
    #[error("decomposition component is missing its prime")]
    MissingPrime,
    #[error(transparent)]
    Primdec(#[from] PrimdecError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Indices into the component list of a [`DecompositionResult`], one
/// cluster per connected component of the spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCluster {
    pub members: Vec<usize>,
}

/// Primitive idempotents of `ℤ[x]/I`, as canonical normal forms modulo a
/// strong Gröbner basis of `I`.
#[derive(Clone, Debug)]
pub struct IdempotentSet {
    pub elements: Vec<PolyZ>,
    pub modulus: IdealZ,
}

/// Group the components of a primary decomposition into connected
/// components: transitive closure of `𝔓ᵢ + 𝔓ⱼ ≠ ⟨1⟩` over the prime
/// components (which subsumes the containment test of generic primes in
/// maximal ones).
pub fn connected_components(
    decomposition: &DecompositionResult,
) -> Result<Vec<ComponentCluster>, IdempotentError> {
    let n = decomposition.components.len();
    let primes: Vec<&IdealZ> = decomposition
        .components
        .iter()
        .map(|c| c.prime.as_ref().ok_or(IdempotentError::MissingPrime))
        .collect::<Result<_, _>>()?;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in 0..i {
            let sum = ideal_sum(primes[i], primes[j]);
            if !sum.is_unit() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut clusters: Vec<ComponentCluster> = Vec::new();
    let mut root_of: Vec<(usize, usize)> = Vec::new(); // (root, cluster idx)
    for i in 0..n {
        let r = find(&mut parent, i);
        match root_of.iter().find(|(root, _)| *root == r) {
            Some(&(_, k)) => clusters[k].members.push(i),
            None => {
                root_of.push((r, clusters.len()));
                clusters.push(ComponentCluster { members: vec![i] });
            }
        }
    }
    Ok(clusters)
}

/// Primitive idempotents of `ℤ[x₁…xₙ]/I` for an ideal with finite
/// quotient. Idempotent axioms (squares, orthogonality, partition of
/// unity) hold exactly modulo `I`.
pub fn primitive_idempotents(
    ideal: &IdealZ,
    seed: u64,
) -> Result<IdempotentSet, IdempotentError> {
    let decomposition = primary_decomposition_with_primes(ideal, seed)?;
    let clusters = connected_components(&decomposition)?;
    let cluster_ideals: Vec<IdealZ> = clusters
        .iter()
        .map(|c| {
            let mut acc: Option<IdealZ> = None;
            for &k in &c.members {
                let q = &decomposition.components[k].primary;
                acc = Some(match acc {
                    None => q.clone(),
                    Some(cur) => ideal_intersect(&cur, q),
                });
            }
            acc.expect("clusters are nonempty")
        })
        .collect();
    let mut elements = Vec::new();
    for i in 0..cluster_ideals.len() {
        let mut others: Option<IdealZ> = None;
        for (j, cj) in cluster_ideals.iter().enumerate() {
            if j == i {
                continue;
            }
            others = Some(match others {
                None => cj.clone(),
                Some(cur) => ideal_intersect(&cur, cj),
            });
        }
        let others =
            others.unwrap_or_else(|| IdealZ::unit(ideal.nvars, ideal.order));
        let (_, q) = one_representation(&cluster_ideals[i], &others)?;
        elements.push(ideal.normal_form(&q));
    }
    debug_assert!(idempotent_axioms_hold(ideal, &elements));
    Ok(IdempotentSet { elements, modulus: ideal.clone() })
}

/// Brute-force reference: enumerate all residue classes of a finite
/// quotient (at most `limit` elements), find every idempotent, and filter
/// to the primitive ones. Returns `None` when the quotient is infinite or
/// larger than `limit`. Canonical normal forms are returned, so the result
/// is directly comparable with [`primitive_idempotents`].
pub fn enumerate_primitive_idempotents(
    ideal: &IdealZ,
    limit: u64,
) -> Option<Vec<PolyZ>> {
    use crate::polyring::Term;
    let ord = ideal.order;
    let n = ideal.nvars;
    let gb = ideal.strong_gb();
    if ideal.is_unit() {
        return Some(Vec::new());
    }
    // Bounding box: exponents below the monic pure-power leading terms.
    let mut bounds = vec![0u32; n];
    for g in gb {
        let (t, c) = (g.leading_term(), g.leading_coeff());
        if let Some(v) = t.pure_power() {
            if c == &BigInt::from(1) {
                let e = t.0[v];
                if bounds[v] == 0 || e < bounds[v] {
                    bounds[v] = e;
                }
            }
        }
    }
    if bounds.iter().any(|&b| b == 0) && n > 0 {
        return None;
    }
    // Stuck terms and their coefficient moduli.
    let mut box_terms: Vec<(Term, u64)> = Vec::new();
    let mut size: u64 = 1;
    let mut cur = vec![0u32; n];
    loop {
        let t = Term(cur.clone());
        let b = gb
            .iter()
            .filter(|g| g.leading_term().divides(&t))
            .map(|g| g.leading_coeff().clone())
            .min();
        match b {
            None => return None, // free summand: infinite quotient
            Some(b) => {
                let b: u64 = b.try_into().ok()?;
                if b > 1 {
                    size = size.checked_mul(b)?;
                    if size > limit {
                        return None;
                    }
                    box_terms.push((t, b));
                }
            }
        }
        if n == 0 {
            break;
        }
        let mut i = 0;
        loop {
            if i == n {
                break;
            }
            cur[i] += 1;
            if cur[i] >= bounds[i] {
                cur[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
        if cur.iter().all(|&e| e == 0) {
            break;
        }
    }
    // Enumerate every canonical form and keep the idempotents.
    let mut idempotents: Vec<PolyZ> = Vec::new();
    let mut digits = vec![0u64; box_terms.len()];
    loop {
        let e = Poly::from_terms(
            n,
            box_terms
                .iter()
                .zip(&digits)
                .filter(|(_, &d)| d > 0)
                .map(|((t, _), &d)| (t.clone(), BigInt::from(d)))
                .collect(),
            ord,
        );
        if ideal.contains(&e.mul(&e, ord).sub(&e, ord)) {
            idempotents.push(ideal.normal_form(&e));
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                // All combinations visited.
                let primitive = idempotents
                    .iter()
                    .filter(|e| {
                        !e.is_zero()
                            && !idempotents.iter().any(|f| {
                                !f.is_zero()
                                    && f != *e
                                    && ideal.contains(&f.mul(e, ord).sub(f, ord))
                            })
                    })
                    .cloned()
                    .collect();
                return Some(primitive);
            }
            digits[i] += 1;
            if digits[i] >= box_terms[i].1 {
                digits[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

/// Exact check of the idempotent axioms modulo the ideal: squares,
/// pairwise orthogonality and partition of unity.
pub fn idempotent_axioms_hold(ideal: &IdealZ, elements: &[PolyZ]) -> bool {
    let ord = ideal.order;
    let n = ideal.nvars;
    let mut sum = Poly::zero(n);
    for (i, e) in elements.iter().enumerate() {
        if ideal.normal_form(e).is_zero() {
            return false;
        }
        let sq = e.mul(e, ord).sub(e, ord);
        if !ideal.contains(&sq) {
            return false;
        }
        for f in &elements[..i] {
            if !ideal.contains(&e.mul(f, ord)) {
                return false;
            }
        }
        sum = sum.add(e, ord);
    }
    let one = Poly::constant(n, BigInt::from(1));
    ideal.contains(&sum.sub(&one, ord))
}
