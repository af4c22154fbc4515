//! Canonical decomposition of bilinear maps and direct decomposition of
//! `R/Ann(R)` for a finite ℤ-algebra `R`.
//!
//! The primitive idempotents of the maximal ring of scalars are evaluated
//! on the endomorphism generators; each idempotent pair `(Eᵢ, Eᵢ')` cuts
//! out one factor. For algebras, the factor generators are preimages of
//! the idempotent images under the diagonal map `R → R⁺/Annλ × R⁺/Annρ`,
//! and the factors are reported as sublattices of `R⁺` modulo `Ann(R)`.
//!
//! The decomposition of `R/Ann(R)` is not lifted to `R` itself — that is
//! impossible in general — and factors are certified directly
//! indecomposable only under the annihilator condition checked by
//! [`certify_indecomposable`].

use crate::exactlin::{
    hermite_basis, lattice_eq, lattice_intersect, GroupElement, GroupEquation, GroupSolver,
    IntMatrix,
};
use crate::idempotents::{primitive_idempotents, IdempotentError, IdempotentSet};
use crate::polyring::PolyZ;
use crate::scalars::{
    annihilators, max_scalars_algebra, max_scalars_bilinear, scalar_presentation, BilinearMap,
    EndoPair, ScalarsError, ZAlgebra,
};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("idempotent polynomial arity does not match the generator count")]
    ArityMismatch,
    #[error("diagonal preimage unsolvable: idempotents must fix the image of R")]
    PreimageUnsolvable,
    #[error(transparent)]
    Scalars(#[from] ScalarsError),
    #[error(transparent)]
    Idempotents(#[from] IdempotentError),
}

/// Substitute the generator matrices into an idempotent polynomial,
/// blockwise; the constant term contributes a multiple of the identity.
/// Generator matrices commute in the scalar ring, so the evaluation order
/// is immaterial.
pub fn evaluate_idempotent(
    e: &PolyZ,
    gens: &[EndoPair],
) -> Result<EndoPair, DecomposeError> {
    if gens.is_empty() || e.nvars != gens.len() {
        return Err(DecomposeError::ArityMismatch);
    }
    let n1 = gens[0].left.rows;
    let n2 = gens[0].right.rows;
    let mut left = IntMatrix::zero(n1, n1);
    let mut right = IntMatrix::zero(n2, n2);
    for (t, c) in &e.terms {
        let mut tl = IntMatrix::identity(n1);
        let mut tr = IntMatrix::identity(n2);
        for (v, &exp) in t.0.iter().enumerate() {
            for _ in 0..exp {
                tl = tl.mul(&gens[v].left);
                tr = tr.mul(&gens[v].right);
            }
        }
        left = left.add(&tl.scale(c));
        right = right.add(&tr.scale(c));
    }
    Ok(EndoPair { left, right })
}

/// One factor of the canonical decomposition of a bilinear map: generator
/// images on both sides and their pairwise products in `M`.
#[derive(Clone, Debug)]
pub struct BilinearFactor {
    pub n1_gens: Vec<GroupElement>,
    pub n2_gens: Vec<GroupElement>,
    pub m_gens: Vec<GroupElement>,
    pub idempotent_index: usize,
}

/// Canonical decomposition of a full non-degenerate bilinear map into
/// directly indecomposable pieces, one per primitive idempotent of the
/// maximal ring of scalars.
pub fn decompose_bilinear(
    f: &BilinearMap,
    seed: u64,
) -> Result<Vec<BilinearFactor>, DecomposeError> {
    let gens = max_scalars_bilinear(f)?;
    let ring = scalar_presentation(f, &gens)?;
    let idem = primitive_idempotents(&ring.presentation, seed)?;
    let mut out = Vec::new();
    for (idx, e) in idem.elements.iter().enumerate() {
        let pair = evaluate_idempotent(e, &ring.generators)?;
        let n1_gens: Vec<GroupElement> = (0..f.n1.ngens)
            .map(|j| {
                f.n1.element_normal_form(&GroupElement::new(pair.left.row_vec(j)))
                    .expect("row length matches")
            })
            .collect();
        let n2_gens: Vec<GroupElement> = (0..f.n2.ngens)
            .map(|j| {
                f.n2.element_normal_form(&GroupElement::new(pair.right.row_vec(j)))
                    .expect("row length matches")
            })
            .collect();
        let mut m_gens = Vec::new();
        for a in &n1_gens {
            for b in &n2_gens {
                let v = f.value(&a.coords, &b.coords);
                let nf = f.m.element_normal_form(&GroupElement::new(v)).unwrap();
                if !nf.coords.iter().all(|c| c.is_zero()) {
                    m_gens.push(nf);
                }
            }
        }
        out.push(BilinearFactor { n1_gens, n2_gens, m_gens, idempotent_index: idx });
    }
    Ok(out)
}

/// One factor of the algebra decomposition: pruned display generators and
/// the full preimage sublattice of ℤⁿ (which contains the relations of
/// `R⁺/Ann`).
#[derive(Clone, Debug)]
pub struct AlgebraFactor {
    pub generators: Vec<GroupElement>,
    pub lattice: Vec<Vec<BigInt>>,
    pub idempotent_index: usize,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub factors: Vec<AlgebraFactor>,
    pub indecomposable_certified: bool,
    pub ann_basis: Vec<Vec<BigInt>>,
    pub idempotents: IdempotentSet,
}

/// Direct decomposition `R/Ann(R) = R₁ × ⋯ × R_ℓ` induced by the primitive
/// idempotents of the maximal ring of scalars.
pub fn decompose_algebra(
    r: &ZAlgebra,
    seed: u64,
) -> Result<DecompositionReport, DecomposeError> {
    let n = r.group.ngens;
    let ring = max_scalars_algebra(r)?;
    let idem = primitive_idempotents(&ring.presentation, seed)?;
    let ann = annihilators(r);
    let quotient = r.group.with_extra_relations(&ann.two_sided);
    let rel_q = quotient.relation_lattice();
    let mut factors = Vec::new();
    for (idx, e) in idem.elements.iter().enumerate() {
        let pair = evaluate_idempotent(e, &ring.generators)?;
        let mut rows = Vec::new();
        for j in 0..n {
            // Diagonal preimage: x with x ≡ Eᵢ·b_j in N1 and x ≡ Eᵢ'·c_j in N2.
            let eqs = [
                GroupEquation::with_target(&ring.n1, IntMatrix::identity(n), pair.left.row_vec(j)),
                GroupEquation::with_target(&ring.n2, IntMatrix::identity(n), pair.right.row_vec(j)),
            ];
            let (x, _) = GroupSolver::solve_affine(n, &eqs)
                .ok_or(DecomposeError::PreimageUnsolvable)?;
            rows.push(x);
        }
        let mut with_rel = rows.clone();
        with_rel.extend(rel_q.iter().cloned());
        let lattice = hermite_basis(with_rel, n);
        let display = hermite_basis(
            rows.iter()
                .map(|x| {
                    quotient
                        .element_normal_form(&GroupElement::new(x.clone()))
                        .unwrap()
                        .coords
                })
                .collect(),
            n,
        )
        .into_iter()
        .map(GroupElement::new)
        .collect();
        factors.push(AlgebraFactor { generators: display, lattice, idempotent_index: idx });
    }
    Ok(DecompositionReport {
        factors,
        indecomposable_certified: certify_indecomposable(r),
        ann_basis: ann.two_sided,
        idempotents: idem,
    })
}

/// Criterion for direct indecomposability of the factors: the left and
/// right annihilators agree and `R² ∩ Ann(R) = 0`.
pub fn certify_indecomposable(r: &ZAlgebra) -> bool {
    let n = r.group.ngens;
    let ann = annihilators(r);
    if !lattice_eq(&ann.left, &ann.right, n) {
        return false;
    }
    let rel = r.group.relation_lattice();
    let mut r2 = rel.clone();
    for i in 0..n {
        for j in 0..n {
            r2.push(r.product_of_generators(i, j));
        }
    }
    let r2 = hermite_basis(r2, n);
    let meet = lattice_intersect(&[r2, ann.two_sided], n);
    lattice_eq(&meet, &rel, n)
}

/// Post-hoc verification of a decomposition report against the algebra:
/// the factor lattices sum to everything, intersect pairwise in the
/// annihilator, are closed under multiplication, and annihilate each other
/// across factors.
pub fn verify_decomposition(r: &ZAlgebra, report: &DecompositionReport) -> bool {
    let n = r.group.ngens;
    let quotient = r.group.with_extra_relations(&report.ann_basis);
    let rel_q = quotient.relation_lattice();
    // Sum of the factor lattices covers the whole group modulo the
    // annihilator (for an empty factor list the quotient must be trivial).
    let mut all: Vec<Vec<BigInt>> = rel_q.clone();
    all.extend(report.factors.iter().flat_map(|f| f.lattice.iter().cloned()));
    let identity: Vec<Vec<BigInt>> = (0..n).map(|i| IntMatrix::identity(n).row_vec(i)).collect();
    if !lattice_eq(&hermite_basis(all, n), &identity, n) {
        return false;
    }
    for (i, fi) in report.factors.iter().enumerate() {
        // Pairwise intersections collapse into the annihilator.
        for fj in report.factors.iter().take(i) {
            let meet = lattice_intersect(&[fi.lattice.clone(), fj.lattice.clone()], n);
            if !lattice_eq(&meet, &rel_q, n) {
                return false;
            }
        }
        // Multiplicative closure on the pruned generators.
        for a in &fi.generators {
            for b in &fi.generators {
                let p = r.multiply(&a.coords, &b.coords);
                if !crate::exactlin::lattice_member(&fi.lattice, &p) {
                    return false;
                }
            }
        }
        // Cross products vanish modulo the annihilator.
        for (j, fj) in report.factors.iter().enumerate() {
            if i == j {
                continue;
            }
            for a in &fi.generators {
                for b in &fj.generators {
                    let p = r.multiply(&a.coords, &b.coords);
                    if !quotient.is_zero(&GroupElement::new(p)).unwrap() {
                        return false;
                    }
                }
            }
        }
    }
    true
}
