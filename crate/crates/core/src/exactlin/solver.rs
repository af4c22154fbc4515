use super::group::FpAbelianGroup;
use super::hermite::hermite_basis;
use super::matrix::IntMatrix;
use super::smith::{kernel_basis, solve_particular};
use num_bigint::BigInt;
use num_traits::Zero;

/// One linear equation block over a finitely presented abelian group:
/// the unknown vector `x ∈ ℤᵖ` must satisfy `coeffs·x ≡ target` in the
/// group, i.e. `coeffs·x - target ∈ Λ`.
///
/// `coeffs` has one row per group generator and one column per unknown.
pub struct GroupEquation<'a> {
    pub group: &'a FpAbelianGroup,
    pub coeffs: IntMatrix,
    pub target: Vec<BigInt>,
}

impl<'a> GroupEquation<'a> {
    pub fn homogeneous(group: &'a FpAbelianGroup, coeffs: IntMatrix) -> Self {
        let target = vec![BigInt::zero(); group.ngens];
        GroupEquation { group, coeffs, target }
    }

    pub fn with_target(group: &'a FpAbelianGroup, coeffs: IntMatrix, target: Vec<BigInt>) -> Self {
        assert_eq!(target.len(), group.ngens);
        GroupEquation { group, coeffs, target }
    }
}

/// Solves systems of [`GroupEquation`]s sharing one unknown vector by
/// iterative restriction: the solution lattice starts as all of ℤᵖ (or a
/// supplied sublattice) and each equation cuts it down via one small Smith
/// computation. Equations are processed in the given order, so results are
/// deterministic; the final basis is Hermite-reduced.
pub struct GroupSolver;

impl GroupSolver {
    /// Basis of `{x ∈ ℤᵖ : coeffs·x ≡ 0 in the group, for every equation}`.
    pub fn solve_homogeneous(p: usize, eqs: &[GroupEquation]) -> Vec<Vec<BigInt>> {
        let start = identity_basis(p);
        Self::solve_homogeneous_in(start, p, eqs)
    }

    /// Same, but the solution is sought inside the lattice spanned by
    /// `start` (rows of length `p`).
    pub fn solve_homogeneous_in(
        start: Vec<Vec<BigInt>>,
        p: usize,
        eqs: &[GroupEquation],
    ) -> Vec<Vec<BigInt>> {
        let mut basis = hermite_basis(start, p);
        for eq in eqs {
            if basis.is_empty() {
                break;
            }
            assert_eq!(eq.coeffs.cols, p, "equation column count mismatch");
            let w = columns_image(&eq.coeffs, &basis);
            let kernel = kernel_basis(&w.hstack(&eq.group.relations));
            let next = kernel
                .into_iter()
                .map(|k| combine(&k[..basis.len()], &basis, p))
                .collect();
            basis = hermite_basis(next, p);
        }
        basis
    }

    /// Particular solution plus kernel basis of an inhomogeneous system, or
    /// `None` when unsolvable.
    pub fn solve_affine(
        p: usize,
        eqs: &[GroupEquation],
    ) -> Option<(Vec<BigInt>, Vec<Vec<BigInt>>)> {
        let mut x0 = vec![BigInt::zero(); p];
        let mut basis = identity_basis(p);
        for eq in eqs {
            assert_eq!(eq.coeffs.cols, p, "equation column count mismatch");
            let w = columns_image(&eq.coeffs, &basis);
            let aug = w.hstack(&eq.group.relations);
            let cx0 = eq.coeffs.mul_vec(&x0);
            let rhs: Vec<BigInt> = eq.target.iter().zip(&cx0).map(|(t, c)| t - c).collect();
            let part = solve_particular(&aug, &rhs)?;
            let y0 = &part[..basis.len()];
            for (i, xi) in x0.iter_mut().enumerate() {
                for (k, row) in basis.iter().enumerate() {
                    *xi += &row[i] * &y0[k];
                }
            }
            let kernel = kernel_basis(&aug);
            let next = kernel
                .into_iter()
                .map(|k| combine(&k[..basis.len()], &basis, p))
                .collect();
            basis = hermite_basis(next, p);
        }
        Some((x0, basis))
    }
}

fn identity_basis(p: usize) -> Vec<Vec<BigInt>> {
    let id = IntMatrix::identity(p);
    (0..p).map(|i| id.row_vec(i)).collect()
}

/// Matrix whose k-th column is `coeffs · basis[k]`.
fn columns_image(coeffs: &IntMatrix, basis: &[Vec<BigInt>]) -> IntMatrix {
    let rows = coeffs.rows;
    let mut out = IntMatrix::zero(rows, basis.len());
    for (k, v) in basis.iter().enumerate() {
        let img = coeffs.mul_vec(v);
        for r in 0..rows {
            out[(r, k)] = img[r].clone();
        }
    }
    out
}

fn combine(coeffs: &[BigInt], basis: &[Vec<BigInt>], p: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p];
    for (c, row) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            *o += c * x;
        }
    }
    out
}
