use super::hermite::hermite_basis;
use super::matrix::IntMatrix;
use super::smith::{kernel_basis, solve_particular};
use num_bigint::BigInt;

/// Does `v` lie in the lattice spanned by `basis`?
pub fn lattice_member(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    if v.iter().all(|x| x == &BigInt::from(0)) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let cols = IntMatrix::from_rows(basis.to_vec()).transpose();
    solve_particular(&cols, v).is_some()
}

/// Is every vector of `sub` in the span of `sup`?
pub fn lattice_contains(sup: &[Vec<BigInt>], sub: &[Vec<BigInt>]) -> bool {
    sub.iter().all(|v| lattice_member(sup, v))
}

/// Lattice equality via canonical Hermite bases.
pub fn lattice_eq(a: &[Vec<BigInt>], b: &[Vec<BigInt>], dim: usize) -> bool {
    hermite_basis(a.to_vec(), dim) == hermite_basis(b.to_vec(), dim)
}

/// Hermite basis of the sum of the spanned lattices.
pub fn lattice_sum(parts: &[&[Vec<BigInt>]], dim: usize) -> Vec<Vec<BigInt>> {
    let mut gens = Vec::new();
    for p in parts {
        gens.extend(p.iter().cloned());
    }
    hermite_basis(gens, dim)
}

/// Hermite basis of the intersection of the spanned sublattices.
///
/// For two lattices with bases `B₁`, `B₂` the intersection is recovered
/// from the kernel of `[B₁ᵀ | -B₂ᵀ]`; the list version folds pairwise.
pub fn lattice_intersect(bases: &[Vec<Vec<BigInt>>], dim: usize) -> Vec<Vec<BigInt>> {
    for b in bases {
        for v in b {
            assert_eq!(v.len(), dim, "dimension mismatch");
        }
    }
    let Some(first) = bases.first() else {
        // Empty intersection list: the whole space.
        return hermite_basis(
            (0..dim).map(|j| IntMatrix::identity(dim).row_vec(j)).collect(),
            dim,
        );
    };
    let mut acc = hermite_basis(first.clone(), dim);
    for b in &bases[1..] {
        acc = intersect_two(&acc, &hermite_basis(b.clone(), dim), dim);
        if acc.is_empty() {
            break;
        }
    }
    acc
}

fn intersect_two(
    b1: &[Vec<BigInt>],
    b2: &[Vec<BigInt>],
    dim: usize,
) -> Vec<Vec<BigInt>> {
    if b1.is_empty() || b2.is_empty() {
        return Vec::new();
    }
    let r1 = b1.len();
    let mut rows = Vec::with_capacity(dim);
    for c in 0..dim {
        let mut row = Vec::with_capacity(r1 + b2.len());
        for v in b1 {
            row.push(v[c].clone());
        }
        for v in b2 {
            row.push(-&v[c]);
        }
        rows.push(row);
    }
    let kernel = kernel_basis(&IntMatrix::from_rows(rows));
    let gens = kernel
        .iter()
        .map(|uv| {
            let mut x = vec![BigInt::from(0); dim];
            for (k, v) in b1.iter().enumerate() {
                for c in 0..dim {
                    let t = &v[c] * &uv[k];
                    x[c] += t;
                }
            }
            x
        })
        .collect();
    hermite_basis(gens, dim)
}
