use super::hermite::hermite_basis;
use super::matrix::IntMatrix;
use super::smith::{kernel_basis, smith_normal_form};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactLinError {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Element of a finitely presented abelian group, as a coordinate vector
/// with respect to the group's generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub coords: Vec<BigInt>,
}

impl GroupElement {
    pub fn new(coords: Vec<BigInt>) -> Self {
        GroupElement { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        GroupElement::new(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        GroupElement::new(vec![BigInt::zero(); n])
    }
}

/// Finitely presented abelian group `ℤ^ngens / Λ`, where `Λ` is the column
/// lattice of `relations`.
///
/// A normal-form kit (Smith decomposition of the relation matrix) is
/// precomputed at construction so that element normal forms and equality
/// tests are cheap.
#[derive(Clone, Debug)]
pub struct FpAbelianGroup {
    pub ngens: usize,
    pub relations: IntMatrix,
    // L·relations·R = D; an element x is canonical iff (L·x)_i ∈ [0, d_i).
    kit_l: IntMatrix,
    kit_linv: IntMatrix,
    kit_diag: Vec<BigInt>,
}

impl FpAbelianGroup {
    pub fn new(ngens: usize, relations: IntMatrix) -> Self {
        assert_eq!(
            relations.rows, ngens,
            "relation matrix must have one row per generator"
        );
        let snf = smith_normal_form(&relations);
        let mut diag = vec![BigInt::zero(); ngens];
        for (i, d) in snf.diagonal().into_iter().enumerate() {
            diag[i] = d;
        }
        FpAbelianGroup {
            ngens,
            relations,
            kit_l: snf.l,
            kit_linv: snf.linv,
            kit_diag: diag,
        }
    }

    /// Free abelian group ℤⁿ.
    pub fn free(ngens: usize) -> Self {
        FpAbelianGroup::new(ngens, IntMatrix::zero(ngens, 0))
    }

    /// Cyclic-by-cyclic group ⊕ ℤ/mᵢ (mᵢ = 0 meaning a free factor).
    pub fn with_orders(orders: &[i64]) -> Self {
        let n = orders.len();
        let mut rel = IntMatrix::zero(n, n);
        for (i, &m) in orders.iter().enumerate() {
            rel[(i, i)] = BigInt::from(m);
        }
        FpAbelianGroup::new(n, rel)
    }

    /// Same generators, extra relation columns appended.
    pub fn with_extra_relations(&self, extra: &[Vec<BigInt>]) -> FpAbelianGroup {
        let add = if extra.is_empty() {
            IntMatrix::zero(self.ngens, 0)
        } else {
            IntMatrix::from_rows(extra.to_vec()).transpose()
        };
        FpAbelianGroup::new(self.ngens, self.relations.hstack(&add))
    }

    /// Relation lattice as a Hermite row basis.
    pub fn relation_lattice(&self) -> Vec<Vec<BigInt>> {
        let cols: Vec<Vec<BigInt>> = (0..self.relations.cols)
            .map(|j| self.relations.col_vec(j))
            .collect();
        hermite_basis(cols, self.ngens)
    }

    /// Canonical coset representative: two vectors represent the same group
    /// element iff their normal forms are equal.
    pub fn element_normal_form(&self, x: &GroupElement) -> Result<GroupElement, ExactLinError> {
        if x.coords.len() != self.ngens {
            return Err(ExactLinError::DimensionMismatch {
                expected: self.ngens,
                got: x.coords.len(),
            });
        }
        let mut y = self.kit_l.mul_vec(&x.coords);
        for (yi, d) in y.iter_mut().zip(&self.kit_diag) {
            if !d.is_zero() {
                *yi = yi.mod_floor(d);
            }
        }
        Ok(GroupElement::new(self.kit_linv.mul_vec(&y)))
    }

    pub fn is_zero(&self, x: &GroupElement) -> Result<bool, ExactLinError> {
        Ok(self
            .element_normal_form(x)?
            .coords
            .iter()
            .all(|c| c.is_zero()))
    }

    pub fn eq_elements(&self, x: &GroupElement, y: &GroupElement) -> Result<bool, ExactLinError> {
        Ok(self.element_normal_form(x)? == self.element_normal_form(y)?)
    }

    /// Invariant factors of the group (nonzero entries of the Smith form of
    /// the relation matrix, padded with 0 for free factors).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.kit_diag.clone()
    }

    /// Order of the group; `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        let mut o = BigInt::from(1);
        for d in &self.kit_diag {
            if d.is_zero() {
                return None;
            }
            o *= d;
        }
        Some(o)
    }
}

/// ℤ-basis of `{(s₁…s_p) : Σ sᵢvᵢ = 0 in N}`.
///
/// The system is augmented by the relation columns, solved over ℤ, projected
/// back to the first `p` coordinates and Hermite-reduced.
pub fn solve_over_group(
    group: &FpAbelianGroup,
    v: &[GroupElement],
) -> Result<Vec<Vec<BigInt>>, ExactLinError> {
    let p = v.len();
    for e in v {
        if e.coords.len() != group.ngens {
            return Err(ExactLinError::DimensionMismatch {
                expected: group.ngens,
                got: e.coords.len(),
            });
        }
    }
    let mut rows = Vec::with_capacity(group.ngens);
    for c in 0..group.ngens {
        let mut row = Vec::with_capacity(p + group.relations.cols);
        for e in v {
            row.push(e.coords[c].clone());
        }
        for j in 0..group.relations.cols {
            row.push(group.relations[(c, j)].clone());
        }
        rows.push(row);
    }
    let kernel = kernel_basis(&IntMatrix::from_rows(rows));
    let projected = kernel.into_iter().map(|mut k| {
        k.truncate(p);
        k
    });
    Ok(hermite_basis(projected.collect(), p))
}
