use super::bilinear::{scalar_presentation, scalars_lattice, BilinearMap, EndoPair, ScalarRing};
use super::ScalarsError;
use crate::exactlin::{
    hermite_basis, lattice_contains, lattice_intersect, solve_over_group, FpAbelianGroup,
    GroupElement, GroupEquation, GroupSolver, IntMatrix,
};
use num_bigint::BigInt;
use num_traits::Zero;

/// Finite ℤ-algebra: finitely presented additive group plus structure
/// constants `aᵢaⱼ = Σ_k s[i][j][k]·a_k`. No associativity, commutativity
/// or unit is assumed.
#[derive(Clone, Debug)]
pub struct ZAlgebra {
    pub group: FpAbelianGroup,
    pub structure: Vec<Vec<Vec<BigInt>>>,
    well_defined: bool,
}

impl ZAlgebra {
    /// Validate shapes and record whether the multiplication is compatible
    /// with the relations; the solver pipeline runs on the structure
    /// constants as given.
    pub fn new(
        group: FpAbelianGroup,
        structure: Vec<Vec<Vec<BigInt>>>,
    ) -> Result<Self, ScalarsError> {
        let n = group.ngens;
        if structure.len() != n
            || structure.iter().any(|row| row.len() != n)
            || structure
                .iter()
                .any(|row| row.iter().any(|v| v.len() != n))
        {
            return Err(ScalarsError::ShapeMismatch);
        }
        let mut alg = ZAlgebra { group, structure, well_defined: true };
        alg.well_defined = alg.check_well_defined();
        Ok(alg)
    }

    /// As [`ZAlgebra::new`], but reject inconsistent multiplication tables.
    pub fn checked(
        group: FpAbelianGroup,
        structure: Vec<Vec<Vec<BigInt>>>,
    ) -> Result<Self, ScalarsError> {
        let alg = ZAlgebra::new(group, structure)?;
        if !alg.well_defined {
            return Err(ScalarsError::IllDefined);
        }
        Ok(alg)
    }

    pub fn is_well_defined(&self) -> bool {
        self.well_defined
    }

    fn check_well_defined(&self) -> bool {
        let n = self.group.ngens;
        for k in 0..self.group.relations.cols {
            let rel: Vec<BigInt> = (0..n).map(|i| self.group.relations[(i, k)].clone()).collect();
            for j in 0..n {
                let left = self.multiply(&rel, &unit_vec(n, j));
                if !self.group.is_zero(&GroupElement::new(left)).unwrap() {
                    return false;
                }
                let right = self.multiply(&unit_vec(n, j), &rel);
                if !self.group.is_zero(&GroupElement::new(right)).unwrap() {
                    return false;
                }
            }
        }
        true
    }

    /// Product of two coordinate vectors via the structure tensor.
    pub fn multiply(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = self.group.ngens;
        let mut acc = vec![BigInt::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (x, s) in acc.iter_mut().zip(&self.structure[i][j]) {
                    *x += &c * s;
                }
            }
        }
        acc
    }

    /// Coordinate vector of the product `aᵢ·aⱼ`.
    pub fn product_of_generators(&self, i: usize, j: usize) -> Vec<BigInt> {
        self.structure[i][j].clone()
    }
}

fn unit_vec(n: usize, j: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[j] = BigInt::from(1);
    v
}

/// Left, right and two-sided annihilator sublattices of ℤⁿ. Each basis is
/// Hermite-reduced and contains the relation lattice, so it is exactly the
/// preimage of the annihilator subgroup.
#[derive(Clone, Debug)]
pub struct Annihilators {
    pub left: Vec<Vec<BigInt>>,
    pub right: Vec<Vec<BigInt>>,
    pub two_sided: Vec<Vec<BigInt>>,
}

pub fn annihilators(r: &ZAlgebra) -> Annihilators {
    let n = r.group.ngens;
    let solve_side = |left_side: bool| -> Vec<Vec<BigInt>> {
        let mut eqs = Vec::new();
        for fixed in 0..n {
            let mut c = IntMatrix::zero(n, n);
            let mut nonzero = false;
            for unknown in 0..n {
                let s = if left_side {
                    &r.structure[unknown][fixed]
                } else {
                    &r.structure[fixed][unknown]
                };
                for t in 0..n {
                    if !s[t].is_zero() {
                        nonzero = true;
                    }
                    c[(t, unknown)] = s[t].clone();
                }
            }
            if nonzero {
                eqs.push(GroupEquation::homogeneous(&r.group, c));
            }
        }
        let mut sols = GroupSolver::solve_homogeneous(n, &eqs);
        sols.extend(r.group.relation_lattice());
        hermite_basis(sols, n)
    };
    let left = solve_side(true);
    let right = solve_side(false);
    let two_sided = lattice_intersect(&[left.clone(), right.clone()], n);
    Annihilators { left, right, two_sided }
}

/// Presentation of `R⁺/⟨sub⟩`: same generators, the sublattice basis
/// appended to the relations. The sublattice must contain the relation
/// lattice.
pub fn quotient_presentation(
    r: &ZAlgebra,
    sub: &[Vec<BigInt>],
) -> Result<FpAbelianGroup, ScalarsError> {
    if !lattice_contains(sub, &r.group.relation_lattice()) {
        return Err(ScalarsError::ContainmentViolation);
    }
    Ok(r.group.with_extra_relations(sub))
}

/// Presentation of the product subgroup `R²` on the n² generators
/// `m_ij = aᵢaⱼ`, with relations the kernel of `(x_ij) ↦ Σ x_ij·m_ij`;
/// also returns the inclusion (the generator images inside `R⁺`).
pub fn r_squared_presentation(r: &ZAlgebra) -> (FpAbelianGroup, Vec<Vec<BigInt>>) {
    let n = r.group.ngens;
    let products: Vec<GroupElement> = (0..n * n)
        .map(|k| GroupElement::new(r.product_of_generators(k / n, k % n)))
        .collect();
    let kernel = solve_over_group(&r.group, &products).expect("dimensions agree");
    let relations = if kernel.is_empty() {
        IntMatrix::zero(n * n, 0)
    } else {
        IntMatrix::from_rows(kernel).transpose()
    };
    let inclusion = products.into_iter().map(|e| e.coords).collect();
    (FpAbelianGroup::new(n * n, relations), inclusion)
}

/// Small presentation of `R²` used by the scalars pipeline: generators are
/// a Hermite basis of the lattice spanned by the products, relations are
/// their kernel over `R⁺`.
pub fn r_squared_reduced(r: &ZAlgebra) -> (FpAbelianGroup, Vec<Vec<BigInt>>) {
    let n = r.group.ngens;
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            gens.push(r.product_of_generators(i, j));
        }
    }
    let basis = hermite_basis(gens, n);
    let elems: Vec<GroupElement> = basis.iter().cloned().map(GroupElement::new).collect();
    let kernel = solve_over_group(&r.group, &elems).expect("dimensions agree");
    let relations = if kernel.is_empty() {
        IntMatrix::zero(basis.len(), 0)
    } else {
        IntMatrix::from_rows(kernel).transpose()
    };
    (FpAbelianGroup::new(basis.len(), relations), basis)
}

/// The multiplication bilinear map `f_R : R⁺/Annλ × R⁺/Annρ → R²` with the
/// reduced `R²` presentation.
pub fn multiplication_map(r: &ZAlgebra) -> Result<(BilinearMap, Annihilators), ScalarsError> {
    let n = r.group.ngens;
    let ann = annihilators(r);
    let n1 = r.group.with_extra_relations(&ann.left);
    let n2 = r.group.with_extra_relations(&ann.right);
    let (m_group, inclusion) = r_squared_reduced(r);
    // Express each product in the reduced generators (exact lattice solve).
    let incl_t = if inclusion.is_empty() {
        IntMatrix::zero(n, 0)
    } else {
        IntMatrix::from_rows(inclusion.clone()).transpose()
    };
    let mut structure = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let target = r.product_of_generators(i, j);
            let coords = crate::exactlin::solve_particular(&incl_t, &target)
                .expect("products lie in the span of the reduced generators");
            structure[i][j] = coords;
        }
    }
    let f = BilinearMap::new(n1, n2, m_group, structure)?;
    Ok((f, ann))
}

/// Maximal ring of scalars of a finite ℤ-algebra, with presentation.
///
/// Runs the bilinear pipeline on `f_R`, then intersects with the two
/// descent conditions: compatibility with `R² → R⁺/Ann` on both sides, and
/// invariance of the diagonal image of `R`.
pub fn max_scalars_algebra(r: &ZAlgebra) -> Result<ScalarRing, ScalarsError> {
    let n = r.group.ngens;
    let (f, _ann) = multiplication_map(r)?;
    let base = scalars_lattice(&f)?;
    let d = 2 * n * n;

    // Condition (1): the canonical maps R² → R⁺/Annλ and R² → R⁺/Annρ are
    // equivariant: for all i, j:
    //   Σ_ℓ x_{iℓ} (a_ℓ a_j) = Σ_k s_{ijk} Σ_ℓ x_{kℓ} a_ℓ   in N1,
    // and the mirrored system in N2.
    let idx1 = |i: usize, j: usize| i * n + j;
    let idx2 = |i: usize, j: usize| n * n + i * n + j;
    let mut l1_eqs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut c = IntMatrix::zero(n, d);
            let mut nonzero = false;
            for l in 0..n {
                for t in 0..n {
                    let v = r.structure[l][j][t].clone();
                    if !v.is_zero() {
                        nonzero = true;
                    }
                    c[(t, idx1(i, l))] = v;
                }
            }
            for k in 0..n {
                let s = &r.structure[i][j][k];
                if s.is_zero() {
                    continue;
                }
                nonzero = true;
                for l in 0..n {
                    let cur = &c[(l, idx1(k, l))] - s;
                    c[(l, idx1(k, l))] = cur;
                }
            }
            if nonzero {
                l1_eqs.push(GroupEquation::homogeneous(&f.n1, c));
            }
            let mut c = IntMatrix::zero(n, d);
            let mut nonzero = false;
            for l in 0..n {
                for t in 0..n {
                    let v = r.structure[l][j][t].clone();
                    if !v.is_zero() {
                        nonzero = true;
                    }
                    c[(t, idx2(i, l))] = v;
                }
            }
            for k in 0..n {
                let s = &r.structure[i][j][k];
                if s.is_zero() {
                    continue;
                }
                nonzero = true;
                for l in 0..n {
                    let cur = &c[(l, idx2(k, l))] - s;
                    c[(l, idx2(k, l))] = cur;
                }
            }
            if nonzero {
                l1_eqs.push(GroupEquation::homogeneous(&f.n2, c));
            }
        }
    }
    let after_l1 = GroupSolver::solve_homogeneous_in(base, d, &l1_eqs);

    // Condition (2): the diagonal image of R is invariant: for each i
    // there are γ with φ₁(b_i) = Σ γ_j b_j and φ₂(c_i) = Σ γ_j c_j. Solve
    // in the joint (basis coordinates, γ) space and project.
    let k = after_l1.len();
    let total = k + n * n;
    let mut start: Vec<Vec<BigInt>> = Vec::with_capacity(total);
    for (t, row) in after_l1.iter().enumerate() {
        let mut v = vec![BigInt::zero(); total];
        v[t] = BigInt::from(1);
        let _ = row;
        start.push(v);
    }
    for g in 0..n * n {
        let mut v = vec![BigInt::zero(); total];
        v[k + g] = BigInt::from(1);
        start.push(v);
    }
    let mut l2_eqs = Vec::new();
    for i in 0..n {
        // Over N1: Σ_t y_t B[t][idx1(i, j)] − γ_{i,j} = 0 coefficientwise.
        let mut c = IntMatrix::zero(n, total);
        for (t, row) in after_l1.iter().enumerate() {
            for j in 0..n {
                c[(j, t)] = row[idx1(i, j)].clone();
            }
        }
        for j in 0..n {
            c[(j, k + i * n + j)] = BigInt::from(-1);
        }
        l2_eqs.push(GroupEquation::homogeneous(&f.n1, c));
        let mut c = IntMatrix::zero(n, total);
        for (t, row) in after_l1.iter().enumerate() {
            for j in 0..n {
                c[(j, t)] = row[idx2(i, j)].clone();
            }
        }
        for j in 0..n {
            c[(j, k + i * n + j)] = BigInt::from(-1);
        }
        l2_eqs.push(GroupEquation::homogeneous(&f.n2, c));
    }
    let joint = GroupSolver::solve_homogeneous_in(start, total, &l2_eqs);
    // Project onto the endomorphism coordinates.
    let projected: Vec<Vec<BigInt>> = joint
        .iter()
        .map(|w| {
            let mut x = vec![BigInt::zero(); d];
            for (t, row) in after_l1.iter().enumerate() {
                if w[t].is_zero() {
                    continue;
                }
                for (xi, ri) in x.iter_mut().zip(row) {
                    *xi += &w[t] * ri;
                }
            }
            x
        })
        .collect();
    let final_basis = hermite_basis(projected, d);
    let gens: Vec<EndoPair> =
        super::bilinear::minimal_generators(final_basis, &f.n1, &f.n2)
            .iter()
            .map(|v| EndoPair::from_coords(n, n, v))
            .collect();
    scalar_presentation(&f, &gens)
}
