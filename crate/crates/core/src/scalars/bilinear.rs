use super::ScalarsError;
use crate::exactlin::{
    hermite_basis, lattice_contains, FpAbelianGroup, GroupEquation, GroupSolver, IntMatrix,
};
use crate::polyring::{IdealZ, Poly, PolyZ, Term, TermOrder};
use num_bigint::BigInt;
use num_traits::Zero;

/// Pair of endomorphisms of `N₁ × N₂`, row convention: the image of the
/// i-th generator is `Σ_j mat[i][j]·a_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoPair {
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl EndoPair {
    pub fn identity(n1: usize, n2: usize) -> Self {
        EndoPair {
            left: IntMatrix::identity(n1),
            right: IntMatrix::identity(n2),
        }
    }

    /// Flat coordinates: left block row-major, then right block.
    pub fn to_coords(&self) -> Vec<BigInt> {
        let mut v = Vec::with_capacity(self.left.rows * self.left.cols + self.right.rows * self.right.cols);
        for i in 0..self.left.rows {
            v.extend(self.left.row(i).iter().cloned());
        }
        for i in 0..self.right.rows {
            v.extend(self.right.row(i).iter().cloned());
        }
        v
    }

    pub fn from_coords(n1: usize, n2: usize, v: &[BigInt]) -> Self {
        assert_eq!(v.len(), n1 * n1 + n2 * n2);
        let mut left = IntMatrix::zero(n1, n1);
        for i in 0..n1 {
            for j in 0..n1 {
                left[(i, j)] = v[i * n1 + j].clone();
            }
        }
        let mut right = IntMatrix::zero(n2, n2);
        for i in 0..n2 {
            for j in 0..n2 {
                right[(i, j)] = v[n1 * n1 + i * n2 + j].clone();
            }
        }
        EndoPair { left, right }
    }

    /// Composition `self ∘ other` (apply `other` first); in the row
    /// convention the matrix is `other.mat · self.mat`.
    pub fn compose(&self, other: &EndoPair) -> EndoPair {
        EndoPair {
            left: other.left.mul(&self.left),
            right: other.right.mul(&self.right),
        }
    }

    /// Equality as endomorphisms: images of all generators agree modulo
    /// the group relations.
    pub fn eq_modulo(&self, other: &EndoPair, n1: &FpAbelianGroup, n2: &FpAbelianGroup) -> bool {
        use crate::exactlin::GroupElement;
        for i in 0..n1.ngens {
            let d: Vec<BigInt> = self
                .left
                .row(i)
                .iter()
                .zip(other.left.row(i))
                .map(|(a, b)| a - b)
                .collect();
            if !n1.is_zero(&GroupElement::new(d)).unwrap() {
                return false;
            }
        }
        for i in 0..n2.ngens {
            let d: Vec<BigInt> = self
                .right
                .row(i)
                .iter()
                .zip(other.right.row(i))
                .map(|(a, b)| a - b)
                .collect();
            if !n2.is_zero(&GroupElement::new(d)).unwrap() {
                return false;
            }
        }
        true
    }
}

/// Bilinear map `f : N₁ × N₂ → M` given by structure constants
/// `f(aᵢ, aⱼ) = Σ_k s[i][j][k]·b_k`.
#[derive(Clone, Debug)]
pub struct BilinearMap {
    pub n1: FpAbelianGroup,
    pub n2: FpAbelianGroup,
    pub m: FpAbelianGroup,
    pub structure: Vec<Vec<Vec<BigInt>>>,
    well_defined: bool,
}

impl BilinearMap {
    /// Validate shapes, record whether the structure constants respect the
    /// group relations. The computational pipeline runs on the constants
    /// as given either way.
    pub fn new(
        n1: FpAbelianGroup,
        n2: FpAbelianGroup,
        m: FpAbelianGroup,
        structure: Vec<Vec<Vec<BigInt>>>,
    ) -> Result<Self, ScalarsError> {
        if structure.len() != n1.ngens
            || structure.iter().any(|row| row.len() != n2.ngens)
            || structure
                .iter()
                .any(|row| row.iter().any(|v| v.len() != m.ngens))
        {
            return Err(ScalarsError::ShapeMismatch);
        }
        let mut map = BilinearMap { n1, n2, m, structure, well_defined: true };
        map.well_defined = map.check_well_defined();
        Ok(map)
    }

    /// As [`BilinearMap::new`], but reject structure constants that are
    /// inconsistent with the relations.
    pub fn checked(
        n1: FpAbelianGroup,
        n2: FpAbelianGroup,
        m: FpAbelianGroup,
        structure: Vec<Vec<Vec<BigInt>>>,
    ) -> Result<Self, ScalarsError> {
        let map = BilinearMap::new(n1, n2, m, structure)?;
        if !map.well_defined {
            return Err(ScalarsError::IllDefined);
        }
        Ok(map)
    }

    pub fn is_well_defined(&self) -> bool {
        self.well_defined
    }

    fn check_well_defined(&self) -> bool {
        use crate::exactlin::GroupElement;
        // Relations of N1 must pair to zero against every N2 generator.
        for k in 0..self.n1.relations.cols {
            for j in 0..self.n2.ngens {
                let mut acc = vec![BigInt::zero(); self.m.ngens];
                for i in 0..self.n1.ngens {
                    let r = &self.n1.relations[(i, k)];
                    if r.is_zero() {
                        continue;
                    }
                    for (a, s) in acc.iter_mut().zip(&self.structure[i][j]) {
                        *a += r * s;
                    }
                }
                if !self.m.is_zero(&GroupElement::new(acc)).unwrap() {
                    return false;
                }
            }
        }
        for k in 0..self.n2.relations.cols {
            for i in 0..self.n1.ngens {
                let mut acc = vec![BigInt::zero(); self.m.ngens];
                for j in 0..self.n2.ngens {
                    let r = &self.n2.relations[(j, k)];
                    if r.is_zero() {
                        continue;
                    }
                    for (a, s) in acc.iter_mut().zip(&self.structure[i][j]) {
                        *a += r * s;
                    }
                }
                if !self.m.is_zero(&GroupElement::new(acc)).unwrap() {
                    return false;
                }
            }
        }
        true
    }

    /// `f(a, b)` in `M`-coordinates for coordinate vectors `a`, `b`.
    pub fn value(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut acc = vec![BigInt::zero(); self.m.ngens];
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

    fn coord_dim(&self) -> usize {
        self.n1.ngens * self.n1.ngens + self.n2.ngens * self.n2.ngens
    }

    fn idx1(&self, i: usize, j: usize) -> usize {
        i * self.n1.ngens + j
    }

    fn idx2(&self, i: usize, j: usize) -> usize {
        self.n1.ngens * self.n1.ngens + i * self.n2.ngens + j
    }
}

/// Maximal ring of scalars with its ℤ-algebra presentation data.
#[derive(Clone, Debug)]
pub struct ScalarRing {
    pub generators: Vec<EndoPair>,
    pub unit_combination: Vec<BigInt>,
    pub relation_rows: Vec<Vec<BigInt>>,
    pub structure: Vec<Vec<Vec<BigInt>>>,
    pub presentation: IdealZ,
    pub n1: FpAbelianGroup,
    pub n2: FpAbelianGroup,
}

/// ℤ-basis of the endomorphism pairs of `N₁ × N₂` in flat coordinates:
/// block-diagonal tuples whose blocks respect the respective relation
/// lattices.
pub fn endo_solution_space(n1: &FpAbelianGroup, n2: &FpAbelianGroup) -> Vec<Vec<BigInt>> {
    let d = n1.ngens * n1.ngens + n2.ngens * n2.ngens;
    let mut eqs = Vec::new();
    // For each relation Σ_i r_i a_i = 0 of N1: Σ_{i,j} x_{ij} r_i a_j = 0.
    for k in 0..n1.relations.cols {
        let mut c = IntMatrix::zero(n1.ngens, d);
        for i in 0..n1.ngens {
            let r = n1.relations[(i, k)].clone();
            if r.is_zero() {
                continue;
            }
            for j in 0..n1.ngens {
                c[(j, i * n1.ngens + j)] = r.clone();
            }
        }
        eqs.push(GroupEquation::homogeneous(n1, c));
    }
    let off = n1.ngens * n1.ngens;
    for k in 0..n2.relations.cols {
        let mut c = IntMatrix::zero(n2.ngens, d);
        for i in 0..n2.ngens {
            let r = n2.relations[(i, k)].clone();
            if r.is_zero() {
                continue;
            }
            for j in 0..n2.ngens {
                c[(j, off + i * n2.ngens + j)] = r.clone();
            }
        }
        eqs.push(GroupEquation::homogeneous(n2, c));
    }
    GroupSolver::solve_homogeneous(d, &eqs)
}

/// Hermite basis (flat coordinates) of the maximal ring of scalars of a
/// full, non-degenerate bilinear map. Errors on degenerate or non-full
/// inputs.
pub fn scalars_lattice(f: &BilinearMap) -> Result<Vec<Vec<BigInt>>, ScalarsError> {
    let d = f.coord_dim();
    let (n1g, n2g, mg) = (f.n1.ngens, f.n2.ngens, f.m.ngens);

    // Fullness: the values of f together with M's relations generate Z^m.
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for row in &f.structure {
        for v in row {
            gens.push(v.clone());
        }
    }
    gens.extend(f.m.relation_lattice());
    let full = hermite_basis(gens, mg);
    let identity: Vec<Vec<BigInt>> = (0..mg).map(|i| IntMatrix::identity(mg).row_vec(i)).collect();
    if full != identity {
        return Err(ScalarsError::NotFull);
    }

    // Degeneracy detector: elements pairing to zero against everything
    // must lie in the relation lattice.
    {
        let mut eqs = Vec::new();
        for j in 0..n2g {
            let mut c = IntMatrix::zero(mg, n1g);
            for i in 0..n1g {
                for k in 0..mg {
                    c[(k, i)] = f.structure[i][j][k].clone();
                }
            }
            eqs.push(GroupEquation::homogeneous(&f.m, c));
        }
        let left_kernel = GroupSolver::solve_homogeneous(n1g, &eqs);
        if !lattice_contains(&f.n1.relation_lattice(), &left_kernel) {
            return Err(ScalarsError::Degenerate);
        }
        let mut eqs = Vec::new();
        for i in 0..n1g {
            let mut c = IntMatrix::zero(mg, n2g);
            for j in 0..n2g {
                for k in 0..mg {
                    c[(k, j)] = f.structure[i][j][k].clone();
                }
            }
            eqs.push(GroupEquation::homogeneous(&f.m, c));
        }
        let right_kernel = GroupSolver::solve_homogeneous(n2g, &eqs);
        if !lattice_contains(&f.n2.relation_lattice(), &right_kernel) {
            return Err(ScalarsError::Degenerate);
        }
    }

    // Step 1: endomorphism pairs.
    let endo = endo_solution_space(&f.n1, &f.n2);

    // Step 2-3: symmetry, f(φ₁(a_k), a_ℓ) = f(a_k, φ₂(a_ℓ)).
    let mut sym_eqs = Vec::new();
    for k in 0..n1g {
        for l in 0..n2g {
            let mut c = IntMatrix::zero(mg, d);
            let mut nonzero = false;
            for i in 0..n1g {
                for t in 0..mg {
                    let v = f.structure[i][l][t].clone();
                    if !v.is_zero() {
                        nonzero = true;
                    }
                    c[(t, f.idx1(k, i))] = v;
                }
            }
            for j in 0..n2g {
                for t in 0..mg {
                    let v = -&f.structure[k][j][t];
                    if !v.is_zero() {
                        nonzero = true;
                    }
                    c[(t, f.idx2(l, j))] = v;
                }
            }
            if nonzero {
                sym_eqs.push(GroupEquation::homogeneous(&f.m, c));
            }
        }
    }
    let sym = GroupSolver::solve_homogeneous_in(endo, d, &sym_eqs);

    // Step 4: centrality against the symmetric generators.
    let mut cen_eqs = Vec::new();
    for delta in &sym {
        let pair = EndoPair::from_coords(n1g, n2g, delta);
        for k in 0..n1g {
            for l in 0..n2g {
                let mut c = IntMatrix::zero(mg, d);
                let mut nonzero = false;
                // x_{ki} · Σ_j δ2[l][j] f(a_i, a_j)
                for i in 0..n1g {
                    for t in 0..mg {
                        let mut acc = BigInt::zero();
                        for j in 0..n2g {
                            let dl = &pair.right[(l, j)];
                            if !dl.is_zero() {
                                acc += dl * &f.structure[i][j][t];
                            }
                        }
                        if !acc.is_zero() {
                            nonzero = true;
                        }
                        c[(t, f.idx1(k, i))] = acc;
                    }
                }
                // − x_{lj} · Σ_i δ1[k][i] f(a_i, a_j)
                for j in 0..n2g {
                    for t in 0..mg {
                        let mut acc = BigInt::zero();
                        for i in 0..n1g {
                            let dk = &pair.left[(k, i)];
                            if !dk.is_zero() {
                                acc += dk * &f.structure[i][j][t];
                            }
                        }
                        if !acc.is_zero() {
                            nonzero = true;
                        }
                        c[(t, f.idx2(l, j))] = -acc;
                    }
                }
                if nonzero {
                    cen_eqs.push(GroupEquation::homogeneous(&f.m, c));
                }
            }
        }
    }
    let cen = GroupSolver::solve_homogeneous_in(sym.clone(), d, &cen_eqs);

    // Step 5: kernel of the pairing on generator combinations.
    let zdim = n1g * n2g;
    let mut c = IntMatrix::zero(mg, zdim);
    for i in 0..n1g {
        for j in 0..n2g {
            for t in 0..mg {
                c[(t, i * n2g + j)] = f.structure[i][j][t].clone();
            }
        }
    }
    let zs = GroupSolver::solve_homogeneous(zdim, &[GroupEquation::homogeneous(&f.m, c)]);

    // Step 6: the action extends to M: Σ_{i,ℓ} x_{iℓ} z_{ij} f(a_ℓ, a_j) = 0.
    let mut act_eqs = Vec::new();
    for z in &zs {
        let mut c = IntMatrix::zero(mg, d);
        let mut nonzero = false;
        for i in 0..n1g {
            for l in 0..n1g {
                for t in 0..mg {
                    let mut acc = BigInt::zero();
                    for j in 0..n2g {
                        let zv = &z[i * n2g + j];
                        if !zv.is_zero() {
                            acc += zv * &f.structure[l][j][t];
                        }
                    }
                    if !acc.is_zero() {
                        nonzero = true;
                    }
                    c[(t, f.idx1(i, l))] = acc;
                }
            }
        }
        if nonzero {
            act_eqs.push(GroupEquation::homogeneous(&f.m, c));
        }
    }
    // Step 7: intersect (the right block is unconstrained by step 6).
    Ok(GroupSolver::solve_homogeneous_in(cen, d, &act_eqs))
}

/// ℤ-module generators of the maximal ring of scalars, as endomorphism
/// pairs. The coordinate lattice contains a sublattice of tuples that
/// represent the zero endomorphism (rows inside the relation lattices);
/// [`minimal_generators`] removes it, so the returned list is short.
pub fn max_scalars_bilinear(f: &BilinearMap) -> Result<Vec<EndoPair>, ScalarsError> {
    let basis = scalars_lattice(f)?;
    Ok(minimal_generators(basis, &f.n1, &f.n2)
        .iter()
        .map(|v| EndoPair::from_coords(f.n1.ngens, f.n2.ngens, v))
        .collect())
}

/// Reduce a coordinate-lattice basis of endomorphism pairs to a small
/// generating set modulo the zero-endomorphism sublattice: canonicalize
/// every matrix row, drop vanished tuples, and discard tuples generated by
/// the remaining ones together with the zero sublattice.
pub fn minimal_generators(
    basis: Vec<Vec<BigInt>>,
    n1: &FpAbelianGroup,
    n2: &FpAbelianGroup,
) -> Vec<Vec<BigInt>> {
    use crate::exactlin::GroupElement;
    let (g1, g2) = (n1.ngens, n2.ngens);
    let d = g1 * g1 + g2 * g2;
    // Canonicalize rows modulo the respective relation lattices.
    let canon = |v: &Vec<BigInt>| -> Vec<BigInt> {
        let mut out = Vec::with_capacity(d);
        for i in 0..g1 {
            let row: Vec<BigInt> = v[i * g1..(i + 1) * g1].to_vec();
            out.extend(
                n1.element_normal_form(&GroupElement::new(row))
                    .expect("row length matches")
                    .coords,
            );
        }
        for i in 0..g2 {
            let row: Vec<BigInt> = v[g1 * g1 + i * g2..g1 * g1 + (i + 1) * g2].to_vec();
            out.extend(
                n2.element_normal_form(&GroupElement::new(row))
                    .expect("row length matches")
                    .coords,
            );
        }
        out
    };
    let mut candidates: Vec<Vec<BigInt>> = basis
        .iter()
        .map(canon)
        .filter(|v| v.iter().any(|c| !c.is_zero()))
        .collect();
    candidates.sort();
    candidates.dedup();
    // Zero-endomorphism sublattice: every matrix row in the relation
    // lattice of its block.
    let mut zero_gens: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..g1 {
        for rel in n1.relation_lattice() {
            let mut v = vec![BigInt::zero(); d];
            v[i * g1..(i + 1) * g1].clone_from_slice(&rel);
            zero_gens.push(v);
        }
    }
    for i in 0..g2 {
        for rel in n2.relation_lattice() {
            let mut v = vec![BigInt::zero(); d];
            v[g1 * g1 + i * g2..g1 * g1 + (i + 1) * g2].clone_from_slice(&rel);
            zero_gens.push(v);
        }
    }
    // Forward greedy, preferring tuples with earlier pivots and smaller
    // entries: a candidate already generated by the kept ones (modulo the
    // zero sublattice) is redundant. The kept set always generates every
    // processed candidate, hence the whole lattice.
    candidates.sort_by_key(|v| {
        (
            v.iter().position(|c| !c.is_zero()).unwrap_or(d),
            v.clone(),
        )
    });
    let mut kept: Vec<Vec<BigInt>> = Vec::new();
    let mut span = hermite_basis(zero_gens, d);
    for cand in candidates {
        if !crate::exactlin::lattice_member(&span, &cand) {
            span.push(cand.clone());
            span = hermite_basis(span, d);
            kept.push(cand);
        }
    }
    // Interreduce: clear each generator's coordinate at the pivots of the
    // others, so overlapping generators become orthogonal projections.
    for _ in 0..4 {
        let mut changed = false;
        for i in 0..kept.len() {
            for j in 0..kept.len() {
                if i == j {
                    continue;
                }
                let Some(p) = kept[j].iter().position(|c| !c.is_zero()) else {
                    continue;
                };
                if kept[j][p] <= BigInt::zero() {
                    continue;
                }
                let q = num_integer::Integer::div_floor(&kept[i][p], &kept[j][p]);
                if q.is_zero() {
                    continue;
                }
                let reduced: Vec<BigInt> = kept[i]
                    .iter()
                    .zip(&kept[j])
                    .map(|(a, b)| a - &q * b)
                    .collect();
                kept[i] = canon(&reduced);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    kept.retain(|v| v.iter().any(|c| !c.is_zero()));
    kept.sort_by_key(|v| {
        (
            v.iter().position(|c| !c.is_zero()).unwrap_or(d),
            v.clone(),
        )
    });
    kept
}

/// ℤ-algebra presentation of the ring generated by `gens` (the output of
/// [`max_scalars_bilinear`] or the algebra pipeline): linear relations,
/// the identity combination, and quadratic rewriting rules.
pub fn scalar_presentation(
    f: &BilinearMap,
    gens: &[EndoPair],
) -> Result<ScalarRing, ScalarsError> {
    let r = gens.len();
    let (n1g, n2g) = (f.n1.ngens, f.n2.ngens);
    let ord = TermOrder::DegRevLex;

    // Coefficient blocks shared by all three solves: column i of the block
    // for generator index j is the image φ_i(a_j).
    let eqs_for = |targets: Option<&[Vec<BigInt>]>| -> Vec<GroupEquation> {
        let mut eqs = Vec::new();
        for j in 0..n1g {
            let mut c = IntMatrix::zero(n1g, r);
            for (i, g) in gens.iter().enumerate() {
                for t in 0..n1g {
                    c[(t, i)] = g.left[(j, t)].clone();
                }
            }
            match targets {
                None => eqs.push(GroupEquation::homogeneous(&f.n1, c)),
                Some(ts) => eqs.push(GroupEquation::with_target(&f.n1, c, ts[j].clone())),
            }
        }
        for j in 0..n2g {
            let mut c = IntMatrix::zero(n2g, r);
            for (i, g) in gens.iter().enumerate() {
                for t in 0..n2g {
                    c[(t, i)] = g.right[(j, t)].clone();
                }
            }
            match targets {
                None => eqs.push(GroupEquation::homogeneous(&f.n2, c)),
                Some(ts) => {
                    eqs.push(GroupEquation::with_target(&f.n2, c, ts[n1g + j].clone()))
                }
            }
        }
        eqs
    };

    // Linear relations between the generators.
    let relation_rows = GroupSolver::solve_homogeneous(r, &eqs_for(None));

    // Identity combination Σ v_i φ_i = id.
    let unit_targets: Vec<Vec<BigInt>> = (0..n1g)
        .map(|j| unit_vec(n1g, j))
        .chain((0..n2g).map(|j| unit_vec(n2g, j)))
        .collect();
    let (unit_combination, _) = GroupSolver::solve_affine(r, &eqs_for(Some(&unit_targets)))
        .ok_or(ScalarsError::UnitUnsolvable)?;

    // Structure constants: φ_i ∘ φ_j = Σ_k t_{ijk} φ_k.
    let mut structure = vec![vec![Vec::new(); r]; r];
    for i in 0..r {
        for j in i..r {
            let prod = gens[i].compose(&gens[j]);
            let targets: Vec<Vec<BigInt>> = (0..n1g)
                .map(|k| prod.left.row_vec(k))
                .chain((0..n2g).map(|k| prod.right.row_vec(k)))
                .collect();
            let (t, _) = GroupSolver::solve_affine(r, &eqs_for(Some(&targets)))
                .ok_or(ScalarsError::StructureUnsolvable)?;
            structure[i][j] = t.clone();
            structure[j][i] = t;
        }
    }

    // Assemble the presentation ideal in y_1..y_r.
    let mut pgens: Vec<PolyZ> = Vec::new();
    let mut unit_poly = Poly::constant(r, BigInt::from(-1));
    for (k, v) in unit_combination.iter().enumerate() {
        unit_poly = unit_poly.add(&Poly::monomial(r, Term::var(k, r), v.clone()), ord);
    }
    pgens.push(unit_poly);
    for row in &relation_rows {
        let mut p = Poly::zero(r);
        for (k, v) in row.iter().enumerate() {
            p = p.add(&Poly::monomial(r, Term::var(k, r), v.clone()), ord);
        }
        if !p.is_zero() {
            pgens.push(p);
        }
    }
    for i in 0..r {
        for j in i..r {
            let mut e = vec![0u32; r];
            e[i] += 1;
            e[j] += 1;
            let mut p = Poly::monomial(r, Term(e), BigInt::from(1));
            for (k, v) in structure[i][j].iter().enumerate() {
                p = p.add(&Poly::monomial(r, Term::var(k, r), -v), ord);
            }
            pgens.push(p);
        }
    }
    let presentation = IdealZ::new(r, ord, pgens);

    Ok(ScalarRing {
        generators: gens.to_vec(),
        unit_combination,
        relation_rows,
        structure,
        presentation,
        n1: f.n1.clone(),
        n2: f.n2.clone(),
    })
}

fn unit_vec(n: usize, j: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[j] = BigInt::from(1);
    v
}
