//! Primary decomposition of zero-dimensional ideals over ℚ and 𝔽_p.
//!
//! The strategy is variable-wise minimal-polynomial splitting: factor the
//! minimal polynomial of each variable in the quotient algebra and split
//! the ideal along coprime factor powers. When no variable splits, the
//! radical is obtained by adjoining the squarefree parts (Seidenberg), and
//! a further splitting element is sought — over 𝔽_p deterministically in
//! the Frobenius-fixed subalgebra, over ℚ from seeded random linear forms.
//! Leaves are certified primary with a maximal radical.

use super::PrimdecError;
use crate::factorize::{factor_mod_p, factor_over_q, FpPoly};
use crate::polyring::{
    Coeff, FieldCoeff, Fp, IdealF, IdealFp, IdealQ, Poly, Term, TermOrder,
};
use crate::rng::SplitMix64;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::HashMap;

/// Coordinates of `NF(f)` with respect to the quotient-basis terms.
fn nf_vector<C: FieldCoeff>(
    ideal: &IdealF<C>,
    basis_index: &HashMap<Term, usize>,
    f: &Poly<C>,
) -> Vec<C> {
    let nf = ideal.normal_form(f);
    let mut v = vec![C::zero(); basis_index.len()];
    for (t, c) in &nf.terms {
        let idx = *basis_index
            .get(t)
            .expect("normal form term outside quotient basis");
        v[idx] = c.clone();
    }
    v
}

/// Monic minimal polynomial (ascending coefficients) of `g` in the finite
/// quotient algebra. `one` supplies the field context (the prime-field
/// neutral elements do not know their modulus on their own).
fn minimal_polynomial<C: FieldCoeff>(
    ideal: &IdealF<C>,
    basis: &[Term],
    g: &Poly<C>,
    one: &C,
) -> Vec<C> {
    let index: HashMap<Term, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let ord = ideal.order;
    // Echelon rows: (reduced vector, pivot, combination over powers of g).
    let mut rows: Vec<(Vec<C>, usize, Vec<C>)> = Vec::new();
    let mut power = Poly::constant(ideal.nvars, one.clone());
    for k in 0..=basis.len() {
        let mut v = nf_vector(ideal, &index, &power);
        let mut combo = vec![C::zero(); k + 1];
        combo[k] = one.clone();
        for (rv, piv, rc) in &rows {
            if v[*piv].is_zero() {
                continue;
            }
            let factor = v[*piv].clone();
            for (a, b) in v.iter_mut().zip(rv) {
                *a = a.sub(&factor.mul(b));
            }
            for (j, b) in rc.iter().enumerate() {
                combo[j] = combo[j].sub(&factor.mul(b));
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => return combo,
            Some(p) => {
                let inv = v[p].inv();
                for a in v.iter_mut() {
                    *a = a.mul(&inv);
                }
                for a in combo.iter_mut() {
                    *a = a.mul(&inv);
                }
                rows.push((v, p, combo));
            }
        }
        power = ideal.normal_form(&power.mul(g, ord));
    }
    unreachable!("dependency must appear within dim+1 powers")
}

/// `f(g)` for a univariate `f` given by ascending coefficients.
fn compose<C: FieldCoeff>(coeffs: &[C], g: &Poly<C>, nvars: usize, ord: TermOrder) -> Poly<C> {
    let mut acc = Poly::zero(nvars);
    for c in coeffs.iter().rev() {
        acc = acc.mul(g, ord).add(&Poly::constant(nvars, c.clone()), ord);
    }
    acc
}

/// Univariate factorization of a minimal polynomial, reported as
/// (ascending coefficient vectors, multiplicity).
trait ZeroDimField: FieldCoeff {
    /// A `1` that carries the field context of the ideal.
    fn one_in(ideal: &IdealF<Self>) -> Self;
    fn factor_minpoly(coeffs: &[Self], rng: &mut SplitMix64) -> Vec<(Vec<Self>, u32)>;
    /// Splitting element of the radical quotient algebra, or `None` when
    /// the algebra is certified to be a field (so the ideal is primary).
    fn radical_split_element(
        radical: &IdealF<Self>,
        basis: &[Term],
        rng: &mut SplitMix64,
    ) -> Option<Poly<Self>>;
}

impl ZeroDimField for BigRational {
    fn one_in(_ideal: &IdealQ) -> Self {
        Coeff::one()
    }
    fn factor_minpoly(coeffs: &[Self], rng: &mut SplitMix64) -> Vec<(Vec<Self>, u32)> {
        let fac = factor_over_q(coeffs, rng.next_u64());
        fac.factors
            .into_iter()
            .map(|(f, m)| {
                (
                    f.iter()
                        .map(|c| BigRational::from_integer(c.clone()))
                        .collect(),
                    m,
                )
            })
            .collect()
    }

    fn radical_split_element(
        radical: &IdealQ,
        basis: &[Term],
        rng: &mut SplitMix64,
    ) -> Option<Poly<BigRational>> {
        let dim = basis.len();
        let n = radical.nvars;
        // A generic linear form is a primitive element of the étale
        // quotient; retry with growing coefficients until the minimal
        // polynomial either splits or certifies a field.
        for attempt in 0..64u64 {
            let span = 2 + attempt;
            let mut terms = Vec::new();
            for v in 0..n {
                let c = BigInt::from(rng.signed(span));
                if !num_traits::Zero::is_zero(&c) {
                    terms.push((
                        Term::var(v, n),
                        BigRational::from_integer(c),
                    ));
                }
            }
            let lambda = Poly::from_terms(n, terms, radical.order);
            if lambda.is_zero() {
                continue;
            }
            let m = minimal_polynomial(radical, basis, &lambda, &Coeff::one());
            let fac = factor_over_q(&m, rng.next_u64());
            if fac.factors.len() >= 2 {
                return Some(lambda);
            }
            if fac.factors.len() == 1 && fac.factors[0].0.len() - 1 == dim {
                // Irreducible of full degree: the quotient is a field.
                return None;
            }
        }
        panic!("no separating linear form found; quotient dimension {dim}");
    }
}

impl ZeroDimField for Fp {
    fn one_in(ideal: &IdealFp) -> Self {
        let p = ideal
            .gens
            .iter()
            .flat_map(|g| g.terms.iter().map(|(_, c)| c.p))
            .filter(|&p| p > 0)
            .max()
            .expect("prime-field ideal without modulus context");
        Fp::new(1, p)
    }

    fn factor_minpoly(coeffs: &[Self], rng: &mut SplitMix64) -> Vec<(Vec<Self>, u32)> {
        let p = coeffs
            .iter()
            .map(|c| c.p)
            .filter(|&p| p > 0)
            .max()
            .expect("prime-field minimal polynomial without modulus context");
        let fp = FpPoly::new(p, coeffs.iter().map(|c| c.v).collect());
        let fac = factor_mod_p(&fp, rng.next_u64());
        fac.factors
            .into_iter()
            .map(|(f, m)| (f.c.iter().map(|&v| Fp::new(v, p)).collect(), m))
            .collect()
    }

    fn radical_split_element(
        radical: &IdealFp,
        basis: &[Term],
        _rng: &mut SplitMix64,
    ) -> Option<Poly<Fp>> {
        // Frobenius-fixed subalgebra: kernel of (a ↦ a^p) − id on the
        // quotient. Its dimension is the number of maximal components; any
        // fixed element outside the constants takes two distinct values
        // and its minimal polynomial splits into distinct linear factors.
        let p = radical
            .gens
            .iter()
            .flat_map(|g| g.terms.iter().map(|(_, c)| c.p))
            .max()
            .expect("prime field context");
        let index: HashMap<Term, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        let d = basis.len();
        // Columns of (Frobenius - identity) over the monomial basis.
        let mut cols: Vec<Vec<Fp>> = Vec::with_capacity(d);
        for (j, t) in basis.iter().enumerate() {
            let tp = Term(t.0.iter().map(|&e| e * p as u32).collect());
            let frob = Poly::monomial(radical.nvars, tp, Fp::new(1, p));
            let mut v = nf_vector(radical, &index, &frob);
            v[j] = v[j].sub(&Fp::new(1, p));
            cols.push(v);
        }
        let kernel = fp_kernel(&cols, d, p);
        if kernel.len() <= 1 {
            return None;
        }
        let one_idx = index[&Term::one(radical.nvars)];
        let w = kernel
            .iter()
            .find(|w| {
                w.iter()
                    .enumerate()
                    .any(|(i, c)| i != one_idx && c.v % p != 0)
            })
            .expect("kernel of dimension >= 2 has a non-constant vector");
        let terms: Vec<(Term, Fp)> = basis
            .iter()
            .zip(w)
            .filter(|(_, c)| c.v % p != 0)
            .map(|(t, c)| (t.clone(), *c))
            .collect();
        Some(Poly::from_terms(radical.nvars, terms, radical.order))
    }
}

/// Kernel basis of the column matrix over 𝔽_p (columns of length `d`).
fn fp_kernel(cols: &[Vec<Fp>], d: usize, p: u64) -> Vec<Vec<Fp>> {
    let n = cols.len();
    // Row-reduce the transpose-free way: matrix entries a[r][c] = cols[c][r].
    let mut a: Vec<Vec<Fp>> = (0..d)
        .map(|r| (0..n).map(|c| cols[c][r]).collect())
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut rank = 0usize;
    for c in 0..n {
        let piv = (rank..d).find(|&r| a[r][c].v % p != 0);
        let Some(piv) = piv else { continue };
        a.swap(rank, piv);
        let inv = a[rank][c].inv();
        for x in a[rank].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..d {
            if r != rank && a[r][c].v % p != 0 {
                let f = a[r][c];
                for cc in 0..n {
                    let v = a[rank][cc].mul(&f);
                    a[r][cc] = a[r][cc].sub(&v);
                }
            }
        }
        pivot_of_col[c] = Some(rank);
        rank += 1;
    }
    let mut kernel = Vec::new();
    for free in 0..n {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut w = vec![Fp::new(0, p); n];
        w[free] = Fp::new(1, p);
        for c in 0..n {
            if let Some(r) = pivot_of_col[c] {
                w[c] = a[r][free].neg();
            }
        }
        kernel.push(w);
    }
    kernel
}

/// Complete primary decomposition with radicals of a zero-dimensional
/// ideal over a field. Components are pairwise comaximal; the intersection
/// is the input ideal.
fn decompose<C: ZeroDimField>(
    ideal: IdealF<C>,
    rng: &mut SplitMix64,
) -> Result<Vec<(IdealF<C>, IdealF<C>)>, PrimdecError> {
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    if !ideal.is_zero_dimensional() {
        return Err(PrimdecError::NotZeroDimensional);
    }
    let ord = ideal.order;
    let n = ideal.nvars;
    let one = C::one_in(&ideal);
    // 1. Variable-wise splitting.
    let basis = ideal.quotient_basis().expect("zero-dimensional");
    let mut squarefree_parts: Vec<Poly<C>> = Vec::new();
    for v in 0..n {
        let x = Poly::monomial(n, Term::var(v, n), one.clone());
        let m = minimal_polynomial(&ideal, &basis, &x, &one);
        let factors = C::factor_minpoly(&m, rng);
        if factors.len() >= 2 {
            let mut out = Vec::new();
            for (f, e) in factors {
                let part = compose(&f, &x, n, ord);
                let piece = ideal.with_extra(vec![part.pow(e, ord)]);
                out.extend(decompose(piece, rng)?);
            }
            return Ok(out);
        }
        squarefree_parts.push(compose(&factors[0].0, &x, n, ord));
    }
    // 2. Radical via squarefree parts of the variable minimal polynomials.
    let radical = ideal.with_extra(squarefree_parts);
    let rad_basis = radical.quotient_basis().expect("radical is zero-dimensional");
    if rad_basis.len() == 1 {
        // One-dimensional quotient: the radical is maximal.
        return Ok(vec![(ideal, radical)]);
    }
    match C::radical_split_element(&radical, &rad_basis, rng) {
        None => Ok(vec![(ideal, radical)]),
        Some(b) => {
            let m = minimal_polynomial(&ideal, &basis, &b, &one);
            let factors = C::factor_minpoly(&m, rng);
            debug_assert!(factors.len() >= 2, "split element must split");
            let mut out = Vec::new();
            for (f, e) in factors {
                let part = compose(&f, &b, n, ord);
                let piece = ideal.with_extra(vec![part.pow(e, ord)]);
                out.extend(decompose(piece, rng)?);
            }
            Ok(out)
        }
    }
}

/// Zero-dimensional primary decomposition over ℚ: list of
/// (primary, prime) pairs.
pub fn zerodim_decompose_q(
    ideal: &IdealQ,
    seed: u64,
) -> Result<Vec<(IdealQ, IdealQ)>, PrimdecError> {
    let mut rng = SplitMix64::new(seed ^ 0x51ba_7a5e_11d3_c0a1);
    let mut out = decompose(ideal.clone(), &mut rng)?;
    sort_components_q(&mut out);
    Ok(out)
}

/// Zero-dimensional primary decomposition over 𝔽_p.
pub fn zerodim_decompose_fp(
    ideal: &IdealFp,
    seed: u64,
) -> Result<Vec<(IdealFp, IdealFp)>, PrimdecError> {
    let mut rng = SplitMix64::new(seed ^ 0x51ba_7a5e_11d3_c0a2);
    let mut out = decompose(ideal.clone(), &mut rng)?;
    sort_components_fp(&mut out);
    Ok(out)
}

fn sort_components_q(list: &mut [(IdealQ, IdealQ)]) {
    list.sort_by_key(|(q, _)| component_key_q(q));
}

fn sort_components_fp(list: &mut [(IdealFp, IdealFp)]) {
    list.sort_by_key(|(q, _)| component_key_fp(q));
}

fn component_key_q(i: &IdealQ) -> String {
    let mut parts: Vec<String> = i
        .reduced_gb()
        .iter()
        .map(|g| format!("{:?}", g.terms))
        .collect();
    parts.sort();
    parts.join(";")
}

fn component_key_fp(i: &IdealFp) -> String {
    let mut parts: Vec<String> = i
        .reduced_gb()
        .iter()
        .map(|g| format!("{:?}", g.terms))
        .collect();
    parts.sort();
    parts.join(";")
}

/// Check `ab ∈ Q, a ∉ Q ⟹ bᵏ ∈ Q` on a sample — the randomized primary
/// spot-check used by the test suites.
pub fn primary_spot_check_q(q: &IdealQ, samples: u32, seed: u64) -> bool {
    let mut rng = SplitMix64::new(seed);
    let ord = q.order;
    let n = q.nvars;
    for _ in 0..samples {
        let a = random_poly_q(n, &mut rng, ord);
        let b = random_poly_q(n, &mut rng, ord);
        if q.contains(&a.mul(&b, ord)) && !q.contains(&a) {
            let mut pow = Poly::constant(n, <BigRational as Coeff>::one());
            let mut ok = false;
            for _ in 0..12 {
                pow = pow.mul(&b, ord);
                if q.contains(&pow) {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return false;
            }
        }
    }
    true
}

fn random_poly_q(nvars: usize, rng: &mut SplitMix64, ord: TermOrder) -> Poly<BigRational> {
    let mut terms = Vec::new();
    for _ in 0..(1 + rng.below(3)) {
        let e: Vec<u32> = (0..nvars).map(|_| rng.below(3) as u32).collect();
        let c = rng.signed(4);
        if c != 0 {
            terms.push((Term(e), BigRational::from_integer(BigInt::from(c))));
        }
    }
    Poly::from_terms(nvars, terms, ord)
}
