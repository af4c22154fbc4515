use super::coeff::Fp;
use super::order::TermOrder;
use super::poly::{Poly, PolyFp, PolyQ, PolyZ, Term};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("ideals are not comaximal: 1 is not in their sum")]
    NotComaximal,
    #[error("exact division failed during ideal quotient")]
    DivisionFailure,
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
}

/// Ideal in `ℤ[x₁…xₙ]` with a lazily computed, write-once strong Gröbner
/// basis cache.
#[derive(Debug)]
pub struct IdealZ {
    pub nvars: usize,
    pub order: TermOrder,
    pub gens: Vec<PolyZ>,
    gb: OnceLock<Vec<PolyZ>>,
}

impl Clone for IdealZ {
    fn clone(&self) -> Self {
        IdealZ {
            nvars: self.nvars,
            order: self.order,
            gens: self.gens.clone(),
            gb: self.gb.clone(),
        }
    }
}

impl IdealZ {
    pub fn new(nvars: usize, order: TermOrder, gens: Vec<PolyZ>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars, nvars, "generator variable count mismatch");
        }
        IdealZ { nvars, order, gens, gb: OnceLock::new() }
    }

    pub fn zero(nvars: usize, order: TermOrder) -> Self {
        IdealZ::new(nvars, order, Vec::new())
    }

    pub fn unit(nvars: usize, order: TermOrder) -> Self {
        IdealZ::new(nvars, order, vec![Poly::constant(nvars, BigInt::one())])
    }

    /// Minimal, tail-reduced, sign-normalized strong Gröbner basis
    /// (computed once, then shared).
    pub fn strong_gb(&self) -> &[PolyZ] {
        self.gb
            .get_or_init(|| strong_groebner(&self.gens, self.nvars, self.order))
    }

    pub fn contains(&self, f: &PolyZ) -> bool {
        strong_normal_form(f, self.strong_gb(), self.order).is_zero()
    }

    pub fn contains_ideal(&self, other: &IdealZ) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn eq_ideal(&self, other: &IdealZ) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.strong_gb();
        gb.len() == 1 && gb[0].as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.strong_gb().is_empty()
    }

    /// Normal form with respect to the cached strong basis: a canonical
    /// coset representative.
    pub fn normal_form(&self, f: &PolyZ) -> PolyZ {
        strong_normal_form(f, self.strong_gb(), self.order)
    }

    /// `P/I` is a finitely generated ℤ-module iff for each variable the
    /// basis contains an element whose leading monomial is a monic pure
    /// power of that variable (unit ideals trivially qualify).
    pub fn has_finite_quotient(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        let gb = self.strong_gb();
        (0..self.nvars).all(|v| {
            gb.iter().any(|g| {
                let (t, c) = (g.leading_term(), g.leading_coeff());
                c.is_one() && !t.is_one() && t.pure_power() == Some(v)
            })
        })
    }

    /// Embed coefficients into ℚ.
    pub fn to_q(&self) -> super::fideal::IdealQ {
        let gens: Vec<PolyQ> = self
            .gens
            .iter()
            .map(|g| g.map_coeff(|c| BigRational::from_integer(c.clone()), self.order))
            .collect();
        super::fideal::IdealF::new(self.nvars, self.order, gens)
    }

    /// Reduce coefficients mod a prime `p`.
    pub fn to_fp(&self, p: u64) -> Result<super::fideal::IdealFp, IdealError> {
        if !crate::factorize::is_prime_u64(p) {
            return Err(IdealError::NotPrime(p));
        }
        let gens: Vec<PolyFp> = self
            .gens
            .iter()
            .map(|g| g.map_coeff(|c| Fp::from_bigint(c, p), self.order))
            .collect();
        Ok(super::fideal::IdealF::new(self.nvars, self.order, gens))
    }
}

/// Minimal strong Gröbner basis of the generated ideal: the leading
/// monomial (coefficient included) of every nonzero ideal member is
/// divisible by a basis leading monomial, and no basis leading monomial
/// divides another. Output is tail-reduced, has positive leading
/// coefficients, and is sorted, hence canonical.
pub fn strong_groebner(gens: &[PolyZ], nvars: usize, ord: TermOrder) -> Vec<PolyZ> {
    let mut basis: Vec<PolyZ> = Vec::new();
    for g in gens {
        let r = reduce_exact(g, &basis, ord);
        if !r.is_zero() {
            basis.push(normalize_sign(r));
        }
    }
    // Pair queue holds S-pairs (kind 0) and gcd-pairs (kind 1).
    let mut pairs: Vec<(usize, usize, u8)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            push_pairs(&mut pairs, &basis, j, i);
        }
    }
    while !pairs.is_empty() {
        // Normal selection: smallest lcm term first.
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = basis[a.0].leading_term().lcm(basis[a.1].leading_term());
                let lb = basis[b.0].leading_term().lcm(basis[b.1].leading_term());
                ord.cmp(&la.0, &lb.0).then(a.cmp(b))
            })
            .map(|(k, _)| k)
            .unwrap();
        let (i, j, kind) = pairs.swap_remove(best);
        let candidate = if kind == 0 {
            s_poly(&basis[i], &basis[j], ord)
        } else {
            g_poly(&basis[i], &basis[j], ord)
        };
        let reduced = reduce_exact(&candidate, &basis, ord);
        if !reduced.is_zero() {
            let reduced = normalize_sign(reduced);
            let new_idx = basis.len();
            basis.push(reduced);
            for k in 0..new_idx {
                push_pairs(&mut pairs, &basis, k, new_idx);
            }
        }
    }
    canonicalize(basis, nvars, ord)
}

/// Check the completion criterion directly: every S-polynomial and
/// gcd-polynomial of the given set reduces to zero against the set itself.
/// True exactly when the set is a strong Gröbner basis of the ideal it
/// generates.
pub fn verify_strong_gb(gens: &[PolyZ], ord: TermOrder) -> bool {
    let basis: Vec<PolyZ> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .map(normalize_sign)
        .collect();
    for i in 0..basis.len() {
        for j in 0..i {
            if !reduce_exact(&s_poly(&basis[i], &basis[j], ord), &basis, ord).is_zero() {
                return false;
            }
            if !reduce_exact(&g_poly(&basis[i], &basis[j], ord), &basis, ord).is_zero() {
                return false;
            }
        }
    }
    true
}

fn push_pairs(pairs: &mut Vec<(usize, usize, u8)>, basis: &[PolyZ], i: usize, j: usize) {
    pairs.push((i, j, 0));
    let a = basis[i].leading_coeff();
    let b = basis[j].leading_coeff();
    // When one leading coefficient divides the other, the gcd-polynomial is
    // a monomial multiple of one generator and reduces to zero.
    if !(a % b).is_zero() && !(b % a).is_zero() {
        pairs.push((i, j, 1));
    }
}

fn s_poly(f: &PolyZ, g: &PolyZ, ord: TermOrder) -> PolyZ {
    let (tf, cf) = (f.leading_term(), f.leading_coeff());
    let (tg, cg) = (g.leading_term(), g.leading_coeff());
    let l = tf.lcm(tg);
    let c = cf.lcm(cg);
    let mf = f.mul_monomial(&tf.div(&l), &(&c / cf));
    let mg = g.mul_monomial(&tg.div(&l), &(&c / cg));
    mf.sub(&mg, ord)
}

fn g_poly(f: &PolyZ, g: &PolyZ, ord: TermOrder) -> PolyZ {
    let (tf, cf) = (f.leading_term(), f.leading_coeff());
    let (tg, cg) = (g.leading_term(), g.leading_coeff());
    let l = tf.lcm(tg);
    let e = cf.extended_gcd(cg);
    let mf = f.mul_monomial(&tf.div(&l), &e.x);
    let mg = g.mul_monomial(&tg.div(&l), &e.y);
    mf.add(&mg, ord)
}

/// Reduction using only exact coefficient divisibility (the classical
/// strong-reduction relation used inside the completion loop).
fn reduce_exact(f: &PolyZ, basis: &[PolyZ], ord: TermOrder) -> PolyZ {
    let mut rest = f.clone();
    let mut stuck: Vec<(Term, BigInt)> = Vec::new();
    'outer: while let Some((t, c)) = rest.leading().map(|(t, c)| (t.clone(), c.clone())) {
        for g in basis {
            let (tg, cg) = (g.leading_term(), g.leading_coeff());
            if tg.divides(&t) && (&c % cg).is_zero() {
                let q = &c / cg;
                rest = rest.sub(&g.mul_monomial(&tg.div(&t), &q), ord);
                continue 'outer;
            }
        }
        stuck.push((t.clone(), c.clone()));
        rest = rest.sub(&Poly::monomial(rest.nvars, t, c), ord);
    }
    Poly::from_terms(f.nvars, stuck, ord)
}

/// Canonical normal form modulo a strong Gröbner basis. Each monomial is
/// Euclidean-reduced by the applicable basis element of least positive
/// leading coefficient, leaving remainders in `[0, lc)`; the result is the
/// unique canonical representative of the residue class, and it is zero
/// iff the input lies in the ideal.
pub fn strong_normal_form(f: &PolyZ, basis: &[PolyZ], ord: TermOrder) -> PolyZ {
    // Callers may hand in an unnormalized basis; reduction below assumes
    // positive leading coefficients.
    let owned: Vec<PolyZ>;
    let basis: &[PolyZ] = if basis
        .iter()
        .any(|g| g.is_zero() || g.leading_coeff().is_negative())
    {
        owned = basis
            .iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .map(normalize_sign)
            .collect();
        &owned
    } else {
        basis
    };
    let mut rest = f.clone();
    let mut stuck: Vec<(Term, BigInt)> = Vec::new();
    while let Some((t, c)) = rest.leading().map(|(t, c)| (t.clone(), c.clone())) {
        let reducer = basis
            .iter()
            .filter(|g| g.leading_term().divides(&t))
            .min_by(|a, b| a.leading_coeff().cmp(b.leading_coeff()));
        match reducer {
            Some(g) => {
                let q = c.div_floor(g.leading_coeff());
                if q.is_zero() {
                    stuck.push((t.clone(), c.clone()));
                    rest = rest.sub(&Poly::monomial(rest.nvars, t, c), ord);
                } else {
                    rest = rest.sub(&g.mul_monomial(&g.leading_term().div(&t), &q), ord);
                }
            }
            None => {
                stuck.push((t.clone(), c.clone()));
                rest = rest.sub(&Poly::monomial(rest.nvars, t, c), ord);
            }
        }
    }
    Poly::from_terms(f.nvars, stuck, ord)
}

fn normalize_sign(p: PolyZ) -> PolyZ {
    if !p.is_zero() && p.leading_coeff().is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Minimalize (drop elements whose leading monomial is divisible by
/// another's), tail-reduce, normalize signs and sort.
fn canonicalize(mut basis: Vec<PolyZ>, nvars: usize, ord: TermOrder) -> Vec<PolyZ> {
    let _ = nvars;
    basis.sort_by(|a, b| {
        ord.cmp(&a.leading_term().0, &b.leading_term().0)
            .then_with(|| a.leading_coeff().cmp(b.leading_coeff()))
    });
    let mut kept: Vec<PolyZ> = Vec::new();
    for g in basis {
        let dominated = kept.iter().any(|h| {
            h.leading_term().divides(g.leading_term())
                && (g.leading_coeff() % h.leading_coeff()).is_zero()
        });
        if !dominated {
            kept.push(g);
        }
    }
    let snapshot = kept.clone();
    for (i, g) in kept.iter_mut().enumerate() {
        let others: Vec<PolyZ> = snapshot
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let lead = Poly::monomial(g.nvars, g.leading_term().clone(), g.leading_coeff().clone());
        let tail = g.sub(&lead, ord);
        let reduced_tail = strong_normal_form(&tail, &others, ord);
        *g = lead.add(&reduced_tail, ord);
    }
    kept
}

/// Ideal generated by both generator lists.
pub fn ideal_sum(a: &IdealZ, b: &IdealZ) -> IdealZ {
    assert_eq!(a.nvars, b.nvars);
    let mut gens = a.gens.clone();
    gens.extend(b.gens.iter().cloned());
    IdealZ::new(a.nvars, a.order, gens)
}

/// Ideal generated by all pairwise products.
pub fn ideal_product(a: &IdealZ, b: &IdealZ) -> IdealZ {
    assert_eq!(a.nvars, b.nvars);
    let mut gens = Vec::new();
    for f in &a.gens {
        for g in &b.gens {
            gens.push(f.mul(g, a.order));
        }
    }
    IdealZ::new(a.nvars, a.order, gens)
}

pub fn ideal_power(a: &IdealZ, k: u32) -> IdealZ {
    let mut acc = IdealZ::unit(a.nvars, a.order);
    for _ in 0..k {
        acc = ideal_product(&acc, a);
    }
    acc
}

/// `I ∩ J` via elimination of an auxiliary variable `t` from
/// `t·I + (1−t)·J`.
pub fn ideal_intersect(a: &IdealZ, b: &IdealZ) -> IdealZ {
    assert_eq!(a.nvars, b.nvars, "variable set mismatch");
    let n = a.nvars;
    let elim = TermOrder::Block(1);
    let t = Poly::var(0, n + 1);
    let one_minus_t = Poly::constant(n + 1, BigInt::one()).sub(&t, elim);
    let mut gens = Vec::new();
    for f in &a.gens {
        gens.push(f.prepend_vars(1).resort(elim).mul(&t, elim));
    }
    for g in &b.gens {
        gens.push(g.prepend_vars(1).resort(elim).mul(&one_minus_t, elim));
    }
    let gb = strong_groebner(&gens, n + 1, elim);
    let kept: Vec<PolyZ> = gb
        .into_iter()
        .filter(|p| p.leading_term().0[0] == 0)
        .map(|p| p.drop_vars(1, a.order))
        .collect();
    IdealZ::new(n, a.order, kept)
}

/// Exact division `f / g`, or `None` when `g` does not divide `f`.
fn exact_div(f: &PolyZ, g: &PolyZ, ord: TermOrder) -> Option<PolyZ> {
    assert!(!g.is_zero());
    let mut rest = f.clone();
    let mut quo: Vec<(Term, BigInt)> = Vec::new();
    while let Some((t, c)) = rest.leading().map(|(t, c)| (t.clone(), c.clone())) {
        let (tg, cg) = (g.leading_term(), g.leading_coeff());
        if !tg.divides(&t) || !(&c % cg).is_zero() {
            return None;
        }
        let qt = tg.div(&t);
        let qc = &c / cg;
        rest = rest.sub(&g.mul_monomial(&qt, &qc), ord);
        quo.push((qt, qc));
    }
    Some(Poly::from_terms(f.nvars, quo, ord))
}

/// `I : J = {f : f·J ⊆ I}`, computed generator-wise via intersection and
/// exact division.
pub fn ideal_quotient(a: &IdealZ, b: &IdealZ) -> Result<IdealZ, IdealError> {
    assert_eq!(a.nvars, b.nvars);
    let nonzero: Vec<&PolyZ> = b.gens.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(IdealZ::unit(a.nvars, a.order));
    }
    let mut acc: Option<IdealZ> = None;
    for g in nonzero {
        let single = IdealZ::new(a.nvars, a.order, vec![(*g).clone()]);
        let inter = ideal_intersect(a, &single);
        let divided: Result<Vec<PolyZ>, IdealError> = inter
            .gens
            .iter()
            .map(|h| exact_div(h, g, a.order).ok_or(IdealError::DivisionFailure))
            .collect();
        let part = IdealZ::new(a.nvars, a.order, divided?);
        acc = Some(match acc {
            None => part,
            Some(cur) => ideal_intersect(&cur, &part),
        });
    }
    Ok(acc.unwrap())
}

/// `I : J^∞` via iterated quotients until stabilization.
pub fn saturate(a: &IdealZ, b: &IdealZ) -> Result<IdealZ, IdealError> {
    let mut cur = a.clone();
    loop {
        let next = ideal_quotient(&cur, b)?;
        if next.eq_ideal(&cur) {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Nonnegative generator of `I ∩ ℤ` (0 when trivial): the unique constant
/// element of the minimal strong basis, if any.
pub fn elim_constant(a: &IdealZ) -> BigInt {
    for g in a.strong_gb() {
        if let Some(c) = g.as_constant() {
            return c.abs();
        }
    }
    BigInt::zero()
}

/// For comaximal `I`, `J`, produce `(p, q)` with `p ∈ I`, `q ∈ J` and
/// `p + q = 1`, by a strong Gröbner run over the concatenated generators
/// with cofactor tracking.
pub fn one_representation(a: &IdealZ, b: &IdealZ) -> Result<(PolyZ, PolyZ), IdealError> {
    assert_eq!(a.nvars, b.nvars);
    let ord = a.order;
    let n = a.nvars;
    let mut inputs: Vec<PolyZ> = Vec::new();
    inputs.extend(a.gens.iter().cloned());
    inputs.extend(b.gens.iter().cloned());
    let split = a.gens.len();
    let tracked = tracked_groebner(&inputs, n, ord);
    let hit = tracked.iter().find_map(|(g, rep)| {
        g.as_constant().and_then(|c| {
            if c.abs().is_one() {
                Some((c, rep.clone()))
            } else {
                None
            }
        })
    });
    let Some((c, mut rep)) = hit else {
        return Err(IdealError::NotComaximal);
    };
    if c.is_negative() {
        for r in rep.iter_mut() {
            *r = r.neg();
        }
    }
    let mut p = Poly::zero(n);
    for (k, r) in rep.iter().enumerate().take(split) {
        p = p.add(&r.mul(&inputs[k], ord), ord);
    }
    let q = Poly::constant(n, BigInt::one()).sub(&p, ord);
    Ok((p, q))
}

type TrackedPoly = (PolyZ, Vec<PolyZ>);

/// Buchberger completion carrying, for every basis element, its cofactor
/// representation in terms of the input generators.
fn tracked_groebner(gens: &[PolyZ], nvars: usize, ord: TermOrder) -> Vec<TrackedPoly> {
    let unit_rep = |k: usize| -> Vec<PolyZ> {
        (0..gens.len())
            .map(|i| {
                if i == k {
                    Poly::constant(nvars, BigInt::one())
                } else {
                    Poly::zero(nvars)
                }
            })
            .collect()
    };
    let mut basis: Vec<TrackedPoly> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let (r, rep) = tracked_reduce(g.clone(), unit_rep(k), &basis, ord);
        if !r.is_zero() {
            basis.push(tracked_normalize(r, rep));
        }
    }
    let mut pairs: Vec<(usize, usize, u8)> = Vec::new();
    let polys = |basis: &[TrackedPoly]| basis.iter().map(|(p, _)| p.clone()).collect::<Vec<_>>();
    for i in 0..basis.len() {
        for j in 0..i {
            push_pairs(&mut pairs, &polys(&basis), j, i);
        }
    }
    while let Some(pos) = pick_pair(&pairs, &basis, ord) {
        let (i, j, kind) = pairs.swap_remove(pos);
        let (f, rf) = &basis[i];
        let (g, rg) = &basis[j];
        let (tf, cf) = (f.leading_term().clone(), f.leading_coeff().clone());
        let (tg, cg) = (g.leading_term().clone(), g.leading_coeff().clone());
        let l = tf.lcm(&tg);
        let (cand, rep) = if kind == 0 {
            let c = cf.lcm(&cg);
            let (mt_f, mc_f) = (tf.div(&l), &c / &cf);
            let (mt_g, mc_g) = (tg.div(&l), -(&c / &cg));
            combine_tracked(f, rf, g, rg, (&mt_f, &mc_f), (&mt_g, &mc_g), ord)
        } else {
            let e = cf.extended_gcd(&cg);
            let (mt_f, mc_f) = (tf.div(&l), e.x);
            let (mt_g, mc_g) = (tg.div(&l), e.y);
            combine_tracked(f, rf, g, rg, (&mt_f, &mc_f), (&mt_g, &mc_g), ord)
        };
        let (r, rep) = tracked_reduce(cand, rep, &basis, ord);
        if !r.is_zero() {
            basis.push(tracked_normalize(r, rep));
            let ps = polys(&basis);
            let new_idx = ps.len() - 1;
            for k in 0..new_idx {
                push_pairs(&mut pairs, &ps, k, new_idx);
            }
        }
    }
    basis
}

fn pick_pair(pairs: &[(usize, usize, u8)], basis: &[TrackedPoly], ord: TermOrder) -> Option<usize> {
    pairs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            let la = basis[a.0].0.leading_term().lcm(basis[a.1].0.leading_term());
            let lb = basis[b.0].0.leading_term().lcm(basis[b.1].0.leading_term());
            ord.cmp(&la.0, &lb.0).then(a.cmp(b))
        })
        .map(|(k, _)| k)
}

#[allow(clippy::too_many_arguments)]
fn combine_tracked(
    f: &PolyZ,
    rf: &[PolyZ],
    g: &PolyZ,
    rg: &[PolyZ],
    (mt_f, mc_f): (&Term, &BigInt),
    (mt_g, mc_g): (&Term, &BigInt),
    ord: TermOrder,
) -> (PolyZ, Vec<PolyZ>) {
    let poly = f
        .mul_monomial(mt_f, mc_f)
        .add(&g.mul_monomial(mt_g, mc_g), ord);
    let rep = rf
        .iter()
        .zip(rg)
        .map(|(a, b)| {
            a.mul_monomial(mt_f, mc_f)
                .add(&b.mul_monomial(mt_g, mc_g), ord)
        })
        .collect();
    (poly, rep)
}

fn tracked_reduce(
    mut f: PolyZ,
    mut rep: Vec<PolyZ>,
    basis: &[TrackedPoly],
    ord: TermOrder,
) -> (PolyZ, Vec<PolyZ>) {
    let nvars = f.nvars;
    let mut stuck: Vec<(Term, BigInt)> = Vec::new();
    'outer: while let Some((t, c)) = f.leading().map(|(t, c)| (t.clone(), c.clone())) {
        for (g, rg) in basis {
            let (tg, cg) = (g.leading_term(), g.leading_coeff());
            if tg.divides(&t) && (&c % cg).is_zero() {
                let qt = tg.div(&t);
                let qc = &c / cg;
                f = f.sub(&g.mul_monomial(&qt, &qc), ord);
                for (r, rr) in rep.iter_mut().zip(rg) {
                    *r = r.sub(&rr.mul_monomial(&qt, &qc), ord);
                }
                continue 'outer;
            }
        }
        stuck.push((t.clone(), c.clone()));
        f = f.sub(&Poly::monomial(nvars, t, c), ord);
    }
    // Re-attach the stuck monomials: the representation already accounts
    // for the whole element, so only the polynomial part changes.
    (Poly::from_terms(nvars, stuck, ord), rep)
}

fn tracked_normalize(p: PolyZ, mut rep: Vec<PolyZ>) -> TrackedPoly {
    if p.leading_coeff().is_negative() {
        for r in rep.iter_mut() {
            *r = r.neg();
        }
        (p.neg(), rep)
    } else {
        (p, rep)
    }
}

/// Contraction `I·ℚ[x] ∩ ℤ[x]` of an ideal given over ℚ: clear
/// denominators, then saturate by the lcm of the leading coefficients of
/// the cleared ideal's strong basis.
pub fn contract_to_z(a: &super::fideal::IdealQ) -> IdealZ {
    let ord = a.order;
    let n = a.nvars;
    let gens: Vec<PolyZ> = a
        .gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| clear_denominators(g, ord))
        .collect();
    let cleared = IdealZ::new(n, ord, gens);
    if cleared.gens.is_empty() {
        return cleared;
    }
    let mut lcm = BigInt::one();
    for g in cleared.strong_gb() {
        lcm = lcm.lcm(g.leading_coeff());
    }
    let by = IdealZ::new(n, ord, vec![Poly::constant(n, lcm)]);
    saturate(&cleared, &by).expect("saturation by a constant cannot fail")
}

/// Primitive integer polynomial spanning the same ℚ-line.
fn clear_denominators(g: &PolyQ, ord: TermOrder) -> PolyZ {
    let mut denom = BigInt::one();
    for (_, c) in &g.terms {
        denom = denom.lcm(c.denom());
    }
    let scaled: Vec<(Term, BigInt)> = g
        .terms
        .iter()
        .map(|(t, c)| (t.clone(), c.numer() * (&denom / c.denom())))
        .collect();
    let mut content = BigInt::zero();
    for (_, c) in &scaled {
        content = content.gcd(c);
    }
    if content.is_zero() {
        content = BigInt::one();
    }
    Poly::from_terms(
        g.nvars,
        scaled.into_iter().map(|(t, c)| (t, c / &content)).collect(),
        ord,
    )
}

/// Preimage in ℤ[x] of an ideal over 𝔽_p: canonical coefficient lifts of
/// the reduced basis plus the constant `p`.
pub fn lift_from_fp(a: &super::fideal::IdealFp, p: u64) -> IdealZ {
    let ord = a.order;
    let n = a.nvars;
    let mut gens = vec![Poly::constant(n, BigInt::from(p))];
    for g in a.reduced_gb() {
        let lifted = g.map_coeff(|c| BigInt::from(c.v), ord);
        if !lifted.is_zero() {
            gens.push(lifted);
        }
    }
    IdealZ::new(n, ord, gens)
}
