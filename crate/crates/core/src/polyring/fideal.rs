use super::coeff::{FieldCoeff, Fp};
use super::order::TermOrder;
use super::poly::{Poly, Term};
use num_rational::BigRational;
use std::sync::OnceLock;

/// Ideal over a coefficient field with a cached reduced Gröbner basis.
#[derive(Debug)]
pub struct IdealF<C> {
    pub nvars: usize,
    pub order: TermOrder,
    pub gens: Vec<Poly<C>>,
    gb: OnceLock<Vec<Poly<C>>>,
}

pub type IdealQ = IdealF<BigRational>;
pub type IdealFp = IdealF<Fp>;

impl<C: Clone> Clone for IdealF<C> {
    fn clone(&self) -> Self {
        IdealF {
            nvars: self.nvars,
            order: self.order,
            gens: self.gens.clone(),
            gb: self.gb.clone(),
        }
    }
}

impl<C: FieldCoeff> IdealF<C> {
    pub fn new(nvars: usize, order: TermOrder, gens: Vec<Poly<C>>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars, nvars, "generator variable count mismatch");
        }
        IdealF { nvars, order, gens, gb: OnceLock::new() }
    }

    /// The unique reduced Gröbner basis for the fixed order.
    pub fn reduced_gb(&self) -> &[Poly<C>] {
        self.gb
            .get_or_init(|| field_groebner(&self.gens, self.nvars, self.order))
    }

    pub fn normal_form(&self, f: &Poly<C>) -> Poly<C> {
        normal_form_field(f, self.reduced_gb(), self.order)
    }

    pub fn contains(&self, f: &Poly<C>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn eq_ideal(&self, other: &IdealF<C>) -> bool {
        self.gens.iter().all(|g| other.contains(g))
            && other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.reduced_gb();
        gb.len() == 1 && gb[0].as_constant().is_some()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.reduced_gb().is_empty()
    }

    pub fn sum(&self, other: &IdealF<C>) -> IdealF<C> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        IdealF::new(self.nvars, self.order, gens)
    }

    pub fn with_extra(&self, extra: Vec<Poly<C>>) -> IdealF<C> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        IdealF::new(self.nvars, self.order, gens)
    }

    /// Zero-dimensionality test: every variable's pure power appears among
    /// the leading terms (or the ideal is the unit ideal).
    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        let gb = self.reduced_gb();
        (0..self.nvars).all(|v| {
            gb.iter().any(|g| {
                let t = g.leading_term();
                !t.is_one() && t.pure_power() == Some(v)
            })
        })
    }

    /// Monomials not divisible by any basis leading term; a vector-space
    /// basis of the quotient when the ideal is zero-dimensional.
    pub fn quotient_basis(&self) -> Option<Vec<Term>> {
        if !self.is_zero_dimensional() || self.is_unit() {
            return if self.is_unit() { Some(Vec::new()) } else { None };
        }
        let gb = self.reduced_gb();
        let mut bounds = vec![0u32; self.nvars];
        for g in gb {
            if let Some(v) = g.leading_term().pure_power() {
                let e = g.leading_term().0[v];
                if bounds[v] == 0 || e < bounds[v] {
                    bounds[v] = e;
                }
            }
        }
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.nvars];
        loop {
            let t = Term(cur.clone());
            if !gb.iter().any(|g| g.leading_term().divides(&t)) {
                out.push(t);
            }
            let mut i = 0;
            loop {
                if i == self.nvars {
                    return Some(out);
                }
                cur[i] += 1;
                if cur[i] >= bounds[i] {
                    cur[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
        }
    }
}

/// Tail-reduced, monic, minimal Gröbner basis over a field.
pub fn field_groebner<C: FieldCoeff>(
    gens: &[Poly<C>],
    _nvars: usize,
    ord: TermOrder,
) -> Vec<Poly<C>> {
    let mut basis: Vec<Poly<C>> = Vec::new();
    for g in gens {
        let r = normal_form_field(g, &basis, ord);
        if !r.is_zero() {
            basis.push(make_monic(r));
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
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
        let (i, j) = pairs.swap_remove(best);
        let (f, g) = (&basis[i], &basis[j]);
        let (tf, tg) = (f.leading_term(), g.leading_term());
        // Buchberger's first criterion: coprime leading terms.
        if tf.lcm(tg).total_degree() == tf.total_degree() + tg.total_degree() {
            continue;
        }
        let l = tf.lcm(tg);
        let cf = f.leading_coeff().inv();
        let cg = g.leading_coeff().inv().neg();
        let s = f
            .mul_monomial(&tf.div(&l), &cf)
            .add(&g.mul_monomial(&tg.div(&l), &cg), ord);
        let r = normal_form_field(&s, &basis, ord);
        if !r.is_zero() {
            basis.push(make_monic(r));
            let new_idx = basis.len() - 1;
            for k in 0..new_idx {
                pairs.push((k, new_idx));
            }
        }
    }
    // Minimalize and tail-reduce into the unique reduced basis.
    basis.sort_by(|a, b| ord.cmp(&a.leading_term().0, &b.leading_term().0));
    let mut kept: Vec<Poly<C>> = Vec::new();
    for g in basis {
        if !kept
            .iter()
            .any(|h| h.leading_term().divides(g.leading_term()))
        {
            kept.push(g);
        }
    }
    let snapshot = kept.clone();
    for (i, g) in kept.iter_mut().enumerate() {
        let others: Vec<Poly<C>> = snapshot
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        *g = normal_form_field(g, &others, ord);
    }
    kept
}

/// Exhaustive reduction over a field: zero iff the input is in the ideal
/// generated by a Gröbner basis.
pub fn normal_form_field<C: FieldCoeff>(
    f: &Poly<C>,
    basis: &[Poly<C>],
    ord: TermOrder,
) -> Poly<C> {
    let mut rest = f.clone();
    let mut stuck: Vec<(Term, C)> = Vec::new();
    'outer: while let Some((t, c)) = rest.leading().map(|(t, c)| (t.clone(), c.clone())) {
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let tg = g.leading_term();
            if tg.divides(&t) {
                let q = c.mul(&g.leading_coeff().inv());
                rest = rest.sub(&g.mul_monomial(&tg.div(&t), &q), ord);
                continue 'outer;
            }
        }
        stuck.push((t.clone(), c.clone()));
        rest = rest.sub(&Poly::monomial(rest.nvars, t, c), ord);
    }
    Poly::from_terms(f.nvars, stuck, ord)
}

fn make_monic<C: FieldCoeff>(p: Poly<C>) -> Poly<C> {
    let inv = p.leading_coeff().inv();
    p.scale(&inv)
}
