use super::coeff::{Coeff, Fp};
use super::order::TermOrder;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::cmp::Ordering;

/// Power product: exponent vector over a fixed variable set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term(pub Vec<u32>);

impl Term {
    pub fn one(nvars: usize) -> Self {
        Term(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Term(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Term) -> Term {
        Term(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn div(&self, other: &Term) -> Term {
        Term(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Term) -> Term {
        Term(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `Some(var)` when the term is a pure power `x_var^k` with `k > 0`.
    pub fn pure_power(&self) -> Option<usize> {
        let mut var = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if var.is_some() {
                    return None;
                }
                var = Some(i);
            }
        }
        var
    }
}

/// Multivariate polynomial with coefficients in `C`. Terms are kept
/// strictly descending with respect to the order passed to the operations;
/// zero coefficients never appear.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<C> {
    pub nvars: usize,
    pub terms: Vec<(Term, C)>,
}

pub type PolyZ = Poly<BigInt>;
pub type PolyQ = Poly<BigRational>;
pub type PolyFp = Poly<Fp>;

impl<C: Coeff> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        if c.is_zero() {
            return Poly::zero(nvars);
        }
        Poly { nvars, terms: vec![(Term::one(nvars), c)] }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        Poly { nvars, terms: vec![(Term::var(i, nvars), C::one())] }
    }

    pub fn monomial(nvars: usize, t: Term, c: C) -> Self {
        if c.is_zero() {
            return Poly::zero(nvars);
        }
        Poly { nvars, terms: vec![(t, c)] }
    }

    /// Normalize an unordered term list: sort descending, merge equal
    /// terms, drop zeros.
    pub fn from_terms(nvars: usize, mut terms: Vec<(Term, C)>, ord: TermOrder) -> Self {
        terms.sort_by(|a, b| ord.cmp(&b.0 .0, &a.0 .0));
        let mut out: Vec<(Term, C)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            match out.last_mut() {
                Some((lt, lc)) if *lt == t => {
                    *lc = lc.add(&c);
                }
                _ => out.push((t, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { nvars, terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Term, &C)> {
        self.terms.first().map(|(t, c)| (t, c))
    }

    pub fn leading_term(&self) -> &Term {
        &self.terms[0].0
    }

    pub fn leading_coeff(&self) -> &C {
        &self.terms[0].1
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(t, _)| t.total_degree()).max().unwrap_or(0)
    }

    pub fn constant_part(&self) -> C {
        self.terms
            .iter()
            .find(|(t, _)| t.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    /// The polynomial as a constant, when it is one (zero included).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self, ord: TermOrder) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ta, ca) = &self.terms[i];
            let (tb, cb) = &other.terms[j];
            match ord.cmp(&ta.0, &tb.0) {
                Ordering::Greater => {
                    out.push((ta.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((tb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca.add(cb);
                    if !c.is_zero() {
                        out.push((ta.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        Poly { nvars: self.nvars, terms: out }
    }

    pub fn neg(&self) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self, ord: TermOrder) -> Self {
        self.add(&other.neg(), ord)
    }

    /// Multiply by a single monomial `c·t` (c nonzero).
    pub fn mul_monomial(&self, t: &Term, c: &C) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter_map(|(tt, cc)| {
                    let p = cc.mul(c);
                    if p.is_zero() {
                        None
                    } else {
                        Some((tt.mul(t), p))
                    }
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        self.mul_monomial(&Term::one(self.nvars), c)
    }

    pub fn mul(&self, other: &Self, ord: TermOrder) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut acc = Vec::new();
        for (t, c) in &self.terms {
            for (u, d) in &other.terms {
                let p = c.mul(d);
                if !p.is_zero() {
                    acc.push((t.mul(u), p));
                }
            }
        }
        Poly::from_terms(self.nvars, acc, ord)
    }

    pub fn pow(&self, e: u32, ord: TermOrder) -> Self {
        let mut acc = Poly::constant(self.nvars, C::one());
        for _ in 0..e {
            acc = acc.mul(self, ord);
        }
        acc
    }

    pub fn map_coeff<D: Coeff>(&self, f: impl Fn(&C) -> D, ord: TermOrder) -> Poly<D> {
        Poly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(t, c)| (t.clone(), f(c)))
                .collect(),
            ord,
        )
    }

    /// Re-sort terms after an order change.
    pub fn resort(&self, ord: TermOrder) -> Self {
        Poly::from_terms(self.nvars, self.terms.clone(), ord)
    }

    /// Insert `count` fresh variables at position 0 (exponent 0), for the
    /// auxiliary-variable constructions.
    pub fn prepend_vars(&self, count: usize) -> Self {
        Poly {
            nvars: self.nvars + count,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| {
                    let mut e = vec![0u32; count];
                    e.extend_from_slice(&t.0);
                    (Term(e), c.clone())
                })
                .collect(),
        }
    }

    /// Drop the first `count` variables; caller guarantees they do not
    /// occur.
    pub fn drop_vars(&self, count: usize, ord: TermOrder) -> Self {
        Poly::from_terms(
            self.nvars - count,
            self.terms
                .iter()
                .map(|(t, c)| {
                    debug_assert!(t.0[..count].iter().all(|&e| e == 0));
                    (Term(t.0[count..].to_vec()), c.clone())
                })
                .collect(),
            ord,
        )
    }

    /// Substitute polynomials for the variables (used for idempotent
    /// evaluation on generator matrices and splitting polynomials).
    pub fn substitute(&self, values: &[Poly<C>], ord: TermOrder) -> Poly<C> {
        assert_eq!(values.len(), self.nvars, "substitution arity mismatch");
        let out_vars = values.first().map_or(0, |p| p.nvars);
        let mut acc = Poly::zero(out_vars);
        for (t, c) in &self.terms {
            let mut m = Poly::constant(out_vars, c.clone());
            for (i, &e) in t.0.iter().enumerate() {
                if e > 0 {
                    m = m.mul(&values[i].pow(e, ord), ord);
                }
            }
            acc = acc.add(&m, ord);
        }
        acc
    }
}

/// Render with the given variable names: descending terms, `^` powers,
/// explicit `*`.
pub fn render_poly<C: Coeff + std::fmt::Display>(p: &Poly<C>, vars: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (t, c)) in p.terms.iter().enumerate() {
        let cs = format!("{}", c);
        let (sign, mag) = match cs.strip_prefix('-') {
            Some(rest) => ("-", rest.to_string()),
            None => ("+", cs),
        };
        if idx == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push(' ');
            out.push_str(sign);
            out.push(' ');
        }
        let mut factors: Vec<String> = Vec::new();
        if t.is_one() || mag != "1" {
            factors.push(mag);
        }
        for (i, &e) in t.0.iter().enumerate() {
            if e == 1 {
                factors.push(vars[i].clone());
            } else if e > 1 {
                factors.push(format!("{}^{}", vars[i], e));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}
