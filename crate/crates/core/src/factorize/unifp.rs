use super::PolyFactorization;
use crate::polyring::Fp;
use crate::rng::SplitMix64;

/// Dense univariate polynomial over 𝔽_p, coefficients ascending by degree,
/// no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invmod(a: u64, p: u64) -> u64 {
    Fp::new(a, p).pow(p - 2).v
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, c: Vec::new() }
    }

    pub fn constant(p: u64, v: u64) -> Self {
        FpPoly::new(p, vec![v])
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &co in self.c.iter().rev() {
            acc = (mulmod(acc, x, self.p) + co) % self.p;
        }
        acc
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        let p = self.p;
        let n = self.c.len().max(other.c.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = other.c.get(i).copied().unwrap_or(0);
            *o = (a + b) % p;
        }
        FpPoly::new(p, out)
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        let p = self.p;
        let n = self.c.len().max(other.c.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = other.c.get(i).copied().unwrap_or(0);
            *o = (a + p - b) % p;
        }
        FpPoly::new(p, out)
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, p)) % p;
            }
        }
        FpPoly::new(p, out)
    }

    pub fn scale(&self, k: u64) -> FpPoly {
        FpPoly::new(self.p, self.c.iter().map(|&a| mulmod(a, k % self.p, self.p)).collect())
    }

    pub fn make_monic(&self) -> FpPoly {
        if self.is_zero() || self.lc() == 1 {
            return self.clone();
        }
        self.scale(invmod(self.lc(), self.p))
    }

    pub fn divrem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let p = self.p;
        let dinv = invmod(d.lc(), p);
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return (FpPoly::zero(p), self.clone());
        }
        let mut q = vec![0u64; r.len() - d.c.len() + 1];
        for k in (0..q.len()).rev() {
            let coef = mulmod(r[k + d.c.len() - 1], dinv, p);
            q[k] = coef;
            if coef == 0 {
                continue;
            }
            for (j, &dc) in d.c.iter().enumerate() {
                let idx = k + j;
                r[idx] = (r[idx] + p - mulmod(coef, dc, p)) % p;
            }
        }
        (FpPoly::new(p, q), FpPoly::new(p, r))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.divrem(d).1
    }

    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn derivative(&self) -> FpPoly {
        if self.c.len() <= 1 {
            return FpPoly::zero(self.p);
        }
        let out = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| mulmod(a, (i as u64) % self.p, self.p))
            .collect();
        FpPoly::new(self.p, out)
    }

    /// `base^e mod self` by square-and-multiply.
    pub fn pow_mod(&self, base: &FpPoly, mut e: u128) -> FpPoly {
        let modulus = self;
        let mut acc = FpPoly::constant(self.p, 1);
        let mut b = base.rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(modulus);
            }
            b = b.mul(&b).rem(modulus);
            e >>= 1;
        }
        acc
    }
}

/// Complete irreducible factorization over 𝔽_p. Squarefree part via
/// gcd with the derivative (with p-th-root descent when the derivative
/// vanishes), distinct-degree splitting, then seeded equal-degree
/// Cantor–Zassenhaus.
pub fn factor_mod_p(f: &FpPoly, seed: u64) -> PolyFactorization<FpPoly, u64> {
    assert!(!f.is_zero(), "factor_mod_p needs a nonzero polynomial");
    let mut rng = SplitMix64::new(seed ^ 0x9d39_247e_3377_6d41);
    let unit = f.lc();
    let monic = f.make_monic();
    let mut factors: Vec<(FpPoly, u32)> = Vec::new();
    squarefree_decompose(&monic, 1, &mut factors, &mut rng);
    factors.sort_by(|a, b| (a.0.deg(), &a.0.c).cmp(&(b.0.deg(), &b.0.c)));
    // Merge duplicates that may arise from the descent.
    let mut merged: Vec<(FpPoly, u32)> = Vec::new();
    for (g, m) in factors {
        match merged.last_mut() {
            Some((h, hm)) if *h == g => *hm += m,
            _ => merged.push((g, m)),
        }
    }
    PolyFactorization { unit, factors: merged }
}

fn squarefree_decompose(
    f: &FpPoly,
    mult: u32,
    out: &mut Vec<(FpPoly, u32)>,
    rng: &mut SplitMix64,
) {
    if f.deg() == 0 {
        return;
    }
    let p = f.p;
    let d = f.derivative();
    if d.is_zero() {
        // f = g(x^p); on the prime field Frobenius fixes coefficients, so
        // the p-th root just contracts exponents.
        let mut root = Vec::new();
        for (i, &a) in f.c.iter().enumerate() {
            if i % (p as usize) == 0 {
                root.push(a);
            } else {
                debug_assert_eq!(a, 0);
            }
        }
        let g = FpPoly::new(p, root);
        squarefree_decompose(&g, mult * p as u32, out, rng);
        return;
    }
    let mut c = f.gcd(&d);
    let mut w = f.divrem(&c).0;
    // w holds the squarefree part; peel multiplicities in increasing order.
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.divrem(&y).0;
        if fac.deg() > 0 {
            for g in equal_parts(&fac, rng) {
                out.push((g, mult * i));
            }
        }
        w = y.clone();
        c = c.divrem(&y).0;
        i += 1;
    }
    if c.deg() > 0 {
        // Remaining part is a p-th power.
        squarefree_decompose(&c, mult, out, rng);
    }
}

/// Factor a squarefree monic polynomial into irreducibles.
fn equal_parts(f: &FpPoly, rng: &mut SplitMix64) -> Vec<FpPoly> {
    let mut out = Vec::new();
    // Distinct-degree splitting: h_d = x^(p^d) mod f.
    let p = f.p;
    let mut rest = f.clone();
    let mut h = FpPoly::x(p);
    let mut d = 0usize;
    while rest.deg() > 0 {
        d += 1;
        if rest.deg() < 2 * d {
            out.push(rest.make_monic());
            break;
        }
        h = rest.pow_mod(&h, p as u128);
        let g = rest.gcd(&h.sub(&FpPoly::x(p)));
        if g.deg() > 0 {
            cantor_zassenhaus(&g, d, rng, &mut out);
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
        }
    }
    out.sort_by(|a, b| (a.deg(), &a.c).cmp(&(b.deg(), &b.c)));
    out
}

/// Split a product of distinct irreducibles of known degree `d`.
fn cantor_zassenhaus(f: &FpPoly, d: usize, rng: &mut SplitMix64, out: &mut Vec<FpPoly>) {
    if f.deg() == d {
        out.push(f.make_monic());
        return;
    }
    let p = f.p;
    loop {
        let a = random_poly(p, f.deg(), rng);
        if a.deg() == 0 {
            continue;
        }
        let g = if p == 2 {
            // Trace map over F_2: a + a^2 + a^4 + ... (d summands).
            let mut t = FpPoly::zero(p);
            let mut cur = a.rem(f);
            for _ in 0..d {
                t = t.add(&cur).rem(f);
                cur = cur.mul(&cur).rem(f);
            }
            f.gcd(&t)
        } else {
            let e = ((p as u128).pow(d as u32) - 1) / 2;
            let b = f.pow_mod(&a, e);
            f.gcd(&b.sub(&FpPoly::constant(p, 1)))
        };
        if g.deg() > 0 && g.deg() < f.deg() {
            cantor_zassenhaus(&g, d, rng, out);
            cantor_zassenhaus(&f.divrem(&g).0, d, rng, out);
            return;
        }
    }
}

fn random_poly(p: u64, below_deg: usize, rng: &mut SplitMix64) -> FpPoly {
    let deg = 1 + rng.below(below_deg.max(2) as u64 - 1) as usize;
    let mut c = vec![0u64; deg + 1];
    for x in c.iter_mut() {
        *x = rng.below(p);
    }
    FpPoly::new(p, c)
}

/// Roots of `f` in 𝔽_p by direct scan — the brute-force oracle used by
/// the factorization tests.
pub fn fp_roots(f: &FpPoly) -> Vec<u64> {
    (0..f.p).filter(|&x| f.eval(x) == 0).collect()
}
