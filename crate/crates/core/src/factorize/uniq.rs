use super::unifp::{factor_mod_p, FpPoly};
use crate::rng::SplitMix64;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Irreducible factorization over ℚ. Factors are primitive integer
/// polynomials with positive leading coefficient (coefficients ascending);
/// `unit · ∏ fᵢ^mᵢ` reconstructs the input exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolyFactorization {
    pub unit: BigRational,
    pub factors: Vec<(Vec<BigInt>, u32)>,
}

impl QPolyFactorization {
    pub fn value(&self) -> Vec<BigRational> {
        let mut acc = vec![self.unit.clone()];
        for (f, m) in &self.factors {
            let fq: Vec<BigRational> = f
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect();
            for _ in 0..*m {
                acc = mul_q(&acc, &fq);
            }
        }
        trim_q(acc)
    }
}

/// Factor a nonzero univariate rational polynomial (coefficients ascending
/// by degree) into irreducibles over ℚ: clear denominators, Yun squarefree
/// decomposition, then factor each squarefree part modulo a good prime,
/// Hensel-lift and recombine subsets.
pub fn factor_over_q(f: &[BigRational], seed: u64) -> QPolyFactorization {
    let f = trim_q(f.to_vec());
    assert!(!f.is_empty(), "factor_over_q needs a nonzero polynomial");
    // f = unit · F with F primitive, positive leading coefficient.
    let mut denom = BigInt::one();
    for c in &f {
        denom = denom.lcm(c.denom());
    }
    let fz: Vec<BigInt> = f.iter().map(|c| c.numer() * (&denom / c.denom())).collect();
    let mut content = BigInt::zero();
    for c in &fz {
        content = content.gcd(c);
    }
    if fz.last().unwrap().is_negative() {
        content = -content;
    }
    let prim: Vec<BigInt> = fz.iter().map(|c| c / &content).collect();
    let unit = BigRational::new(content, denom);
    if prim.len() == 1 {
        return QPolyFactorization { unit, factors: Vec::new() };
    }
    let mut rng = SplitMix64::new(seed ^ 0x4304_2fac_70f2_9a11);
    let mut factors: Vec<(Vec<BigInt>, u32)> = Vec::new();
    for (part, mult) in yun_squarefree(&prim) {
        if part.len() <= 1 {
            continue;
        }
        for irr in factor_squarefree_primitive(&part, &mut rng) {
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    QPolyFactorization { unit, factors }
}

// ---- dense integer polynomial helpers (ascending coefficients) ----

fn trim_z(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn trim_q(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn mul_z(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn mul_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn derivative_z(a: &[BigInt]) -> Vec<BigInt> {
    trim_z(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

fn primitive_part(a: &[BigInt]) -> Vec<BigInt> {
    let a = trim_z(a.to_vec());
    if a.is_empty() {
        return a;
    }
    let mut content = BigInt::zero();
    for c in &a {
        content = content.gcd(c);
    }
    if a.last().unwrap().is_negative() {
        content = -content;
    }
    a.iter().map(|c| c / &content).collect()
}

/// Gcd of primitive integer polynomials via monic rational Euclid, then
/// re-primitivized. Adequate at the degrees this crate meets.
fn gcd_z(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let to_q = |v: &[BigInt]| -> Vec<BigRational> {
        v.iter().map(|c| BigRational::from_integer(c.clone())).collect()
    };
    let mut x = trim_q(to_q(a));
    let mut y = trim_q(to_q(b));
    while !y.is_empty() {
        let r = rem_q(&x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        return Vec::new();
    }
    // Clear denominators and primitivize.
    let mut denom = BigInt::one();
    for c in &x {
        denom = denom.lcm(c.denom());
    }
    let z: Vec<BigInt> = x.iter().map(|c| c.numer() * (&denom / c.denom())).collect();
    primitive_part(&z)
}

fn rem_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let k = r.len() - 1 - db;
        let q = &lr / lb;
        for (j, c) in b.iter().enumerate() {
            let v = &q * c;
            r[k + j] -= v;
        }
        r = trim_q(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Exact division of integer polynomials by a monic (or any exactly
/// dividing) divisor; `None` if not exact.
fn divide_exact_z(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let a = trim_z(a.to_vec());
    let b = trim_z(b.to_vec());
    assert!(!b.is_empty());
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    let lb = b.last().unwrap();
    for k in (0..q.len()).rev() {
        let idx = k + b.len() - 1;
        let (quo, rem) = r[idx].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        q[k] = quo;
        if q[k].is_zero() {
            continue;
        }
        for (j, c) in b.iter().enumerate() {
            let v = &q[k] * c;
            r[k + j] -= v;
        }
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(trim_z(q))
    } else {
        None
    }
}

/// Yun's squarefree decomposition of a primitive polynomial (char 0).
fn yun_squarefree(f: &[BigInt]) -> Vec<(Vec<BigInt>, u32)> {
    let mut out = Vec::new();
    let fd = derivative_z(f);
    let a0 = gcd_z(f, &fd);
    if a0.len() <= 1 {
        out.push((primitive_part(f), 1));
        return out;
    }
    let mut b = divide_exact_z(f, &a0).expect("gcd divides");
    let mut c = divide_exact_z(&fd, &a0).expect("gcd divides");
    let mut i = 1u32;
    loop {
        let bd = derivative_z(&b);
        let d = trim_z(
            (0..c.len().max(bd.len()))
                .map(|k| {
                    let x = c.get(k).cloned().unwrap_or_else(BigInt::zero);
                    let y = bd.get(k).cloned().unwrap_or_else(BigInt::zero);
                    x - y
                })
                .collect(),
        );
        if b.len() <= 1 {
            break;
        }
        let ai = gcd_z(&b, &d);
        if ai.len() > 1 {
            out.push((primitive_part(&ai), i));
        }
        b = divide_exact_z(&b, &ai).expect("yun step divides");
        c = divide_exact_z(&d, &ai).expect("yun step divides");
        i += 1;
    }
    out
}

/// Factor a primitive squarefree integer polynomial (deg ≥ 1) into
/// primitive irreducibles: monicize, factor mod a good prime, Hensel-lift,
/// recombine.
fn factor_squarefree_primitive(f: &[BigInt], rng: &mut SplitMix64) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.to_vec()];
    }
    // Monicize: H(x) = L^(n-1) f(x/L) with L = lc(f), so H_k = f_k L^(n-1-k)
    // and the leading coefficient becomes 1.
    let lc = f.last().unwrap().clone();
    let monic = if lc.is_one() {
        f.to_vec()
    } else {
        let mut h = vec![BigInt::zero(); n + 1];
        h[n] = BigInt::one();
        let mut pow = BigInt::one();
        for k in (0..n).rev() {
            h[k] = &f[k] * &pow;
            pow *= &lc;
        }
        h
    };
    let monic_factors = zassenhaus_monic(&monic, rng);
    if lc.is_one() {
        return monic_factors;
    }
    // Map back: g(x) = primitive part of h(L·x).
    monic_factors
        .into_iter()
        .map(|h| {
            let mut pow = BigInt::one();
            let scaled: Vec<BigInt> = h
                .iter()
                .map(|c| {
                    let v = c * &pow;
                    pow *= &lc;
                    v
                })
                .collect();
            primitive_part(&scaled)
        })
        .collect()
}

/// Zassenhaus on a monic squarefree integer polynomial.
fn zassenhaus_monic(f: &[BigInt], rng: &mut SplitMix64) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // Pick a prime keeping f squarefree.
    let p = pick_prime(f);
    let fp = to_fp(f, p);
    let modular = factor_mod_p(&fp, rng.next_u64());
    let mut parts: Vec<FpPoly> = modular.factors.into_iter().map(|(g, _)| g).collect();
    if parts.len() == 1 {
        return vec![f.to_vec()];
    }
    parts.sort_by(|a, b| (a.deg(), &a.c).cmp(&(b.deg(), &b.c)));
    // Landau–Mignotte style bound: factor coefficients of a monic degree-n
    // polynomial are below sqrt(n+1) · 2^n · max |f_i|.
    let maxabs = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = (isqrt(&BigInt::from(n + 1)) + 1u32) * (BigInt::one() << n) * maxabs;
    let mut modulus = BigInt::from(p);
    while modulus < (&bound * 2u32) + 1u32 {
        modulus = &modulus * &modulus;
    }
    let lifted = hensel_multifactor(f, &parts, p, &modulus);
    recombine(f, lifted, &modulus)
}

fn pick_prime(f: &[BigInt]) -> u64 {
    let mut p = 2u64;
    loop {
        if super::int::is_prime_u64(p) && !(f.last().unwrap() % BigInt::from(p)).is_zero() {
            let fp = to_fp(f, p);
            if fp.deg() == f.len() - 1 && fp.gcd(&fp.derivative()).deg() == 0 {
                return p;
            }
        }
        p += 1;
    }
}

fn to_fp(f: &[BigInt], p: u64) -> FpPoly {
    FpPoly::new(
        p,
        f.iter()
            .map(|c| {
                let m = c.mod_floor(&BigInt::from(p));
                let (_, digits) = m.to_u64_digits();
                digits.first().copied().unwrap_or(0)
            })
            .collect(),
    )
}

fn isqrt(n: &BigInt) -> BigInt {
    n.sqrt()
}

/// Symmetric representative in (-m/2, m/2].
fn sym_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2u32 > *m {
        r - m
    } else {
        r
    }
}

fn sym_poly(f: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    trim_z(f.iter().map(|c| sym_mod(c, m)).collect())
}

fn mod_poly(f: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    trim_z(f.iter().map(|c| c.mod_floor(m)).collect())
}

fn add_z(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    trim_z(
        (0..a.len().max(b.len()))
            .map(|k| {
                a.get(k).cloned().unwrap_or_else(BigInt::zero)
                    + b.get(k).cloned().unwrap_or_else(BigInt::zero)
            })
            .collect(),
    )
}

fn sub_z(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    trim_z(
        (0..a.len().max(b.len()))
            .map(|k| {
                a.get(k).cloned().unwrap_or_else(BigInt::zero)
                    - b.get(k).cloned().unwrap_or_else(BigInt::zero)
            })
            .collect(),
    )
}

/// Division with remainder by a monic divisor, coefficients mod m.
fn divrem_monic_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let a = mod_poly(a, m);
    debug_assert!(b.last().map(|c| c.is_one()).unwrap_or(false));
    if a.len() < b.len() {
        return (Vec::new(), a);
    }
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let idx = k + b.len() - 1;
        let coef = r[idx].mod_floor(m);
        q[k] = coef.clone();
        if coef.is_zero() {
            continue;
        }
        for (j, c) in b.iter().enumerate() {
            let v = (&coef * c).mod_floor(m);
            r[k + j] = (&r[k + j] - v).mod_floor(m);
        }
    }
    (trim_z(mod_poly(&q, m)), trim_z(mod_poly(&r, m)))
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    mod_poly(&mul_z(a, b), m)
}

/// One quadratic Hensel step: from f ≡ g·h (mod m), s·g + t·h ≡ 1 (mod m)
/// to the same congruences mod m², preserving h monic.
#[allow(clippy::type_complexity)]
fn hensel_step(
    m: &BigInt,
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = mod_poly(&sub_z(f, &mul_z(g, h)), &m2);
    let (q, r) = divrem_monic_mod(&mul_mod(s, &e, &m2), h, &m2);
    let g1 = mod_poly(
        &add_z(&add_z(g, &mul_mod(t, &e, &m2)), &mul_mod(&q, g, &m2)),
        &m2,
    );
    let h1 = mod_poly(&add_z(h, &r), &m2);
    let b = mod_poly(
        &sub_z(&add_z(&mul_z(s, &g1), &mul_z(t, &h1)), &[BigInt::one()]),
        &m2,
    );
    let (c, d) = divrem_monic_mod(&mul_mod(s, &b, &m2), &h1, &m2);
    let s1 = mod_poly(&sub_z(s, &d), &m2);
    let t1 = mod_poly(
        &sub_z(&sub_z(t, &mul_mod(t, &b, &m2)), &mul_mod(&c, &g1, &m2)),
        &m2,
    );
    (g1, h1, s1, t1)
}

/// Lift the modular factorization `f ≡ ∏ parts (mod p)` to integers mod
/// `target` by a balanced factor tree of quadratic Hensel steps.
fn hensel_multifactor(
    f: &[BigInt],
    parts: &[FpPoly],
    p: u64,
    target: &BigInt,
) -> Vec<Vec<BigInt>> {
    if parts.len() == 1 {
        return vec![sym_poly(&mod_poly(f, target), target)];
    }
    let half = parts.len() / 2;
    let (left, right) = parts.split_at(half);
    let g0 = left.iter().fold(FpPoly::constant(p, 1), |acc, q| acc.mul(q));
    let h0 = right.iter().fold(FpPoly::constant(p, 1), |acc, q| acc.mul(q));
    let (s0, t0) = fp_bezout(&g0, &h0);
    let lift = |q: &FpPoly| -> Vec<BigInt> { q.c.iter().map(|&c| BigInt::from(c)).collect() };
    let (mut g, mut h, mut s, mut t) = (lift(&g0), lift(&h0), lift(&s0), lift(&t0));
    let mut m = BigInt::from(p);
    while &m < target {
        let (g1, h1, s1, t1) = hensel_step(&m, f, &g, &h, &s, &t);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    // g need not be monic modulo rounding; force monic by construction:
    // both halves are monic products, so the symmetric lift is monic too.
    let g = sym_poly(&g, &m);
    let h = sym_poly(&h, &m);
    let mut out = hensel_multifactor(&g, left, p, target);
    out.extend(hensel_multifactor(&h, right, p, target));
    out
}

/// Extended Euclid over 𝔽_p: s·a + t·b = 1 for coprime a, b.
fn fp_bezout(a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
    let p = a.p;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (FpPoly::constant(p, 1), FpPoly::zero(p));
    let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::constant(p, 1));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    assert_eq!(r0.deg(), 0, "factors not coprime mod p");
    let inv = FpPoly::constant(p, 1).divrem(&r0).0;
    (s0.mul(&inv), t0.mul(&inv))
}

/// Try factor subsets of increasing size; exact integer division certifies
/// true factors.
fn recombine(f: &[BigInt], lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut rest = f.to_vec();
    let mut pool = lifted;
    let mut out = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= pool.len() {
        let idxs: Vec<usize> = (0..pool.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut cand = vec![BigInt::one()];
            for &i in &combo {
                cand = sym_poly(&mod_poly(&mul_z(&cand, &pool[i]), modulus), modulus);
            }
            if let Some(quot) = divide_exact_z(&rest, &cand) {
                out.push(cand);
                rest = quot;
                let mut keep = Vec::new();
                for (i, q) in pool.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        keep.push(q);
                    }
                }
                pool = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    out.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}
