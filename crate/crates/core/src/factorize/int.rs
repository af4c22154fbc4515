use crate::rng::SplitMix64;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Prime factorization `∏ pᵢ^νᵢ` with strictly increasing primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntFactorization {
    pub factors: Vec<(BigInt, u32)>,
}

impl IntFactorization {
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::one();
        for (p, e) in &self.factors {
            for _ in 0..*e {
                v *= p;
            }
        }
        v
    }
}

/// Deterministic Miller–Rabin for `q < 3.3·10²⁴` (first twelve prime
/// witnesses); the range covers everything this crate ever factors.
pub fn is_prime(q: &BigInt) -> bool {
    if q <= &BigInt::one() {
        return false;
    }
    let small: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &small {
        let pb = BigInt::from(p);
        if q == &pb {
            return true;
        }
        if (q % &pb).is_zero() {
            return false;
        }
    }
    // q - 1 = 2^s * d
    let n1 = q - 1u32;
    let mut d = n1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &small {
        let mut x = BigInt::from(a).modpow(&d, q);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2u32), q);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime_u64(q: u64) -> bool {
    is_prime(&BigInt::from(q))
}

/// Complete prime factorization of `q ≥ 1` (empty for `q = 1`). Trial
/// division below 10⁴, then seeded Pollard rho (Brent variant) on the
/// remaining composite parts.
pub fn factor_integer(q: &BigInt, seed: u64) -> IntFactorization {
    assert!(q >= &BigInt::one(), "factor_integer needs q >= 1");
    let mut rng = SplitMix64::new(seed ^ 0x5eed_fac7_0e1e_c0de);
    let mut rest = q.clone();
    let mut found: Vec<BigInt> = Vec::new();
    let mut d = BigInt::from(2u32);
    let bound = BigInt::from(10_000u32);
    while &d * &d <= rest && d <= bound {
        while (&rest % &d).is_zero() {
            found.push(d.clone());
            rest /= &d;
        }
        d += 1u32;
    }
    if rest > BigInt::one() {
        let mut stack = vec![rest];
        while let Some(n) = stack.pop() {
            if is_prime(&n) {
                found.push(n);
                continue;
            }
            let f = loop {
                if let Some(f) = pollard_brent(&n, &mut rng) {
                    break f;
                }
            };
            stack.push(&n / &f);
            stack.push(f);
        }
    }
    found.sort();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for p in found {
        match factors.last_mut() {
            Some((lp, e)) if *lp == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    debug_assert!(factors.iter().all(|(p, _)| is_prime(p)));
    IntFactorization { factors }
}

/// One Pollard-rho attempt with Brent's cycle detection; `None` asks the
/// caller to retry with fresh parameters.
fn pollard_brent(n: &BigInt, rng: &mut SplitMix64) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2u32));
    }
    let c = BigInt::from(1 + rng.below(u64::MAX.min(to_u64_sat(n) - 1).max(1)));
    let m = 128u32;
    let mut y = BigInt::from(1 + rng.below(to_u64_sat(n).max(2) - 1));
    let mut r = 1u64;
    let mut q = BigInt::one();
    let mut g = BigInt::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = (&y * &y + &c) % n;
        }
        let mut k = 0u64;
        while k < r && g.is_one() {
            ys = y.clone();
            let steps = m.min((r - k) as u32);
            for _ in 0..steps {
                y = (&y * &y + &c) % n;
                q = (&q * (&x - &y).abs()) % n;
            }
            g = q.gcd(n);
            k += steps as u64;
        }
        r *= 2;
        if r > 1 << 22 {
            return None;
        }
    }
    if &g == n {
        // Backtrack step by step.
        loop {
            ys = (&ys * &ys + &c) % n;
            g = (&x - &ys).abs().gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if &g == n || g.is_one() {
        None
    } else {
        Some(g)
    }
}

fn to_u64_sat(n: &BigInt) -> u64 {
    n.to_u64().unwrap_or(u64::MAX)
}
