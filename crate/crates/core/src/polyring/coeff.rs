use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

/// Coefficient ring for [`super::Poly`].
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(v: &BigInt) -> Self;
}

/// Coefficient field (exact inverses).
pub trait FieldCoeff: Coeff {
    fn inv(&self) -> Self;
}

impl Coeff for BigInt {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(v: &BigInt) -> Self {
        v.clone()
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
}

/// Prime-field element. The modulus rides along in the value; the neutral
/// elements carry `p = 0` and adopt the partner's modulus on first use, so
/// `Coeff::zero()`/`one()` stay context-free.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(v: u64, p: u64) -> Self {
        debug_assert!(p > 0);
        Fp { v: v % p, p }
    }

    pub fn from_bigint(v: &BigInt, p: u64) -> Self {
        let m = num_integer::Integer::mod_floor(v, &BigInt::from(p));
        let (_, digits) = m.to_u64_digits();
        Fp::new(digits.first().copied().unwrap_or(0), p)
    }

    fn unify(a: &Fp, b: &Fp) -> u64 {
        match (a.p, b.p) {
            (0, q) => q,
            (q, 0) => q,
            (q, r) => {
                assert_eq!(q, r, "mixed moduli");
                q
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        assert!(self.p > 0);
        let mut base = self.v % self.p;
        let mut acc: u64 = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base, self.p);
            }
            base = mulmod(base, base, self.p);
            e >>= 1;
        }
        Fp { v: acc, p: self.p }
    }
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Coeff for Fp {
    fn zero() -> Self {
        Fp { v: 0, p: 0 }
    }
    fn one() -> Self {
        Fp { v: 1, p: 0 }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, other: &Self) -> Self {
        let p = Fp::unify(self, other);
        if p == 0 {
            return Fp { v: self.v + other.v, p: 0 };
        }
        Fp { v: (self.v % p + other.v % p) % p, p }
    }
    fn sub(&self, other: &Self) -> Self {
        let p = Fp::unify(self, other);
        if p == 0 {
            return Fp { v: self.v - other.v, p: 0 };
        }
        Fp { v: (self.v % p + p - other.v % p) % p, p }
    }
    fn mul(&self, other: &Self) -> Self {
        let p = Fp::unify(self, other);
        if p == 0 {
            return Fp { v: self.v * other.v, p: 0 };
        }
        Fp { v: mulmod(self.v % p, other.v % p, p), p }
    }
    fn neg(&self) -> Self {
        if self.p == 0 {
            assert_eq!(self.v, 0, "context-free Fp negation");
            return *self;
        }
        Fp { v: (self.p - self.v % self.p) % self.p, p: self.p }
    }
    fn from_int(v: &BigInt) -> Self {
        // Context-free embedding is only possible for 0/1; polynomial code
        // always builds Fp coefficients through Fp::from_bigint.
        if num_traits::Zero::is_zero(v) {
            Coeff::zero()
        } else if num_traits::One::is_one(v) {
            Coeff::one()
        } else {
            panic!("Fp::from_int needs a modulus; use Fp::from_bigint")
        }
    }
}

impl FieldCoeff for BigRational {
    fn inv(&self) -> Self {
        <BigRational as num_traits::One>::one() / self
    }
}

impl FieldCoeff for Fp {
    fn inv(&self) -> Self {
        assert!(self.p > 0 && self.v % self.p != 0, "inverse of zero");
        self.pow(self.p - 2)
    }
}
