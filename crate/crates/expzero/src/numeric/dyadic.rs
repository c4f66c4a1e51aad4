//! Exact dyadic numbers `mantissa * 2^exponent`.
//!
//! Addition, multiplication, and comparison are exact; precision only enters
//! through explicit rounding calls that report their error bound. Radius
//! arithmetic always rounds magnitudes up, so enclosures never shrink by
//! accident.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    #[must_use]
    pub fn new(mant: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i64;
        }
    }

    #[must_use]
    pub fn zero() -> Self {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    #[must_use]
    pub fn one() -> Self {
        Dyadic {
            mant: BigInt::one(),
            exp: 0,
        }
    }

    /// `2^e`.
    #[must_use]
    pub fn power_of_two(e: i64) -> Self {
        Dyadic {
            mant: BigInt::one(),
            exp: e,
        }
    }

    #[must_use]
    pub fn from_bigint(n: &BigInt) -> Self {
        Dyadic::new(n.clone(), 0)
    }

    #[must_use]
    pub fn from_i64(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    #[must_use]
    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    #[must_use]
    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    #[must_use]
    pub fn neg(&self) -> Self {
        Dyadic {
            mant: -self.mant.clone(),
            exp: self.exp,
        }
    }

    #[must_use]
    pub fn abs(&self) -> Self {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    #[must_use]
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Dyadic::zero();
        }
        Dyadic::new(&self.mant * &other.mant, self.exp + other.exp)
    }

    /// Multiply by `2^k`.
    #[must_use]
    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    /// Bits in the mantissa magnitude.
    #[must_use]
    pub fn mant_bits(&self) -> u64 {
        self.mant.bits()
    }

    /// Exponent `e` with `2^(e-1) <= |self| < 2^e`; `None` for zero.
    #[must_use]
    pub fn magnitude_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.exp + self.mant.bits() as i64)
    }

    /// Compare magnitudes exactly.
    #[must_use]
    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let ma = self.magnitude_exponent().unwrap();
        let mb = other.magnitude_exponent().unwrap();
        if ma != mb {
            return ma.cmp(&mb);
        }
        // Same binade: align within one binade, shifts stay small.
        let e = self.exp.min(other.exp);
        let a = self.mant.magnitude() << (self.exp - e) as u64;
        let b = other.mant.magnitude() << (other.exp - e) as u64;
        a.cmp(&b)
    }

    #[must_use]
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let sa = self.mant.sign();
        let sb = other.mant.sign();
        match (sa, sb) {
            (Sign::Minus, Sign::Minus) => other.cmp_abs(self),
            (Sign::Minus, _) => Ordering::Less,
            (Sign::NoSign, Sign::NoSign) => Ordering::Equal,
            (Sign::NoSign, Sign::Plus) => Ordering::Less,
            (Sign::NoSign, Sign::Minus) => Ordering::Greater,
            (Sign::Plus, Sign::Plus) => self.cmp_abs(other),
            (Sign::Plus, _) => Ordering::Greater,
        }
    }

    /// Round the magnitude up until the mantissa fits in `prec` bits.
    #[must_use]
    pub fn round_up_mag(&self, prec: u64) -> Self {
        let bits = self.mant.bits();
        if bits <= prec {
            return self.clone();
        }
        let shift = bits - prec;
        let shifted = self.mant.magnitude() >> shift;
        let mut m = BigInt::from(shifted) + 1u32;
        if self.mant.is_negative() {
            m = -m;
        }
        Dyadic::new(m, self.exp + shift as i64)
    }

    /// Truncate toward zero to `prec` mantissa bits; returns the rounded
    /// value and a bound on the absolute error.
    #[must_use]
    pub fn truncate(&self, prec: u64) -> (Self, Self) {
        let bits = self.mant.bits();
        if bits <= prec {
            return (self.clone(), Dyadic::zero());
        }
        let shift = bits - prec;
        let shifted = self.mant.magnitude() >> shift;
        let mut m = BigInt::from(shifted);
        if self.mant.is_negative() {
            m = -m;
        }
        (
            Dyadic::new(m, self.exp + shift as i64),
            Dyadic::power_of_two(self.exp + shift as i64),
        )
    }

    /// Dyadic approximation of a rational with error bound, both returned.
    /// The error is zero exactly when the rational is dyadic.
    #[must_use]
    pub fn from_rational(r: &BigRational, prec: u64) -> (Self, Self) {
        if r.is_zero() {
            return (Dyadic::zero(), Dyadic::zero());
        }
        let num = r.numer();
        let den = r.denom();
        let scale = prec as i64 + den.bits() as i64 - num.bits().min(den.bits()) as i64 + 2;
        let scale = scale.max(2);
        let scaled = num << scale as u64;
        let (q, rem) = num_integer::Integer::div_rem(&scaled, den);
        let d = Dyadic::new(q, -scale);
        if rem.is_zero() {
            (d, Dyadic::zero())
        } else {
            (d, Dyadic::power_of_two(-scale))
        }
    }

    /// Exact conversion to a rational.
    #[must_use]
    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as u64)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    /// Truncated division by a positive integer, with error bound.
    #[must_use]
    pub fn div_int(&self, n: &BigInt, prec: u64) -> (Self, Self) {
        assert!(n.is_positive());
        if self.is_zero() {
            return (Dyadic::zero(), Dyadic::zero());
        }
        let scale = prec + n.bits();
        let scaled = &self.mant << scale;
        let (q, rem) = num_integer::Integer::div_rem(&scaled, n);
        let d = Dyadic::new(q, self.exp - scale as i64);
        if rem.is_zero() {
            (d, Dyadic::zero())
        } else {
            (d, Dyadic::power_of_two(self.exp - scale as i64))
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mant, self.exp)
    }
}
