//! Complex balls with dyadic midpoint and radius.
//!
//! A ball denotes the closed disk around its midpoint, or the whole plane
//! when the sentinel flag is set (the result of exponentiating a ball whose
//! radius is too large to bound usefully). Every operation returns a ball
//! containing the exact image of its input sets; midpoint rounding errors are
//! absorbed into the radius, which is only ever rounded upward.

use super::dyadic::Dyadic;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use std::cmp::Ordering;
use std::fmt;

/// Bit-count wrapper; working precisions are clamped to this range.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Prec(u32);

impl Prec {
    pub const MIN_BITS: u32 = 8;
    pub const MAX_BITS: u32 = 1 << 14;

    #[must_use]
    pub fn new(bits: u32) -> Self {
        Prec(bits.clamp(Self::MIN_BITS, Self::MAX_BITS))
    }

    #[must_use]
    pub fn bits(self) -> u32 {
        self.0
    }

    /// Doubled precision, saturating at the hard range limit.
    #[must_use]
    pub fn doubled(self) -> Self {
        Prec::new(self.0.saturating_mul(2))
    }
}

/// How many radius mantissa bits to keep; radii never need full precision.
const RAD_BITS: u64 = 24;

#[derive(Clone, PartialEq, Eq)]
pub struct ComplexBall {
    re: Dyadic,
    im: Dyadic,
    rad: Dyadic,
    entire: bool,
}

impl ComplexBall {
    #[must_use]
    pub fn exact(re: Dyadic, im: Dyadic) -> Self {
        ComplexBall {
            re,
            im,
            rad: Dyadic::zero(),
            entire: false,
        }
    }

    #[must_use]
    pub fn exact_int(re: i64, im: i64) -> Self {
        ComplexBall::exact(Dyadic::from_i64(re), Dyadic::from_i64(im))
    }

    /// Whole-plane sentinel.
    #[must_use]
    pub fn entire() -> Self {
        ComplexBall {
            re: Dyadic::zero(),
            im: Dyadic::zero(),
            rad: Dyadic::zero(),
            entire: true,
        }
    }

    #[must_use]
    pub fn is_entire(&self) -> bool {
        self.entire
    }

    #[must_use]
    pub fn from_rational_point(re: &BigRational, im: &BigRational, prec: u32) -> Self {
        let (dre, ere) = Dyadic::from_rational(re, prec as u64);
        let (dim, eim) = Dyadic::from_rational(im, prec as u64);
        ComplexBall {
            re: dre,
            im: dim,
            rad: ere.add(&eim).round_up_mag(RAD_BITS),
            entire: false,
        }
    }

    /// Disk with rational center and radius.
    #[must_use]
    pub fn from_rational_disc(
        re: &BigRational,
        im: &BigRational,
        rad: &BigRational,
        prec: u32,
    ) -> Self {
        assert!(!rad.is_negative());
        let mut b = ComplexBall::from_rational_point(re, im, prec);
        let (drad, erad) = Dyadic::from_rational(rad, RAD_BITS);
        b.rad = b.rad.add(&drad).add(&erad).round_up_mag(RAD_BITS);
        b
    }

    #[must_use]
    pub fn mid_re(&self) -> &Dyadic {
        &self.re
    }

    #[must_use]
    pub fn mid_im(&self) -> &Dyadic {
        &self.im
    }

    #[must_use]
    pub fn radius(&self) -> &Dyadic {
        &self.rad
    }

    fn with_parts(re: Dyadic, im: Dyadic, rad: Dyadic, prec: u32) -> Self {
        let (re, ere) = re.truncate(prec as u64);
        let (im, eim) = im.truncate(prec as u64);
        let rad = rad.add(&ere).add(&eim).round_up_mag(RAD_BITS);
        ComplexBall {
            re,
            im,
            rad,
            entire: false,
        }
    }

    #[must_use]
    pub fn neg(&self) -> Self {
        if self.entire {
            return ComplexBall::entire();
        }
        ComplexBall {
            re: self.re.neg(),
            im: self.im.neg(),
            rad: self.rad.clone(),
            entire: false,
        }
    }

    #[must_use]
    pub fn add(&self, other: &Self, prec: u32) -> Self {
        if self.entire || other.entire {
            return ComplexBall::entire();
        }
        ComplexBall::with_parts(
            self.re.add(&other.re),
            self.im.add(&other.im),
            self.rad.add(&other.rad),
            prec,
        )
    }

    #[must_use]
    pub fn sub(&self, other: &Self, prec: u32) -> Self {
        self.add(&other.neg(), prec)
    }

    /// Upper bound on `|midpoint|` (1-norm, always valid for the 2-norm).
    #[must_use]
    pub fn mid_mag_upper(&self) -> Dyadic {
        self.re.abs().add(&self.im.abs())
    }

    /// Upper bound on `|z|` over the whole ball.
    #[must_use]
    pub fn mag_upper(&self) -> Dyadic {
        self.mid_mag_upper().add(&self.rad)
    }

    #[must_use]
    pub fn mul(&self, other: &Self, prec: u32) -> Self {
        if self.entire || other.entire {
            return ComplexBall::entire();
        }
        let re = self.re.mul(&other.re).sub(&self.im.mul(&other.im));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        let m1 = self.mid_mag_upper();
        let m2 = other.mid_mag_upper();
        let rad = m1
            .mul(&other.rad)
            .add(&m2.mul(&self.rad))
            .add(&self.rad.mul(&other.rad));
        ComplexBall::with_parts(re, im, rad, prec)
    }

    /// Multiply by an exact integer.
    #[must_use]
    pub fn scale_int(&self, k: &BigInt, prec: u32) -> Self {
        if self.entire {
            return ComplexBall::entire();
        }
        let d = Dyadic::from_bigint(k);
        ComplexBall::with_parts(
            self.re.mul(&d),
            self.im.mul(&d),
            self.rad.mul(&d.abs()),
            prec,
        )
    }

    /// Exact squared midpoint magnitude.
    fn mid_norm_sq(&self) -> Dyadic {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    /// Does the closed disk contain zero? Exact decision.
    #[must_use]
    pub fn contains_zero(&self) -> bool {
        if self.entire {
            return true;
        }
        self.mid_norm_sq().cmp_value(&self.rad.mul(&self.rad)) != Ordering::Greater
    }

    /// Is zero certainly outside the disk? Exact decision.
    #[must_use]
    pub fn excludes_zero(&self) -> bool {
        !self.entire && !self.contains_zero()
    }

    /// Image of the disk under 1/z, rounded outward. A zero-free disk maps
    /// to the disk with center `conj(m) / (|m|^2 - r^2)` and radius
    /// `r / (|m|^2 - r^2)`; None when the disk contains zero.
    #[must_use]
    pub fn inv(&self, prec: u32) -> Option<Self> {
        if self.entire || self.contains_zero() {
            return None;
        }
        let d = self
            .mid_norm_sq()
            .sub(&self.rad.mul(&self.rad))
            .to_rational();
        let re = self.re.to_rational() / &d;
        let im = -self.im.to_rational() / &d;
        let rad = self.rad.to_rational() / &d;
        Some(ComplexBall::from_rational_disc(&re, &im, &rad, prec))
    }

    /// `|midpoint| >= 2^factor_log2 * radius`, decided exactly.
    #[must_use]
    pub fn mid_dominates_radius(&self, factor_log2: i64) -> bool {
        if self.entire {
            return false;
        }
        if self.rad.is_zero() {
            return !self.re.is_zero() || !self.im.is_zero();
        }
        let lhs = self.mid_norm_sq();
        let rhs = self.rad.mul(&self.rad).shl(2 * factor_log2);
        lhs.cmp_value(&rhs) != Ordering::Less
    }

    /// Does this ball contain the other ball entirely? Exact decision.
    #[must_use]
    pub fn contains_ball(&self, other: &Self) -> bool {
        if self.entire {
            return true;
        }
        if other.entire {
            return false;
        }
        let slack = self.rad.sub(&other.rad);
        if slack.is_negative() {
            return false;
        }
        let dre = self.re.sub(&other.re);
        let dim = self.im.sub(&other.im);
        let dist_sq = dre.mul(&dre).add(&dim.mul(&dim));
        dist_sq.cmp_value(&slack.mul(&slack)) != Ordering::Greater
    }

    /// Does the ball contain the exact rational point? Exact decision.
    #[must_use]
    pub fn contains_rational(&self, re: &BigRational, im: &BigRational) -> bool {
        if self.entire {
            return true;
        }
        let dre = self.re.to_rational() - re;
        let dim = self.im.to_rational() - im;
        let rad = self.rad.to_rational();
        dre.clone() * dre + dim.clone() * dim <= rad.clone() * rad
    }

    /// Midpoint quadrant for winding-number bookkeeping.
    ///
    /// # Panics
    /// Panics if the midpoint is exactly zero.
    #[must_use]
    pub fn mid_quadrant(&self) -> u8 {
        let re_sgn = if self.re.is_positive() {
            1
        } else if self.re.is_zero() {
            0
        } else {
            -1
        };
        let im_sgn = if self.im.is_positive() {
            1
        } else if self.im.is_zero() {
            0
        } else {
            -1
        };
        match (re_sgn, im_sgn) {
            (1, 1) | (1, 0) => 0,
            (0, 1) | (-1, 1) => 1,
            (-1, 0) | (-1, -1) => 2,
            (0, -1) | (1, -1) => 3,
            _ => panic!("quadrant of zero midpoint"),
        }
    }

    /// Exact dot product of the two midpoints as plane vectors.
    #[must_use]
    pub fn mid_dot(&self, other: &Self) -> Dyadic {
        self.re.mul(&other.re).add(&self.im.mul(&other.im))
    }

    /// Rigorous complex exponential.
    ///
    /// The result contains `exp(z)` for every `z` in the input ball. When the
    /// input radius is too large to produce a useful bound, returns the
    /// whole-plane sentinel.
    #[must_use]
    pub fn exp(&self, prec: u32) -> Self {
        if self.entire {
            return ComplexBall::entire();
        }
        // Radius overflow: e^r only boundable for moderate r.
        if let Some(e) = self.rad.magnitude_exponent() {
            if e > 24 {
                return ComplexBall::entire();
            }
        }
        // Also cap the midpoint magnitude: exp of 2^40-sized values has dyadic
        // exponents around 2^40.6, still representable, but useless. Cut off
        // where the result magnitude exponent no longer fits comfortably.
        if let Some(e) = self.mid_mag_upper().magnitude_exponent() {
            if e > 40 {
                return ComplexBall::entire();
            }
        }

        // Argument scaling: z = mid / 2^k with |z|_1 <= 1/2.
        let one_norm = self.re.abs().add(&self.im.abs());
        let k = one_norm.magnitude_exponent().map_or(0, |e| (e + 1).max(0));
        let wp = (prec + 48 + 2 * (k as u32).min(64)) as u64;
        let z_re = self.re.shl(-k);
        let z_im = self.im.shl(-k);
        let z = ComplexBall::exact(z_re, z_im);

        // Taylor series sum_{j>=0} z^j / j! with explicit tail bound.
        let mut sum = ComplexBall::exact_int(1, 0);
        let mut term = ComplexBall::exact_int(1, 0);
        let mut j: u64 = 0;
        let tiny = Dyadic::power_of_two(-(wp as i64));
        loop {
            j += 1;
            term = term.mul(&z, wp as u32);
            let (tre, ere) = term.re.div_int(&BigInt::from(j), wp);
            let (tim, eim) = term.im.div_int(&BigInt::from(j), wp);
            let (trad, erad) = term.rad.div_int(&BigInt::from(j), RAD_BITS);
            term = ComplexBall {
                re: tre,
                im: tim,
                rad: trad.add(&erad).add(&ere).add(&eim).round_up_mag(RAD_BITS),
                entire: false,
            };
            sum = sum.add(&term, wp as u32);
            let tmag = term.mag_upper();
            if tmag.cmp_value(&tiny) == Ordering::Less && j >= 2 {
                // |z| <= 1/2, so the tail is at most twice the next term,
                // and the next term is at most half this one.
                sum.rad = sum.rad.add(&tmag).round_up_mag(RAD_BITS);
                break;
            }
            assert!(j < 4 * wp + 64, "exp series failed to converge");
        }

        // Undo the scaling by repeated squaring.
        let mut result = sum;
        for _ in 0..k {
            result = result.mul(&result, wp as u32);
        }

        // Effect of the input radius r: |exp(m + d) - exp(m)| <= |exp(m)| (e^r - 1).
        if !self.rad.is_zero() {
            let r = &self.rad;
            let factor = if r.cmp_value(&Dyadic::one()) != Ordering::Greater {
                // e^r - 1 <= 2r for r <= 1.
                r.shl(1)
            } else {
                // e^r <= 2^(2r) <= 2^(2^(e+1)) for r < 2^e; e <= 24 here.
                let e = r.magnitude_exponent().unwrap();
                Dyadic::power_of_two(1 << (e + 1).min(26))
            };
            let extra = result.mag_upper().mul(&factor);
            result.rad = result.rad.add(&extra).round_up_mag(RAD_BITS);
        }

        ComplexBall::with_parts(result.re, result.im, result.rad, prec)
    }
}

impl fmt::Debug for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entire {
            return write!(f, "ball(entire)");
        }
        write!(f, "ball({:?} + {:?}i; {:?})", self.re, self.im, self.rad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn prec_clamps() {
        assert_eq!(Prec::new(1).bits(), 8);
        assert_eq!(Prec::new(1 << 20).bits(), 1 << 14);
        assert_eq!(Prec::new(256).doubled().bits(), 512);
    }

    #[test]
    fn add_mul_contain_exact_images() {
        let a = ComplexBall::from_rational_disc(&rat(1, 3), &rat(1, 7), &rat(1, 100), 64);
        let b = ComplexBall::from_rational_disc(&rat(-2, 5), &rat(3, 11), &rat(1, 50), 64);
        let sum = a.add(&b, 64);
        assert!(sum.contains_rational(&(rat(1, 3) + rat(-2, 5)), &(rat(1, 7) + rat(3, 11))));
        let prod = a.mul(&b, 64);
        // (x1 + i y1)(x2 + i y2) at the exact centers.
        let pre = rat(1, 3) * rat(-2, 5) - rat(1, 7) * rat(3, 11);
        let pim = rat(1, 3) * rat(3, 11) + rat(1, 7) * rat(-2, 5);
        assert!(prod.contains_rational(&pre, &pim));
    }

    #[test]
    fn zero_tests_are_exact() {
        let on_edge = ComplexBall::from_rational_disc(&rat(1, 1), &rat(0, 1), &rat(1, 1), 64);
        assert!(on_edge.contains_zero());
        let off = ComplexBall::from_rational_disc(&rat(1, 1), &rat(0, 1), &rat(1, 2), 64);
        assert!(off.excludes_zero());
        assert!(ComplexBall::entire().contains_zero());
        assert!(!ComplexBall::entire().excludes_zero());
    }

    #[test]
    fn quadrants_partition() {
        assert_eq!(ComplexBall::exact_int(1, 0).mid_quadrant(), 0);
        assert_eq!(ComplexBall::exact_int(1, 1).mid_quadrant(), 0);
        assert_eq!(ComplexBall::exact_int(0, 1).mid_quadrant(), 1);
        assert_eq!(ComplexBall::exact_int(-1, 1).mid_quadrant(), 1);
        assert_eq!(ComplexBall::exact_int(-1, 0).mid_quadrant(), 2);
        assert_eq!(ComplexBall::exact_int(-1, -1).mid_quadrant(), 2);
        assert_eq!(ComplexBall::exact_int(0, -1).mid_quadrant(), 3);
        assert_eq!(ComplexBall::exact_int(1, -1).mid_quadrant(), 3);
    }

    #[test]
    fn exp_of_zero_is_tight_one() {
        let e = ComplexBall::exact_int(0, 0).exp(128);
        assert!(e.contains_rational(&BigRational::one(), &BigRational::zero()));
        assert!(e
            .radius()
            .cmp_value(&Dyadic::power_of_two(-120))
            .is_le());
    }

    #[test]
    fn exp_overflow_returns_entire() {
        let huge = ComplexBall::from_rational_disc(
            &BigRational::zero(),
            &BigRational::zero(),
            &BigRational::from_integer(BigInt::from(1i64 << 40)),
            64,
        );
        assert!(huge.exp(64).is_entire());
        assert!(ComplexBall::entire().exp(64).is_entire());
    }

    #[test]
    fn exp_known_value() {
        // exp(1) = 2.718281828459045235360287...
        let e = ComplexBall::exact_int(1, 0).exp(128);
        let approx = rat(2718281828459045235, 1000000000000000000);
        // The approximation differs from e by less than 4e-19; widen by that.
        let wide = ComplexBall::from_rational_disc(
            &approx,
            &BigRational::zero(),
            &rat(1, 1_000_000_000_000_000),
            160,
        );
        assert!(wide.contains_ball(&e) || e.contains_ball(&wide) || {
            // At minimum the enclosures overlap around the true value.
            let d = e.sub(&wide, 160);
            d.contains_zero()
        });
        assert!(e.mid_re().to_rational() > rat(27, 10));
        assert!(e.mid_re().to_rational() < rat(28, 10));
    }

    #[test]
    fn exp_respects_input_radius() {
        let b = ComplexBall::from_rational_disc(&rat(1, 1), &rat(0, 1), &rat(1, 10), 96);
        let e = b.exp(96);
        // exp(1.1) and exp(0.9) must both be inside.
        // exp(1.1) = 3.0041660..., exp(0.9) = 2.4596031...
        assert!(e.contains_rational(&rat(30_041_660, 10_000_000), &BigRational::zero()));
        assert!(e.contains_rational(&rat(24_596_031, 10_000_000), &BigRational::zero()));
    }

    #[test]
    fn containment_checks() {
        let big = ComplexBall::from_rational_disc(&rat(0, 1), &rat(0, 1), &rat(2, 1), 64);
        let small = ComplexBall::from_rational_disc(&rat(1, 2), &rat(1, 2), &rat(1, 4), 64);
        assert!(big.contains_ball(&small));
        assert!(!small.contains_ball(&big));
    }

    #[test]
    fn inversion_of_real_disk() {
        // 1/[2, 4] = [1/4, 1/2]: center 3/8, radius 1/8.
        let b = ComplexBall::from_rational_disc(&rat(3, 1), &rat(0, 1), &rat(1, 1), 96);
        let inv = b.inv(96).unwrap();
        assert!(inv.contains_rational(&rat(1, 4), &BigRational::zero()));
        assert!(inv.contains_rational(&rat(1, 3), &BigRational::zero()));
        assert!(inv.contains_rational(&rat(1, 2), &BigRational::zero()));
        assert!(!inv.contains_rational(&rat(1, 5), &BigRational::zero()));
        assert!(!inv.contains_rational(&rat(3, 5), &BigRational::zero()));
    }

    #[test]
    fn inversion_of_imaginary_disk() {
        // 1/(3i + delta) lies near -i/3.
        let b = ComplexBall::from_rational_disc(&rat(0, 1), &rat(3, 1), &rat(1, 1), 96);
        let inv = b.inv(96).unwrap();
        assert!(inv.contains_rational(&BigRational::zero(), &rat(-1, 3)));
        assert!(inv.contains_rational(&BigRational::zero(), &rat(-1, 2)));
        assert!(inv.contains_rational(&BigRational::zero(), &rat(-1, 4)));
        assert!(!inv.contains_rational(&BigRational::zero(), &rat(1, 3)));
    }

    #[test]
    fn inversion_requires_zero_free_disk() {
        let b = ComplexBall::from_rational_disc(&rat(1, 2), &rat(0, 1), &rat(1, 1), 96);
        assert!(b.inv(96).is_none());
        assert!(ComplexBall::entire().inv(96).is_none());
    }
}
