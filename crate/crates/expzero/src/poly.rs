//! Dense univariate polynomials, generic over an exact coefficient ring.
//!
//! Coefficients are stored by ascending power with no trailing zeros, so the
//! zero polynomial has an empty coefficient vector and structural equality is
//! ring equality. The generic core only assumes ring operations via
//! `num_traits`; division-based algorithms (gcd, square-free splitting) are
//! available when the coefficients form a field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Ring bound for polynomial coefficients.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl<C: Coeff> Poly<C> {
    #[must_use]
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    #[must_use]
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    #[must_use]
    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    #[must_use]
    pub fn constant(c: C) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `c * x^degree`.
    #[must_use]
    pub fn monomial(c: C, degree: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    #[must_use]
    pub fn x() -> Self {
        Poly::monomial(C::one(), 1)
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    #[must_use]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    #[must_use]
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    #[must_use]
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    #[must_use]
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    #[must_use]
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    #[must_use]
    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    #[must_use]
    pub fn eval(&self, at: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }

    /// Horner evaluation into any ring `T` through a coefficient embedding.
    pub fn eval_map<T>(&self, at: &T, mut embed: impl FnMut(&C) -> T, zero: T) -> T
    where
        T: Clone + Add<Output = T> + Mul<Output = T>,
    {
        let mut acc = zero;
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + embed(c);
        }
        acc
    }

    #[must_use]
    pub fn map<D: Coeff>(&self, f: impl FnMut(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    #[must_use]
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut n = C::zero();
            for _ in 0..i {
                n = n + C::one();
            }
            out.push(n * c.clone());
        }
        Poly::from_coeffs(out)
    }

    #[must_use]
    pub fn scale(&self, k: &C) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Multiply by `x^n`.
    #[must_use]
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Poly::from_coeffs(out)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Poly::from_coeffs(out)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }

    #[must_use]
    pub fn pow(&self, mut n: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl<C: Coeff + Div<Output = C>> Poly<C> {
    /// Long division over a field.
    ///
    /// # Panics
    /// Panics if `divisor` is zero.
    #[must_use]
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.clone();
        let mut quot: Vec<C> = Vec::new();
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let q = rem.leading().unwrap().clone() / dlead.clone();
            let shift = rdeg - ddeg;
            if quot.len() < shift + 1 {
                quot.resize(shift + 1, C::zero());
            }
            quot[shift] = q.clone();
            rem = rem.sub_ref(&divisor.scale(&q).shift_up(shift));
        }
        (Poly::from_coeffs(quot), rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    #[must_use]
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    #[must_use]
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = C::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    #[must_use]
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, u, v)` with `u*self + v*other = g`, `g` monic.
    #[must_use]
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::one();
        let mut s1 = Poly::zero();
        let mut t0 = Poly::zero();
        let mut t1 = Poly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub_ref(&q.mul_ref(&s1));
            let t = t0.sub_ref(&q.mul_ref(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.leading() {
            None => (Poly::zero(), Poly::zero(), Poly::zero()),
            Some(l) => {
                let inv = C::one() / l.clone();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Square-free part: `self / gcd(self, self')`, made monic.
    #[must_use]
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Yun's square-free decomposition: returns `(factor, multiplicity)` pairs
    /// with the factors monic, square-free, pairwise coprime, and
    /// `self = lc * prod factor^multiplicity`.
    #[must_use]
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero(), "square-free decomposition of zero");
        let f = self.monic();
        if f.is_constant() {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        if a0.is_constant() {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = f.exact_div(&a0);
        let mut c = df.exact_div(&a0);
        let mut i = 1usize;
        loop {
            let d = c.sub_ref(&b.derivative());
            if d.is_zero() {
                if b.degree().unwrap_or(0) > 0 {
                    out.push((b.monic(), i));
                }
                break;
            }
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a);
            c = d.exact_div(&a);
            i += 1;
            if b.is_constant() {
                break;
            }
        }
        out
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, other: &Poly<C>) -> Poly<C> {
        self.add_ref(other)
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, other: &Poly<C>) -> Poly<C> {
        self.sub_ref(other)
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, other: &Poly<C>) -> Poly<C> {
        self.mul_ref(other)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, other: Poly<C>) -> Poly<C> {
        (&self).add_ref(&other)
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, other: Poly<C>) -> Poly<C> {
        (&self).sub_ref(&other)
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, other: Poly<C>) -> Poly<C> {
        (&self).mul_ref(&other)
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -(&self)
    }
}

impl<C: Coeff> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for Poly<C> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<C: Coeff + fmt::Debug> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c:?}")?,
                1 => write!(f, "{c:?}*x")?,
                _ => write!(f, "{c:?}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl IntPoly {
    /// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
    #[must_use]
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Content removed and leading coefficient made positive.
    #[must_use]
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        self.map(|c| c / &g)
    }

    #[must_use]
    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl RatPoly {
    /// Clears denominators and removes integer content; positive leading coefficient.
    #[must_use]
    pub fn to_integer_primitive(&self) -> IntPoly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let scaled: IntPoly =
            self.map(|c| (c * BigRational::from_integer(den.clone())).to_integer());
        scaled.primitive_part()
    }
}

/// Exact division in rings where Bareiss elimination needs it.
pub trait ExactDiv: Sized {
    fn exact_div_by(&self, divisor: &Self) -> Self;
}

impl ExactDiv for BigRational {
    fn exact_div_by(&self, divisor: &Self) -> Self {
        self / divisor
    }
}

impl<C: Coeff + Div<Output = C>> ExactDiv for Poly<C> {
    fn exact_div_by(&self, divisor: &Self) -> Self {
        self.exact_div(divisor)
    }
}

/// Resultant of two polynomials in their main variable, eliminating it.
///
/// Entries live in any exact-division ring `E`; the Sylvester determinant is
/// computed by Bareiss fraction-free elimination, so every division is exact.
/// Returns zero if either input is zero.
#[must_use]
pub fn resultant<E>(a: &Poly<E>, b: &Poly<E>) -> E
where
    E: Coeff + ExactDiv,
{
    if a.is_zero() || b.is_zero() {
        return E::zero();
    }
    let m = a.degree().unwrap();
    let n = b.degree().unwrap();
    if m == 0 {
        return a.coeff(0).pow_usize(n);
    }
    if n == 0 {
        return b.coeff(0).pow_usize(m);
    }
    let size = m + n;
    let mut mat: Vec<Vec<E>> = vec![vec![E::zero(); size]; size];
    for row in 0..n {
        for (k, c) in a.coeffs().iter().enumerate() {
            mat[row][row + m - k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in b.coeffs().iter().enumerate() {
            mat[n + row][row + n - k] = c.clone();
        }
    }
    bareiss_determinant(mat)
}

trait PowUsize {
    fn pow_usize(&self, n: usize) -> Self;
}

impl<E: Coeff> PowUsize for E {
    fn pow_usize(&self, n: usize) -> Self {
        let mut acc = E::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }
}

/// Fraction-free determinant; destroys the matrix.
fn bareiss_determinant<E: Coeff + ExactDiv>(mut m: Vec<Vec<E>>) -> E {
    let n = m.len();
    if n == 0 {
        return E::one();
    }
    let mut sign_flip = false;
    let mut prev = E::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                None => return E::zero(),
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num.exact_div_by(&prev);
            }
            m[i][k] = E::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    fn qp(coeffs: &[i64]) -> RatPoly {
        Poly::from_coeffs(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        let p = qp(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(qp(&[0, 0]).is_zero());
        assert_eq!(qp(&[]).degree(), None);
    }

    #[test]
    fn arithmetic_basics() {
        let a = qp(&[1, 1]); // 1 + x
        let b = qp(&[-1, 1]); // -1 + x
        assert_eq!(&a * &b, qp(&[-1, 0, 1]));
        assert_eq!(&a + &b, qp(&[0, 2]));
        assert_eq!(&a - &a, Poly::zero());
        assert_eq!(a.pow(3), qp(&[1, 3, 3, 1]));
    }

    #[test]
    fn eval_horner() {
        let p = qp(&[2, 0, 1]); // x^2 + 2
        assert_eq!(p.eval(&q(3)), q(11));
        assert_eq!(Poly::<BigRational>::zero().eval(&q(5)), q(0));
    }

    #[test]
    fn division_and_gcd() {
        // Worked gcd: gcd(x^2 - 1, x^2 - 2x + 1) = x - 1.
        let a = qp(&[-1, 0, 1]);
        let b = qp(&[1, -2, 1]);
        assert_eq!(a.gcd(&b), qp(&[-1, 1]));

        let (quo, rem) = qp(&[1, 0, 0, 1]).div_rem(&qp(&[1, 1]));
        assert_eq!(&(&quo * &qp(&[1, 1])) + &rem, qp(&[1, 0, 0, 1]));
        assert_eq!(rem, Poly::zero());
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = qp(&[-2, 0, 1]); // x^2 - 2
        let b = qp(&[0, 0, 1]); // x^2
        let (g, u, v) = a.extended_gcd(&b);
        assert_eq!(g, Poly::one());
        assert_eq!(&(&u * &a) + &(&v * &b), Poly::one());
    }

    #[test]
    fn squarefree_decomposition_yun() {
        // (x-1)^2 (x+2)
        let p = &qp(&[-1, 1]).pow(2) * &qp(&[2, 1]);
        let parts = p.squarefree_decomposition();
        assert_eq!(parts, vec![(qp(&[2, 1]), 1), (qp(&[-1, 1]), 2)]);
        // Multiplying back recovers the monic polynomial.
        let mut prod: RatPoly = Poly::one();
        for (f, m) in &parts {
            prod = &prod * &f.pow(*m);
        }
        assert_eq!(prod, p.monic());
    }

    #[test]
    fn integer_content_and_primitive() {
        let p: IntPoly = Poly::from_coeffs(vec![
            BigInt::from(-6),
            BigInt::from(0),
            BigInt::from(-9),
        ]);
        assert_eq!(p.content(), BigInt::from(3));
        assert_eq!(
            p.primitive_part(),
            Poly::from_coeffs(vec![BigInt::from(2), BigInt::from(0), BigInt::from(3)])
        );
    }

    #[test]
    fn rational_to_integer_primitive() {
        let p = RatPoly::from_coeffs(vec![
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::new(BigInt::from(1), BigInt::from(3)),
        ]);
        let ip = p.to_integer_primitive();
        assert_eq!(
            ip,
            Poly::from_coeffs(vec![BigInt::from(3), BigInt::from(2)])
        );
    }

    /// Independent resultant oracle: product of a's leading power and
    /// b evaluated at a's roots is unavailable symbolically, so cross-check
    /// against the Euclidean-algorithm resultant over Q instead.
    fn resultant_euclid(a: &RatPoly, b: &RatPoly) -> BigRational {
        if a.is_zero() || b.is_zero() {
            return BigRational::zero();
        }
        let m = a.degree().unwrap();
        let n = b.degree().unwrap();
        if n == 0 {
            return b.coeff(0).pow_usize(m);
        }
        let (_, r) = a.div_rem(b);
        if r.is_zero() {
            return BigRational::zero();
        }
        let d = r.degree().unwrap();
        let sign = if (m * n) % 2 == 0 { 1 } else { -1 };
        let lead = b.leading().unwrap().clone();
        q(sign) * lead.pow_usize(m - d) * resultant_euclid(b, &r)
    }

    #[test]
    fn resultant_matches_euclid_oracle() {
        let cases = [
            (qp(&[-2, 0, 1]), qp(&[-3, 0, 1])),
            (qp(&[1, 1]), qp(&[2, -1, 3])),
            (qp(&[-1, 0, 0, 1]), qp(&[1, 1, 1])),
            (qp(&[5]), qp(&[1, 2, 3])),
            (qp(&[0, 1]), qp(&[0, 0, 1])),
        ];
        for (a, b) in cases {
            assert_eq!(resultant(&a, &b), resultant_euclid(&a, &b), "{a:?} {b:?}");
        }
    }

    #[test]
    fn resultant_detects_common_root() {
        // x - 1 and x^2 - 1 share a root.
        assert!(resultant(&qp(&[-1, 1]), &qp(&[-1, 0, 1])).is_zero());
        assert!(!resultant(&qp(&[-1, 1]), &qp(&[1, 0, 1])).is_zero());
    }

    #[test]
    fn bivariate_resultant_eliminates() {
        // Res_t(t^2 - 2, x - t) = x^2 - 2 up to sign.
        let two = qp(&[2]);
        let a: Poly<RatPoly> =
            Poly::from_coeffs(vec![-&two, Poly::zero(), Poly::<BigRational>::one()]);
        let b: Poly<RatPoly> = Poly::from_coeffs(vec![qp(&[0, 1]), -RatPoly::one()]);
        let r = resultant(&a, &b);
        assert_eq!(r, qp(&[-2, 0, 1]));
    }
}
