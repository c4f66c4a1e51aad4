//! Exact number fields presented by an irreducible integer polynomial and a
//! certified isolating rectangle for one distinguished complex root.
//!
//! Field elements are rational coordinate vectors in the power basis of the
//! generator; arithmetic reduces modulo the minimal polynomial, and inverses
//! come from the extended Euclidean algorithm. Elements whose coordinates
//! are supported on the constant term collapse to plain rationals, so a
//! rational is always represented the same way regardless of ambient field.

pub mod factor;
pub mod isolate;
pub mod roots;

use crate::error::{Error, Result};
use crate::numeric::ball::ComplexBall;
use crate::poly::{IntPoly, Poly, RatPoly};
use isolate::Rectangle;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

struct Inner {
    minpoly: IntPoly,
    monic: RatPoly,
    rect: Rectangle,
    /// Best refined generator rectangle so far, with the achieved size
    /// exponent: size <= 2^achieved.
    cache: Mutex<Option<(i64, Rectangle)>>,
}

/// A number field Q(theta) with a pinned-down complex generator.
#[derive(Clone)]
pub struct NumberField(Arc<Inner>);

impl NumberField {
    /// The rationals, presented with minimal polynomial `x` and root zero.
    #[must_use]
    pub fn rationals() -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        NumberField::raw(
            Poly::from_coeffs(vec![BigInt::zero(), BigInt::one()]),
            Rectangle::new(-half.clone(), half.clone(), -half.clone(), half),
        )
    }

    fn raw(minpoly: IntPoly, rect: Rectangle) -> Self {
        let monic = minpoly.to_rational().monic();
        NumberField(Arc::new(Inner {
            minpoly,
            monic,
            rect,
            cache: Mutex::new(None),
        }))
    }

    #[must_use]
    pub fn degree(&self) -> usize {
        self.0.minpoly.degree_or_zero()
    }

    #[must_use]
    pub fn minpoly(&self) -> &IntPoly {
        &self.0.minpoly
    }

    #[must_use]
    pub fn gen_rect(&self) -> Rectangle {
        let cache = self.0.cache.lock().unwrap();
        match &*cache {
            Some((_, r)) => r.clone(),
            None => self.0.rect.clone(),
        }
    }

    /// The rectangle the field was presented with, untouched by later
    /// refinement. Stable across runs, so printers must use this one.
    #[must_use]
    pub fn presentation_rect(&self) -> &Rectangle {
        &self.0.rect
    }

    /// Are the two handles the same field presentation?
    #[must_use]
    pub fn same(&self, other: &NumberField) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.minpoly == other.0.minpoly && self.0.rect == other.0.rect)
    }

    /// Rational value of the generator when the degree is one.
    fn rational_generator(&self) -> Option<BigRational> {
        if self.degree() != 1 {
            return None;
        }
        let a = self.0.minpoly.coeff(1);
        let b = self.0.minpoly.coeff(0);
        Some(BigRational::new(-b, a))
    }

    /// Enclosure of the generator with radius at most `2^-prec`. Returns the
    /// whole-plane ball if refinement stalls within its internal budget.
    #[must_use]
    pub fn gen_ball(&self, prec: u32) -> ComplexBall {
        if let Some(q) = self.rational_generator() {
            return ComplexBall::from_rational_point(&q, &BigRational::zero(), prec + 8);
        }
        let target = -(i64::from(prec)) - 4;
        let mut cache = self.0.cache.lock().unwrap();
        let base = match &*cache {
            Some((ach, r)) if *ach <= target => {
                return r.to_ball(prec + 16);
            }
            Some((_, r)) => r.clone(),
            None => self.0.rect.clone(),
        };
        let budget = (4 * prec).clamp(256, 1 << 14);
        let cf = isolate::int_coeff_fn(&self.0.minpoly);
        match isolate::refine(&cf, &base, target, prec.max(64), budget) {
            Ok(r) => {
                let ball = r.to_ball(prec + 16);
                *cache = Some((target, r));
                ball
            }
            Err(_) => ComplexBall::entire(),
        }
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[t]/({:?})", self.0.minpoly)
    }
}

/// An element of a number field, collapsed to `Rational` whenever possible.
#[derive(Clone)]
pub enum FieldElement {
    Rational(BigRational),
    Extension {
        coords: Vec<BigRational>,
        field: NumberField,
    },
}

impl FieldElement {
    #[must_use]
    pub fn from_rational(q: BigRational) -> Self {
        FieldElement::Rational(q)
    }

    #[must_use]
    pub fn from_int(n: i64) -> Self {
        FieldElement::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Canonical element with the given power-basis coordinates.
    #[must_use]
    pub fn in_field(field: &NumberField, mut coords: Vec<BigRational>) -> Self {
        let d = field.degree();
        assert!(coords.len() <= d, "coordinate vector too long");
        coords.resize(d, BigRational::zero());
        if coords[1..].iter().all(Zero::is_zero) {
            return FieldElement::Rational(coords.swap_remove(0));
        }
        FieldElement::Extension {
            coords,
            field: field.clone(),
        }
    }

    /// The distinguished generator of the field.
    #[must_use]
    pub fn generator(field: &NumberField) -> Self {
        if let Some(q) = field.rational_generator() {
            return FieldElement::Rational(q);
        }
        let mut coords = vec![BigRational::zero(); field.degree()];
        coords[1] = BigRational::one();
        FieldElement::Extension {
            coords,
            field: field.clone(),
        }
    }

    #[must_use]
    pub fn is_rational(&self) -> bool {
        matches!(self, FieldElement::Rational(_))
    }

    #[must_use]
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q),
            FieldElement::Extension { .. } => None,
        }
    }

    #[must_use]
    pub fn field(&self) -> Option<&NumberField> {
        match self {
            FieldElement::Rational(_) => None,
            FieldElement::Extension { field, .. } => Some(field),
        }
    }

    /// Coordinates in the power basis of `field`.
    ///
    /// # Panics
    /// Panics when the element lives in a different field.
    #[must_use]
    pub fn coords_in(&self, field: &NumberField) -> Vec<BigRational> {
        match self {
            FieldElement::Rational(q) => {
                let mut v = vec![BigRational::zero(); field.degree()];
                v[0] = q.clone();
                v
            }
            FieldElement::Extension { coords, field: f } => {
                assert!(f.same(field), "element from a different field");
                coords.clone()
            }
        }
    }

    fn repr_poly(&self) -> RatPoly {
        match self {
            FieldElement::Rational(q) => RatPoly::constant(q.clone()),
            FieldElement::Extension { coords, .. } => Poly::from_coeffs(coords.clone()),
        }
    }

    /// Ambient field shared by two elements, if any element has one.
    fn common_field<'a>(&'a self, other: &'a FieldElement) -> Option<&'a NumberField> {
        match (self.field(), other.field()) {
            (Some(f), Some(g)) => {
                assert!(f.same(g), "elements from different fields");
                Some(f)
            }
            (Some(f), None) => Some(f),
            (None, Some(g)) => Some(g),
            (None, None) => None,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    #[must_use]
    pub fn inv(&self) -> Option<FieldElement> {
        match self {
            FieldElement::Rational(q) => {
                if q.is_zero() {
                    None
                } else {
                    Some(FieldElement::Rational(q.recip()))
                }
            }
            FieldElement::Extension { field, .. } => {
                let p = self.repr_poly();
                let (g, u, _) = p.extended_gcd(&field.0.monic);
                assert!(g.degree() == Some(0), "minimal polynomial not irreducible");
                let inv = u.div_rem(&field.0.monic).1;
                Some(FieldElement::in_field(field, inv.coeffs().to_vec()))
            }
        }
    }

    #[must_use]
    pub fn pow(&self, n: u32) -> FieldElement {
        let mut acc = FieldElement::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    /// Enclosure of the element; whole plane if the generator ball stalls.
    #[must_use]
    pub fn to_ball(&self, prec: u32) -> ComplexBall {
        match self {
            FieldElement::Rational(q) => {
                ComplexBall::from_rational_point(q, &BigRational::zero(), prec)
            }
            FieldElement::Extension { coords, field } => {
                let wp = prec + 32;
                let theta = field.gen_ball(wp);
                if theta.is_entire() {
                    return ComplexBall::entire();
                }
                let mut acc = ComplexBall::exact_int(0, 0);
                for c in coords.iter().rev() {
                    let cb = ComplexBall::from_rational_point(c, &BigRational::zero(), wp);
                    acc = acc.mul(&theta, wp).add(&cb, wp);
                }
                acc
            }
        }
    }

    /// Deterministic structural ordering within one ambient field.
    #[must_use]
    pub fn canonical_cmp(&self, other: &FieldElement) -> Ordering {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => a.cmp(b),
            (FieldElement::Rational(_), FieldElement::Extension { .. }) => Ordering::Less,
            (FieldElement::Extension { .. }, FieldElement::Rational(_)) => Ordering::Greater,
            (
                FieldElement::Extension { coords: a, .. },
                FieldElement::Extension { coords: b, .. },
            ) => a.cmp(b),
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => a == b,
            (
                FieldElement::Extension { coords: a, field: f },
                FieldElement::Extension { coords: b, field: g },
            ) => f.same(g) && a == b,
            _ => false,
        }
    }
}

impl Eq for FieldElement {}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        match self.common_field(&rhs) {
            None => match (self, rhs) {
                (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                    FieldElement::Rational(a + b)
                }
                _ => unreachable!(),
            },
            Some(field) => {
                let field = field.clone();
                let p = &self.repr_poly() + &rhs.repr_poly();
                FieldElement::in_field(&field, p.coeffs().to_vec())
            }
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self + (-rhs)
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        match self.common_field(&rhs) {
            None => match (self, rhs) {
                (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                    FieldElement::Rational(a * b)
                }
                _ => unreachable!(),
            },
            Some(field) => {
                let field = field.clone();
                let prod = &self.repr_poly() * &rhs.repr_poly();
                let rem = prod.div_rem(&field.0.monic).1;
                FieldElement::in_field(&field, rem.coeffs().to_vec())
            }
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(-q),
            FieldElement::Extension { coords, field } => FieldElement::Extension {
                coords: coords.into_iter().map(|c| -c).collect(),
                field,
            },
        }
    }
}

impl Div for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: FieldElement) -> FieldElement {
        let inv = rhs.inv().expect("division by zero field element");
        self * inv
    }
}

impl Zero for FieldElement {
    fn zero() -> Self {
        FieldElement::Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        matches!(self, FieldElement::Rational(q) if q.is_zero())
    }
}

impl One for FieldElement {
    fn one() -> Self {
        FieldElement::Rational(BigRational::one())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => write!(f, "{q}"),
            FieldElement::Extension { coords, .. } => {
                write!(f, "[")?;
                for (i, c) in coords.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Polynomials with number field coefficients.
pub type FieldPoly = Poly<FieldElement>;

/// A field homomorphism determined by the image of the source generator.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: NumberField,
    target: NumberField,
    gen_image: FieldElement,
}

impl Embedding {
    #[must_use]
    pub fn identity(field: &NumberField) -> Self {
        Embedding {
            source: field.clone(),
            target: field.clone(),
            gen_image: FieldElement::generator(field),
        }
    }

    #[must_use]
    pub fn target(&self) -> &NumberField {
        &self.target
    }

    #[must_use]
    pub fn gen_image(&self) -> &FieldElement {
        &self.gen_image
    }

    /// Image of an element under the homomorphism.
    #[must_use]
    pub fn apply(&self, e: &FieldElement) -> FieldElement {
        match e {
            FieldElement::Rational(q) => FieldElement::Rational(q.clone()),
            FieldElement::Extension { coords, field } => {
                assert!(field.same(&self.source), "element outside the source field");
                let mut acc = FieldElement::zero();
                for c in coords.iter().rev() {
                    acc = acc * self.gen_image.clone()
                        + FieldElement::Rational(c.clone());
                }
                acc
            }
        }
    }

    /// Lift every coefficient of a polynomial.
    #[must_use]
    pub fn apply_poly(&self, p: &FieldPoly) -> FieldPoly {
        p.map(|c| self.apply(c))
    }
}

/// Build the field presented by an irreducible polynomial and an isolating
/// rectangle around the intended root.
pub fn nf_init(
    minpoly: &IntPoly,
    rect: &Rectangle,
    cfg: &crate::Config,
) -> Result<NumberField> {
    let prim = if minpoly.is_zero() {
        return Err(Error::ZeroPolynomial);
    } else {
        minpoly.primitive_part()
    };
    if !factor::is_irreducible(&prim, cfg.factor_degree_cap, cfg.precision_cap)? {
        return Err(Error::NotIrreducible);
    }
    {
        let cf = isolate::int_coeff_fn(&prim);
        let n = match isolate::count_roots_auto(&cf, rect, 64, cfg.precision_cap) {
            Ok(n) => n,
            Err(Error::PrecisionCap { .. }) => return Err(Error::BoxNotIsolating),
            Err(e) => return Err(e),
        };
        if n != 1 {
            return Err(Error::BoxNotIsolating);
        }
    }
    Ok(NumberField::raw(prim, rect.clone()))
}

/// Horner evaluation of an integer polynomial at a field element.
#[must_use]
pub fn eval_int_at(p: &IntPoly, at: &FieldElement) -> FieldElement {
    p.eval_map(
        at,
        |c| FieldElement::Rational(BigRational::from_integer(c.clone())),
        FieldElement::zero(),
    )
}

/// Resultant_t of `f(t)` and `g(s - k t)`, a polynomial in `s` whose roots
/// are all sums `k alpha + beta` over roots `alpha` of `f`, `beta` of `g`.
fn joint_resultant(f: &IntPoly, g: &IntPoly, k: i64) -> RatPoly {
    let to_rp = |c: &BigInt| RatPoly::constant(BigRational::from_integer(c.clone()));
    let ft: Poly<RatPoly> = Poly::from_coeffs(f.coeffs().iter().map(to_rp).collect());
    // u(s, t) = s - k t, outer variable t.
    let u: Poly<RatPoly> = Poly::from_coeffs(vec![
        RatPoly::x(),
        RatPoly::constant(BigRational::from_integer(BigInt::from(-k))),
    ]);
    let mut gu = Poly::<RatPoly>::zero();
    for c in g.coeffs().iter().rev() {
        gu = &(&gu * &u) + &Poly::constant(to_rp(c));
    }
    crate::poly::resultant(&ft, &gu)
}

/// Bounding box of a ball as a rectangle, if it has positive extent.
fn ball_box(b: &ComplexBall) -> Option<Rectangle> {
    if b.is_entire() {
        return None;
    }
    let cx = b.mid_re().to_rational();
    let cy = b.mid_im().to_rational();
    let r = b.radius().to_rational();
    if !r.is_positive() {
        let eps = BigRational::new(BigInt::one(), BigInt::one() << 80u64);
        return Some(Rectangle::new(&cx - &eps, &cx + &eps, &cy - &eps, &cy + &eps));
    }
    Some(Rectangle::new(&cx - &r, &cx + &r, &cy - &r, &cy + &r))
}

fn rect_contains_rect(outer: &Rectangle, inner: &Rectangle) -> bool {
    outer.x0 <= inner.x0 && inner.x1 <= outer.x1 && outer.y0 <= inner.y0 && inner.y1 <= outer.y1
}

/// Join two number fields: returns a field containing both, with embeddings.
///
/// Tries generators `gamma = k theta1 + theta2` for increasing `k`; a `k`
/// is usable when the joint resultant is squarefree, which certifies that
/// all root sums are distinct and `gamma` is primitive.
pub fn nf_extend(
    f1: &NumberField,
    f2: &NumberField,
    cfg: &crate::Config,
) -> Result<(NumberField, Embedding, Embedding)> {
    if f1.same(f2) {
        return Ok((f1.clone(), Embedding::identity(f1), Embedding::identity(f1)));
    }
    if f2.degree() == 1 {
        let q = f2.rational_generator().expect("degree one");
        let e2 = Embedding {
            source: f2.clone(),
            target: f1.clone(),
            gen_image: FieldElement::Rational(q),
        };
        return Ok((f1.clone(), Embedding::identity(f1), e2));
    }
    if f1.degree() == 1 {
        let (field, e2, e1) = nf_extend(f2, f1, cfg)?;
        return Ok((field, e1, e2));
    }

    let f = f1.minpoly();
    let g = f2.minpoly();
    'k: for k in 1..=cfg.extension_bound {
        let r = joint_resultant(f, g, k).to_integer_primitive();
        if r.degree_or_zero() != f1.degree() * f2.degree() {
            continue;
        }
        let rr = r.to_rational();
        if rr.gcd(&rr.derivative()).degree_or_zero() != 0 {
            continue;
        }
        let fac = factor::factor_int(&r, cfg.factor_degree_cap, cfg.precision_cap)?;

        // Identify the irreducible factor vanishing at gamma by certified
        // exclusion of all the others.
        let kb = BigInt::from(k);
        let mut prec = 64u32;
        let minpoly = loop {
            let gamma = f1.gen_ball(prec).scale_int(&kb, prec + 8).add(&f2.gen_ball(prec), prec + 8);
            let mut alive = Vec::new();
            if !gamma.is_entire() {
                for (h, _) in &fac.factors {
                    let hb = isolate::eval_int_poly(h, &gamma, prec + 8);
                    if !hb.excludes_zero() {
                        alive.push(h.clone());
                    }
                }
            }
            if alive.len() == 1 {
                break alive.pop().expect("one candidate");
            }
            if prec >= cfg.precision_cap {
                return Err(Error::PrecisionCap {
                    cap_bits: cfg.precision_cap,
                });
            }
            prec = (prec * 2).min(cfg.precision_cap);
        };

        // Isolating rectangle for gamma among the roots of its minpoly.
        let rects = {
            let mcf = isolate::int_coeff_fn(&minpoly);
            isolate::isolate_all(&mcf, minpoly.degree_or_zero(), 64, cfg.precision_cap)?
        };
        let mut prec = 64u32;
        let gen_rect = loop {
            let gamma = f1.gen_ball(prec).scale_int(&kb, prec + 8).add(&f2.gen_ball(prec), prec + 8);
            if let Some(gb) = ball_box(&gamma) {
                let mut inside: Vec<&Rectangle> =
                    rects.iter().filter(|r| rect_contains_rect(r, &gb)).collect();
                if inside.len() == 1 {
                    break inside.pop().expect("one rectangle").clone();
                }
            }
            if prec >= cfg.precision_cap {
                return Err(Error::PrecisionCap {
                    cap_bits: cfg.precision_cap,
                });
            }
            prec = (prec * 2).min(cfg.precision_cap);
        };

        let field = NumberField::raw(minpoly, gen_rect);
        let gamma_el = FieldElement::generator(&field);

        // theta1 is the root of gcd(f(t), g(gamma - k t)), which is linear.
        let lift = |c: &BigInt| FieldElement::Rational(BigRational::from_integer(c.clone()));
        let ft: FieldPoly = Poly::from_coeffs(f.coeffs().iter().map(lift).collect());
        let u: FieldPoly = Poly::from_coeffs(vec![
            gamma_el.clone(),
            FieldElement::Rational(BigRational::from_integer(BigInt::from(-k))),
        ]);
        let mut gu = FieldPoly::zero();
        for c in g.coeffs().iter().rev() {
            gu = &(&gu * &u) + &Poly::constant(lift(c));
        }
        let h = ft.gcd(&gu);
        if h.degree() != Some(1) {
            continue 'k;
        }
        let theta1 = -h.coeff(0);
        let theta2 = gamma_el.clone()
            - FieldElement::Rational(BigRational::from_integer(kb.clone())) * theta1.clone();
        assert!(
            eval_int_at(f, &theta1).is_zero(),
            "first generator image must satisfy its minimal polynomial"
        );
        assert!(
            eval_int_at(g, &theta2).is_zero(),
            "second generator image must satisfy its minimal polynomial"
        );
        let e1 = Embedding {
            source: f1.clone(),
            target: field.clone(),
            gen_image: theta1,
        };
        let e2 = Embedding {
            source: f2.clone(),
            target: field.clone(),
            gen_image: theta2,
        };
        return Ok((field, e1, e2));
    }
    Err(Error::ExtensionFailed {
        bound: cfg.extension_bound,
    })
}
