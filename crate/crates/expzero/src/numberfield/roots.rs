//! Algebraic numbers as irreducible minimal polynomials with certified
//! isolating rectangles, and root isolation for polynomials over a field.
//!
//! A root of a polynomial with number field coefficients is pinned down in
//! two steps: the norm resultant eliminates the field generator, producing an
//! integer polynomial annihilating every root; factoring it and excluding
//! factors by ball evaluation identifies each root's minimal polynomial
//! exactly, because a root must vanish on one factor and certified exclusion
//! removes all others.

use super::factor;
use super::isolate::{self, Rectangle};
use super::{nf_init, FieldElement, FieldPoly, NumberField};
use crate::error::{Error, Result};
use crate::numeric::ball::ComplexBall;
use crate::poly::{resultant, IntPoly, Poly, RatPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::cmp::Ordering;

/// An algebraic number: irreducible primitive minimal polynomial plus an
/// isolating rectangle selecting one of its roots.
#[derive(Clone, Debug)]
pub struct AlgebraicRoot {
    minpoly: IntPoly,
    rect: Rectangle,
}

fn rational_unit_rect(x: &BigRational, y: &BigRational) -> Rectangle {
    let one = BigRational::from_integer(BigInt::from(1));
    Rectangle::new(x - &one, x + &one, y - &one, y + &one)
}

/// Floor-ish base-2 logarithm of a positive rational, within one.
fn log2_approx(q: &BigRational) -> i64 {
    let n = q.numer().magnitude().bits() as i64;
    let d = q.denom().magnitude().bits() as i64;
    n - d
}

impl AlgebraicRoot {
    /// # Panics
    /// The polynomial must be irreducible and primitive with positive
    /// leading coefficient, and the rectangle must isolate one root; callers
    /// are expected to have certified this.
    #[must_use]
    pub fn new(minpoly: IntPoly, rect: Rectangle) -> Self {
        assert!(minpoly.degree_or_zero() >= 1);
        AlgebraicRoot { minpoly, rect }
    }

    #[must_use]
    pub fn from_rational(q: &BigRational) -> Self {
        let minpoly = Poly::from_coeffs(vec![-q.numer().clone(), q.denom().clone()]);
        AlgebraicRoot {
            minpoly: minpoly.primitive_part(),
            rect: rational_unit_rect(q, &BigRational::zero()),
        }
    }

    #[must_use]
    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    #[must_use]
    pub fn rect(&self) -> &Rectangle {
        &self.rect
    }

    #[must_use]
    pub fn degree(&self) -> usize {
        self.minpoly.degree_or_zero()
    }

    /// Exact rational value for degree-one roots.
    #[must_use]
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.degree() != 1 {
            return None;
        }
        Some(BigRational::new(-self.minpoly.coeff(0), self.minpoly.coeff(1)))
    }

    /// Enclosure with radius at most about `2^-prec`.
    #[must_use]
    pub fn to_ball(&self, prec: u32, prec_cap: u32) -> ComplexBall {
        if let Some(q) = self.as_rational() {
            return ComplexBall::from_rational_point(&q, &BigRational::zero(), prec + 8);
        }
        let cf = isolate::int_coeff_fn(&self.minpoly);
        let target = -(i64::from(prec)) - 4;
        match isolate::refine(&cf, &self.rect, target, prec.max(64), prec_cap) {
            Ok(r) => r.to_ball(prec + 16),
            Err(_) => ComplexBall::entire(),
        }
    }

    /// The complex conjugate root: same minimal polynomial, mirrored box.
    #[must_use]
    pub fn conjugate(&self) -> AlgebraicRoot {
        AlgebraicRoot {
            minpoly: self.minpoly.clone(),
            rect: Rectangle::new(
                self.rect.x0.clone(),
                self.rect.x1.clone(),
                -self.rect.y1.clone(),
                -self.rect.y0.clone(),
            ),
        }
    }

    /// Exact equality of the represented numbers.
    pub fn eq_root(&self, other: &AlgebraicRoot, cfg: &crate::Config) -> Result<bool> {
        if self.minpoly != other.minpoly {
            return Ok(false);
        }
        if self.degree() == 1 {
            return Ok(true);
        }
        let cf = isolate::int_coeff_fn(&self.minpoly);
        let mut rb = other.rect.clone();
        loop {
            let disjoint = rb.x1 <= self.rect.x0
                || self.rect.x1 <= rb.x0
                || rb.y1 <= self.rect.y0
                || self.rect.y1 <= rb.y0;
            if disjoint {
                return Ok(false);
            }
            let contained = self.rect.x0 <= rb.x0
                && rb.x1 <= self.rect.x1
                && self.rect.y0 <= rb.y0
                && rb.y1 <= self.rect.y1;
            if contained {
                return Ok(true);
            }
            let target = log2_approx(&rb.size()) - 2;
            rb = isolate::refine(&cf, &rb, target, 64, cfg.precision_cap)?;
        }
    }

    /// Is the root a real number? Decided exactly via the conjugate root.
    pub fn is_real(&self, cfg: &crate::Config) -> Result<bool> {
        if self.degree() == 1 {
            return Ok(true);
        }
        self.eq_root(&self.conjugate(), cfg)
    }

    /// Present the root as a number field generator.
    pub fn to_field(&self, cfg: &crate::Config) -> Result<(NumberField, FieldElement)> {
        if let Some(q) = self.as_rational() {
            return Ok((NumberField::rationals(), FieldElement::Rational(q)));
        }
        let field = nf_init(&self.minpoly, &self.rect, cfg)?;
        let gen = FieldElement::generator(&field);
        Ok((field, gen))
    }

    /// Deterministic ordering key: approximate (re, im), then structure.
    #[must_use]
    pub fn sort_key(&self, prec_cap: u32) -> (BigRational, BigRational) {
        let b = self.to_ball(96, prec_cap);
        if b.is_entire() {
            return (BigRational::zero(), BigRational::zero());
        }
        (b.mid_re().to_rational(), b.mid_im().to_rational())
    }
}

/// Sort roots by approximate (re, im) with a structural tiebreak.
pub fn sort_roots(roots: &mut [AlgebraicRoot], cfg: &crate::Config) {
    let mut keyed: Vec<(BigRational, BigRational, AlgebraicRoot)> = roots
        .iter()
        .map(|r| {
            let (re, im) = r.sort_key(cfg.precision_cap);
            (re, im, r.clone())
        })
        .collect();
    keyed.sort_by(|a, b| {
        a.0.cmp(&b.0)
            .then_with(|| a.1.cmp(&b.1))
            .then_with(|| a.2.minpoly.coeffs().cmp(b.2.minpoly.coeffs()))
    });
    for (slot, (_, _, r)) in roots.iter_mut().zip(keyed) {
        *slot = r;
    }
}

/// Remove duplicates (exact equality) preserving first occurrences.
pub fn dedup_roots(roots: Vec<AlgebraicRoot>, cfg: &crate::Config) -> Result<Vec<AlgebraicRoot>> {
    let mut out: Vec<AlgebraicRoot> = Vec::new();
    for r in roots {
        let mut seen = false;
        for kept in &out {
            if kept.eq_root(&r, cfg)? {
                seen = true;
                break;
            }
        }
        if !seen {
            out.push(r);
        }
    }
    Ok(out)
}

/// Norm of a monic field polynomial down to the rationals: an integer
/// polynomial whose roots include every root of the input.
fn norm_to_rationals(hs: &FieldPoly, field: &NumberField) -> IntPoly {
    if hs.coeffs().iter().all(FieldElement::is_rational) {
        let rp: RatPoly = hs.map(|c| c.as_rational().expect("rational coefficient").clone());
        return rp.to_integer_primitive();
    }
    let d = field.degree();
    // H(t, s) = sum_j (sum_i coords(c_i)[j] s^i) t^j, outer variable t.
    let mut tcoeffs: Vec<RatPoly> = vec![RatPoly::zero(); d];
    for (i, c) in hs.coeffs().iter().enumerate() {
        let coords = c.coords_in(field);
        for (j, q) in coords.into_iter().enumerate() {
            if !q.is_zero() {
                tcoeffs[j] = &tcoeffs[j] + &RatPoly::monomial(q, i);
            }
        }
    }
    let ht: Poly<RatPoly> = Poly::from_coeffs(tcoeffs);
    let mt: Poly<RatPoly> = Poly::from_coeffs(
        field
            .minpoly()
            .coeffs()
            .iter()
            .map(|c| RatPoly::constant(BigRational::from_integer(c.clone())))
            .collect(),
    );
    resultant(&mt, &ht).to_integer_primitive()
}

/// Certified isolation of all complex roots of a nonzero polynomial with
/// coefficients in a number field. Multiplicities are discarded.
pub fn isolate_field_roots(
    h: &FieldPoly,
    field: &NumberField,
    cfg: &crate::Config,
) -> Result<Vec<AlgebraicRoot>> {
    if h.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    if h.degree_or_zero() == 0 {
        return Ok(Vec::new());
    }
    let hs = h.squarefree_part().monic();
    let n = hs.degree_or_zero();

    let norm = norm_to_rationals(&hs, field);
    let fac = factor::factor_int(&norm, cfg.factor_degree_cap, cfg.precision_cap)?;
    let irreducibles: Vec<IntPoly> = fac.factors.into_iter().map(|(p, _)| p).collect();

    let cf = |prec: u32| -> Vec<ComplexBall> {
        hs.coeffs().iter().map(|c| c.to_ball(prec)).collect()
    };
    let rects = isolate::isolate_all(&cf, n, 64, cfg.precision_cap)?;

    let mut out = Vec::with_capacity(n);
    for rect in rects {
        let mut cur = rect;
        let mut target: i64 = -16;
        // Identify the unique factor that vanishes at this root.
        let minpoly = loop {
            let prec = (target.unsigned_abs() as u32 + 32).min(cfg.precision_cap);
            let ball = cur.to_ball(prec);
            let alive: Vec<&IntPoly> = irreducibles
                .iter()
                .filter(|p| !isolate::eval_int_poly(p, &ball, prec).excludes_zero())
                .collect();
            if alive.len() == 1 {
                break alive[0].clone();
            }
            if target.unsigned_abs() as u32 >= cfg.precision_cap {
                return Err(Error::PrecisionCap {
                    cap_bits: cfg.precision_cap,
                });
            }
            target *= 2;
            cur = isolate::refine(&cf, &cur, target, 64, cfg.precision_cap)?;
        };
        // Shrink until the box also isolates among the minpoly's own roots.
        {
            let mcf = isolate::int_coeff_fn(&minpoly);
            loop {
                match isolate::count_roots_auto(&mcf, &cur, 64, cfg.precision_cap) {
                    Ok(1) => break,
                    Ok(_) | Err(Error::PrecisionCap { .. }) => {
                        if target.unsigned_abs() as u32 >= cfg.precision_cap {
                            return Err(Error::PrecisionCap {
                                cap_bits: cfg.precision_cap,
                            });
                        }
                        target *= 2;
                        cur = isolate::refine(&cf, &cur, target, 64, cfg.precision_cap)?;
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        out.push(AlgebraicRoot {
            minpoly,
            rect: cur,
        });
    }
    Ok(out)
}

/// Order roots for comparisons: true if `a` sorts strictly before `b`.
#[must_use]
pub fn root_order(a: &AlgebraicRoot, b: &AlgebraicRoot, cfg: &crate::Config) -> Ordering {
    let (ar, ai) = a.sort_key(cfg.precision_cap);
    let (br, bi) = b.sort_key(cfg.precision_cap);
    ar.cmp(&br)
        .then_with(|| ai.cmp(&bi))
        .then_with(|| a.minpoly.coeffs().cmp(b.minpoly.coeffs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn cfg() -> crate::Config {
        crate::Config::default()
    }

    fn ipoly(cs: &[i64]) -> IntPoly {
        Poly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn fpoly_rational(cs: &[(i64, i64)]) -> FieldPoly {
        Poly::from_coeffs(
            cs.iter()
                .map(|&(n, d)| FieldElement::Rational(ratio(n, d)))
                .collect(),
        )
    }

    #[test]
    fn roots_of_rational_quadratic() {
        let q = NumberField::rationals();
        // x^2 - 2 over Q.
        let h = fpoly_rational(&[(-2, 1), (0, 1), (1, 1)]);
        let mut roots = isolate_field_roots(&h, &q, &cfg()).unwrap();
        assert_eq!(roots.len(), 2);
        sort_roots(&mut roots, &cfg());
        for r in &roots {
            assert_eq!(r.minpoly(), &ipoly(&[-2, 0, 1]));
        }
        // Sorted: -sqrt2 then sqrt2.
        let b0 = roots[0].to_ball(64, 1 << 14);
        let b1 = roots[1].to_ball(64, 1 << 14);
        assert!(b0.mid_re().to_rational() < BigRational::zero());
        assert!(b1.mid_re().to_rational() > BigRational::zero());
        assert!(roots[0].is_real(&cfg()).unwrap());
    }

    #[test]
    fn rational_roots_have_linear_minpolys() {
        let q = NumberField::rationals();
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3.
        let h = fpoly_rational(&[(-3, 1), (5, 1), (2, 1)]);
        let mut roots = isolate_field_roots(&h, &q, &cfg()).unwrap();
        sort_roots(&mut roots, &cfg());
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].as_rational(), Some(ratio(-3, 1)));
        assert_eq!(roots[1].as_rational(), Some(ratio(1, 2)));
    }

    #[test]
    fn roots_over_extension_field() {
        // Over Q(sqrt2): x (x - sqrt2) has roots 0 and sqrt2.
        let f = nf_init(
            &ipoly(&[-2, 0, 1]),
            &Rectangle::new(ratio(1, 1), ratio(2, 1), ratio(-1, 2), ratio(1, 2)),
            &cfg(),
        )
        .unwrap();
        let s = FieldElement::generator(&f);
        let h: FieldPoly = Poly::from_coeffs(vec![
            FieldElement::zero(),
            -s.clone(),
            FieldElement::one(),
        ]);
        let mut roots = isolate_field_roots(&h, &f, &cfg()).unwrap();
        sort_roots(&mut roots, &cfg());
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].as_rational(), Some(BigRational::zero()));
        assert_eq!(roots[1].minpoly(), &ipoly(&[-2, 0, 1]));
        let b = roots[1].to_ball(64, 1 << 14);
        assert!(b.mid_re().to_rational() > BigRational::one());
    }

    #[test]
    fn multiplicity_is_discarded() {
        let q = NumberField::rationals();
        // (x - 1)^2 (x + 2)
        let h = fpoly_rational(&[(2, 1), (-3, 1), (0, 1), (1, 1)]);
        let mut roots = isolate_field_roots(&h, &q, &cfg()).unwrap();
        sort_roots(&mut roots, &cfg());
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].as_rational(), Some(ratio(-2, 1)));
        assert_eq!(roots[1].as_rational(), Some(ratio(1, 1)));
    }

    #[test]
    fn equality_and_dedup() {
        let a = AlgebraicRoot::new(
            ipoly(&[-2, 0, 1]),
            Rectangle::new(ratio(1, 1), ratio(2, 1), ratio(-1, 1), ratio(1, 1)),
        );
        let b = AlgebraicRoot::new(
            ipoly(&[-2, 0, 1]),
            Rectangle::new(ratio(5, 4), ratio(3, 2), ratio(-1, 4), ratio(1, 4)),
        );
        let c = AlgebraicRoot::new(
            ipoly(&[-2, 0, 1]),
            Rectangle::new(ratio(-2, 1), ratio(-1, 1), ratio(-1, 1), ratio(1, 1)),
        );
        assert!(a.eq_root(&b, &cfg()).unwrap());
        assert!(!a.eq_root(&c, &cfg()).unwrap());
        let deduped = dedup_roots(vec![a, b, c], &cfg()).unwrap();
        assert_eq!(deduped.len(), 2);
    }

    #[test]
    fn conjugate_detects_nonreal() {
        // Roots of x^2 + 1 are not real.
        let i = AlgebraicRoot::new(
            ipoly(&[1, 0, 1]),
            Rectangle::new(ratio(-1, 2), ratio(1, 2), ratio(1, 2), ratio(3, 2)),
        );
        assert!(!i.is_real(&cfg()).unwrap());
        // And i equals the conjugate of -i.
        let neg_i = AlgebraicRoot::new(
            ipoly(&[1, 0, 1]),
            Rectangle::new(ratio(-1, 2), ratio(1, 2), ratio(-3, 2), ratio(-1, 2)),
        );
        assert!(i.eq_root(&neg_i.conjugate(), &cfg()).unwrap());
    }

    #[test]
    fn rational_root_constructor_round_trips() {
        let r = AlgebraicRoot::from_rational(&ratio(7, 3));
        assert_eq!(r.as_rational(), Some(ratio(7, 3)));
        assert_eq!(r.minpoly(), &ipoly(&[-7, 3]));
        assert!(r.is_real(&cfg()).unwrap());
    }
}
