//! Normal form and ring operations for exponential polynomials in one
//! variable over the algebraic numbers.
//!
//! An exponential polynomial is stored as a polynomial part plus finitely
//! many terms `a_i(x) * exp(g_i)` with nonzero coefficient polynomials and
//! pairwise distinct nonzero exponents, the exponents themselves exponential
//! polynomials. Terms are sorted by a canonical total order, which makes the
//! representation unique: structural equality is ring equality in the free
//! construction. The `exp(0) = 1` contribution always lives in the
//! polynomial part, never as a term.
//!
//! Exponentials of constants such as `exp(2)` are kept as terms with
//! constant exponents; they are never folded into algebraic coefficients,
//! since the ambient exponential field need not restrict to an exponential
//! map on the algebraic numbers.

use crate::error::{Error, Result};
use crate::numberfield::{FieldElement, FieldPoly};
use num_traits::Zero;
use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponential polynomial in canonical normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExpPoly {
    poly_part: FieldPoly,
    terms: Vec<(FieldPoly, ExpPoly)>,
}

impl ExpPoly {
    #[must_use]
    pub fn zero() -> Self {
        ExpPoly {
            poly_part: FieldPoly::zero(),
            terms: Vec::new(),
        }
    }

    #[must_use]
    pub fn one() -> Self {
        ExpPoly::from_poly(FieldPoly::one())
    }

    /// The variable x.
    #[must_use]
    pub fn var_x() -> Self {
        ExpPoly::from_poly(FieldPoly::x())
    }

    #[must_use]
    pub fn from_poly(p: FieldPoly) -> Self {
        ExpPoly {
            poly_part: p,
            terms: Vec::new(),
        }
    }

    #[must_use]
    pub fn from_element(c: FieldElement) -> Self {
        ExpPoly::from_poly(FieldPoly::constant(c))
    }

    #[must_use]
    pub fn from_int(n: i64) -> Self {
        ExpPoly::from_element(FieldElement::from_int(n))
    }

    /// Normalizing constructor: folds zero-exponent terms into the
    /// polynomial part, sorts terms, merges equal exponents, and drops zero
    /// coefficients.
    #[must_use]
    pub fn from_parts(poly_part: FieldPoly, terms: Vec<(FieldPoly, ExpPoly)>) -> Self {
        let mut poly = poly_part;
        let mut buf: Vec<(FieldPoly, ExpPoly)> = Vec::new();
        for (coeff, expo) in terms {
            if coeff.is_zero() {
                continue;
            }
            if expo.is_zero() {
                poly = &poly + &coeff;
            } else {
                buf.push((coeff, expo));
            }
        }
        buf.sort_by(|a, b| a.1.canonical_cmp(&b.1));
        let mut merged: Vec<(FieldPoly, ExpPoly)> = Vec::new();
        for (coeff, expo) in buf {
            match merged.last_mut() {
                Some(last) if last.1 == expo => last.0 = &last.0 + &coeff,
                _ => merged.push((coeff, expo)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        ExpPoly {
            poly_part: poly,
            terms: merged,
        }
    }

    #[must_use]
    pub fn poly_part(&self) -> &FieldPoly {
        &self.poly_part
    }

    /// Exponential terms (coefficient, exponent), canonically sorted.
    #[must_use]
    pub fn terms(&self) -> &[(FieldPoly, ExpPoly)] {
        &self.terms
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.poly_part.is_zero()
    }

    #[must_use]
    pub fn is_one(&self) -> bool {
        self.terms.is_empty() && self.poly_part == FieldPoly::one()
    }

    /// First tower level containing this value: 0 for plain polynomials,
    /// one more than the deepest exponent otherwise.
    #[must_use]
    pub fn height(&self) -> u32 {
        self.terms
            .iter()
            .map(|(_, g)| g.height() + 1)
            .max()
            .unwrap_or(0)
    }

    /// True when the variable x occurs nowhere.
    #[must_use]
    pub fn is_constant(&self) -> bool {
        self.poly_part.is_constant()
            && self
                .terms
                .iter()
                .all(|(a, g)| a.is_constant() && g.is_constant())
    }

    /// Tower level of a constant: 0 on algebraic numbers, one more than the
    /// deepest exponent otherwise. Errors on non-constant input.
    pub fn depth(&self) -> Result<u32> {
        if !self.is_constant() {
            return Err(Error::NotConstant);
        }
        Ok(self.height())
    }

    /// Total order compatible with structural equality; sorts normal forms.
    #[must_use]
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.terms.len().cmp(&other.terms.len()))
            .then_with(|| cmp_poly(&self.poly_part, &other.poly_part))
            .then_with(|| {
                for ((ac, ag), (bc, bg)) in self.terms.iter().zip(&other.terms) {
                    let o = ag.canonical_cmp(bg).then_with(|| cmp_poly(ac, bc));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
    }

    /// exp of this value: 1 for zero, else a single fresh term. Constant
    /// summands stay inside the exponent; splitting happens only in
    /// multiplication and in decompositions.
    #[must_use]
    pub fn exp(&self) -> Self {
        if self.is_zero() {
            return ExpPoly::one();
        }
        ExpPoly {
            poly_part: FieldPoly::zero(),
            terms: vec![(FieldPoly::one(), self.clone())],
        }
    }

    #[must_use]
    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return ExpPoly::zero();
        }
        let poly = self.poly_part.scale(c);
        let terms = self
            .terms
            .iter()
            .map(|(a, g)| (a.scale(c), g.clone()))
            .collect();
        ExpPoly {
            poly_part: poly,
            terms,
        }
    }

    /// Substitute x := beta and renormalize; the result is constant.
    #[must_use]
    pub fn eval_at(&self, beta: &FieldElement) -> Self {
        let c0 = self.poly_part.eval(beta);
        let mut terms = Vec::new();
        for (a, g) in &self.terms {
            let av = a.eval(beta);
            if av.is_zero() {
                continue;
            }
            terms.push((FieldPoly::constant(av), g.eval_at(beta)));
        }
        ExpPoly::from_parts(FieldPoly::constant(c0), terms)
    }

    #[must_use]
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = ExpPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

fn cmp_poly(a: &FieldPoly, b: &FieldPoly) -> Ordering {
    a.coeffs().len().cmp(&b.coeffs().len()).then_with(|| {
        for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
            let o = x.canonical_cmp(y);
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

impl Add for &ExpPoly {
    type Output = ExpPoly;
    fn add(self, rhs: &ExpPoly) -> ExpPoly {
        let poly = &self.poly_part + &rhs.poly_part;
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        ExpPoly::from_parts(poly, terms)
    }
}

impl Sub for &ExpPoly {
    type Output = ExpPoly;
    fn sub(self, rhs: &ExpPoly) -> ExpPoly {
        self + &(-rhs)
    }
}

impl Neg for &ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        ExpPoly {
            poly_part: -&self.poly_part,
            terms: self
                .terms
                .iter()
                .map(|(a, g)| (-a, g.clone()))
                .collect(),
        }
    }
}

impl Mul for &ExpPoly {
    type Output = ExpPoly;
    fn mul(self, rhs: &ExpPoly) -> ExpPoly {
        let poly = &self.poly_part * &rhs.poly_part;
        let mut terms = Vec::new();
        if !self.poly_part.is_zero() {
            for (bc, bg) in &rhs.terms {
                terms.push((&self.poly_part * bc, bg.clone()));
            }
        }
        if !rhs.poly_part.is_zero() {
            for (ac, ag) in &self.terms {
                terms.push((ac * &rhs.poly_part, ag.clone()));
            }
        }
        for (ac, ag) in &self.terms {
            for (bc, bg) in &rhs.terms {
                terms.push((ac * bc, ag + bg));
            }
        }
        ExpPoly::from_parts(poly, terms)
    }
}

impl Add for ExpPoly {
    type Output = ExpPoly;
    fn add(self, rhs: ExpPoly) -> ExpPoly {
        &self + &rhs
    }
}

impl Sub for ExpPoly {
    type Output = ExpPoly;
    fn sub(self, rhs: ExpPoly) -> ExpPoly {
        &self - &rhs
    }
}

impl Mul for ExpPoly {
    type Output = ExpPoly;
    fn mul(self, rhs: ExpPoly) -> ExpPoly {
        &self * &rhs
    }
}

impl Neg for ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        -&self
    }
}
