//! Ball evaluation of exponential polynomials: the numeric cross-check
//! oracle for symbolic zero decisions.
//!
//! Everything here reads the normal form under the standard complex
//! exponential. Enclosures are sound: the true value always lies inside the
//! returned ball, with the whole-plane sentinel as the totality escape.

use crate::error::{Error, Result};
use crate::expcore::ExpPoly;
use crate::numberfield::roots::AlgebraicRoot;
use crate::numberfield::FieldPoly;
use crate::numeric::ball::ComplexBall;

fn eval_field_poly(f: &FieldPoly, z: &ComplexBall, prec: u32) -> ComplexBall {
    let mut acc = ComplexBall::exact_int(0, 0);
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(z, prec).add(&c.to_ball(prec), prec);
    }
    acc
}

/// Enclosure of `p(z)` by structural recursion over the normal form.
#[must_use]
pub fn eval_ball(p: &ExpPoly, z: &ComplexBall, prec: u32) -> ComplexBall {
    let mut acc = eval_field_poly(p.poly_part(), z, prec);
    for (a, g) in p.terms() {
        let av = eval_field_poly(a, z, prec);
        let gv = eval_ball(g, z, prec);
        acc = acc.add(&av.mul(&gv.exp(prec), prec), prec);
    }
    acc
}

/// Tight enclosure of an algebraic root, radius at most `2^(-prec/2)`.
pub fn root_ball(r: &AlgebraicRoot, prec: u32, prec_cap: u32) -> Result<ComplexBall> {
    let b = r.to_ball(prec, prec_cap);
    if b.is_entire() {
        return Err(Error::PrecisionCap { cap_bits: prec_cap });
    }
    Ok(b)
}

/// Try to certify `p(root) != 0` numerically, escalating precision up to
/// `max_prec`. `false` means "could not certify", never "is zero".
#[must_use]
pub fn certify_nonzero(p: &ExpPoly, r: &AlgebraicRoot, max_prec: u32) -> bool {
    let mut prec = 64u32.min(max_prec.max(8));
    loop {
        let z = r.to_ball(prec, max_prec);
        if !z.is_entire() && eval_ball(p, &z, prec).excludes_zero() {
            return true;
        }
        if prec >= max_prec {
            return false;
        }
        prec = (prec * 2).min(max_prec);
    }
}
