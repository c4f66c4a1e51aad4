//! Machine-readable output documents, schema `expzero/1`.
//!
//! Every command emits one `OutputDocument` on standard output. Exact data
//! (boxes, radii, the `l` denominator) serialize as rational strings so no
//! JSON number-precision question arises; the 20-digit `approx` fields are
//! advisory decimals beside the exact minimal polynomial and box.

use crate::decomp::Decomposition;
use crate::expcore::ExpPoly;
use crate::frontend::print::{print, print_element};
use crate::numberfield::roots::AlgebraicRoot;
use crate::numeric::ball::ComplexBall;
use crate::zerofinder::{CollapseWitness, ZeroReport};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

/// Schema tag carried by every document.
pub const SCHEMA: &str = "expzero/1";

#[derive(Serialize)]
pub struct OutputDocument {
    pub schema: &'static str,
    pub command: String,
    /// Printed normal forms of all parsed inputs, in argument order.
    pub inputs: Vec<String>,
    pub result: ResultPayload,
    pub flags: Flags,
    pub diagnostics: Diagnostics,
}

#[derive(Serialize)]
pub struct Flags {
    pub assumes_schanuel: bool,
    pub complete_for_all_common_zeros: bool,
}

#[derive(Serialize)]
pub struct Diagnostics {
    pub precision_bits: u32,
    pub numeric_check: bool,
    pub uncertified_rejections: Vec<UncertifiedRejection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

#[derive(Serialize)]
pub struct UncertifiedRejection {
    pub candidate: AlgebraicNumber,
    pub note: String,
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum ResultPayload {
    Normalize {
        printed: String,
        height: u32,
    },
    Height {
        height: u32,
    },
    Depth {
        depth: u32,
    },
    Decompose(DecompositionDoc),
    Zeros(ZerosDoc),
    IsZero {
        point: String,
        is_zero: bool,
    },
    Eval {
        point: String,
        value: String,
        ball: BallDoc,
    },
}

#[derive(Serialize)]
pub struct DecompositionDoc {
    /// Bricks as expression strings, canonical order.
    pub bricks: Vec<String>,
    /// Denominator of the linear brick x/L.
    pub l: String,
    /// Monomials of p*: coefficient times x-power times brick images.
    pub pstar: Vec<PStarTermDoc>,
    pub refined: bool,
}

#[derive(Serialize)]
pub struct PStarTermDoc {
    /// Field constant, as an expression string.
    pub coefficient: String,
    pub x_degree: usize,
    /// Exponential-of-constant factor, `"1"` when trivial.
    pub constant_factor: String,
    /// Rational exponent per brick, aligned with `bricks`.
    pub exponents: Vec<String>,
}

#[derive(Serialize)]
pub struct ZerosDoc {
    pub zeros: Vec<AlgebraicNumber>,
    pub witnesses: Vec<WitnessDoc>,
    pub candidates_examined: usize,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessDoc {
    AllCoeffsVanish,
    ExponentCollision { i: usize, j: usize },
}

#[derive(Serialize)]
pub struct AlgebraicNumber {
    /// Integer minimal polynomial in t.
    pub minpoly: String,
    /// Exact isolating box, rational corners.
    #[serde(rename = "box")]
    pub bounds: BoxBounds,
    /// 20 significant digits, advisory.
    pub approx: String,
}

#[derive(Serialize)]
pub struct BoxBounds {
    pub re_lo: String,
    pub re_hi: String,
    pub im_lo: String,
    pub im_hi: String,
}

#[derive(Serialize)]
pub struct BallDoc {
    pub mid_re: String,
    pub mid_im: String,
    /// Exact or rounded-up radius; `"entire"` for the overflow sentinel.
    pub radius: String,
    pub bits: u32,
}

/// Round to 20 significant decimal digits, plain notation in a moderate
/// exponent range, scientific outside it.
#[must_use]
pub fn decimal20(x: &BigRational) -> String {
    decimal_round(x, 20, false)
}

/// Three significant digits, rounded away from zero: safe for radii.
#[must_use]
pub fn decimal_up3(x: &BigRational) -> String {
    decimal_round(x, 3, true)
}

fn decimal_round(x: &BigRational, digits: u32, round_up: bool) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let r = x.abs();
    let ten = BigInt::from(10);
    // e = floor(log10 r), exact.
    let mut e: i64 = {
        let floor = r.to_integer();
        if floor.is_zero() {
            let mut s = r.clone();
            let mut k: i64 = 0;
            while s.to_integer().is_zero() {
                s *= BigRational::from_integer(ten.clone());
                k += 1;
            }
            -k
        } else {
            floor.to_string().len() as i64 - 1
        }
    };
    let scale = i64::from(digits) - 1 - e;
    let scaled = if scale >= 0 {
        &r * BigRational::from_integer(ten.pow(scale.unsigned_abs() as u32))
    } else {
        &r / BigRational::from_integer(ten.pow(scale.unsigned_abs() as u32))
    };
    let mut n = if round_up {
        scaled.ceil().to_integer()
    } else {
        (scaled + BigRational::new(BigInt::from(1), BigInt::from(2)))
            .floor()
            .to_integer()
    };
    if n == ten.pow(digits) {
        n = ten.pow(digits - 1);
        e += 1;
    }
    let s = n.to_string();
    debug_assert_eq!(s.len() as u32, digits);
    let body = if e >= i64::from(digits) || e < -4 {
        let mantissa = if s.len() > 1 {
            format!("{}.{}", &s[..1], &s[1..])
        } else {
            s
        };
        format!("{mantissa}e{e}")
    } else if e >= 0 {
        let cut = (e + 1) as usize;
        if cut >= s.len() {
            s
        } else {
            format!("{}.{}", &s[..cut], &s[cut..])
        }
    } else {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), s)
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Serialize one algebraic number with its exact data and an approximation.
#[must_use]
pub fn algebraic_number(root: &AlgebraicRoot, cfg: &crate::Config) -> AlgebraicNumber {
    let rect = root.rect();
    let ball = root.to_ball(128, cfg.precision_cap);
    let re = ball.mid_re().to_rational();
    let im = ball.mid_im().to_rational();
    let approx = if root.is_real(cfg).unwrap_or(false) || im.is_zero() {
        decimal20(&re)
    } else if im.is_negative() {
        format!("{} - {}i", decimal20(&re), decimal20(&im.abs()))
    } else {
        format!("{} + {}i", decimal20(&re), decimal20(&im))
    };
    AlgebraicNumber {
        minpoly: crate::frontend::print_intpoly(root.minpoly()),
        bounds: BoxBounds {
            re_lo: rect.x0.to_string(),
            re_hi: rect.x1.to_string(),
            im_lo: rect.y0.to_string(),
            im_hi: rect.y1.to_string(),
        },
        approx,
    }
}

/// Serialize a complex ball.
#[must_use]
pub fn ball_doc(b: &ComplexBall, bits: u32) -> BallDoc {
    BallDoc {
        mid_re: decimal20(&b.mid_re().to_rational()),
        mid_im: decimal20(&b.mid_im().to_rational()),
        radius: if b.is_entire() {
            "entire".to_string()
        } else {
            decimal_up3(&b.radius().to_rational())
        },
        bits,
    }
}

fn witness_doc(w: &CollapseWitness) -> WitnessDoc {
    match w {
        CollapseWitness::AllCoeffsVanish => WitnessDoc::AllCoeffsVanish,
        CollapseWitness::ExponentCollision(i, j) => WitnessDoc::ExponentCollision { i: *i, j: *j },
    }
}

/// Serialize a zero report's payload (the flags travel separately).
#[must_use]
pub fn zeros_doc(report: &ZeroReport, cfg: &crate::Config) -> ZerosDoc {
    ZerosDoc {
        zeros: report
            .zeros
            .iter()
            .map(|r| algebraic_number(r, cfg))
            .collect(),
        witnesses: report.witnesses.iter().map(witness_doc).collect(),
        candidates_examined: report.candidates_examined,
    }
}

/// Serialize a decomposition, splitting each p* term into monomials.
#[must_use]
pub fn decomposition_doc(d: &Decomposition, refined: bool) -> DecompositionDoc {
    let mut pstar = Vec::new();
    for term in d.pstar() {
        let exps: Vec<String> = term.exponents.iter().map(ToString::to_string).collect();
        let cf = print(&term.const_factor);
        for k in 0..=term.coeff.degree_or_zero() {
            let a = term.coeff.coeff(k);
            if a.is_zero() {
                continue;
            }
            pstar.push(PStarTermDoc {
                coefficient: print_element(&a),
                x_degree: k,
                constant_factor: cf.clone(),
                exponents: exps.clone(),
            });
        }
    }
    DecompositionDoc {
        bricks: d.bricks().iter().map(print).collect(),
        l: d.l().to_string(),
        pstar,
        refined,
    }
}

/// Build one normalized exponential-term document for `eval`.
#[must_use]
pub fn eval_payload(point: &ExpPoly, value: &ExpPoly, ball: BallDoc) -> ResultPayload {
    ResultPayload::Eval {
        point: print(point),
        value: print(value),
        ball,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn decimal_formats_cover_ranges() {
        assert_eq!(decimal20(&BigRational::zero()), "0");
        assert_eq!(decimal20(&BigRational::one()), "1.0000000000000000000");
        assert_eq!(decimal20(&q(-3, 2)), "-1.5000000000000000000");
        assert_eq!(decimal20(&q(1, 3)), "0.33333333333333333333");
        assert_eq!(decimal20(&q(2, 3)), "0.66666666666666666667");
        assert_eq!(decimal20(&q(1, 100_000)), "1.0000000000000000000e-5");
        let big = BigRational::from_integer(BigInt::from(10).pow(25));
        assert_eq!(decimal20(&big), "1.0000000000000000000e25");
    }

    #[test]
    fn twenty_digits_of_a_square_root() {
        // 665857/470832 approximates sqrt(2) to ~1e-12; its own digits are exact here.
        let x = q(665_857, 470_832);
        let s = decimal20(&x);
        assert!(s.starts_with("1.41421356237"), "got {s}");
        assert_eq!(s.len(), 21);
    }

    #[test]
    fn round_up_is_conservative() {
        let r = q(866, 1_000_000);
        let s = decimal_up3(&r);
        assert_eq!(s, "0.000866");
        let t = decimal_up3(&q(8661, 10_000_000));
        assert_eq!(t, "0.000867");
        assert_eq!(decimal_up3(&q(1, 1 << 20)), "9.54e-7");
    }

    #[test]
    fn carry_on_rounding_all_nines() {
        let x = q(999_999_999_999_999_999, 1_000_000_000_000_000_000);
        assert_eq!(decimal20(&x), "0.99999999999999999900");
        let d = BigInt::from(10).pow(20) * BigInt::from(2);
        let y = BigRational::new(&d - BigInt::one(), d.clone());
        assert_eq!(decimal20(&y), "1.0000000000000000000");
    }
}
