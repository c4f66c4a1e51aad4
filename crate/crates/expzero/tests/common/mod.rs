//! Deterministic generators and fixtures shared by the integration suites.

#![allow(dead_code)]

use expzero::numberfield::isolate::Rectangle;
use expzero::numberfield::nf_init;
use expzero::{Config, ExpPoly, FieldElement, FieldPoly, IntPoly, NumberField};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Xorshift64* generator: tiny, portable, and reproducible across runs.
pub struct Rng(u64);

impl Rng {
    #[must_use]
    pub fn new(seed: u64) -> Self {
        Rng(seed | 1)
    }

    /// Next raw 64-bit word.
    pub fn word(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform value in 0..n.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.word() % n
    }

    /// Uniform integer in lo..=hi.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// True with probability 1/n.
    pub fn chance(&mut self, n: u64) -> bool {
        self.below(n) == 0
    }

    /// Rational with small numerator and denominator.
    pub fn rational(&mut self) -> BigRational {
        rat(self.int(-6, 6), self.int(1, 3))
    }

    /// Nonzero rational with small numerator and denominator.
    pub fn nonzero_rational(&mut self) -> BigRational {
        loop {
            let q = self.rational();
            if !num_traits::Zero::is_zero(&q) {
                return q;
            }
        }
    }
}

/// Exact rational n/d.
#[must_use]
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Q(sqrt 2), presented by t^2 - 2 with the positive root isolated.
#[must_use]
pub fn sqrt2_field(cfg: &Config) -> NumberField {
    let minpoly = IntPoly::from_coeffs(vec![BigInt::from(-2), BigInt::from(0), BigInt::from(1)]);
    let rect = Rectangle::new(rat(1, 1), rat(2, 1), rat(-1, 1), rat(1, 1));
    nf_init(&minpoly, &rect, cfg).expect("t^2 - 2 presents a field")
}

/// Random constant: rational, or an element of the given field one time in
/// four when `irrational_ok` is set.
pub fn random_element(rng: &mut Rng, field: &NumberField, irrational_ok: bool) -> FieldElement {
    if irrational_ok && rng.chance(4) {
        FieldElement::in_field(field, vec![rng.rational(), rng.nonzero_rational()])
    } else {
        FieldElement::from_rational(rng.rational())
    }
}

/// Random coefficient polynomial of degree at most `max_deg`.
pub fn random_poly(
    rng: &mut Rng,
    field: &NumberField,
    max_deg: usize,
    irrational_ok: bool,
) -> FieldPoly {
    let deg = rng.below(max_deg as u64 + 1) as usize;
    let coeffs = (0..=deg)
        .map(|_| random_element(rng, field, irrational_ok))
        .collect();
    FieldPoly::from_coeffs(coeffs)
}

/// Random nonzero coefficient polynomial of degree at most `max_deg`.
pub fn random_nonzero_poly(
    rng: &mut Rng,
    field: &NumberField,
    max_deg: usize,
    irrational_ok: bool,
) -> FieldPoly {
    loop {
        let p = random_poly(rng, field, max_deg, irrational_ok);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random exponential polynomial of height at most `height`, built with the
/// ring operations so every value is a normal form by construction. Each
/// level carries at most `max_terms` exponential terms with coefficient
/// degrees at most `max_deg`.
pub fn random_exppoly(
    rng: &mut Rng,
    field: &NumberField,
    height: u32,
    max_terms: u64,
    max_deg: usize,
    irrational_ok: bool,
) -> ExpPoly {
    if height == 0 {
        return ExpPoly::from_poly(random_poly(rng, field, max_deg, irrational_ok));
    }
    let mut acc = if rng.chance(2) {
        ExpPoly::from_poly(random_poly(rng, field, max_deg, irrational_ok))
    } else {
        ExpPoly::zero()
    };
    for _ in 0..=rng.below(max_terms) {
        let coeff = random_nonzero_poly(rng, field, max_deg, irrational_ok);
        let inner = loop {
            let g = random_exppoly(rng, field, height - 1, max_terms, max_deg, irrational_ok);
            if !g.is_zero() {
                break g;
            }
        };
        acc = &acc + &(&ExpPoly::from_poly(coeff) * &inner.exp());
    }
    acc
}

/// Per-depth budget for corpus instances: term count, coefficient degree,
/// and whether irrational constants may appear at that depth.
struct Shape {
    terms: [u64; 3],
    deg: [usize; 3],
    irr: [bool; 3],
}

fn shaped_exppoly(rng: &mut Rng, field: &NumberField, height: u32, depth: usize, s: &Shape) -> ExpPoly {
    let d = depth.min(2);
    if height == 0 {
        return ExpPoly::from_poly(random_poly(rng, field, s.deg[d], s.irr[d]));
    }
    let mut acc = if rng.chance(2) {
        ExpPoly::from_poly(random_poly(rng, field, s.deg[d], s.irr[d]))
    } else {
        ExpPoly::zero()
    };
    for _ in 0..=rng.below(s.terms[d]) {
        let coeff = random_nonzero_poly(rng, field, s.deg[d], s.irr[d]);
        let inner = loop {
            let g = shaped_exppoly(rng, field, height - 1, depth + 1, s);
            if !g.is_zero() {
                break g;
            }
        };
        acc = &acc + &(&ExpPoly::from_poly(coeff) * &inner.exp());
    }
    acc
}

/// Random nonzero, nonconstant exponential polynomial for the zero-search
/// corpus. Tall instances keep slim inner levels so that the nested
/// evaluations at candidate points stay affordable, and instances that use
/// irrational constants keep top coefficient degrees at 3 so that candidate
/// roots stay within the default factoring budget; rational instances go up
/// to degree 4.
pub fn random_corpus_poly(rng: &mut Rng, field: &NumberField) -> ExpPoly {
    loop {
        let irrational = rng.chance(3);
        let top_deg = if irrational { 3 } else { 4 };
        let roll = rng.below(100);
        let (height, shape) = if roll < 45 {
            let s = Shape {
                terms: [4, 0, 0],
                deg: [top_deg, 2, 0],
                irr: [irrational, irrational, false],
            };
            (1, s)
        } else if roll < 85 {
            let s = Shape {
                terms: [3, 2, 0],
                deg: [top_deg, 2, 1],
                irr: [irrational, irrational, false],
            };
            (2, s)
        } else {
            let s = Shape {
                terms: [2, 1, 1],
                deg: [top_deg, 1, 1],
                irr: [irrational, false, false],
            };
            (3, s)
        };
        let p = shaped_exppoly(rng, field, height, 0, &shape);
        if !p.is_zero() && !p.is_constant() {
            return p;
        }
    }
}

/// Random exponential sum: an optional polynomial part plus 1..=4 terms
/// a_i * exp(b_i * x) with distinct nonzero rational b_i.
pub fn random_exp_sum(rng: &mut Rng, field: &NumberField) -> ExpPoly {
    let k = 1 + rng.below(4);
    let mut exponents: Vec<BigRational> = Vec::new();
    while exponents.len() < k as usize {
        let b = rat(rng.int(-5, 5), rng.int(1, 3));
        if !num_traits::Zero::is_zero(&b) && !exponents.contains(&b) {
            exponents.push(b);
        }
    }
    let mut acc = if rng.chance(3) {
        ExpPoly::from_poly(random_nonzero_poly(rng, field, 2, true))
    } else {
        ExpPoly::zero()
    };
    for b in exponents {
        let coeff = random_nonzero_poly(rng, field, 2, true);
        let linear = ExpPoly::from_poly(FieldPoly::from_coeffs(vec![
            FieldElement::from_rational(BigRational::from_integer(BigInt::from(0))),
            FieldElement::from_rational(b),
        ]));
        acc = &acc + &(&ExpPoly::from_poly(coeff) * &linear.exp());
    }
    acc
}
