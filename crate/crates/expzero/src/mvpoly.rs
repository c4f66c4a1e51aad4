//! Sparse multivariate polynomials over the working field, with gcd by
//! subresultant pseudo-remainder sequences taken variable by variable.

use crate::numberfield::FieldElement;
use num_traits::Zero;

/// Terms hold one exponent per variable; kept sorted lex-descending with
/// nonzero coefficients, so equality is structural.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly {
    nvars: usize,
    terms: Vec<(FieldElement, Vec<u32>)>,
}

impl MultiPoly {
    #[must_use]
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    #[must_use]
    pub fn constant(nvars: usize, c: FieldElement) -> Self {
        Self::from_terms(nvars, vec![(c, vec![0; nvars])])
    }

    #[must_use]
    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, FieldElement::from_int(1))
    }

    #[must_use]
    pub fn var(nvars: usize, v: usize) -> Self {
        let mut e = vec![0; nvars];
        e[v] = 1;
        Self::from_terms(nvars, vec![(FieldElement::from_int(1), e)])
    }

    /// Normalizing constructor: sorts, merges equal monomials, drops zeros.
    #[must_use]
    pub fn from_terms(nvars: usize, mut terms: Vec<(FieldElement, Vec<u32>)>) -> Self {
        for (_, e) in &terms {
            assert_eq!(e.len(), nvars, "term exponent arity mismatch");
        }
        terms.sort_by(|a, b| b.1.cmp(&a.1));
        let mut merged: Vec<(FieldElement, Vec<u32>)> = Vec::new();
        for (c, e) in terms {
            match merged.last_mut() {
                Some(last) if last.1 == e => last.0 = last.0.clone() + c,
                _ => merged.push((c, e)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        MultiPoly {
            nvars,
            terms: merged,
        }
    }

    #[must_use]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[must_use]
    pub fn terms(&self) -> &[(FieldElement, Vec<u32>)] {
        &self.terms
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[must_use]
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, e)| e.iter().all(|&x| x == 0))
    }

    #[must_use]
    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(_, e)| e.iter().map(|&x| u64::from(x)).sum())
            .max()
            .unwrap_or(0)
    }

    #[must_use]
    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|(_, e)| e[v]).max().unwrap_or(0)
    }

    #[must_use]
    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::from_terms(self.nvars, terms)
    }

    #[must_use]
    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(c, e)| (-c.clone(), e.clone()))
                .collect(),
        }
    }

    #[must_use]
    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    #[must_use]
    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ac, ae) in &self.terms {
            for (bc, be) in &other.terms {
                let e: Vec<u32> = ae.iter().zip(be).map(|(x, y)| x + y).collect();
                terms.push((ac.clone() * bc.clone(), e));
            }
        }
        Self::from_terms(self.nvars, terms)
    }

    #[must_use]
    pub fn mul_scalar(&self, c: &FieldElement) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(tc, e)| (tc.clone() * c.clone(), e.clone()))
                .collect(),
        }
    }

    /// Coefficients as polynomials in the remaining variables, indexed by
    /// the power of `v`.
    #[must_use]
    pub fn coeffs_in(&self, v: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![Vec::new(); d + 1];
        for (c, e) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[v] as usize;
            e2[v] = 0;
            out[k].push((c.clone(), e2));
        }
        out.into_iter()
            .map(|t| Self::from_terms(self.nvars, t))
            .collect()
    }

    /// Rebuild from coefficients in `v` (inverse of `coeffs_in`).
    #[must_use]
    pub fn from_coeffs_in(nvars: usize, v: usize, coeffs: Vec<MultiPoly>) -> MultiPoly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.into_iter().enumerate() {
            for (tc, te) in c.terms {
                let mut e = te;
                assert_eq!(e[v], 0, "coefficient must be free of the main variable");
                e[v] = u32::try_from(k).expect("degree fits in u32");
                terms.push((tc, e));
            }
        }
        Self::from_terms(nvars, terms)
    }

    /// Multiply by v^k.
    #[must_use]
    fn shift_in(&self, v: usize, k: u32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(c, e)| {
                    let mut e2 = e.clone();
                    e2[v] += k;
                    (c.clone(), e2)
                })
                .collect(),
        }
    }

    /// Leading coefficient with respect to `v`.
    #[must_use]
    pub fn leading_in(&self, v: usize) -> MultiPoly {
        let d = self.degree_in(v) as usize;
        let mut terms = Vec::new();
        for (c, e) in &self.terms {
            if e[v] as usize == d {
                let mut e2 = e.clone();
                e2[v] = 0;
                terms.push((c.clone(), e2));
            }
        }
        Self::from_terms(self.nvars, terms)
    }

    /// Scale so the lex-leading coefficient is one. Canonical form for gcds.
    #[must_use]
    pub fn monic(&self) -> MultiPoly {
        match self.terms.first() {
            None => self.clone(),
            Some((c, _)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.mul_scalar(&inv)
            }
        }
    }

    /// Quotient out the monomial content in variables `v >= first_var`.
    #[must_use]
    pub fn strip_monomial_from(&self, first_var: usize) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mins: Vec<u32> = (0..self.nvars)
            .map(|v| {
                if v < first_var {
                    0
                } else {
                    self.terms.iter().map(|(_, e)| e[v]).min().unwrap_or(0)
                }
            })
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(c, e)| {
                    let e2: Vec<u32> = e.iter().zip(&mins).map(|(x, m)| x - m).collect();
                    (c.clone(), e2)
                })
                .collect(),
        }
    }
}

/// Pseudo-remainder of `a` by `b` in variable `v`: the canonical remainder
/// of lc(b)^(deg a - deg b + 1) * a under division by b.
#[must_use]
pub fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    assert!(!b.is_zero(), "pseudo-division by zero");
    let db = b.degree_in(v);
    let lb = b.leading_in(v);
    let mut r = a.clone();
    let mut e = i64::from(a.degree_in(v)) - i64::from(db) + 1;
    while !r.is_zero() && r.degree_in(v) >= db {
        let lr = r.leading_in(v);
        let k = r.degree_in(v) - db;
        r = r.mul(&lb).sub(&b.shift_in(v, k).mul(&lr));
        e -= 1;
    }
    for _ in 0..e.max(0) {
        r = r.mul(&lb);
    }
    r
}

/// Exact division; panics if the division leaves a remainder.
#[must_use]
pub fn exact_div(f: &MultiPoly, d: &MultiPoly) -> MultiPoly {
    assert!(!d.is_zero(), "division by zero polynomial");
    if f.is_zero() {
        return MultiPoly::zero(f.nvars);
    }
    let Some(v) = (0..d.nvars).rev().find(|&v| d.degree_in(v) > 0) else {
        let c = d.terms[0].0.clone();
        let inv = c.inv().expect("nonzero constant divisor");
        return f.mul_scalar(&inv);
    };
    let dc = d.coeffs_in(v);
    let db = dc.len() - 1;
    let lead = dc[db].clone();
    let mut fc = f.coeffs_in(v);
    let df = fc.len() - 1;
    assert!(df >= db, "inexact division: degree too small");
    let mut q = vec![MultiPoly::zero(f.nvars); df - db + 1];
    for k in (0..=df - db).rev() {
        let top = fc[db + k].clone();
        if top.is_zero() {
            continue;
        }
        let qk = exact_div(&top, &lead);
        for (i, dci) in dc.iter().enumerate() {
            fc[i + k] = fc[i + k].sub(&qk.mul(dci));
        }
        q[k] = qk;
    }
    assert!(
        fc.iter().all(MultiPoly::is_zero),
        "inexact division: nonzero remainder"
    );
    MultiPoly::from_coeffs_in(f.nvars, v, q)
}

/// Content with respect to `v`: gcd of the coefficients.
#[must_use]
pub fn content_in(f: &MultiPoly, v: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(f.nvars);
    for c in f.coeffs_in(v) {
        g = gcd(&g, &c);
        if !g.is_zero() && g.is_constant() {
            break;
        }
    }
    g
}

/// Monic gcd. Constants are units, so coprime inputs yield 1.
#[must_use]
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    assert_eq!(a.nvars, b.nvars);
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(a.nvars);
    }
    for v in (0..a.nvars).rev() {
        let da = a.degree_in(v);
        let db = b.degree_in(v);
        match (da > 0, db > 0) {
            (true, true) => return subresultant_gcd(a, b, v),
            (true, false) => return gcd(&content_in(a, v), b),
            (false, true) => return gcd(a, &content_in(b, v)),
            (false, false) => continue,
        }
    }
    unreachable!("nonconstant polynomials mention some variable")
}

fn subresultant_gcd(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let n = a.nvars;
    let cont_a = content_in(a, v);
    let cont_b = content_in(b, v);
    let mut big = exact_div(a, &cont_a);
    let mut small = exact_div(b, &cont_b);
    if big.degree_in(v) < small.degree_in(v) {
        std::mem::swap(&mut big, &mut small);
    }
    let c = gcd(&cont_a, &cont_b);
    let mut g = MultiPoly::one(n);
    let mut h = MultiPoly::one(n);
    loop {
        let delta = big.degree_in(v) - small.degree_in(v);
        let r = pseudo_rem(&big, &small, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            // Nonzero remainder free of v: the primitive parts are coprime.
            small = MultiPoly::one(n);
            break;
        }
        big = small;
        let mut div = g.clone();
        for _ in 0..delta {
            div = div.mul(&h);
        }
        small = exact_div(&r, &div);
        g = big.leading_in(v);
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => {
                let mut num = g.clone();
                for _ in 1..delta {
                    num = num.mul(&g);
                }
                let mut den = h.clone();
                for _ in 2..delta {
                    den = den.mul(&h);
                }
                exact_div(&num, &den)
            }
        };
    }
    let pp = if small.is_constant() {
        MultiPoly::one(n)
    } else {
        exact_div(&small, &content_in(&small, v))
    };
    c.mul(&pp).monic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    // Variables: 0 = x, 1 = z.
    fn x() -> MultiPoly {
        MultiPoly::var(2, 0)
    }

    fn z() -> MultiPoly {
        MultiPoly::var(2, 1)
    }

    fn k(n: i64) -> MultiPoly {
        MultiPoly::constant(2, c(n))
    }

    #[test]
    fn arithmetic_normalizes() {
        let p = x().add(&z()).mul(&x().sub(&z()));
        let q = x().mul(&x()).sub(&z().mul(&z()));
        assert_eq!(p, q);
        assert!(p.sub(&q).is_zero());
        assert_eq!(p.total_degree(), 2);
    }

    #[test]
    fn univariate_gcd_is_monic() {
        // (z-1)(z+2) and (z-1)(z-3) share z-1.
        let a = z().sub(&k(1)).mul(&z().add(&k(2)));
        let b = z().sub(&k(1)).mul(&z().sub(&k(3)));
        assert_eq!(gcd(&a, &b), z().sub(&k(1)));
    }

    #[test]
    fn coprime_univariate() {
        // z+1 and z^2+1.
        let a = z().add(&k(1));
        let b = z().mul(&z()).add(&k(1));
        assert_eq!(gcd(&a, &b), MultiPoly::one(2));
    }

    #[test]
    fn cleared_half_exponent_example() {
        // x z^2 - 1 and z - x are coprime.
        let a = x().mul(&z()).mul(&z()).sub(&k(1));
        let b = z().sub(&x());
        assert_eq!(gcd(&a, &b), MultiPoly::one(2));
    }

    #[test]
    fn multivariate_common_factor() {
        // (x+z)(z+1) and (x+z)(z-x) share x+z.
        let f = x().add(&z());
        let a = f.mul(&z().add(&k(1)));
        let b = f.mul(&z().sub(&x()));
        assert_eq!(gcd(&a, &b), f.monic());
    }

    #[test]
    fn pseudo_rem_is_a_true_remainder() {
        // lc(b)^(da-db+1) * a - prem(a, b) is divisible by b.
        let a = x()
            .mul(&z())
            .mul(&z())
            .add(&x().mul(&z()))
            .add(&k(7));
        let b = x().add(&k(1)).mul(&z()).add(&x());
        let r = pseudo_rem(&a, &b, 1);
        assert!(r.degree_in(1) < b.degree_in(1));
        let lb = b.leading_in(1);
        let scaled = a.mul(&lb).mul(&lb);
        let q = exact_div(&scaled.sub(&r), &b);
        assert_eq!(q.mul(&b).add(&r), scaled);
    }

    #[test]
    fn exact_div_round_trips() {
        let a = x().mul(&z()).add(&k(3)).mul(&z().sub(&x()));
        let b = z().sub(&x());
        assert_eq!(exact_div(&a, &b), x().mul(&z()).add(&k(3)));
    }

    #[test]
    fn content_and_strip() {
        // x^2 z^2 + x z^3 has content x z^2 in z... content wrt z is x,
        // monomial strip from var 1 removes z^2.
        let p = x().mul(&x()).mul(&z()).mul(&z()).add(&x().mul(&z()).mul(&z()).mul(&z()));
        assert_eq!(content_in(&p, 1), x().monic());
        let s = p.strip_monomial_from(1);
        assert_eq!(s, x().mul(&x()).add(&x().mul(&z())));
    }

    #[test]
    fn gcd_with_shared_scalar_is_unit() {
        let a = z().add(&k(1)).mul(&k(2));
        let b = z().add(&k(1)).mul(&k(4));
        assert_eq!(gcd(&a, &b), z().add(&k(1)));
    }
}
