//! Brick decompositions of exponential polynomials.
//!
//! A decomposition presents p as an ordinary polynomial p* in x and the
//! exponential images of finitely many bricks, where some brick is x/L for a
//! nonzero integer L and every brick is itself polynomial in x and
//! exp-images of bricks. Brick collection is bottom-up over the normal-form
//! tree: a height-zero exponent is split into its nonconstant monomials
//! (rational multiples of x are unified into the single brick x/L), while a
//! higher exponent is one brick, recursed into. Constant summands of
//! exponents never form bricks; their exponentials ride along as constant
//! factors of p* terms, keeping every brick x-dependent.
//!
//! A refined decomposition additionally has bricks Q-linearly independent
//! over the algebraic numbers: while some nontrivial rational combination of
//! bricks is an algebraic constant, a dependent brick is eliminated and p*
//! is rewritten with rational exponents on the survivors.

use crate::expcore::ExpPoly;
use crate::numberfield::{FieldElement, FieldPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// One term of a representing polynomial: coefficient polynomial in x, a
/// constant exponential factor, and one rational exponent per brick.
#[derive(Clone, Debug, PartialEq)]
pub struct PStarTerm {
    pub coeff: FieldPoly,
    pub const_factor: ExpPoly,
    pub exponents: Vec<BigRational>,
}

/// Presentation of an exponential polynomial over a brick set.
#[derive(Clone, Debug)]
pub struct Decomposition {
    bricks: Vec<ExpPoly>,
    l: BigInt,
    pstar: Vec<PStarTerm>,
    source: ExpPoly,
}

/// A decomposition whose bricks are Q-linearly independent over the
/// algebraic numbers.
#[derive(Clone, Debug)]
pub struct RefinedDecomposition(Decomposition);

impl Decomposition {
    #[must_use]
    pub fn bricks(&self) -> &[ExpPoly] {
        &self.bricks
    }

    /// The integer L with x/L among the bricks.
    #[must_use]
    pub fn l(&self) -> &BigInt {
        &self.l
    }

    #[must_use]
    pub fn pstar(&self) -> &[PStarTerm] {
        &self.pstar
    }

    #[must_use]
    pub fn source(&self) -> &ExpPoly {
        &self.source
    }

    /// Index of the brick equal to x/L.
    #[must_use]
    pub fn linear_brick_index(&self) -> usize {
        let xl = linear_brick(&self.l);
        self.bricks
            .iter()
            .position(|b| *b == xl)
            .expect("decomposition always contains the brick x/L")
    }
}

impl RefinedDecomposition {
    #[must_use]
    pub fn as_decomposition(&self) -> &Decomposition {
        &self.0
    }

    #[must_use]
    pub fn into_decomposition(self) -> Decomposition {
        self.0
    }
}

fn rational_element(q: BigRational) -> FieldElement {
    FieldElement::from_rational(q)
}

/// The brick x/L as an exponential polynomial.
fn linear_brick(l: &BigInt) -> ExpPoly {
    let c = rational_element(BigRational::new(BigInt::one(), l.clone()));
    ExpPoly::from_poly(FieldPoly::from_coeffs(vec![FieldElement::zero(), c]))
}

/// Monomial c*x^k as an exponential polynomial.
fn monomial_brick(c: &FieldElement, k: usize) -> ExpPoly {
    let mut coeffs = vec![FieldElement::zero(); k];
    coeffs.push(c.clone());
    ExpPoly::from_poly(FieldPoly::from_coeffs(coeffs))
}

/// Walks every exponent in the normal-form tree, recording brick candidates
/// and the least common multiple of linear rational denominators.
struct Collector {
    bricks: Vec<ExpPoly>,
    l: BigInt,
    saw_linear: bool,
}

impl Collector {
    fn new() -> Self {
        Collector {
            bricks: Vec::new(),
            l: BigInt::one(),
            saw_linear: false,
        }
    }

    fn push_brick(&mut self, b: ExpPoly) {
        if !self.bricks.iter().any(|x| *x == b) {
            self.bricks.push(b);
        }
    }

    /// Record the bricks arising from one exponent.
    fn exponent(&mut self, g: &ExpPoly) {
        if g.is_constant() {
            return;
        }
        if g.height() == 0 {
            for (k, c) in g.poly_part().coeffs().iter().enumerate().skip(1) {
                if c.is_zero() {
                    continue;
                }
                match (k, c.as_rational()) {
                    (1, Some(q)) => {
                        self.saw_linear = true;
                        self.l = self.l.lcm(q.denom());
                    }
                    _ => self.push_brick(monomial_brick(c, k)),
                }
            }
            return;
        }
        self.push_brick(g.clone());
        for (_, sub) in g.terms() {
            self.exponent(sub);
        }
    }

    fn walk(&mut self, p: &ExpPoly) {
        for (_, g) in p.terms() {
            self.exponent(g);
        }
    }
}

/// Monomial in the brick images for one exponent: constant factor plus the
/// rational exponent vector.
fn exponent_monomial(
    g: &ExpPoly,
    bricks: &[ExpPoly],
    l: &BigInt,
) -> (ExpPoly, Vec<BigRational>) {
    let mut exps = vec![BigRational::zero(); bricks.len()];
    let find = |b: &ExpPoly| -> usize {
        bricks
            .iter()
            .position(|x| x == b)
            .expect("exponent uses an uncollected brick")
    };
    if g.is_constant() {
        return (g.exp(), exps);
    }
    if g.height() == 0 {
        let c0 = g.poly_part().coeff(0);
        let const_factor = if c0.is_zero() {
            ExpPoly::one()
        } else {
            ExpPoly::from_element(c0).exp()
        };
        for (k, c) in g.poly_part().coeffs().iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            match (k, c.as_rational()) {
                (1, Some(q)) => {
                    let idx = find(&linear_brick(l));
                    exps[idx] = &exps[idx] + q * BigRational::from_integer(l.clone());
                }
                _ => {
                    let idx = find(&monomial_brick(c, k));
                    exps[idx] = &exps[idx] + BigRational::one();
                }
            }
        }
        return (const_factor, exps);
    }
    let idx = find(g);
    exps[idx] = BigRational::one();
    (ExpPoly::one(), exps)
}

/// Merge p* terms with identical monomials, dropping zero coefficients.
fn normalize_pstar(terms: Vec<PStarTerm>) -> Vec<PStarTerm> {
    let mut out: Vec<PStarTerm> = Vec::new();
    for t in terms {
        if t.coeff.is_zero() {
            continue;
        }
        match out
            .iter_mut()
            .find(|u| u.const_factor == t.const_factor && u.exponents == t.exponents)
        {
            Some(u) => u.coeff = &u.coeff + &t.coeff,
            None => out.push(t),
        }
    }
    out.retain(|t| !t.coeff.is_zero());
    out
}

fn build_pstar(p: &ExpPoly, bricks: &[ExpPoly], l: &BigInt) -> Vec<PStarTerm> {
    let mut terms = Vec::new();
    if !p.poly_part().is_zero() {
        terms.push(PStarTerm {
            coeff: p.poly_part().clone(),
            const_factor: ExpPoly::one(),
            exponents: vec![BigRational::zero(); bricks.len()],
        });
    }
    for (a, g) in p.terms() {
        let (const_factor, exponents) = exponent_monomial(g, bricks, l);
        terms.push(PStarTerm {
            coeff: a.clone(),
            const_factor,
            exponents,
        });
    }
    normalize_pstar(terms)
}

fn sorted_bricks(mut bricks: Vec<ExpPoly>) -> Vec<ExpPoly> {
    bricks.sort_by(|a, b| a.canonical_cmp(b));
    bricks
}

/// Canonical decomposition of an exponential polynomial. Constant inputs
/// get the trivial brick set {x} with L = 1.
#[must_use]
pub fn decompose(p: &ExpPoly) -> Decomposition {
    let mut col = Collector::new();
    col.walk(p);
    let l = if col.saw_linear { col.l.clone() } else { BigInt::one() };
    col.push_brick(linear_brick(&l));
    let bricks = sorted_bricks(col.bricks);
    let pstar = build_pstar(p, &bricks, &l);
    Decomposition {
        bricks,
        l,
        pstar,
        source: p.clone(),
    }
}

/// Decompositions of two polynomials over one shared brick set.
#[must_use]
pub fn decompose_pair(p: &ExpPoly, q: &ExpPoly) -> (Decomposition, Decomposition) {
    let mut col = Collector::new();
    col.walk(p);
    col.walk(q);
    let l = if col.saw_linear { col.l.clone() } else { BigInt::one() };
    col.push_brick(linear_brick(&l));
    let bricks = sorted_bricks(col.bricks);
    let dp = Decomposition {
        bricks: bricks.clone(),
        l: l.clone(),
        pstar: build_pstar(p, &bricks, &l),
        source: p.clone(),
    };
    let dq = Decomposition {
        bricks: bricks.clone(),
        pstar: build_pstar(q, &bricks, &l),
        l,
        source: q.clone(),
    };
    (dp, dq)
}

/// Substitute exp of each brick back into p* and normalize.
#[must_use]
pub fn reconstruct(d: &Decomposition) -> ExpPoly {
    let mut acc = ExpPoly::zero();
    for t in &d.pstar {
        let mut f = ExpPoly::from_poly(t.coeff.clone());
        if !t.const_factor.is_one() {
            f = &f * &t.const_factor;
        }
        for (i, q) in t.exponents.iter().enumerate() {
            if !q.is_zero() {
                let scaled = d.bricks[i].scale(&rational_element(q.clone()));
                f = &f * &scaled.exp();
            }
        }
        acc = &acc + &f;
    }
    acc
}

/// Q-coordinates of exponential polynomials as dense rational vectors. An
/// atom is one basis direction: (exponent registry id or none, x-degree,
/// field coordinate slot). The registry holds distinct exponents by
/// structural equality so coordinates are comparable across calls.
pub(crate) struct AtomSpace {
    exponents: Vec<ExpPoly>,
    atoms: Vec<(usize, usize, usize)>,
}

const NO_EXP: usize = usize::MAX;

impl AtomSpace {
    pub(crate) fn new() -> Self {
        AtomSpace {
            exponents: Vec::new(),
            atoms: Vec::new(),
        }
    }

    fn exp_id(&mut self, g: &ExpPoly) -> usize {
        if let Some(i) = self.exponents.iter().position(|x| x == g) {
            return i;
        }
        self.exponents.push(g.clone());
        self.exponents.len() - 1
    }

    fn atom_id(&mut self, key: (usize, usize, usize)) -> usize {
        if let Some(i) = self.atoms.iter().position(|a| *a == key) {
            return i;
        }
        self.atoms.push(key);
        self.atoms.len() - 1
    }

    fn add_poly(
        &mut self,
        coords: &mut Vec<BigRational>,
        key: usize,
        f: &FieldPoly,
        drop_constant: bool,
    ) {
        for (k, c) in f.coeffs().iter().enumerate() {
            if c.is_zero() || (drop_constant && key == NO_EXP && k == 0) {
                continue;
            }
            let cs: Vec<BigRational> = match c.as_rational() {
                Some(q) => vec![q.clone()],
                None => c.coords_in(c.field().expect("extension element has a field")),
            };
            for (j, q) in cs.into_iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                let id = self.atom_id((key, k, j));
                if coords.len() <= id {
                    coords.resize(id + 1, BigRational::zero());
                }
                coords[id] = &coords[id] + q;
            }
        }
    }

    /// Dense coordinate vector; with `drop_constant` the height-zero
    /// constant direction is omitted, so a vanishing vector means "equal to
    /// an algebraic constant".
    pub(crate) fn coords(&mut self, p: &ExpPoly, drop_constant: bool) -> Vec<BigRational> {
        let mut coords = Vec::new();
        self.add_poly(&mut coords, NO_EXP, p.poly_part(), drop_constant);
        for (a, g) in p.terms() {
            let id = self.exp_id(g);
            self.add_poly(&mut coords, id, a, false);
        }
        coords
    }
}

/// Eliminate Q-linear dependencies among bricks, rewriting p* with rational
/// exponents on the survivors. Idempotent; preserves the represented value.
#[must_use]
pub fn refine(d: &Decomposition) -> RefinedDecomposition {
    let mut bricks = d.bricks.clone();
    let mut pstar = d.pstar.clone();
    let xl = linear_brick(&d.l);
    loop {
        let mut space = AtomSpace::new();
        let rows: Vec<Vec<BigRational>> =
            bricks.iter().map(|b| space.coords(b, true)).collect();
        let Some(q) = crate::ratlin::null_vector(&rows) else {
            break;
        };
        // Largest canonical brick with a nonzero coefficient, never x/L.
        let elim = (0..bricks.len())
            .filter(|&i| !q[i].is_zero() && bricks[i] != xl)
            .max_by(|&i, &j| bricks[i].canonical_cmp(&bricks[j]))
            .expect("a relation among bricks involves a non-linear brick");
        // The algebraic constant c with sum q_i t_i = c.
        let mut rel = ExpPoly::zero();
        for (i, b) in bricks.iter().enumerate() {
            if !q[i].is_zero() {
                rel = &rel + &b.scale(&rational_element(q[i].clone()));
            }
        }
        assert!(
            rel.is_constant() && rel.height() == 0,
            "brick relation must produce an algebraic constant"
        );
        let c = rel.poly_part().coeff(0);
        let qe = q[elim].clone();
        for t in pstar.iter_mut() {
            let e = t.exponents[elim].clone();
            if e.is_zero() {
                t.exponents.remove(elim);
                continue;
            }
            t.exponents.remove(elim);
            for (i, qi) in q.iter().enumerate() {
                if i == elim || qi.is_zero() {
                    continue;
                }
                let shift = -(&e * qi / &qe);
                let slot = if i < elim { i } else { i - 1 };
                t.exponents[slot] = &t.exponents[slot] + shift;
            }
            if !c.is_zero() {
                let extra = ExpPoly::from_element(c.clone() * rational_element(&e / &qe)).exp();
                t.const_factor = &t.const_factor * &extra;
            }
        }
        bricks.remove(elim);
        pstar = normalize_pstar(pstar);
    }
    RefinedDecomposition(Decomposition {
        bricks,
        l: d.l.clone(),
        pstar,
        source: d.source.clone(),
    })
}

/// Refine two decompositions that share one brick set. The elimination
/// order depends only on the bricks, so both sides stay aligned.
#[must_use]
pub fn refine_pair(
    dp: &Decomposition,
    dq: &Decomposition,
) -> (RefinedDecomposition, RefinedDecomposition) {
    assert_eq!(dp.bricks(), dq.bricks(), "decompositions must share bricks");
    let rp = refine(dp);
    let rq = refine(dq);
    assert_eq!(
        rp.as_decomposition().bricks(),
        rq.as_decomposition().bricks(),
        "shared refinement must eliminate identically"
    );
    (rp, rq)
}

/// True when removing any single brick breaks the decomposition laws:
/// either x/L disappears, or some exponent in the tree (of the source or of
/// a surviving brick) is no longer a rational combination of bricks plus an
/// algebraic constant.
#[must_use]
pub fn is_minimal(d: &Decomposition) -> bool {
    let xl = linear_brick(&d.l);
    for removed in 0..d.bricks.len() {
        if d.bricks[removed] == xl {
            continue;
        }
        let rest: Vec<ExpPoly> = d
            .bricks
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != removed)
            .map(|(_, b)| b.clone())
            .collect();
        if all_exponents_representable(&d.source, &rest) {
            return false;
        }
    }
    true
}

/// Every exponent in the tree of p is a rational combination of the given
/// bricks plus a constant, as are the bricks' own exponents.
fn all_exponents_representable(p: &ExpPoly, bricks: &[ExpPoly]) -> bool {
    let mut space = AtomSpace::new();
    let rows: Vec<Vec<BigRational>> =
        bricks.iter().map(|b| space.coords(b, true)).collect();
    let mut targets: Vec<ExpPoly> = Vec::new();
    collect_exponents(p, &mut targets);
    for b in bricks {
        collect_exponents(b, &mut targets);
    }
    targets.iter().all(|g| {
        let t = space.coords(g, true);
        crate::ratlin::solve_combination(&rows, &t).is_some()
    })
}

fn collect_exponents(p: &ExpPoly, out: &mut Vec<ExpPoly>) {
    for (_, g) in p.terms() {
        if !g.is_constant() {
            if !out.iter().any(|x| x == g) {
                out.push(g.clone());
            }
            collect_exponents(g, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn fe_ratio(n: i64, den: i64) -> FieldElement {
        FieldElement::from_rational(BigRational::new(BigInt::from(n), BigInt::from(den)))
    }

    fn fp(cs: &[i64]) -> FieldPoly {
        FieldPoly::from_coeffs(cs.iter().map(|&c| FieldElement::from_int(c)).collect())
    }

    fn x() -> ExpPoly {
        ExpPoly::var_x()
    }

    fn half_x_plus_x_sq() -> ExpPoly {
        ExpPoly::from_poly(FieldPoly::from_coeffs(vec![
            FieldElement::from_int(0),
            fe_ratio(1, 2),
            FieldElement::from_int(1),
        ]))
    }

    #[test]
    fn worked_example_decomposition() {
        // exp(exp(x/2 + x^2)) + x^3: bricks {x/2, x^2, exp(x/2 + x^2)}, L = 2.
        let inner = half_x_plus_x_sq();
        let p = &inner.exp().exp() + &ExpPoly::from_poly(fp(&[0, 0, 0, 1]));
        let d = decompose(&p);
        assert_eq!(d.l().to_i64(), Some(2));
        let expected = vec![
            ExpPoly::from_poly(FieldPoly::from_coeffs(vec![
                FieldElement::zero(),
                fe_ratio(1, 2),
            ])),
            ExpPoly::from_poly(fp(&[0, 0, 1])),
            inner.exp(),
        ];
        assert_eq!(d.bricks(), &expected[..]);
        assert_eq!(reconstruct(&d), p);
        assert!(is_minimal(&d));
    }

    #[test]
    fn single_exponential() {
        // exp(x) - 1: bricks {x}, L = 1, p* = Y - 1.
        let p = &x().exp() - &ExpPoly::one();
        let d = decompose(&p);
        assert_eq!(d.l().to_i64(), Some(1));
        assert_eq!(d.bricks(), &[x()]);
        assert_eq!(d.pstar().len(), 2);
        assert_eq!(reconstruct(&d), p);
    }

    #[test]
    fn integer_multiples_share_one_brick() {
        // exp(2x) + exp(3x): bricks {x}, exponents 2 and 3.
        let p = &ExpPoly::from_poly(fp(&[0, 2])).exp() + &ExpPoly::from_poly(fp(&[0, 3])).exp();
        let d = decompose(&p);
        assert_eq!(d.bricks(), &[x()]);
        let mut exps: Vec<i64> = d
            .pstar()
            .iter()
            .map(|t| t.exponents[0].to_integer().to_i64().unwrap())
            .collect();
        exps.sort_unstable();
        assert_eq!(exps, vec![2, 3]);
        assert_eq!(reconstruct(&d), p);
    }

    #[test]
    fn rational_multiples_set_l() {
        // exp(x/2) + exp(x/3): L = 6, single brick x/6, exponents 3 and 2.
        let a = ExpPoly::from_poly(FieldPoly::from_coeffs(vec![
            FieldElement::zero(),
            fe_ratio(1, 2),
        ]));
        let b = ExpPoly::from_poly(FieldPoly::from_coeffs(vec![
            FieldElement::zero(),
            fe_ratio(1, 3),
        ]));
        let p = &a.exp() + &b.exp();
        let d = decompose(&p);
        assert_eq!(d.l().to_i64(), Some(6));
        assert_eq!(d.bricks().len(), 1);
        assert_eq!(reconstruct(&d), p);
    }

    #[test]
    fn constant_summand_rides_in_const_factor() {
        // exp(1 + x): brick {x}, constant factor exp(1).
        let g = ExpPoly::from_poly(fp(&[1, 1]));
        let p = g.exp();
        let d = decompose(&p);
        assert_eq!(d.bricks(), &[x()]);
        assert_eq!(d.pstar().len(), 1);
        assert_eq!(d.pstar()[0].const_factor, ExpPoly::from_int(1).exp());
        assert_eq!(reconstruct(&d), p);
    }

    #[test]
    fn constant_exponent_never_forms_a_brick() {
        // exp(exp(2)) + exp(x): bricks {x} only.
        let p = &ExpPoly::from_int(2).exp().exp() + &x().exp();
        let d = decompose(&p);
        assert_eq!(d.bricks(), &[x()]);
        assert_eq!(reconstruct(&d), p);
    }

    #[test]
    fn pure_square_exponent_needs_x_brick_too() {
        // exp(x^2): x/L is required, so bricks are {x, x^2}.
        let p = ExpPoly::from_poly(fp(&[0, 0, 1])).exp();
        let d = decompose(&p);
        assert_eq!(d.bricks().len(), 2);
        assert_eq!(d.bricks()[0], x());
        assert_eq!(reconstruct(&d), p);
        assert!(is_minimal(&d));
    }

    #[test]
    fn constant_input_gets_trivial_bricks() {
        let p = &ExpPoly::from_int(2).exp() + &ExpPoly::from_int(3);
        let d = decompose(&p);
        assert_eq!(d.bricks(), &[x()]);
        assert_eq!(d.l().to_i64(), Some(1));
        assert_eq!(reconstruct(&d), p);
    }

    #[test]
    fn refine_eliminates_affine_dependency() {
        // Bricks {x, 2x+1} collapse to {x}; exp(2x+1) = exp(1) * exp(x)^2.
        let shifted = ExpPoly::from_poly(fp(&[1, 2]));
        let p = shifted.exp();
        let manual = Decomposition {
            bricks: vec![x(), shifted],
            l: BigInt::one(),
            pstar: vec![PStarTerm {
                coeff: FieldPoly::one(),
                const_factor: ExpPoly::one(),
                exponents: vec![BigRational::zero(), BigRational::one()],
            }],
            source: p.clone(),
        };
        assert_eq!(reconstruct(&manual), p);
        let r = refine(&manual);
        assert_eq!(r.as_decomposition().bricks(), &[x()]);
        assert_eq!(reconstruct(r.as_decomposition()), p);
        let t = &r.as_decomposition().pstar()[0];
        assert_eq!(t.exponents, vec![BigRational::from_integer(BigInt::from(2))]);
        assert_eq!(t.const_factor, ExpPoly::from_int(1).exp());
    }

    #[test]
    fn refine_merges_parallel_monomials() {
        // exp(2x^2) + exp(3x^2): bricks {x, 2x^2, 3x^2}; refinement keeps
        // {x, 2x^2} and rewrites the other exponent as 3/2.
        let p = &ExpPoly::from_poly(fp(&[0, 0, 2])).exp()
            + &ExpPoly::from_poly(fp(&[0, 0, 3])).exp();
        let d = decompose(&p);
        assert_eq!(d.bricks().len(), 3);
        let r = refine(&d);
        assert_eq!(r.as_decomposition().bricks().len(), 2);
        assert_eq!(reconstruct(r.as_decomposition()), p);
        let has_half = r
            .as_decomposition()
            .pstar()
            .iter()
            .any(|t| t.exponents.iter().any(|e| *e.denom() == BigInt::from(2)));
        assert!(has_half);
    }

    #[test]
    fn refine_is_idempotent_on_independent_bricks() {
        let inner = half_x_plus_x_sq();
        let p = &inner.exp().exp() + &ExpPoly::from_poly(fp(&[0, 0, 0, 1]));
        let d = decompose(&p);
        let r = refine(&d);
        assert_eq!(r.as_decomposition().bricks(), d.bricks());
        let again = refine(r.as_decomposition());
        assert_eq!(again.as_decomposition().bricks(), d.bricks());
        assert_eq!(reconstruct(again.as_decomposition()), p);
    }

    #[test]
    fn shared_decomposition_for_two_inputs() {
        // exp(x) + 1 and exp(2x) + 1 over the shared brick {x}.
        let p = &x().exp() + &ExpPoly::one();
        let q = &ExpPoly::from_poly(fp(&[0, 2])).exp() + &ExpPoly::one();
        let (dp, dq) = decompose_pair(&p, &q);
        assert_eq!(dp.bricks(), dq.bricks());
        assert_eq!(dp.bricks(), &[x()]);
        assert_eq!(reconstruct(&dp), p);
        assert_eq!(reconstruct(&dq), q);
    }

    #[test]
    fn round_trip_on_nested_sample() {
        // (x + exp(x * exp(x))) * exp(x/2) built from pieces.
        let xe = &ExpPoly::from_poly(fp(&[0, 1])) * &x().exp();
        let inner = xe.exp();
        let half = ExpPoly::from_poly(FieldPoly::from_coeffs(vec![
            FieldElement::zero(),
            fe_ratio(1, 2),
        ]));
        let p = &(&x() + &inner) * &half.exp();
        let d = decompose(&p);
        assert_eq!(reconstruct(&d), p);
        let r = refine(&d);
        assert_eq!(reconstruct(r.as_decomposition()), p);
    }

    #[test]
    fn minimality_fails_with_redundant_brick() {
        // Adding x^2 as an extra brick to exp(x) - 1 is not minimal.
        let p = &x().exp() - &ExpPoly::one();
        let d = decompose(&p);
        let padded = Decomposition {
            bricks: sorted_bricks(vec![x(), ExpPoly::from_poly(fp(&[0, 0, 1]))]),
            l: BigInt::one(),
            pstar: d.pstar().to_vec(),
            source: p.clone(),
        };
        assert!(is_minimal(&d));
        assert!(!is_minimal(&padded));
    }
}
