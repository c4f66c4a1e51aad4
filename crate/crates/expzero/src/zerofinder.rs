//! Zero decision and enumeration for exponential polynomials at algebraic
//! points, conditional on Schanuel's conjecture.
//!
//! The engine is the collapse principle: if p(β) = 0 at an algebraic β
//! then either every coefficient polynomial vanishes at β or two exponents
//! agree there. Candidates therefore come from the gcd of the coefficients
//! and, recursively, from the zeros of exponent differences — a recursion
//! that strictly reduces height. Each candidate is then tested exactly by
//! `is_zero_at`, so the reported zeros are sound, and the collapse
//! principle makes the candidate set complete.

use crate::decomp::{decompose_pair, refine_pair, AtomSpace, Decomposition, RefinedDecomposition};
use crate::error::{Error, Result};
use crate::expcore::ExpPoly;
use crate::mvpoly::{gcd as mv_gcd, MultiPoly};
use crate::numberfield::roots::{dedup_roots, isolate_field_roots, sort_roots, AlgebraicRoot};
use crate::numberfield::{nf_extend, Embedding, FieldElement, FieldPoly, NumberField};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Why p vanishes at a point: every coefficient polynomial does, or two
/// exponents collide. Indices refer to the term listing where a nonzero
/// polynomial part is item 0 and exponential terms follow in canonical
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CollapseWitness {
    AllCoeffsVanish,
    ExponentCollision(usize, usize),
}

/// Outcome of the zero enumeration. `zeros` is complete for algebraic
/// points conditional on Schanuel; `complete_for_all_common_zeros` is set
/// only by `common_zeros` when the height and coprimality hypotheses hold.
#[derive(Clone, Debug)]
pub struct ZeroReport {
    pub zeros: Vec<AlgebraicRoot>,
    pub witnesses: Vec<CollapseWitness>,
    pub assumes_schanuel: bool,
    pub candidates_examined: usize,
    pub complete_for_all_common_zeros: bool,
}

/// Result of the p*/q* common-factor test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coprimality {
    Coprime,
    CommonFactor,
    Unknown,
}

/// Exact zero test for a constant, by partitioning exponentials into
/// classes with equal exponents and summing coefficients per class.
#[must_use]
pub fn const_is_zero(c: &ExpPoly) -> bool {
    assert!(c.is_constant(), "const_is_zero requires a constant input");
    if !c.poly_part().coeff(0).is_zero() {
        return false;
    }
    let terms = c.terms();
    let mut class_of = vec![usize::MAX; terms.len()];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..terms.len() {
        for (k, &r) in reps.iter().enumerate() {
            let d = &terms[i].1 - &terms[r].1;
            if const_is_zero(&d) {
                class_of[i] = k;
                break;
            }
        }
        if class_of[i] == usize::MAX {
            class_of[i] = reps.len();
            reps.push(i);
        }
    }
    (0..reps.len()).all(|k| {
        let mut sum = FieldPoly::zero();
        for (i, (coeff, _)) in terms.iter().enumerate() {
            if class_of[i] == k {
                sum = &sum + coeff;
            }
        }
        sum.is_zero()
    })
}

/// Exact zero test of p(β): false is unconditional, true is conditional on
/// Schanuel.
#[must_use]
pub fn is_zero_at(p: &ExpPoly, beta: &FieldElement) -> bool {
    const_is_zero(&p.eval_at(beta))
}

/// Term listing with the polynomial part, when nonzero, as the exponent-0
/// item.
fn term_items(p: &ExpPoly) -> Vec<(FieldPoly, ExpPoly)> {
    let mut items = Vec::with_capacity(p.terms().len() + 1);
    if !p.poly_part().is_zero() {
        items.push((p.poly_part().clone(), ExpPoly::zero()));
    }
    items.extend(p.terms().iter().cloned());
    items
}

/// How p can vanish at β: all coefficients vanish, or the first
/// canonical-order pair of exponents that agree at β.
#[must_use]
pub fn collapse_test(p: &ExpPoly, beta: &FieldElement) -> Option<CollapseWitness> {
    let items = term_items(p);
    assert!(!items.is_empty(), "collapse test requires a nonzero input");
    if items.iter().all(|(a, _)| a.eval(beta).is_zero()) {
        return Some(CollapseWitness::AllCoeffsVanish);
    }
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            let d = &items[i].1.eval_at(beta) - &items[j].1.eval_at(beta);
            if const_is_zero(&d) {
                return Some(CollapseWitness::ExponentCollision(i, j));
            }
        }
    }
    None
}

/// First extension field mentioned by any coefficient, if any.
fn field_of(p: &ExpPoly) -> Option<NumberField> {
    fn scan(f: &FieldPoly) -> Option<NumberField> {
        f.coeffs().iter().find_map(|c| c.field().cloned())
    }
    scan(p.poly_part()).or_else(|| {
        p.terms()
            .iter()
            .find_map(|(a, g)| scan(a).or_else(|| field_of(g)))
    })
}

/// Apply a field embedding to every coefficient.
fn map_coeffs(p: &ExpPoly, emb: &Embedding) -> ExpPoly {
    let terms = p
        .terms()
        .iter()
        .map(|(a, g)| (emb.apply_poly(a), map_coeffs(g, emb)))
        .collect();
    ExpPoly::from_parts(emb.apply_poly(p.poly_part()), terms)
}

/// Express p and the root in one common field so p can be evaluated there.
fn lift_at_root(
    p: &ExpPoly,
    root: &AlgebraicRoot,
    cfg: &crate::Config,
) -> Result<(ExpPoly, FieldElement)> {
    let (root_field, elem) = root.to_field(cfg)?;
    if root_field.degree() == 1 {
        return Ok((p.clone(), elem));
    }
    match field_of(p) {
        None => Ok((p.clone(), elem)),
        Some(k) if k.same(&root_field) => Ok((p.clone(), elem)),
        Some(k) => {
            let (_, into_joint, root_into_joint) = nf_extend(&k, &root_field, cfg)?;
            Ok((map_coeffs(p, &into_joint), root_into_joint.apply(&elem)))
        }
    }
}

fn is_zero_at_root(p: &ExpPoly, root: &AlgebraicRoot, cfg: &crate::Config) -> Result<bool> {
    let (pl, beta) = lift_at_root(p, root, cfg)?;
    Ok(is_zero_at(&pl, &beta))
}

/// Deduplicated, sorted candidate set: roots of the coefficient gcd plus,
/// recursively, the algebraic zeros of exponent differences. Complete for
/// the zeros of p by the collapse principle. The count accumulates the
/// zero tests spent in recursive calls.
fn candidates_rec(
    p: &ExpPoly,
    cfg: &crate::Config,
    depth: u32,
) -> Result<(Vec<AlgebraicRoot>, usize)> {
    let items = term_items(p);
    let mut candidates: Vec<AlgebraicRoot> = Vec::new();
    let mut examined = 0usize;
    let g = items
        .iter()
        .skip(1)
        .fold(items[0].0.clone(), |acc, (a, _)| acc.gcd(a));
    if g.degree_or_zero() >= 1 {
        let field = field_of(p).unwrap_or_else(NumberField::rationals);
        candidates.extend(isolate_field_roots(&g, &field, cfg)?);
    }
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            let d = &items[i].1 - &items[j].1;
            if d.is_constant() {
                continue;
            }
            assert!(d.height() < p.height(), "recursion must reduce height");
            let (zs, ex) = zeros_rec(&d, cfg, depth + 1)?;
            candidates.extend(zs);
            examined += ex;
        }
    }
    let mut candidates = dedup_roots(candidates, cfg)?;
    sort_roots(&mut candidates, cfg);
    Ok((candidates, examined))
}

fn zeros_rec(p: &ExpPoly, cfg: &crate::Config, depth: u32) -> Result<(Vec<AlgebraicRoot>, usize)> {
    if p.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    if depth > cfg.depth_cap {
        return Err(Error::DepthCap { cap: cfg.depth_cap });
    }
    if p.is_constant() {
        return Ok((Vec::new(), 0));
    }
    let (candidates, mut examined) = candidates_rec(p, cfg, depth)?;
    let mut zeros = Vec::new();
    for r in &candidates {
        examined += 1;
        if is_zero_at_root(p, r, cfg)? {
            zeros.push(r.clone());
        }
    }
    Ok((zeros, examined))
}

/// The top-level candidate set that `algebraic_zeros` filters.
pub fn candidate_set(p: &ExpPoly, cfg: &crate::Config) -> Result<Vec<AlgebraicRoot>> {
    if p.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    Ok(candidates_rec(p, cfg, 0)?.0)
}

/// All algebraic zeros of p, with per-zero collapse witnesses, conditional
/// on Schanuel's conjecture.
pub fn algebraic_zeros(p: &ExpPoly, cfg: &crate::Config) -> Result<ZeroReport> {
    let (zeros, candidates_examined) = zeros_rec(p, cfg, 0)?;
    let mut witnesses = Vec::with_capacity(zeros.len());
    for r in &zeros {
        let (pl, beta) = lift_at_root(p, r, cfg)?;
        let w = collapse_test(&pl, &beta).expect("a zero of p must collapse");
        witnesses.push(w);
    }
    Ok(ZeroReport {
        zeros,
        witnesses,
        assumes_schanuel: true,
        candidates_examined,
        complete_for_all_common_zeros: false,
    })
}

/// Re-check a claimed collapse witness at a claimed zero, by direct
/// recomputation rather than by re-running the witness search.
pub fn verify_witness(
    p: &ExpPoly,
    root: &AlgebraicRoot,
    witness: &CollapseWitness,
    cfg: &crate::Config,
) -> Result<bool> {
    let (pl, beta) = lift_at_root(p, root, cfg)?;
    let items = term_items(&pl);
    Ok(match witness {
        CollapseWitness::AllCoeffsVanish => items.iter().all(|(a, _)| a.eval(&beta).is_zero()),
        CollapseWitness::ExponentCollision(i, j) => {
            *i < items.len() && *j < items.len() && i != j && {
                let d = &items[*i].1 - &items[*j].1;
                const_is_zero(&d.eval_at(&beta))
            }
        }
    })
}

/// Common algebraic zeros of p and q. The completeness flag is set only
/// when both heights are at most 1 and the representing polynomials are
/// coprime over a shared refined decomposition, in which case every common
/// zero is algebraic and therefore listed.
pub fn common_zeros(p: &ExpPoly, q: &ExpPoly, cfg: &crate::Config) -> Result<ZeroReport> {
    let rp = algebraic_zeros(p, cfg)?;
    let rq = algebraic_zeros(q, cfg)?;
    let mut zeros = Vec::new();
    let mut witnesses = Vec::new();
    for (r, w) in rp.zeros.iter().zip(&rp.witnesses) {
        let mut shared = false;
        for s in &rq.zeros {
            if r.eq_root(s, cfg)? {
                shared = true;
                break;
            }
        }
        if shared {
            zeros.push(r.clone());
            witnesses.push(w.clone());
        }
    }
    let complete = if p.height() <= 1 && q.height() <= 1 {
        let (dp, dq) = decompose_pair(p, q);
        let (rdp, rdq) = refine_pair(&dp, &dq);
        coprime_check(&rdp, &rdq, cfg) == Coprimality::Coprime
    } else {
        false
    };
    Ok(ZeroReport {
        zeros,
        witnesses,
        assumes_schanuel: true,
        candidates_examined: rp.candidates_examined + rq.candidates_examined,
        complete_for_all_common_zeros: complete,
    })
}

/// One p* term flattened to rational exponent vectors over the shared
/// variable list (bricks then constant-factor basis directions).
struct RawTerm {
    coeff: FieldPoly,
    exps: Vec<BigRational>,
}

/// Express every constant factor over a shared rational basis of exponent
/// constants, extending `basis` as new directions appear.
fn flatten_pstar(
    d: &Decomposition,
    space: &mut AtomSpace,
    basis: &mut Vec<Vec<BigRational>>,
) -> Vec<RawTerm> {
    let alpha = d.bricks().len();
    let mut out = Vec::new();
    for t in d.pstar() {
        let mut exps = t.exponents.clone();
        let ws = if t.const_factor.is_one() {
            vec![BigRational::zero(); basis.len()]
        } else {
            let terms = t.const_factor.terms();
            assert!(
                t.const_factor.poly_part().is_zero()
                    && terms.len() == 1
                    && terms[0].0 == FieldPoly::one(),
                "constant factor must be a plain exponential"
            );
            let u = &terms[0].1;
            let vec = space.coords(u, false);
            match crate::ratlin::solve_combination(basis, &vec) {
                Some(c) => c,
                None => {
                    basis.push(vec);
                    let mut unit = vec![BigRational::zero(); basis.len()];
                    unit[basis.len() - 1] = BigRational::one();
                    unit
                }
            }
        };
        exps.resize(alpha, BigRational::zero());
        exps.extend(ws);
        out.push(RawTerm {
            coeff: t.coeff.clone(),
            exps,
        });
    }
    // Pad to the basis width reached so far; the caller pads again once
    // both polynomials have contributed their constants.
    for t in &mut out {
        t.exps.resize(alpha + basis.len(), BigRational::zero());
    }
    out
}

/// Multiply out a flattened p* into an honest polynomial: variable 0 is x,
/// then one Z per brick, then one W per basis constant. Denominators are
/// cleared per variable with the shared lcm; negative exponents are lifted
/// by a unit monomial shift.
fn to_multipoly(raws: &[RawTerm], denoms: &[BigInt], nvars: usize) -> MultiPoly {
    let mut int_exps: Vec<Vec<BigInt>> = raws
        .iter()
        .map(|t| {
            t.exps
                .iter()
                .zip(denoms)
                .map(|(e, d)| {
                    let scaled = e * BigRational::from_integer(d.clone());
                    assert!(scaled.is_integer(), "denominator clearing failed");
                    scaled.to_integer()
                })
                .collect()
        })
        .collect();
    let width = denoms.len();
    for v in 0..width {
        let min = int_exps
            .iter()
            .map(|e| e[v].clone())
            .min()
            .unwrap_or_else(BigInt::zero);
        if min.is_negative() {
            for e in &mut int_exps {
                e[v] = &e[v] - &min;
            }
        }
    }
    let mut terms = Vec::new();
    for (t, ie) in raws.iter().zip(&int_exps) {
        for (k, c) in t.coeff.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0u32; nvars];
            e[0] = u32::try_from(k).expect("x-degree fits");
            for (v, b) in ie.iter().enumerate() {
                e[v + 1] = b.to_u32().expect("cleared exponent fits in u32");
            }
            terms.push((c.clone(), e));
        }
    }
    MultiPoly::from_terms(nvars, terms)
}

/// Coprimality of the representing polynomials over one shared refined
/// brick set, after clearing rational exponents and quotienting monomial
/// units. `Unknown` when the cleared total degree exceeds the configured
/// cap.
#[must_use]
pub fn coprime_check(
    dp: &RefinedDecomposition,
    dq: &RefinedDecomposition,
    cfg: &crate::Config,
) -> Coprimality {
    let bp = dp.as_decomposition();
    let bq = dq.as_decomposition();
    assert_eq!(bp.bricks(), bq.bricks(), "decompositions must share bricks");
    let alpha = bp.bricks().len();
    let mut space = AtomSpace::new();
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    let raw_p = flatten_pstar(bp, &mut space, &mut basis);
    let raw_q = flatten_pstar(bq, &mut space, &mut basis);
    let width = alpha + basis.len();
    let pad = |mut raws: Vec<RawTerm>| -> Vec<RawTerm> {
        for t in &mut raws {
            t.exps.resize(width, BigRational::zero());
        }
        raws
    };
    let raw_p = pad(raw_p);
    let raw_q = pad(raw_q);
    let denoms: Vec<BigInt> = (0..width)
        .map(|v| {
            raw_p
                .iter()
                .chain(&raw_q)
                .fold(BigInt::one(), |acc, t| acc.lcm(t.exps[v].denom()))
        })
        .collect();
    let nvars = 1 + width;
    let mp = to_multipoly(&raw_p, &denoms, nvars).strip_monomial_from(1);
    let mq = to_multipoly(&raw_q, &denoms, nvars).strip_monomial_from(1);
    let cap = cfg.gcd_degree_cap as u64;
    if mp.total_degree() > cap || mq.total_degree() > cap {
        return Coprimality::Unknown;
    }
    let g = mv_gcd(&mp, &mq).strip_monomial_from(1);
    if g.is_constant() {
        Coprimality::Coprime
    } else {
        Coprimality::CommonFactor
    }
}
