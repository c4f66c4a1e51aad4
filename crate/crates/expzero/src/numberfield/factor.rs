//! Integer polynomial factorization by certified root clustering.
//!
//! Roots are isolated with certified enclosures, then subsets of roots are
//! tested as potential factors: the scaled product `lc * prod (x - z_i)` of a
//! true factor's roots has integer coefficients, so each coefficient
//! enclosure is refined until it either pins a unique integer or certifiably
//! contains none. Candidates are confirmed by exact division, which is the
//! sole arbiter of correctness. Enumerating subsets by increasing size makes
//! every confirmed factor irreducible.

use super::isolate::{self, Rectangle};
use crate::error::{Error, Result};
use crate::numeric::ball::ComplexBall;
use crate::poly::{IntPoly, Poly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Complete factorization `f = unit * content * prod f_i^(m_i)` with the
/// `f_i` primitive, irreducible, positive-leading and pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    pub unit: BigInt,
    pub content: BigInt,
    pub factors: Vec<(IntPoly, usize)>,
}

/// One root of a squarefree polynomial, tracked as a shrinking rectangle.
struct TrackedRoot {
    rect: Rectangle,
}

impl TrackedRoot {
    fn ball(&self, prec: u32) -> ComplexBall {
        self.rect.to_ball(prec)
    }
}

/// Refine every tracked root of `f` so its rectangle size is at most
/// `2^target_log2`.
fn refine_roots(
    f: &IntPoly,
    roots: &mut [TrackedRoot],
    target_log2: i64,
    prec_cap: u32,
) -> Result<()> {
    let cf = isolate::int_coeff_fn(f);
    for r in roots.iter_mut() {
        r.rect = isolate::refine(&cf, &r.rect, target_log2, 64, prec_cap)?;
    }
    Ok(())
}

/// Does the ball pin a unique integer? Returns that integer, or None when
/// the ball certifiably contains no integer (gaussian integers included).
/// Err(()) means undecided at the current radius.
#[allow(clippy::result_unit_err)]
fn pinned_integer(b: &ComplexBall) -> std::result::Result<Option<BigInt>, ()> {
    let rad = b.radius().to_rational();
    if rad >= BigRational::new(BigInt::one(), BigInt::from(4)) {
        return Err(());
    }
    // The imaginary part must admit zero.
    if b.mid_im().to_rational().abs() > rad {
        return Ok(None);
    }
    let re = b.mid_re().to_rational();
    let nearest = (&re + BigRational::new(BigInt::one(), BigInt::from(2))).floor();
    let nearest = nearest.to_integer();
    if (re - BigRational::from_integer(nearest.clone())).abs() > rad {
        return Ok(None);
    }
    Ok(Some(nearest))
}

/// Coefficient enclosures of `lc * prod_{i in subset} (x - z_i)`.
fn candidate_coeff_balls(
    lead: &BigInt,
    roots: &[TrackedRoot],
    subset: &[usize],
    prec: u32,
) -> Vec<ComplexBall> {
    let mut acc = vec![ComplexBall::exact(
        crate::numeric::dyadic::Dyadic::from_bigint(lead),
        crate::numeric::dyadic::Dyadic::zero(),
    )];
    for &i in subset {
        let z = roots[i].ball(prec);
        let mut next = Vec::with_capacity(acc.len() + 1);
        next.push(ComplexBall::exact_int(0, 0));
        for c in &acc {
            next.push(c.clone());
        }
        for (j, c) in acc.iter().enumerate() {
            next[j] = next[j].sub(&c.mul(&z, prec), prec);
        }
        acc = next;
    }
    acc
}

/// Attempt to read the subset product off as an integer polynomial, refining
/// the roots involved until every coefficient is decided.
fn subset_candidate(
    f: &IntPoly,
    roots: &mut [TrackedRoot],
    subset: &[usize],
    prec_cap: u32,
) -> Result<Option<IntPoly>> {
    let lead = f.leading().expect("nonzero polynomial");
    let mut target: i64 = -64;
    loop {
        let prec = (2 * target.unsigned_abs() as u32).clamp(64, prec_cap);
        let balls = candidate_coeff_balls(lead, roots, subset, prec);
        let mut undecided = false;
        let mut ints = Vec::with_capacity(balls.len());
        for b in &balls {
            match pinned_integer(b) {
                Ok(Some(n)) => ints.push(n),
                Ok(None) => return Ok(None),
                Err(()) => {
                    undecided = true;
                    break;
                }
            }
        }
        if !undecided {
            return Ok(Some(Poly::from_coeffs(ints)));
        }
        if (2 * target.unsigned_abs() as u32) >= prec_cap {
            return Err(Error::PrecisionCap { cap_bits: prec_cap });
        }
        target *= 2;
        refine_roots(f, roots, target, prec_cap)?;
    }
}

/// Next k-subset of {0..n-1} in lexicographic order; false when exhausted.
fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Factor a primitive squarefree polynomial into irreducible factors.
fn factor_squarefree(f: &IntPoly, degree_cap: usize, prec_cap: u32) -> Result<Vec<IntPoly>> {
    let deg = f.degree_or_zero();
    if deg == 0 {
        return Ok(Vec::new());
    }
    if deg == 1 {
        return Ok(vec![f.clone()]);
    }
    if deg > degree_cap {
        return Err(Error::DegreeCap {
            degree: deg,
            cap: degree_cap,
        });
    }
    let cf = isolate::int_coeff_fn(f);
    let rects = isolate::isolate_all(&cf, deg, 64, prec_cap)?;
    let mut roots: Vec<TrackedRoot> = rects.into_iter().map(|rect| TrackedRoot { rect }).collect();
    refine_roots(f, &mut roots, -64, prec_cap)?;

    let mut remaining = f.clone();
    let mut factors = Vec::new();
    let mut size = 1usize;
    'outer: loop {
        let n = roots.len();
        let rdeg = remaining.degree_or_zero();
        if rdeg <= 1 || size > rdeg / 2 {
            break;
        }
        if size > n {
            break;
        }
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            if let Some(cand) = subset_candidate(&remaining, &mut roots, &subset, prec_cap)? {
                if cand.degree_or_zero() == size && divides(&cand, &remaining) {
                    let h = cand.primitive_part();
                    remaining = remaining.exact_div(&h);
                    factors.push(h);
                    let mut kept = Vec::with_capacity(n - size);
                    for (i, r) in roots.into_iter().enumerate() {
                        if !subset.contains(&i) {
                            kept.push(r);
                        }
                    }
                    roots = kept;
                    continue 'outer;
                }
            }
            if !next_subset(&mut subset, n) {
                break;
            }
        }
        size += 1;
    }
    if remaining.degree_or_zero() >= 1 {
        factors.push(remaining.primitive_part());
    }
    Ok(factors)
}

fn divides(h: &IntPoly, f: &IntPoly) -> bool {
    if h.is_zero() {
        return false;
    }
    let (_, r) = f.to_rational().div_rem(&h.to_rational());
    r.is_zero()
}

/// Factor an arbitrary nonzero integer polynomial.
pub fn factor_int(f: &IntPoly, degree_cap: usize, prec_cap: u32) -> Result<Factored> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let content = f.content();
    let prim = f.primitive_part();
    let unit = if f.leading().expect("nonzero").is_negative() {
        BigInt::from(-1)
    } else {
        BigInt::one()
    };
    let mut factors: Vec<(IntPoly, usize)> = Vec::new();
    for (g, mult) in prim.to_rational().squarefree_decomposition() {
        let gi = g.to_integer_primitive();
        for h in factor_squarefree(&gi, degree_cap, prec_cap)? {
            factors.push((h, mult));
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree_or_zero()
            .cmp(&b.0.degree_or_zero())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    Ok(Factored {
        unit,
        content,
        factors,
    })
}

/// Is the polynomial irreducible over the rationals (degree at least 1)?
pub fn is_irreducible(f: &IntPoly, degree_cap: usize, prec_cap: u32) -> Result<bool> {
    if f.degree_or_zero() < 1 {
        return Ok(false);
    }
    let fac = factor_int(f, degree_cap, prec_cap)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ipoly(cs: &[i64]) -> IntPoly {
        Poly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn refactor(fac: &Factored) -> IntPoly {
        let mut acc = Poly::constant(&fac.unit * &fac.content);
        for (h, m) in &fac.factors {
            for _ in 0..*m {
                acc = &acc * h;
            }
        }
        acc
    }

    #[test]
    fn factors_product_of_quadratics() {
        // (x^2 - 2)(x^2 - 3)
        let f = ipoly(&[6, 0, -5, 0, 1]);
        let fac = factor_int(&f, 12, 1 << 14).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(refactor(&fac), f);
        for (h, m) in &fac.factors {
            assert_eq!(*m, 1);
            assert_eq!(h.degree_or_zero(), 2);
        }
    }

    #[test]
    fn splits_off_rational_roots() {
        // (2x - 1)(x + 3)(x^2 + 1)
        let a = ipoly(&[-1, 2]);
        let b = ipoly(&[3, 1]);
        let c = ipoly(&[1, 0, 1]);
        let f = &(&a * &b) * &c;
        let fac = factor_int(&f, 12, 1 << 14).unwrap();
        assert_eq!(refactor(&fac), f);
        assert_eq!(fac.factors.len(), 3);
        let degs: Vec<usize> = fac.factors.iter().map(|(h, _)| h.degree_or_zero()).collect();
        assert_eq!(degs, vec![1, 1, 2]);
    }

    #[test]
    fn keeps_irreducible_whole() {
        // x^4 + 1 is irreducible over Q.
        let f = ipoly(&[1, 0, 0, 0, 1]);
        let fac = factor_int(&f, 12, 1 << 14).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0], (f.clone(), 1));
        assert!(is_irreducible(&f, 12, 1 << 14).unwrap());
    }

    #[test]
    fn cyclotomic_like_splits() {
        // x^4 - 1 = (x-1)(x+1)(x^2+1)
        let f = ipoly(&[-1, 0, 0, 0, 1]);
        let fac = factor_int(&f, 12, 1 << 14).unwrap();
        assert_eq!(refactor(&fac), f);
        assert_eq!(fac.factors.len(), 3);
        assert!(!is_irreducible(&f, 12, 1 << 14).unwrap());
    }

    #[test]
    fn multiplicities_and_content() {
        // 6 (x - 1)^2 (x^2 - 2)
        let g = ipoly(&[-1, 1]);
        let f = &(&(&g * &g) * &ipoly(&[-2, 0, 1])) * &ipoly(&[6]);
        let fac = factor_int(&f, 12, 1 << 14).unwrap();
        assert_eq!(fac.content, BigInt::from(6));
        assert_eq!(refactor(&fac), f);
        let by_deg: Vec<(usize, usize)> = fac
            .factors
            .iter()
            .map(|(h, m)| (h.degree_or_zero(), *m))
            .collect();
        assert!(by_deg.contains(&(1, 2)));
        assert!(by_deg.contains(&(2, 1)));
    }

    #[test]
    fn negative_leading_unit() {
        let f = ipoly(&[2, 0, -1]);
        let fac = factor_int(&f, 12, 1 << 14).unwrap();
        assert_eq!(fac.unit, BigInt::from(-1));
        assert_eq!(refactor(&fac), f);
    }

    #[test]
    fn degree_cap_enforced() {
        let mut cs = vec![0i64; 14];
        cs[0] = -1;
        cs[13] = 1;
        let f = ipoly(&cs);
        match factor_int(&f, 12, 1 << 14) {
            Err(Error::DegreeCap { degree: 13, cap: 12 }) => {}
            other => panic!("expected degree cap error, got {other:?}"),
        }
    }

    #[test]
    fn close_roots_still_split() {
        // (x^2 - 2)(16384 x^2 - 32771): 32771 is prime, so the second factor
        // is irreducible with roots within 7e-5 of +-sqrt(2).
        let f = &ipoly(&[-2, 0, 1]) * &ipoly(&[-32771, 0, 16384]);
        let fac = factor_int(&f, 12, 1 << 14).unwrap();
        assert_eq!(refactor(&fac), f);
        assert_eq!(fac.factors.len(), 2);
    }
}
