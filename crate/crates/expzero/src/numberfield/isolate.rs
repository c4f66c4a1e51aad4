//! Certified complex root counting and isolation on rectangles.
//!
//! Counting uses the argument principle: the winding number of the image of
//! the rectangle boundary is accumulated from quadrant transitions of
//! certified segment-image enclosures. Each enclosure must exclude zero and
//! have midpoint magnitude at least four times its radius, which keeps the
//! per-segment angular uncertainty below 15 degrees; consecutive enclosures
//! share a curve point, so their midpoints are less than half a quadrant
//! apart and the quadrant step is always in {-1, 0, +1}. The step sum
//! telescopes to four times the winding number.
//!
//! Coefficients are supplied as a function producing ball enclosures at a
//! requested precision, so the same machinery serves integer polynomials
//! (exact balls) and polynomials over a number field (refinable balls).

use crate::error::{Error, Result};
use crate::numeric::ball::ComplexBall;
use crate::numeric::dyadic::Dyadic;
use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Closed axis-aligned rectangle with rational corners.
#[derive(Clone, PartialEq, Eq)]
pub struct Rectangle {
    pub x0: BigRational,
    pub x1: BigRational,
    pub y0: BigRational,
    pub y1: BigRational,
}

impl Rectangle {
    #[must_use]
    pub fn new(x0: BigRational, x1: BigRational, y0: BigRational, y1: BigRational) -> Self {
        assert!(x0 < x1 && y0 < y1, "rectangle must have positive extent");
        Rectangle { x0, x1, y0, y1 }
    }

    #[must_use]
    pub fn square(half_side: BigRational) -> Self {
        assert!(half_side.is_positive());
        Rectangle {
            x0: -half_side.clone(),
            x1: half_side.clone(),
            y0: -half_side.clone(),
            y1: half_side,
        }
    }

    #[must_use]
    pub fn width(&self) -> BigRational {
        &self.x1 - &self.x0
    }

    #[must_use]
    pub fn height(&self) -> BigRational {
        &self.y1 - &self.y0
    }

    #[must_use]
    pub fn center(&self) -> (BigRational, BigRational) {
        let two = BigRational::from_integer(BigInt::from(2));
        ((&self.x0 + &self.x1) / &two, (&self.y0 + &self.y1) / &two)
    }

    /// Ball containing the whole rectangle.
    #[must_use]
    pub fn to_ball(&self, prec: u32) -> ComplexBall {
        let (cx, cy) = self.center();
        let two = BigRational::from_integer(BigInt::from(2));
        let rad = (self.width() + self.height()) / two;
        ComplexBall::from_rational_disc(&cx, &cy, &rad, prec)
    }

    /// Width plus height, a bound on twice the half-diagonal.
    #[must_use]
    pub fn size(&self) -> BigRational {
        self.width() + self.height()
    }

    #[must_use]
    pub fn contains_point(&self, x: &BigRational, y: &BigRational) -> bool {
        &self.x0 <= x && x <= &self.x1 && &self.y0 <= y && y <= &self.y1
    }

    /// Split into four children at the given interior fractions.
    fn split(&self, fx: &BigRational, fy: &BigRational) -> [Rectangle; 4] {
        let mx = &self.x0 + fx * self.width();
        let my = &self.y0 + fy * self.height();
        [
            Rectangle::new(self.x0.clone(), mx.clone(), self.y0.clone(), my.clone()),
            Rectangle::new(mx.clone(), self.x1.clone(), self.y0.clone(), my.clone()),
            Rectangle::new(self.x0.clone(), mx.clone(), my.clone(), self.y1.clone()),
            Rectangle::new(mx, self.x1.clone(), my, self.y1.clone()),
        ]
    }

    /// Split along the longer side at the given fraction.
    fn bisect(&self, f: &BigRational) -> [Rectangle; 2] {
        if self.width() >= self.height() {
            let mx = &self.x0 + f * self.width();
            [
                Rectangle::new(self.x0.clone(), mx.clone(), self.y0.clone(), self.y1.clone()),
                Rectangle::new(mx, self.x1.clone(), self.y0.clone(), self.y1.clone()),
            ]
        } else {
            let my = &self.y0 + f * self.height();
            [
                Rectangle::new(self.x0.clone(), self.x1.clone(), self.y0.clone(), my.clone()),
                Rectangle::new(self.x0.clone(), self.x1.clone(), my, self.y1.clone()),
            ]
        }
    }
}

impl fmt::Debug for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] x [{}, {}]i",
            self.x0, self.x1, self.y0, self.y1
        )
    }
}

/// Coefficient enclosures (ascending degree) at a requested precision.
pub type CoeffFn<'a> = dyn Fn(u32) -> Vec<ComplexBall> + 'a;

/// Exact coefficient enclosures of an integer polynomial.
#[must_use]
pub fn int_coeff_fn(f: &IntPoly) -> impl Fn(u32) -> Vec<ComplexBall> + '_ {
    move |_prec| {
        f.coeffs()
            .iter()
            .map(|c| ComplexBall::exact(Dyadic::from_bigint(c), Dyadic::zero()))
            .collect()
    }
}

fn eval_ball(coeffs: &[ComplexBall], z: &ComplexBall, prec: u32) -> ComplexBall {
    let mut acc = match coeffs.last() {
        Some(c) => c.clone(),
        None => return ComplexBall::exact_int(0, 0),
    };
    for c in coeffs.iter().rev().skip(1) {
        acc = acc.mul(z, prec).add(c, prec);
    }
    acc
}

/// Enclosure of an integer polynomial's value on a ball.
#[must_use]
pub fn eval_int_poly(f: &IntPoly, z: &ComplexBall, prec: u32) -> ComplexBall {
    let cs = int_coeff_fn(f)(prec);
    eval_ball(&cs, z, prec)
}

/// Split fractions used to dodge roots sitting exactly on subdivision lines.
const JITTERS: [((i64, i64), (i64, i64)); 6] = [
    ((1, 2), (1, 2)),
    ((27, 53), (23, 47)),
    ((29, 61), (31, 59)),
    ((23, 47), (27, 53)),
    ((33, 67), (29, 61)),
    ((31, 59), (33, 67)),
];

fn jitter_fractions(j: usize) -> (BigRational, BigRational) {
    let ((a, b), (c, d)) = JITTERS[j % JITTERS.len()];
    (
        BigRational::new(BigInt::from(a), BigInt::from(b)),
        BigRational::new(BigInt::from(c), BigInt::from(d)),
    )
}

const MAX_WALK_DEPTH: u32 = 24;

fn certified(img: &ComplexBall) -> bool {
    img.excludes_zero() && img.mid_dominates_radius(2)
}

/// Append certified quadrants of segment images along [a, b]; false if a
/// usable enclosure cannot be obtained at this precision.
///
/// Two enclosures are tried per segment: the plain Horner image, and the
/// mean value form f(c) + f'(Z)(Z - c) around the segment midpoint. The
/// latter tracks the true local derivative, so its radius stays
/// proportional to the segment length even where coefficient-magnitude
/// propagation vastly overestimates (near-cancelling derivatives close to
/// clustered roots).
fn walk_segment(
    coeffs: &[ComplexBall],
    dcoeffs: &[ComplexBall],
    ax: &BigRational,
    ay: &BigRational,
    bx: &BigRational,
    by: &BigRational,
    prec: u32,
    depth: u32,
    out: &mut Vec<u8>,
) -> bool {
    let two = BigRational::from_integer(BigInt::from(2));
    let cx = (ax + bx) / &two;
    let cy = (ay + by) / &two;
    let rad = ((bx - ax).abs() + (by - ay).abs()) / &two;
    let z = ComplexBall::from_rational_disc(&cx, &cy, &rad, prec);
    let img = eval_ball(coeffs, &z, prec);
    if certified(&img) {
        out.push(img.mid_quadrant());
        return true;
    }
    let c = ComplexBall::from_rational_point(&cx, &cy, prec);
    let fc = eval_ball(coeffs, &c, prec);
    let fp = eval_ball(dcoeffs, &z, prec);
    let centered = fc.add(&fp.mul(&z.sub(&c, prec), prec), prec);
    if certified(&centered) {
        out.push(centered.mid_quadrant());
        return true;
    }
    if depth == 0 {
        return false;
    }
    walk_segment(coeffs, dcoeffs, ax, ay, &cx, &cy, prec, depth - 1, out)
        && walk_segment(coeffs, dcoeffs, &cx, &cy, bx, by, prec, depth - 1, out)
}

/// Count roots (with multiplicity) strictly inside the rectangle, or `None`
/// if the boundary cannot be certified at this precision.
#[must_use]
pub fn count_roots(coeffs: &CoeffFn, rect: &Rectangle, prec: u32) -> Option<usize> {
    let cs = coeffs(prec);
    if cs.iter().any(ComplexBall::is_entire) {
        return None;
    }
    let dcs: Vec<ComplexBall> = cs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale_int(&BigInt::from(i), prec))
        .collect();
    let mut quads = Vec::new();
    let corners = [
        (&rect.x0, &rect.y0),
        (&rect.x1, &rect.y0),
        (&rect.x1, &rect.y1),
        (&rect.x0, &rect.y1),
    ];
    for i in 0..4 {
        let (ax, ay) = corners[i];
        let (bx, by) = corners[(i + 1) % 4];
        if !walk_segment(&cs, &dcs, ax, ay, bx, by, prec, MAX_WALK_DEPTH, &mut quads) {
            return None;
        }
    }
    let n = quads.len();
    let mut total: i64 = 0;
    for i in 0..n {
        let dq = (i64::from(quads[(i + 1) % n]) - i64::from(quads[i])).rem_euclid(4);
        total += match dq {
            0 => 0,
            1 => 1,
            3 => -1,
            _ => return None,
        };
    }
    if total % 4 != 0 || total < 0 {
        return None;
    }
    Some((total / 4) as usize)
}

/// Count roots, doubling precision until certified or the cap is exceeded.
pub fn count_roots_auto(
    coeffs: &CoeffFn,
    rect: &Rectangle,
    start_prec: u32,
    prec_cap: u32,
) -> Result<usize> {
    let mut prec = start_prec.max(8);
    loop {
        if let Some(n) = count_roots(coeffs, rect, prec) {
            return Ok(n);
        }
        if prec >= prec_cap {
            return Err(Error::PrecisionCap { cap_bits: prec_cap });
        }
        prec = (prec * 2).min(prec_cap);
    }
}

/// Lower bound on `|z|` over a ball: max-norm of midpoint minus radius.
fn mag_lower(b: &ComplexBall) -> BigRational {
    let re = b.mid_re().to_rational().abs();
    let im = b.mid_im().to_rational().abs();
    let m = if re >= im { re } else { im };
    m - b.radius().to_rational()
}

/// Square rectangle certain to contain all roots, from the Cauchy bound.
fn cauchy_rectangle(coeffs: &CoeffFn, prec: u32) -> Option<Rectangle> {
    let cs = coeffs(prec);
    if cs.iter().any(ComplexBall::is_entire) {
        return None;
    }
    let lead = cs.last()?;
    let low = mag_lower(lead);
    if !low.is_positive() {
        return None;
    }
    let mut max = BigRational::zero();
    for c in &cs[..cs.len() - 1] {
        let m = c.mag_upper().to_rational();
        if m > max {
            max = m;
        }
    }
    let r = BigRational::one() + max / low;
    Some(Rectangle::square(r))
}

const MAX_SPLIT_DEPTH: u32 = 96;

fn isolate_rec(
    coeffs: &CoeffFn,
    rect: &Rectangle,
    count: usize,
    prec: u32,
    depth: u32,
    out: &mut Vec<Rectangle>,
) -> bool {
    if count == 0 {
        return true;
    }
    if count == 1 {
        out.push(rect.clone());
        return true;
    }
    if depth >= MAX_SPLIT_DEPTH {
        return false;
    }
    'jitter: for j in 0..JITTERS.len() {
        let (fx, fy) = jitter_fractions(j);
        let children = rect.split(&fx, &fy);
        let mut counts = [0usize; 4];
        for (i, child) in children.iter().enumerate() {
            match count_roots(coeffs, child, prec) {
                Some(n) => counts[i] = n,
                None => continue 'jitter,
            }
        }
        if counts.iter().sum::<usize>() != count {
            continue 'jitter;
        }
        let mark = out.len();
        for (i, child) in children.iter().enumerate() {
            if !isolate_rec(coeffs, child, counts[i], prec, depth + 1, out) {
                out.truncate(mark);
                continue 'jitter;
            }
        }
        return true;
    }
    false
}

/// Isolating rectangles for all `expected` roots. The polynomial family must
/// be squarefree for termination.
pub fn isolate_all(
    coeffs: &CoeffFn,
    expected: usize,
    start_prec: u32,
    prec_cap: u32,
) -> Result<Vec<Rectangle>> {
    if expected == 0 {
        return Ok(Vec::new());
    }
    let mut prec = start_prec.max(8);
    loop {
        if let Some(rect) = cauchy_rectangle(coeffs, prec) {
            if let Some(n) = count_roots(coeffs, &rect, prec) {
                if n == expected {
                    let mut out = Vec::new();
                    if isolate_rec(coeffs, &rect, n, prec, 0, &mut out) {
                        return Ok(out);
                    }
                }
            }
        }
        if prec >= prec_cap {
            return Err(Error::PrecisionCap { cap_bits: prec_cap });
        }
        prec = (prec * 2).min(prec_cap);
    }
}

/// One interval Newton contraction `N(Z) = c - f(c) / f'(Z)`, with `Z` the
/// rectangle's ball enclosure and `c` its center. When the contraction
/// lands strictly inside `Z`, `Z` holds exactly one root and the root lies
/// in the contraction, so its bounding box is a smaller isolating
/// rectangle. None when the step does not certify or does not shrink.
fn newton_step(
    coeffs: &CoeffFn,
    cur: &Rectangle,
    target: &BigRational,
    prec: u32,
) -> Option<Rectangle> {
    let cs = coeffs(prec);
    if cs.iter().any(ComplexBall::is_entire) {
        return None;
    }
    let dcs: Vec<ComplexBall> = cs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale_int(&BigInt::from(i), prec))
        .collect();
    let z = cur.to_ball(prec);
    let (cx, cy) = cur.center();
    let c = ComplexBall::from_rational_point(&cx, &cy, prec);
    let fc = eval_ball(&cs, &c, prec);
    let fpz = eval_ball(&dcs, &z, prec);
    let n = c.sub(&fc.mul(&fpz.inv(prec)?, prec), prec);
    if n.is_entire() {
        return None;
    }
    // Pad the radius so the box cannot degenerate when f(c) is exact.
    let eighth = target / BigRational::from_integer(BigInt::from(8));
    let r = n.radius().to_rational().max(eighth);
    let nre = n.mid_re().to_rational();
    let nim = n.mid_im().to_rational();
    // The box corners sit within sqrt(2) * r of the contraction's center;
    // demand the doubled disk inside Z (1-norm bound on the center offset)
    // so the box provably stays inside Z.
    let dx = (z.mid_re().to_rational() - &nre).abs();
    let dy = (z.mid_im().to_rational() - &nim).abs();
    let two = BigRational::from_integer(BigInt::from(2));
    if dx + dy + &two * &r > z.radius().to_rational() {
        return None;
    }
    let next = Rectangle::new(&nre - &r, &nre + &r, &nim - &r, &nim + &r);
    if next.size() * two < cur.size() {
        Some(next)
    } else {
        None
    }
}

/// Shrink an isolating rectangle (containing exactly one root) until its
/// width plus height is at most `2^target_log2`.
pub fn refine(
    coeffs: &CoeffFn,
    rect: &Rectangle,
    target_log2: i64,
    start_prec: u32,
    prec_cap: u32,
) -> Result<Rectangle> {
    let target = if target_log2 >= 0 {
        BigRational::from_integer(BigInt::one() << target_log2 as u64)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-target_log2) as u64)
    };
    let mut cur = rect.clone();
    let mut prec = start_prec.max(8);
    while cur.size() > target {
        if let Some(next) = newton_step(coeffs, &cur, &target, prec) {
            cur = next;
            continue;
        }
        let mut advanced = false;
        'jitter: for j in 0..JITTERS.len() {
            let (f, _) = jitter_fractions(j);
            let halves = cur.bisect(&f);
            let mut keep = None;
            for h in &halves {
                match count_roots(coeffs, h, prec) {
                    Some(1) => {
                        if keep.is_some() {
                            continue 'jitter;
                        }
                        keep = Some(h.clone());
                    }
                    Some(0) => {}
                    _ => continue 'jitter,
                }
            }
            if let Some(h) = keep {
                cur = h;
                advanced = true;
                break;
            }
        }
        if !advanced {
            if prec >= prec_cap {
                return Err(Error::PrecisionCap { cap_bits: prec_cap });
            }
            prec = (prec * 2).min(prec_cap);
        }
    }
    Ok(cur)
}
