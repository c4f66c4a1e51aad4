//! Exact linear algebra over the rationals on small dense matrices.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Row-reduce `rows` while tracking the combination of original rows that
/// produced each reduced row. Returns (echelon rows, tracking rows).
fn echelon_with_tracking(
    rows: &[Vec<BigRational>],
    width: usize,
) -> (Vec<Vec<BigRational>>, Vec<Vec<BigRational>>) {
    let n = rows.len();
    let mut mat: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            let mut v = r.clone();
            v.resize(width, BigRational::zero());
            v
        })
        .collect();
    let mut track: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut t = vec![BigRational::zero(); n];
            t[i] = BigRational::one();
            t
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(r) = (pivot_row..n).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(pivot_row, r);
        track.swap(pivot_row, r);
        let inv = mat[pivot_row][col].recip();
        for v in mat[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        for v in track[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        for r2 in 0..n {
            if r2 == pivot_row || mat[r2][col].is_zero() {
                continue;
            }
            let f = mat[r2][col].clone();
            for c2 in 0..width {
                let delta = &f * &mat[pivot_row][c2];
                mat[r2][c2] = &mat[r2][c2] - &delta;
            }
            for c2 in 0..n {
                let delta = &f * &track[pivot_row][c2];
                track[r2][c2] = &track[r2][c2] - &delta;
            }
        }
        pivot_row += 1;
        if pivot_row == n {
            break;
        }
    }
    (mat, track)
}

fn row_width(rows: &[Vec<BigRational>], extra: usize) -> usize {
    rows.iter().map(Vec::len).max().unwrap_or(0).max(extra)
}

/// Nontrivial rational vector c with sum c_i * rows_i = 0, if one exists.
#[must_use]
pub(crate) fn null_vector(rows: &[Vec<BigRational>]) -> Option<Vec<BigRational>> {
    let width = row_width(rows, 0);
    let (mat, track) = echelon_with_tracking(rows, width);
    for (m, t) in mat.iter().zip(&track) {
        if m.iter().all(Zero::is_zero) {
            return Some(t.clone());
        }
    }
    None
}

/// Coefficients c with sum c_i * rows_i = target, if target is in the span.
#[must_use]
pub(crate) fn solve_combination(
    rows: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let width = row_width(rows, target.len());
    let (mat, track) = echelon_with_tracking(rows, width);
    let mut t: Vec<BigRational> = target.to_vec();
    t.resize(width, BigRational::zero());
    let mut combo = vec![BigRational::zero(); rows.len()];
    for (m, tr) in mat.iter().zip(&track) {
        let Some(lead) = m.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if t[lead].is_zero() {
            continue;
        }
        let f = t[lead].clone();
        for (ti, mi) in t.iter_mut().zip(m) {
            let delta = &f * mi;
            *ti = &*ti - &delta;
        }
        for (ci, tri) in combo.iter_mut().zip(tr) {
            let delta = &f * tri;
            *ci = &*ci + &delta;
        }
    }
    if t.iter().all(Zero::is_zero) {
        Some(combo)
    } else {
        None
    }
}
