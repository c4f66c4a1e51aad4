//! Canonical text rendering of normal forms.
//!
//! The output is deterministic, parses back to the same normal form, and
//! uses the smallest grammar forms available: sums are ordered polynomial
//! part first (ascending degree) then exponential terms in canonical order;
//! products render as `n*factors/d` chains with unit parts elided, so one
//! half of `x` is `x/2`, not `1/2 * x`. Field constants outside the
//! rationals render as `alg(minpoly, box)` forms that rebuild the same
//! field presentation on re-parse.

use crate::expcore::ExpPoly;
use crate::numberfield::{FieldElement, FieldPoly, NumberField};
use crate::poly::IntPoly;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A summand with its sign split off, so joins can render `a - b`.
type Piece = (bool, String);

fn join_pieces(pieces: &[Piece]) -> String {
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (neg, body)) in pieces.iter().enumerate() {
        if i == 0 {
            if *neg {
                out.push('-');
            }
        } else {
            out.push_str(if *neg { " - " } else { " + " });
        }
        out.push_str(body);
    }
    out
}

/// Product chain `n*f1*f2/d` for a nonnegative rational times factors,
/// eliding a unit numerator (when factors exist) and a unit denominator.
fn chain(q_abs: &BigRational, factors: &[String]) -> String {
    let mut parts: Vec<&str> = Vec::new();
    let numer = q_abs.numer().to_string();
    if factors.is_empty() || !q_abs.numer().is_one() {
        parts.push(&numer);
    }
    for f in factors {
        parts.push(f);
    }
    let mut s = parts.join("*");
    if !q_abs.denom().is_one() {
        s.push('/');
        s.push_str(&q_abs.denom().to_string());
    }
    s
}

fn x_power(k: usize) -> String {
    if k == 1 {
        "x".to_string()
    } else {
        format!("x^{k}")
    }
}

/// `alg(...)` form naming the field generator, raised to `i` when needed.
fn generator_power(field: &NumberField, i: usize) -> String {
    let r = field.presentation_rect();
    let base = format!(
        "alg({}, {}, {}, {}, {})",
        intpoly_string(field.minpoly()),
        r.x0,
        r.x1,
        r.y0,
        r.y1
    );
    if i >= 2 {
        format!("{base}^{i}")
    } else {
        base
    }
}

/// Integer polynomial in `t`, conventional descending-degree order.
fn intpoly_string(f: &IntPoly) -> String {
    let mut pieces: Vec<Piece> = Vec::new();
    for k in (0..=f.degree_or_zero()).rev() {
        let a = f.coeff(k);
        if a.is_zero() {
            continue;
        }
        let mag = a.magnitude().to_string();
        let body = match k {
            0 => mag,
            _ => {
                let t = if k == 1 { "t".to_string() } else { format!("t^{k}") };
                if a.magnitude().is_one() {
                    t
                } else {
                    format!("{mag}*{t}")
                }
            }
        };
        pieces.push((a.is_negative(), body));
    }
    join_pieces(&pieces)
}

/// Summand pieces of one field element: rational part plus generator powers.
fn element_pieces(e: &FieldElement) -> Vec<Piece> {
    match e {
        FieldElement::Rational(q) => {
            if q.is_zero() {
                Vec::new()
            } else {
                vec![(q.is_negative(), chain(&q.abs(), &[]))]
            }
        }
        FieldElement::Extension { coords, field } => coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let factors: Vec<String> = if i == 0 {
                    Vec::new()
                } else {
                    vec![generator_power(field, i)]
                };
                (c.is_negative(), chain(&c.abs(), &factors))
            })
            .collect(),
    }
}

/// Expression string for one field element.
pub fn print_element(e: &FieldElement) -> String {
    join_pieces(&element_pieces(e))
}

/// Piece for `c * tail` where the coefficient may need wrapping. A rational
/// or single-generator-power coefficient folds into the product chain; any
/// other element is parenthesized.
fn coeff_piece(c: &FieldElement, tail: &[String]) -> Piece {
    match c {
        FieldElement::Rational(q) => (q.is_negative(), chain(&q.abs(), tail)),
        FieldElement::Extension { coords, field } => {
            let nz: Vec<usize> = coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, _)| i)
                .collect();
            if let [i] = nz[..] {
                if i >= 1 {
                    let mut factors = vec![generator_power(field, i)];
                    factors.extend(tail.iter().cloned());
                    return (coords[i].is_negative(), chain(&coords[i].abs(), &factors));
                }
            }
            let mut body = format!("({})", print_element(c));
            for t in tail {
                body.push('*');
                body.push_str(t);
            }
            (false, body)
        }
    }
}

/// Summand pieces of a coefficient polynomial, ascending degree. Constant
/// terms contribute their element pieces directly.
fn poly_pieces(f: &FieldPoly) -> Vec<Piece> {
    let mut pieces = Vec::new();
    if f.is_zero() {
        return pieces;
    }
    for k in 0..=f.degree_or_zero() {
        let a = f.coeff(k);
        if a.is_zero() {
            continue;
        }
        if k == 0 {
            pieces.extend(element_pieces(&a));
        } else {
            pieces.push(coeff_piece(&a, &[x_power(k)]));
        }
    }
    pieces
}

/// Expression string for a coefficient polynomial in `x`.
#[must_use]
pub fn print_poly(f: &FieldPoly) -> String {
    join_pieces(&poly_pieces(f))
}

/// Integer polynomial in `t`, as used for minimal polynomials.
#[must_use]
pub fn print_intpoly(f: &IntPoly) -> String {
    intpoly_string(f)
}

/// Piece for one exponential term `c(x) * exp(g)`.
fn term_piece(c: &FieldPoly, g: &ExpPoly) -> Piece {
    let exp_str = format!("exp({})", print(g));
    let monomials: Vec<usize> = (0..=c.degree_or_zero())
        .filter(|&k| !c.coeff(k).is_zero())
        .collect();
    if let [k] = monomials[..] {
        let tail: Vec<String> = if k == 0 {
            vec![exp_str]
        } else {
            vec![x_power(k), exp_str]
        };
        coeff_piece(&c.coeff(k), &tail)
    } else {
        (false, format!("({})*{exp_str}", print_poly(c)))
    }
}

/// Canonical rendering of a normal form; `parse(print(p)) = p`.
#[must_use]
pub fn print(p: &ExpPoly) -> String {
    let mut pieces = poly_pieces(p.poly_part());
    for (c, g) in p.terms() {
        pieces.push(term_piece(c, g));
    }
    join_pieces(&pieces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse::parse;
    use crate::Config;

    fn cfg() -> Config {
        Config::default()
    }

    fn round_trip(text: &str) -> String {
        let p = parse(text, &cfg()).unwrap();
        let printed = print(&p);
        let back = parse(&printed, &cfg()).unwrap();
        assert_eq!(back, p, "reparse of {printed:?} changed the value");
        printed
    }

    #[test]
    fn zero_and_simple_forms() {
        assert_eq!(round_trip("0"), "0");
        assert_eq!(round_trip("x"), "x");
        assert_eq!(round_trip("x/2"), "x/2");
        assert_eq!(round_trip("x^2"), "x^2");
        assert_eq!(round_trip("3*x^2/2"), "3*x^2/2");
        assert_eq!(round_trip("-x"), "-x");
        assert_eq!(round_trip("1/2"), "1/2");
        assert_eq!(round_trip("-5"), "-5");
    }

    #[test]
    fn exp_product_merges_to_sum_inside_exp() {
        assert_eq!(round_trip("exp(1)*exp(x)"), "exp(1 + x)");
    }

    #[test]
    fn polynomial_part_prints_before_terms() {
        assert_eq!(round_trip("exp(x) - 1"), "-1 + exp(x)");
        assert_eq!(
            round_trip("exp(exp(x/2 + x^2)) + x^3"),
            "x^3 + exp(exp(x/2 + x^2))"
        );
    }

    #[test]
    fn coefficient_wrapping() {
        assert_eq!(round_trip("(1 + x)*exp(x)"), "(1 + x)*exp(x)");
        assert_eq!(round_trip("x*exp(x)/2"), "x*exp(x)/2");
        assert_eq!(round_trip("3*exp(x)"), "3*exp(x)");
        assert_eq!(round_trip("exp(x)/2"), "exp(x)/2");
    }

    #[test]
    fn algebraic_constants_print_as_alg_forms() {
        let s = round_trip("alg(t^2 - 2, 1, 2, 0, 0)*x");
        assert!(s.contains("alg(t^2 - 2, "), "got {s}");
        let neg = round_trip("-alg(t^2 - 2, 1, 2, 0, 0)*x + 1");
        assert!(neg.starts_with("1 - alg("), "got {neg}");
    }

    #[test]
    fn sums_with_constants_inline_their_pieces() {
        let s = round_trip("(1 + alg(t^2 - 2, 1, 2, 0, 0)) * exp(x)");
        assert!(s.starts_with("(1 + alg("), "got {s}");
        let t = round_trip("1 + alg(t^2 - 2, 1, 2, 0, 0) + x");
        assert!(t.starts_with("1 + alg("), "got {t}");
        assert!(t.ends_with(" + x"), "got {t}");
    }

    #[test]
    fn negative_exponential_leads_with_minus() {
        assert_eq!(round_trip("-exp(x)"), "-exp(x)");
        assert_eq!(round_trip("x - exp(x)"), "x - exp(x)");
    }

    #[test]
    fn nested_exponents_round_trip() {
        round_trip("exp(exp(exp(x)) + exp(x) + 1) + exp(2*x)*x^4 - 7/3");
        round_trip("exp(-x) + exp(x/3 + x^2/5)*alg(t^3 - 2, 1, 2, -1, 1)");
    }

    #[test]
    fn print_is_idempotent_through_parse() {
        for text in [
            "exp(x) + exp(2*x)/2 - x",
            "alg(t^2 + 1, -1, 1, 1/2, 2)*exp(x) + 1/2",
            "(x^2 - 2)*(exp(x^2) - exp(2*x))",
        ] {
            let p = parse(text, &cfg()).unwrap();
            let once = print(&p);
            let twice = print(&parse(&once, &cfg()).unwrap());
            assert_eq!(once, twice);
        }
    }
}
