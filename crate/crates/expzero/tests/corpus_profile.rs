//! Temporary stage-by-stage timing harness.

mod common;

use common::{random_corpus_poly, rat, sqrt2_field, Rng};
use expzero::frontend::{parse, print};
use expzero::numberfield::roots::{dedup_roots, isolate_field_roots, sort_roots};
use expzero::zerofinder::{algebraic_zeros, candidate_set};
use expzero::{Config, ExpPoly, FieldElement, FieldPoly, NumberField};
use std::time::Instant;

fn stages(label: &str, p: &ExpPoly, cfg: &Config) {
    let t = Instant::now();
    let cands = candidate_set(p, cfg).unwrap();
    let t_cand = t.elapsed();
    let t = Instant::now();
    let rep = algebraic_zeros(p, cfg).unwrap();
    let t_all = t.elapsed();
    eprintln!(
        "{label}: candidates {} in {t_cand:?}; full run {t_all:?}; zeros {}",
        cands.len(),
        rep.zeros.len()
    );
}

#[test]
#[ignore]
fn profile_stages() {
    let cfg = Config::default();

    // Pure rational quartic times a constant exponential.
    let p = parse("(6 - x^2/2 - 2*x^3 - x^4/2)*exp(2/3)", &cfg).unwrap();
    stages("quartic*exp(2/3)", &p, &cfg);

    // The bare quartic through the polynomial path.
    let q = parse("6 - x^2/2 - 2*x^3 - x^4/2", &cfg).unwrap();
    stages("bare quartic", &q, &cfg);

    // Raw root isolation of the same quartic.
    let f = FieldPoly::from_coeffs(vec![
        FieldElement::from_rational(rat(6, 1)),
        FieldElement::from_rational(rat(0, 1)),
        FieldElement::from_rational(rat(-1, 2)),
        FieldElement::from_rational(rat(-2, 1)),
        FieldElement::from_rational(rat(-1, 2)),
    ]);
    let t = Instant::now();
    let roots = isolate_field_roots(&f, &NumberField::rationals(), &cfg).unwrap();
    eprintln!("isolate_field_roots: {} roots in {:?}", roots.len(), t.elapsed());
    let t = Instant::now();
    let mut rs = dedup_roots(roots, &cfg).unwrap();
    eprintln!("dedup_roots: {:?}", t.elapsed());
    let t = Instant::now();
    sort_roots(&mut rs, &cfg);
    eprintln!("sort_roots: {:?}", t.elapsed());

    // Cubic times exp(1).
    let p = parse("(-3/2 + 5*x/2 - 3*x^2 + 3*x^3)*exp(1)", &cfg).unwrap();
    stages("cubic*exp(1)", &p, &cfg);

    // First corpus instance: quadratic times exp of a sqrt2 constant.
    let field = sqrt2_field(&cfg);
    let mut rng = Rng::new(0x5eed_2222);
    let p0 = random_corpus_poly(&mut rng, &field);
    eprintln!("p0 = {}", print(&p0));
    stages("corpus[0]", &p0, &cfg);

    // Break down one is_zero_at_root equivalent: factor_int vs nf_init.
    let quartic = expzero::IntPoly::from_coeffs(vec![
        num_bigint::BigInt::from(12),
        num_bigint::BigInt::from(0),
        num_bigint::BigInt::from(-1),
        num_bigint::BigInt::from(-4),
        num_bigint::BigInt::from(-1),
    ]);
    let t = Instant::now();
    let fac = expzero::numberfield::factor::factor_int(&quartic, cfg.factor_degree_cap, cfg.precision_cap).unwrap();
    eprintln!("factor_int quartic: {} factors in {:?}", fac.factors.len(), t.elapsed());
    let roots2 = isolate_field_roots(&f, &NumberField::rationals(), &cfg).unwrap();
    for (i, r) in roots2.iter().enumerate() {
        let t = Instant::now();
        let _ = r.to_field(&cfg).unwrap();
        eprintln!("to_field[{i}] deg {}: {:?}", r.degree(), t.elapsed());
    }
}
