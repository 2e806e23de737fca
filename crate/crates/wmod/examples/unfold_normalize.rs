//! Unfolding the defining equations and normalizing away the coefficients
//! that weight-lowering coordinate changes remove. What survives spans the
//! weighted projective moduli space.
//!
//!     cargo run --example unfold_normalize -- 4,7,10

use wmod::presentation::minimal_presentation;
use wmod::unfolding::{moduli_report_for, normalize, unfold, CoefficientStatus};
use wmod::{parse_generators, NumericalSemigroup, ScalarField};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "4,7,10".to_string());
    let gens = parse_generators(&arg).expect("generator list");
    let s = NumericalSemigroup::from_generators(&gens).expect("valid semigroup");
    let p = minimal_presentation(&s);

    let u = unfold(&p);
    println!("{s}: {} unfold coefficients before normalization", u.total_coefficients());
    for group in &u.coefficients {
        if let Some(first) = group.first() {
            let ws: Vec<u64> = group.iter().map(|c| c.monomial_weight).collect();
            println!("  relation of weight {}: support {:?}", first.relation_weight, ws);
        }
    }

    let n = normalize(&u, ScalarField::Rational).expect("complete intersection");
    let normalized: Vec<String> = n
        .coefficients
        .iter()
        .flatten()
        .filter(|c| c.status == CoefficientStatus::NormalizedToZero)
        .map(|c| c.name())
        .collect();
    println!("normalized to zero: {}", normalized.join(" "));
    for j in 0..n.coefficients.len() {
        println!("  {}", n.render_relation(j));
    }

    match moduli_report_for(&p, ScalarField::Rational) {
        Ok(m) => println!(
            "moduli: {} (dimension {}), {} free of {} total",
            m.space(),
            m.dimension,
            m.free_count,
            m.coefficient_total
        ),
        Err(e) => println!("moduli unavailable: {e}"),
    }
}
