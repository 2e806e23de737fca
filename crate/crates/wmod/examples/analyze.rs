//! Full pipeline on a single semigroup: invariants, presentation, graded
//! cotangent dimensions, and the weighted projective moduli description.
//!
//!     cargo run --example analyze -- 4,7,10

use wmod::report::{analyze, AnalyzeOptions};
use wmod::{parse_generators, NumericalSemigroup};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "4,7,10".to_string());
    let gens = parse_generators(&arg).expect("generator list like \"4,7,10\"");
    let s = NumericalSemigroup::from_generators(&gens).expect("valid semigroup");

    let rep = analyze(&s, AnalyzeOptions::default()).expect("analysis");
    println!("semigroup {s}");
    println!(
        "  genus {}  frobenius {}  symmetric {}  complete intersection {}",
        rep.semigroup.genus,
        rep.semigroup.frobenius,
        rep.semigroup.symmetric,
        rep.semigroup.complete_intersection
    );
    if let Some(p) = &rep.presentation {
        for b in &p.binomials {
            println!("  relation (weight {}): {}", b.weight, b.text);
        }
    }
    if let Some(t1) = &rep.t1 {
        println!(
            "  tjurina {} = dim T1- {} + dim T1+ {}",
            t1.tjurina, t1.negative_dim, t1.nonnegative_dim
        );
    }
    match &rep.moduli {
        Some(m) => println!("  moduli {} of dimension {}", m.space, m.dimension),
        None => println!("  moduli unavailable; warnings: {:?}", rep.warnings),
    }
}
