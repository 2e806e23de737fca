//! The canonical curve in P^{g-1}: folded quadratic forms, {-1,0,1} syzygy
//! certificates found by path search, and their images under the shrinking
//! map, reduced to zero against the affine presentation.
//!
//!     cargo run --example canonical_syzygies -- 4,7,10

use wmod::canonical::CanonicalModel;
use wmod::{parse_generators, NumericalSemigroup};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "4,7,10".to_string());
    let gens = parse_generators(&arg).expect("generator list");
    let s = NumericalSemigroup::from_generators(&gens).expect("valid semigroup");
    let model = match CanonicalModel::new(&s) {
        Ok(m) => m,
        Err(e) => {
            println!("{s}: canonical model unavailable: {e}");
            return;
        }
    };

    println!("{s}: canonical curve in P^{}", s.genus() - 1);
    println!(
        "coordinates (a-exponent, b-exponent): {:?}",
        model.coordinates.iter().take(6).collect::<Vec<_>>()
    );
    println!("{} folded quadrics:", model.quadrics().len());
    for q in model.quadrics() {
        println!("  {} = {}", q.label(), q.render());
    }

    let excluded: Vec<String> = model
        .excluded_targets()
        .iter()
        .map(|&(w, i)| model.quadric(w, i).unwrap().label())
        .collect();
    println!("excluded targets: {}", excluded.join(" "));

    for cert in model.all_certificates().expect("certificates exist") {
        println!("{}", cert.render(&model));
        let trace = model.verify_shrunk_syzygy(&cert).expect("zero residue");
        for line in &trace.lines {
            println!("  {line}");
        }
    }
}
