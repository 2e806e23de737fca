//! Factorizations, Betti elements, and the minimal binomial presentation of
//! the monomial curve, for a few contrasting semigroups.
//!
//!     cargo run --example presentation

use wmod::presentation::{betti_elements, factorizations, minimal_presentation};
use wmod::NumericalSemigroup;

fn main() {
    for gens in [vec![4u64, 7, 10], vec![2, 3], vec![3, 4, 5], vec![6, 10, 15]] {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        println!("{s}  (genus {}, frobenius {})", s.genus(), s.frobenius());

        let m = 2 * s.multiplicity() + s.minimal_generators().last().unwrap();
        let facts = factorizations(&s, m);
        println!(
            "  factorizations of {m}: {}",
            facts
                .iter()
                .map(|f| f.render(s.minimal_generators()))
                .collect::<Vec<_>>()
                .join(", ")
        );

        println!("  betti elements: {:?}", betti_elements(&s));
        let p = minimal_presentation(&s);
        for (i, b) in p.generators.iter().enumerate() {
            println!(
                "  G{} (weight {}): {}",
                i + 1,
                b.weight,
                b.render(s.minimal_generators())
            );
        }
        println!(
            "  complete intersection: {} ({} relations, embedding dimension {})",
            p.is_complete_intersection(),
            p.generators.len(),
            s.embedding_dimension()
        );
        println!();
    }
}
