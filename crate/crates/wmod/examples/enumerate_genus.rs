//! Walks the semigroup tree to list every numerical semigroup of a genus,
//! then narrows to the symmetric complete intersections that carry a
//! weighted projective moduli space.
//!
//!     cargo run --example enumerate_genus -- 7

use wmod::{
    enumerate_semigroups, unfolding, EnumerationFilter, ScalarField, DEFAULT_MAX_GENUS,
};

fn main() {
    let genus: u64 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("genus"))
        .unwrap_or(7);

    let all: Vec<_> =
        enumerate_semigroups(genus, EnumerationFilter::default(), DEFAULT_MAX_GENUS)
            .expect("genus within bound")
            .collect();
    println!("{} semigroups of genus {genus}", all.len());

    let filter = EnumerationFilter { symmetric: true, complete_intersection: true };
    println!("symmetric complete intersections:");
    for s in enumerate_semigroups(genus, filter, DEFAULT_MAX_GENUS).unwrap() {
        match unfolding::moduli_report(&s, ScalarField::Rational) {
            Ok(m) => println!("  {s}  ->  {} (dimension {})", m.space(), m.dimension),
            Err(e) => println!("  {s}  ->  moduli unavailable: {e}"),
        }
    }
}
