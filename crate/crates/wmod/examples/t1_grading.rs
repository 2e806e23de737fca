//! Graded dimensions of the first cotangent module along the family
//! <4, 3+4t, 6+4t>. The Tjurina number is 2g throughout; the negatively
//! graded part carries the moduli coordinates.
//!
//!     cargo run --example t1_grading

use wmod::{cotangent, NumericalSemigroup, ScalarField};

fn main() {
    for tau in 1..=4u64 {
        let s =
            NumericalSemigroup::from_generators(&[4, 3 + 4 * tau, 6 + 4 * tau]).unwrap();
        let rep = cotangent::t1_report(&s, ScalarField::Rational).unwrap();
        println!(
            "tau={tau}  {s}  g={}  tjurina={}  dim T1- = {}  dim T1+ = {}",
            s.genus(),
            rep.tjurina,
            rep.negative_dim,
            rep.nonnegative_dim
        );
        let line: Vec<String> =
            rep.by_degree.iter().map(|(d, n)| format!("{d}:{n}")).collect();
        println!("  {}", line.join("  "));
        println!("  coordinate weights: {:?}", rep.coordinate_weights);
    }
}
