//! Monomial bases by pole order: shrunk representatives over the minimal
//! generators, the degree-n canonical bases, and the two-part decompositions
//! that index the canonical quadrics.
//!
//!     cargo run --example delta_basis

use wmod::basis::{decompositions_two, delta_basis, shrunk_representative};
use wmod::NumericalSemigroup;

fn main() {
    let s = NumericalSemigroup::from_generators(&[4, 7, 10]).unwrap();
    let g = s.genus();
    println!("{s}, genus {g}");

    println!("shrunk representatives below weight 20:");
    for m in s.members_below(20) {
        let rep = shrunk_representative(&s, m).unwrap();
        println!("  Z_{m} = {}", rep.render(s.minimal_generators()));
    }

    for n in [2u64, 3] {
        let basis = delta_basis(&s, n).unwrap();
        println!(
            "degree-{n} canonical basis: {} elements (expected {})",
            basis.len(),
            (2 * n - 1) * (g - 1)
        );
        if n == 2 {
            for &w in basis.elements.keys() {
                println!("  weight {w}: {}", basis.render(w).unwrap());
            }
        }
    }

    println!("two-part decompositions (nu_s > 1 rows give quadrics):");
    let mut extra = 0;
    for m in s.members_below(4 * g - 3) {
        let decs = decompositions_two(&s, m).unwrap();
        extra += decs.len() - 1;
        if decs.len() > 1 {
            println!("  s = {m}: {decs:?}");
        }
    }
    println!("sum of (nu_s - 1) = {extra} = (g-2)(g-3)/2 = {}", (g - 2) * (g - 3) / 2);
}
