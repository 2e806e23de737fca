//! The gap-sumset screen: a semigroup whose n-fold gap sums exceed
//! (2n-1)(g-1) cannot be the Weierstrass semigroup of a smooth pointed
//! curve. The classical genus-16 example fails already at n = 2.
//!
//!     cargo run --example buchweitz_screen

use wmod::NumericalSemigroup;

fn main() {
    // Gap set {1..12, 19, 21, 24, 25}.
    let obstructed =
        NumericalSemigroup::from_generators(&[13, 14, 15, 16, 17, 18, 20, 22, 23]).unwrap();
    // An ordinary semigroup for contrast.
    let ordinary = NumericalSemigroup::from_generators(&[4, 5, 6, 7]).unwrap();

    for s in [obstructed, ordinary] {
        println!("{s}  gaps {:?}", s.gaps());
        let rep = s.buchweitz_screen(3);
        for e in &rep.entries {
            println!(
                "  n={}: {} sums of {} gaps vs bound {}{}",
                e.n,
                e.count,
                e.n,
                e.bound,
                if e.exceeded { "  EXCEEDED" } else { "" }
            );
        }
        println!("  obstructed: {}", rep.obstructed);
        println!();
    }
}
