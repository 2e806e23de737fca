//! Exact arithmetic for numerical semigroups and the monomial curves they
//! parametrize: minimal binomial presentations, graded cotangent dimensions,
//! unfolded deformations with normal forms, canonical quadrics with syzygy
//! certificates, and the weighted projective moduli of pointed Gorenstein
//! curves.
//!
//! Everything is computed over exact scalars (arbitrary-precision integers
//! for characteristic 0, modular arithmetic for primes); there is no
//! floating point and identical inputs produce identical outputs.
//!
//! ```
//! use wmod::{NumericalSemigroup, ScalarField};
//!
//! let s = NumericalSemigroup::from_generators(&[4, 7, 10]).unwrap();
//! assert_eq!(s.genus(), 7);
//! assert!(s.is_symmetric());
//!
//! let t1 = wmod::cotangent::t1_report(&s, ScalarField::Rational).unwrap();
//! assert_eq!(t1.negative_dim, 13);
//! assert_eq!(t1.tjurina, 2 * s.genus());
//!
//! let moduli = wmod::unfolding::moduli_report(&s, ScalarField::Rational).unwrap();
//! assert_eq!(moduli.dimension, 12); // P(T^{1,-}) is a P^12
//! ```
//!
//! The `examples/` directory has one runnable program per capability; the
//! `wmod` binary wraps the same calls behind subcommands.

pub mod basis;
pub mod canonical;
pub mod cotangent;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod linalg;
pub mod presentation;
pub mod report;
pub mod semigroup;
pub mod unfolding;

pub use enumerate::{enumerate_semigroups, EnumerationFilter, DEFAULT_MAX_GENUS};
pub use error::{Error, Guard};
pub use field::ScalarField;
pub use semigroup::{parse_batch, parse_generators, NumericalSemigroup};
