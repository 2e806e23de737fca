//! Exact scalar fields: the rationals, or a prime field F_p.

use crate::error::Error;

/// Coefficient field for the graded linear algebra. Characteristic 0 uses
/// arbitrary-precision integer elimination; positive characteristic reduces
/// entries mod p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarField {
    Rational,
    Prime(u64),
}

impl ScalarField {
    /// 0 selects the rationals, a prime p selects F_p.
    pub fn from_characteristic(c: u64) -> Result<Self, Error> {
        if c == 0 {
            Ok(ScalarField::Rational)
        } else if is_prime(c) {
            Ok(ScalarField::Prime(c))
        } else {
            Err(Error::NotPrime(c))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            ScalarField::Rational => 0,
            ScalarField::Prime(p) => *p,
        }
    }
}

impl std::fmt::Display for ScalarField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScalarField::Rational => write!(f, "0"),
            ScalarField::Prime(p) => write!(f, "{p}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
