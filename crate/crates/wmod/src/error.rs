use std::fmt;

use thiserror::Error;

/// Why the canonical model rejects a semigroup. All four route to the
/// cubic-generated canonical ideals, which this crate does not build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guard {
    /// First positive nongap is 3: the curve is trigonal or planar and the
    /// canonical ideal needs cubic generators.
    FirstNongapThree,
    /// First positive nongap equals the genus: not a complete intersection,
    /// canonical ideal needs cubic generators.
    FirstNongapAtLeastGenus,
    /// The semigroup <4,5>: quintic plane curve, cubic generators required.
    QuarticQuintic,
    /// 2 is a nongap: no canonical embedding.
    Hyperelliptic,
    /// Genus 3 or less: the quadric machinery is vacuous.
    GenusAtMostThree,
}

impl fmt::Display for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Guard::FirstNongapThree => {
                write!(f, "first nongap is 3; canonical ideal needs cubic generators")
            }
            Guard::FirstNongapAtLeastGenus => {
                write!(f, "first nongap >= genus; canonical ideal needs cubic generators")
            }
            Guard::QuarticQuintic => {
                write!(f, "semigroup <4,5>; canonical ideal needs cubic generators")
            }
            Guard::Hyperelliptic => write!(f, "hyperelliptic semigroup"),
            Guard::GenusAtMostThree => write!(f, "genus must exceed 3"),
        }
    }
}

#[derive(Error, Debug)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,
    #[error("generators must be positive integers")]
    ZeroGenerator,
    #[error("gcd of generators is {0}, not 1; the complement would be infinite")]
    NonCoprime(u64),
    #[error("negative input {0}")]
    NegativeInput(i64),
    #[error("{0} is not a member of the semigroup")]
    NotAMember(u64),
    #[error("operation requires genus >= 1")]
    GenusZero,
    #[error("genus {genus} exceeds the enumeration bound {max} (WMOD_MAX_GENUS overrides)")]
    BoundExceeded { genus: u64, max: u64 },
    #[error("characteristic {0} is neither 0 nor prime")]
    NotPrime(u64),
    #[error("the monomial curve is not a complete intersection")]
    NotCompleteIntersection,
    #[error("graded piece at degree {0} does not vanish beyond the conductor")]
    NonVanishingTail(i64),
    #[error("semigroup is not symmetric")]
    NotSymmetric,
    #[error("semigroup is hyperelliptic")]
    Hyperelliptic,
    #[error("value {value} out of range (bound {bound})")]
    OutOfRange { value: u64, bound: u64 },
    #[error("normalization degenerates at degree {0}: rank drops in this characteristic")]
    DegenerateNormalization(i64),
    #[error("characteristic {0} divides an exponent of the defining equations")]
    InadmissibleCharacteristic(u64),
    #[error("canonical model guard: {0}")]
    GuardViolation(Guard),
    #[error("no {{-1,0,1}} syzygy certificate found for F_{{{s},{label}}}")]
    NoCertificate { s: u64, label: usize },
    #[error("F_{{{s},{label}}} is excluded from the syzygy search")]
    ExcludedTarget { s: u64, label: usize },
    #[error("shrunk syzygy left a nonzero residue")]
    NonZeroResidue,
    #[error("sieve would need {required} entries (cap {cap}); generators too large")]
    SieveTooLarge { required: u64, cap: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code: 2 for input validation failures, 1 for domain guards.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::EmptyInput
            | Error::ZeroGenerator
            | Error::NonCoprime(_)
            | Error::NegativeInput(_)
            | Error::NotPrime(_)
            | Error::BoundExceeded { .. }
            | Error::SieveTooLarge { .. }
            | Error::Parse(_) => 2,
            _ => 1,
        }
    }

    /// Stable machine-readable tag used in JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::ZeroGenerator => "ZeroGenerator",
            Error::NonCoprime(_) => "NonCoprime",
            Error::NegativeInput(_) => "NegativeInput",
            Error::NotAMember(_) => "NotAMember",
            Error::GenusZero => "GenusZero",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::NotPrime(_) => "NotPrime",
            Error::NotCompleteIntersection => "NotCompleteIntersection",
            Error::NonVanishingTail(_) => "NonVanishingTail",
            Error::NotSymmetric => "NotSymmetric",
            Error::Hyperelliptic => "Hyperelliptic",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::DegenerateNormalization(_) => "DegenerateNormalization",
            Error::InadmissibleCharacteristic(_) => "InadmissibleCharacteristic",
            Error::GuardViolation(_) => "GuardViolation",
            Error::NoCertificate { .. } => "NoCertificate",
            Error::ExcludedTarget { .. } => "ExcludedTarget",
            Error::NonZeroResidue => "NonZeroResidue",
            Error::SieveTooLarge { .. } => "SieveTooLarge",
            Error::Parse(_) => "Parse",
        }
    }
}
