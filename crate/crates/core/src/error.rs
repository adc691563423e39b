//! Error type shared by every module of the kernel.

use std::fmt;

/// Everything that can go wrong in the kernel.
///
/// Domain errors carry enough context to act as certificates where the
/// operation contract asks for one (e.g. `ReduciblePolynomial` reports a
/// nontrivial factor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operands belong to different base fields.
    MixedFields,
    /// Operands are polynomials over different coefficient domains.
    MixedDomains,
    DivisionByZero,
    ZeroPolynomial,
    /// The polynomial is reducible; the string is a printable nontrivial factor.
    ReduciblePolynomial(String),
    /// Factorization is not supported over this coefficient domain.
    UnsupportedDomain(String),
    /// The base-field descriptor is not supported for this operation.
    UnsupportedBase(String),
    /// No root matches the requested selector.
    NoSuchRoot(String),
    /// A chosen root image fails its minimal polynomial.
    InconsistentChoice(String),
    NotIrreducible(String),
    NotARoot(String),
    /// Mutual-embedding certification failed (degree mismatch or bad input map).
    NotMutual(String),
    /// The intermediate field is not stable under the automorphism group;
    /// the string prints the offending automorphism.
    NotStable(String),
    NotGalois(String),
    /// Injection prefixes overlap or contain 0.
    OverlappingRanges,
    DuplicatePrimes,
    DegreeCapExceeded { degree: u64, cap: u64 },
    InseparableTower,
    /// A witness precondition failed (e.g. the sign-propagation base element
    /// turned out to be a member of the F-prefix).
    PreconditionViolated(String),
    ParseError(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MixedFields => write!(f, "operands belong to different base fields"),
            Error::MixedDomains => write!(f, "polynomials over different coefficient domains"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::ReduciblePolynomial(w) => write!(f, "reducible polynomial, factor {w}"),
            Error::UnsupportedDomain(d) => write!(f, "unsupported coefficient domain: {d}"),
            Error::UnsupportedBase(b) => write!(f, "unsupported base field: {b}"),
            Error::NoSuchRoot(s) => write!(f, "no root matches selector: {s}"),
            Error::InconsistentChoice(s) => write!(f, "inconsistent root choice: {s}"),
            Error::NotIrreducible(p) => write!(f, "polynomial is not irreducible: {p}"),
            Error::NotARoot(s) => write!(f, "value is not a root: {s}"),
            Error::NotMutual(s) => write!(f, "maps are not mutual embeddings: {s}"),
            Error::NotStable(s) => write!(f, "subfield not stable under automorphisms: {s}"),
            Error::NotGalois(s) => write!(f, "extension is not Galois: {s}"),
            Error::OverlappingRanges => write!(f, "injection ranges overlap or contain 0"),
            Error::DuplicatePrimes => write!(f, "duplicate primes in list"),
            Error::DegreeCapExceeded { degree, cap } => {
                write!(f, "tower degree {degree} exceeds cap {cap}")
            }
            Error::InseparableTower => write!(f, "tower has an inseparable stage"),
            Error::PreconditionViolated(s) => write!(f, "precondition violated: {s}"),
            Error::ParseError(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
