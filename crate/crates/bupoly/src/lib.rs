//! Exact arithmetic over GF(2)[x] and the machinery built on it: complete
//! factorization into irreducibles, the three divisor-sum functions (all
//! divisors, unitary divisors, bi-unitary divisors), perfection predicates,
//! and finite searches that enumerate every bi-unitary perfect polynomial
//! inside configurable bounds.
//!
//! Layering, bottom to top:
//!
//! * [`gf2poly`]: the `Poly` value type, dense bit-packed coefficients.
//! * [`factor`]: irreducibility, factorization, irreducible enumeration.
//! * [`divisor`]: unitary gcd, sigma/sigma*/sigma**, and a naive
//!   divisor-enumeration oracle kept deliberately independent of the
//!   closed-form route.
//! * [`perfect`]: Mersenne shape detection, omega, perfection tests, and
//!   the named constant table (M1..M5, C1..C15).
//! * [`search`]: bounded exhaustive searches and guided candidate families.
//! * [`cli`]: expression parsing, report rendering, command entry points.

pub mod cli;
pub mod divisor;
pub mod factor;
pub mod gf2poly;
pub mod perfect;
pub mod search;

use thiserror::Error as ThisError;

/// Errors shared across the library.
///
/// Arithmetic that cannot fail (addition, multiplication within the degree
/// cap, conjugation) returns plain values; everything with a genuine
/// precondition returns `Result<_, Error>`.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("{0} is undefined for the zero polynomial")]
    ZeroOperand(&'static str),

    #[error("degree cap exceeded: result would have degree {needed}, cap is {cap}")]
    DegreeCapExceeded { needed: u64, cap: u64 },

    #[error("cannot enumerate irreducibles of degree {degree}: cap is {cap}")]
    EnumerationCapExceeded { degree: usize, cap: usize },

    #[error("divisor oracle refused degree {degree}: cap is {cap}")]
    OracleCapExceeded { degree: usize, cap: usize },

    #[error("invalid hex polynomial literal")]
    InvalidHex,

    #[error("search spec mode mismatch: this entry point expects {expected}")]
    SearchModeMismatch { expected: &'static str },

    #[error("invalid search spec: {0}")]
    InvalidSearchSpec(&'static str),

    #[error("parse error at column {column}: {message}")]
    ParseExpr { column: usize, message: String },
}
