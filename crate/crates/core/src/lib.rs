//! Exact computation of the generalized triangle inequality cones D₃(R) for
//! the rank-3 root systems A₃, B₃ and C₃.
//!
//! The pipeline runs entirely over arbitrary-precision rationals:
//!
//! 1. [`rootsys`]: Cartan data of the root system in ambient coordinates.
//! 2. [`weyl`]: Weyl group enumeration, reduced words, parabolic quotients
//!    W^P and the duality involution θ^P.
//! 3. [`polyalg`]: sparse multivariate polynomials, divided-difference
//!    operators and an invariant-ideal membership oracle.
//! 4. [`schubert`]: Schubert polynomials p_w, cup products in H*(G/P) and
//!    enumeration of the triples whose product is the point class.
//! 5. [`inequality`]: translation of point triples into linear functionals
//!    on 𝔞³ and assembly of the full inequality system.
//! 6. [`cone`]: exact LP redundancy elimination, facet enumeration and
//!    extreme-ray enumeration by the double description method.

// Indexed loops stay: the dense linear algebra reads better with explicit
// row/column indices than with iterator chains.
#![allow(clippy::needless_range_loop)]

pub mod cone;
pub mod inequality;
pub mod linalg;
pub mod polyalg;
pub mod rootsys;
pub mod schubert;
pub mod weyl;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar used throughout.
pub type Rat = BigRational;

/// Convenience constructor for small integer rationals.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Convenience constructor for fractions of small integers.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
