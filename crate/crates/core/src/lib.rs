//! Exact symmetric-function computations built around partition codes.
//!
//! * [`partition`]: partitions, their U/R codes, the switches `λ^(i)` and
//!   `λ^(-i)`, and horizontal/vertical strips.
//! * [`algebra`]: Schur and power-sum series over the rationals, characters,
//!   `ω`, Pieri rules and perp operators.
//! * [`bernstein`]: the Bernstein vertex operator `B(t)` and its adjoint,
//!   computed three independent ways.
//! * [`plucker`]: classical and code-symmetric Plücker relations.
//! * [`kp`]: KP τ-function checks and the quadratic PDE system.
//!
//! Everything is exact; there is no floating point anywhere.

pub mod algebra;
pub mod bernstein;
pub mod error;
pub mod json;
pub mod kp;
pub mod partition;
pub mod plucker;
mod render;

pub use error::{Error, Result};
pub use partition::{Code, Partition, SkewShape, Step};

pub type Rational = num_rational::BigRational;

/// Builds the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// `(-1)^k` as a rational.
pub(crate) fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        rat(1, 1)
    } else {
        rat(-1, 1)
    }
}
