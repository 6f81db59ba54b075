//! Certified evaluation and cross-validation of special values of the
//! Dirichlet beta function, the Riemann zeta function, and the even-indexed
//! Euler numbers.
//!
//! Every numeric result is a [`numeric_core::BallReal`] enclosure (midpoint
//! plus rigorous error radius), and every closed form is an exact rational
//! multiple of a power of pi ([`numeric_core::PiForm`]) or an exact integer.
//! The [`identities`] module evaluates each quantity by at least two
//! independent routes and checks that the enclosures intersect.

pub mod cot_engine;
pub mod identities;
pub mod numeric_core;
pub mod report;
pub mod series_eval;

/// Errors surfaced by fallible operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("division by a ball containing zero")]
    DivisionByZeroBall,
    #[error("malformed machine report record: {0}")]
    MalformedRecord(String),
}

pub type Result<T> = std::result::Result<T, Error>;
