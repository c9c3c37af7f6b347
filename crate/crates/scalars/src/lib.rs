//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyclotomic`] is an element of Q(ζ_N) written in the power basis
//! ζ^0..ζ^{φ(N)-1}, reduced modulo the N-th cyclotomic polynomial.
//! Operands of different orders are embedded into Q(ζ_lcm) before the
//! operation, so mixing scalars from different fields is always allowed.

mod cyclotomic;
mod linalg;
mod poly;

pub use cyclotomic::{Cyclotomic, ScalarRepr};
pub use linalg::Matrix;
pub use poly::{cyclotomic_polynomial, euler_phi};

/// Errors raised by scalar arithmetic.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("root of unity of order 0 requested")]
    ZeroOrder,
    #[error("inverse of zero")]
    DivisionByZero,
    #[error("cannot embed Q(zeta_{from}) into Q(zeta_{to})")]
    BadEmbedding { from: u32, to: u32 },
    #[error("malformed scalar: {0}")]
    Malformed(String),
    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
}
