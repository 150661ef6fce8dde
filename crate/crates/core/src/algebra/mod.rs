//! Coefficients, exponent vectors and monomial orders.

mod exponent;
mod order;
mod scalar;

pub use exponent::{Exponent, MonomialDisplay};
pub use order::{MonomialOrder, OrderKind};
pub use scalar::Scalar;

/// A nonzero coefficient times a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub exponent: Exponent,
}

impl Term {
    pub fn new(coeff: Scalar, exponent: Exponent) -> Self {
        Term { coeff, exponent }
    }

    pub fn monomial(exponent: Exponent) -> Self {
        Term { coeff: Scalar::one(), exponent }
    }
}
