//! Binomial ideals and the operations that keep them binomial.

mod binomial;
pub mod groebner;
mod ideal;
pub mod ops;

pub use binomial::{Binomial, BinomialDisplay};
pub use groebner::{groebner_basis, reduce_term, ReducedGB};
pub use ideal::{BinomialIdeal, Ring};
pub use ops::{colon, colon_monomial, eliminate, intersect, intersect_monomial, pure_part, saturate_vars};
