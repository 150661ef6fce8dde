use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failures raised by the library. Variants fall in two families: input
/// errors (malformed data, shape mismatches) and mathematical refusals
/// (a precondition of the requested construction does not hold).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("the ideal is the unit ideal <1>")]
    UnitIdeal,

    #[error("the ideal contains the monomial {0}, but a pure ideal is required")]
    NotPure(String),

    #[error("the ideal contains no monomials")]
    NoMonomials,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("the result is not a binomial ideal in general: {0}")]
    NonBinomial(String),

    #[error("the ideal is not cellular: variable {variable} is a zerodivisor that is not nilpotent")]
    NotCellular { variable: String },

    #[error("the ideal is not mesoprimary (witness monomial {witness})")]
    NotMesoprimary { witness: String },

    #[error("the congruence is not known to be maximal; compute the maximal ideal first")]
    NonMaximalCongruence,

    #[error("the congruence is not primary (its ideal is not cellular)")]
    NotPrimary,

    #[error("the congruence is not cancellative (its ideal is not a lattice ideal)")]
    NotCancellative,

    #[error("quotient exploration exceeded the budget of {budget} classes ({found} found so far)")]
    BudgetExceeded { budget: usize, found: usize },

    #[error("the lattice quotient is infinite (rank {sub} sublattice of a rank {sup} lattice)")]
    InfiniteIndex { sub: usize, sup: usize },

    #[error("the first lattice is not contained in the second")]
    NotSublattice,

    #[error("column {0} of the matrix is zero")]
    ZeroColumn(usize),

    #[error("the monoid generated by the matrix columns is not positive")]
    NotPositive,

    #[error("search space too large: {0}")]
    SearchTooLarge(String),
}

impl Error {
    /// True for errors caused by malformed input rather than by the
    /// mathematics of a well-formed request.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. }
                | Error::Parse { .. }
                | Error::InvalidInput(_)
                | Error::SearchTooLarge(_)
        )
    }
}
