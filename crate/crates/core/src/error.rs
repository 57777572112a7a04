use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("half-integer exponent is only allowed on Q2, found on Q{0}")]
    HalfExponent(u32),

    #[error("negative exponent is only allowed on Q2, found on Q{0}")]
    NegativeExponent(u32),

    #[error("monomial {0} has non-integral weight")]
    NonIntegralWeight(String),

    #[error("expected an element of the polynomial ring (non-negative integer exponents): {0}")]
    NotPolynomial(String),

    #[error("expected a Q1-free element: {0}")]
    ContainsQ1(String),

    #[error("expected a weight-homogeneous element: {0}")]
    NotHomogeneous(String),

    #[error("expected a harmonic element: {0}")]
    NotHarmonic(String),

    #[error("{0} is not in the monomial basis of weight {1}")]
    NotInBasis(String, i64),

    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),

    #[error("not quasimodular of weight {weight} at order {order}")]
    NotQuasimodular { weight: i64, order: usize },

    #[error("insufficient order: weight {weight} needs order >= {needed}, got {order}")]
    InsufficientOrder {
        weight: i64,
        order: usize,
        needed: usize,
    },

    #[error("odd weight {0}: expected the zero series")]
    NonzeroOddWeight(i64),

    #[error("modularity cross-check failed: {0}")]
    CrossCheck(String),

    #[error("invalid argument: {0}")]
    Invalid(String),
}
