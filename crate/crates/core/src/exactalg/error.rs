use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("zero denominator: not an element of the field")]
    ZeroDenominator,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: substituting {var} makes the denominator vanish identically")]
    Pole { var: &'static str },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expected a Laurent polynomial, got a proper fraction: {0}")]
    NotPolynomial(String),
}
