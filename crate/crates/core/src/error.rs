use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial has degree zero in `{0}`")]
    DegreeZero(String),
    #[error("polynomial has degree below two in `{0}`")]
    DegreeTooLow(String),
    #[error("expected a polynomial in `{0}` only")]
    NotUnivariate(String),
    #[error("expected a polynomial in {0} only")]
    NotBivariate(String),
    #[error("unexpected variable `{0}`")]
    UnexpectedVariable(String),
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
