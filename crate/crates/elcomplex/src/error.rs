use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The parameter pair does not satisfy `4*alpha - beta^2 > 0`.
    #[error(
        "ellipticity violation: 4*alpha - beta^2 = {discriminant} is not positive \
         (alpha = {alpha}, beta = {beta})"
    )]
    EllipticityViolation {
        alpha: f64,
        beta: f64,
        discriminant: f64,
    },

    /// Attempted to invert the zero element.
    #[error("division by zero in the algebra")]
    DivisionByZero,

    /// A kernel-type test function was evaluated at its pole.
    #[error("test function evaluated at its pole ({re}, {im})")]
    PoleEvaluation { re: f64, im: f64 },

    /// The requested pole is not strictly inside the domain.
    #[error("pole lies outside or on the boundary of the domain")]
    PoleOutsideDomain,

    /// The domain is not star-shaped about the requested point.
    #[error("domain is not star-shaped about the requested point")]
    NotStarShaped,

    /// A function claimed holomorphic failed the sampled residual check.
    #[error("function is not holomorphic: sampled Cauchy-Riemann residual {max_residual:e} exceeds {threshold:e}")]
    NotHolomorphic { max_residual: f64, threshold: f64 },

    /// A non-finite scalar reached the construction of a derived quantity.
    #[error("non-finite input: {what}")]
    NonFiniteInput { what: &'static str },

    /// Quadrature node counts outside the supported range.
    #[error("invalid quadrature spec: {what}")]
    InvalidQuadratureSpec { what: String },

    /// Malformed run configuration (CLI layer).
    #[error("invalid configuration: {what}")]
    InvalidConfig { what: String },
}

pub type Result<T> = std::result::Result<T, Error>;
