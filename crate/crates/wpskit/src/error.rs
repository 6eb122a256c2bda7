use thiserror::Error;

/// Errors raised by the library. The messages of the domain errors
/// (fan / admissibility / equivalence / cohomology level) are fixed
/// strings relied upon by the command line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("It is not a fan of a WPS")]
    NotWpsFan,
    #[error("It is not an admissible polytope")]
    NotAdmissiblePolytope,
    #[error("The first one is not a fan of a WPS")]
    FirstNotWpsFan,
    #[error("The second one is not a fan of a WPS")]
    SecondNotWpsFan,
    #[error("The two fans are not equivalent")]
    FansNotEquivalent,
    #[error("The first one is not admissible")]
    FirstNotAdmissible,
    #[error("The second one is not admissible")]
    SecondNotAdmissible,
    #[error("The two polytopes are not equivalent")]
    PolytopesNotEquivalent,
    #[error("Cohomology of negative level")]
    NegativeLevel,
    #[error("Cohomology of negative level differential forms")]
    NegativeFormDegree,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    /// An exact-division or integrality contract was violated. This
    /// indicates a bug or an input outside the documented domain; it is
    /// never silently truncated.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
