//! Error type shared by all modules.

use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter is outside the domain of the operation.
    Domain(&'static str),
    /// The evaluation point is a singularity of the function.
    SingularPoint { x: f64 },
    /// Adaptive quadrature stopped before meeting its tolerance.
    QuadratureBudget { estimate: f64, error: f64 },
    /// The signal does not decay at the grid edges, so an FFT would wrap it around.
    Periodization { edge_ratio: f64 },
    /// The coefficient pair makes a denominator vanish.
    DegenerateCoefficients,
    /// An input collection was empty.
    Empty(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::SingularPoint { x } => write!(f, "singular evaluation point x = {x}"),
            Error::QuadratureBudget { estimate, error } => write!(
                f,
                "quadrature budget exceeded (estimate {estimate:e}, error {error:e})"
            ),
            Error::Periodization { edge_ratio } => write!(
                f,
                "signal does not decay at the grid edges (edge/peak = {edge_ratio:e})"
            ),
            Error::DegenerateCoefficients => write!(f, "degenerate coefficients"),
            Error::Empty(what) => write!(f, "empty input: {what}"),
        }
    }
}

impl core::error::Error for Error {}
