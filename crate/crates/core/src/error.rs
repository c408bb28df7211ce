use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of a formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input failed a validity check (state, grid, parameters, file content).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// The closed-form solution has a vanishing denominator `Γ ∓ Γ12`
    /// while the doubly excited state is populated.
    #[error("closed-form solution is singular at gamma12 = {gamma12} (gamma = {gamma}) with rho_ee(0) > 0")]
    DickeSingularity { gamma: f64, gamma12: f64 },

    /// The adaptive integrator could not meet its tolerance.
    #[error("integrator failed at t = {t}: {reason}")]
    StepSize { t: f64, reason: String },

    #[error("eigensolver failed: {0}")]
    Eigen(String),

    #[error("scenario '{scenario}': {source}")]
    Scenario {
        scenario: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of the numerics rather than of the input.
    pub fn is_numerical(&self) -> bool {
        match self {
            Error::DickeSingularity { .. } | Error::StepSize { .. } | Error::Eigen(_) => true,
            Error::Scenario { source, .. } => source.is_numerical(),
            _ => false,
        }
    }

    pub(crate) fn in_scenario(self, name: &str) -> Error {
        match self {
            e @ Error::Scenario { .. } => e,
            e => Error::Scenario {
                scenario: name.to_string(),
                source: Box::new(e),
            },
        }
    }
}
