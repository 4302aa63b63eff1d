use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid well configuration: {0}")]
    InvalidConfig(String),

    #[error("{function}: argument {x} outside the supported domain ({reason})")]
    Domain {
        function: &'static str,
        x: f64,
        reason: &'static str,
    },

    #[error("energy {kinetic_ev} eV (kinetic) is outside the bound window (0, {potential_ev}) eV")]
    OutsideBoundWindow { kinetic_ev: f64, potential_ev: f64 },

    #[error(
        "root refinement did not converge in [{lo_ev}, {hi_ev}] eV after {iterations} iterations"
    )]
    NoConvergence {
        lo_ev: f64,
        hi_ev: f64,
        iterations: usize,
    },

    #[error(
        "quadrature failed to reach tolerance on [{a}, {b}] (estimated error {error_estimate:e})"
    )]
    Quadrature { a: f64, b: f64, error_estimate: f64 },

    #[error("unknown state {requested}; available: {available}")]
    UnknownState {
        requested: String,
        available: String,
    },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
