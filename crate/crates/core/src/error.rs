use thiserror::Error;

use crate::grid::Cell;
use crate::model::Diagnostic;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid transaction type: {}", join(.0))]
    InvalidType(Vec<Diagnostic>),

    #[error("pair {0} is not feasible: the transaction cannot be executed")]
    InfeasiblePair(Cell),

    #[error("exposure must be positive and finite, got {0}")]
    InvalidExposure(String),

    #[error("feasible set is empty")]
    EmptyFeasibleSet,

    #[error("invalid exposure range [{from}, {to}]: need 0 < from < to")]
    InvalidRange { from: String, to: String },

    #[error("shape mismatch: expected {expected:?}, found {found:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("invalid sharing rule: {0}")]
    InvalidShare(String),

    #[error("support enumeration capped at {cap} strategies per player, game is {rows}x{cols}")]
    SupportCapExceeded { rows: usize, cols: usize, cap: usize },

    #[error("mixed strategies are not defined on a game with disallowed cells")]
    RestrictedGame,

    #[error("cell {0} is not a total-cost minimum")]
    NotOptimal(Cell),

    #[error("player {0} has no unilateral deviation from the optimum")]
    NoDeviation(u8),

    #[error("total cost has several minima {0:?}; the regret criterion needs a unique optimum")]
    MultipleOptima(Vec<Cell>),

    #[error("designed rule is not an optimizer: {0}")]
    DesignNotOptimizer(String),

    #[error("invalid dispute model: {0}")]
    InvalidDispute(String),

    #[error("invalid dispute institution: {0}")]
    InvalidInstitution(String),
}

impl Error {
    /// Solver caps and requests that have no well-defined answer, as opposed
    /// to malformed input.
    pub fn is_ill_posed(&self) -> bool {
        matches!(
            self,
            Error::SupportCapExceeded { .. }
                | Error::RestrictedGame
                | Error::NotOptimal(_)
                | Error::NoDeviation(_)
                | Error::MultipleOptima(_)
                | Error::DesignNotOptimizer(_)
        )
    }
}

fn join(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
