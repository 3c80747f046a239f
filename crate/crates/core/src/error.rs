use thiserror::Error;

use crate::gf2::Gf2Error;
use crate::lp::LpError;
use crate::pauli::PauliError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error(transparent)]
    Pauli(PauliError),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error("{what} of size {size} exceeds the cap {cap}")]
    TooLarge {
        what: &'static str,
        size: String,
        cap: String,
    },
    #[error("the trivial (stabilizer) class has no distance or disjointness")]
    TrivialClass,
    #[error("the code encodes no logical qubits")]
    NoLogicalQubits,
    #[error("code is not CSS: {0}")]
    NotCss(String),
    #[error("inner code must encode exactly one qubit, found k = {0}")]
    InnerNotK1(usize),
    #[error("matrix {which} is not full rank")]
    InputNotFullRank { which: &'static str },
    #[error("c must be a positive integer, got {0}")]
    InvalidC(u64),
    #[error("vertices {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("LP solution is not optimal")]
    InvalidWitness,
    #[error("level bound inapplicable: {0}")]
    BoundInapplicable(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl From<PauliError> for Error {
    fn from(e: PauliError) -> Self {
        match e {
            PauliError::TooLarge { log2, cap } => Error::TooLarge {
                what: "coset",
                size: format!("2^{log2}"),
                cap: format!("2^{cap}"),
            },
            other => Error::Pauli(other),
        }
    }
}

impl Error {
    /// Whether the error reflects a configured resource cap rather than bad
    /// input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::Lp(LpError::NodeLimit(_)))
    }
}
