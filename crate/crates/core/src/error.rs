use thiserror::Error;

/// Errors raised by the engine. Messages are meant for end users of the CLI,
/// so they name alternatives and observations rather than internal indices
/// where that is possible.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relations live on different universes ({left} vs {right} alternatives)")]
    UniverseMismatch { left: usize, right: usize },

    #[error("element {element} maps alternative {alternative} outside the universe")]
    OrbitEscape { element: String, alternative: String },

    #[error("theory `{0}` carries no order on its elements")]
    OrderMissing(String),

    #[error("theory `{0}` has no finite element list; supply a grid or element list")]
    NotEnumerable(String),

    #[error("closure does not extend the relation: ({0}, {1}) is reversed")]
    NotExtensible(usize, usize),

    #[error("observation {0} does not have a linear budget")]
    NonLinearBudget(usize),

    #[error("observation {0} has a zero price on the numeraire good")]
    ZeroNumerairePrice(usize),

    #[error("observation {0} chooses the zero bundle, which no scaling can move")]
    ZeroChoice(usize),

    #[error("the affine element list is empty")]
    EmptyElementList,

    #[error("relation is not complete and transitive on the budget")]
    NotTotalPreorder,

    #[error("search space of {size} candidates exceeds the cap of {cap}")]
    SearchCapExceeded { size: u128, cap: u128 },

    #[error("universe of {size} alternatives exceeds the oracle cap of {cap}")]
    OracleCapExceeded { size: usize, cap: usize },

    #[error("alternative {0} cannot be transformed by theory `{1}`")]
    DomainMismatch(String, String),

    #[error("invalid k = {0}; k must be positive")]
    InvalidK(usize),

    #[error("truncation for observation {0} keeps more than k alternatives on top")]
    CardinalityBound(usize),

    #[error("data set is not regular: {0}")]
    NotRegular(String),

    #[error("invalid data: {0}")]
    InvalidData(String),

    #[error("{path}: {message}")]
    Json { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn json(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Json { path: path.into(), message: message.into() }
    }
}
