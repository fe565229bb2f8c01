use thiserror::Error;

use crate::ayrep::{GenericityReport, RelationReport};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),

    #[error("group order exceeds the enumeration guard of {0} elements")]
    OrderExceeded(usize),

    #[error("unsupported system: {0}")]
    Unsupported(String),

    #[error("unknown generator label `{0}`")]
    UnknownGenerator(String),

    #[error("element index {0} is not in this system")]
    NotInSystem(usize),

    #[error("element is not a reflection")]
    NotAReflection,

    #[error("the two pairs define different reflections")]
    ReflectionMismatch,

    #[error("subset is not convex (geodesic through element {witness} leaves it)")]
    NotConvex { witness: usize },

    #[error("out-of-cell direction undefined for reflection {0}")]
    DirectionUndefined(usize),

    #[error("cell is empty")]
    EmptyCell,

    #[error("functional is not generic for the cell: {0}")]
    NotGeneric(Box<GenericityReport>),

    #[error("functional construction requires a simply-laced crystallographic system")]
    NotSimplyLaced,

    #[error("representation fails its defining relations: {0}")]
    RelationFailure(Box<RelationReport>),

    #[error("division by zero")]
    DivisionByZero,

    #[error("rational function has a pole at q = {0}")]
    Pole(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a partition: {0}")]
    NotPartition(String),

    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("representation is not minimal")]
    NotMinimal,

    #[error("verification failed: {0}")]
    Verification(String),
}
