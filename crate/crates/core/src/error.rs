use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("antecedent `{0}` is impossible")]
    ImpossibleAntecedent(String),
    #[error("assessment has {found} values but the family has {expected} events")]
    LengthMismatch { expected: usize, found: usize },
    #[error("value {0} lies outside [0, 1]")]
    ValueOutOfRange(String),
    #[error("malformed interval: {0}")]
    MalformedInterval(String),
    #[error("family mentions {found} atoms, the limit is {limit}")]
    TooManyAtoms { found: usize, limit: usize },
    #[error("family is empty")]
    EmptyFamily,
    #[error("system has no solution")]
    InfeasibleSystem,
    #[error("premise assessment is not coherent")]
    IncoherentPremises,
    #[error("premise box contains no coherent point")]
    NotGCoherent,
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("unknown syllogism form `{0}`")]
    UnknownForm(String),
    #[error("constraint on `{0}` does not match any event of the figure family")]
    UnmatchedConstraint(String),
    #[error("grid density must be at least 2, got {0}")]
    GridTooCoarse(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
