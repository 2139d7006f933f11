use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("columns are linearly dependent (rank {rank}, expected {expected})")]
    RankDeficient { rank: usize, expected: usize },

    #[error("subspace is not isotropic")]
    NotIsotropic,

    #[error("Lagrangians are not transverse: {0}")]
    NotTransverse(String),

    #[error("matrix is not symplectic: {0}")]
    NotSymplectic(String),

    #[error("characteristic polynomial does not split over the base field: {0}")]
    NonSplit(String),

    #[error("eigenvalue valuations do not separate: {0}")]
    SlopeTie(String),

    #[error("the zero polynomial has no Newton polygon")]
    ZeroPolynomial,

    #[error("matrix is singular")]
    Singular,

    #[error("relator `{0}` does not evaluate to +-identity")]
    Relator(String),

    #[error("{0}")]
    Schema(String),

    #[error("framing: {0}")]
    Framing(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degree bound {bound} exceeded after {words_done} words (degree {degree})")]
    DegreeBound {
        bound: usize,
        degree: usize,
        words_done: usize,
    },
}
