use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    /// No disjoint family of composite lines joins the two columns.
    #[error("P1 violated for columns ({left},{right}) of height {height}: no composite-line family")]
    P1Violation { left: usize, right: usize, height: usize },

    #[error("P1 uniqueness violated for columns ({left},{right}) of height {height}: {families} or more families")]
    P1UniquenessViolation {
        left: usize,
        right: usize,
        height: usize,
        families: usize,
    },

    #[error("section defect for columns ({left},{right}): restriction is {restriction}")]
    SectionDefect {
        left: usize,
        right: usize,
        restriction: String,
    },

    #[error("nilfibre violation for columns ({left},{right}): restriction to E is {restriction}")]
    NilfibreViolation {
        left: usize,
        right: usize,
        restriction: String,
    },

    #[error("top term of the zero polynomial is undefined")]
    UndefinedGrading,

    #[error("determinant of size {size} exceeds the configured bound {bound}")]
    ResourceLimit { size: usize, bound: usize },

    #[error("internal error: {0}")]
    Internal(String),
}
