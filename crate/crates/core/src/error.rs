//! Error and defect types shared across the crate.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// A structural problem found in raw framework input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Defect {
    DuplicateName(String),
    InvalidName(String),
    UnknownArgument(String),
    DuplicateAttack(String, String),
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::DuplicateName(n) => write!(f, "duplicate argument name `{n}`"),
            Defect::InvalidName(n) => write!(f, "invalid argument name `{n}`"),
            Defect::UnknownArgument(n) => write!(f, "unknown argument `{n}` in attack"),
            Defect::DuplicateAttack(a, b) => write!(f, "duplicate attack ({a},{b})"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An `ArgSet` was used with a framework other than the one it is bound to.
    #[error("argument set is bound to a different framework")]
    ForeignArgSet,

    #[error("framework has {args} arguments, exceeding the enumeration cap of {cap}")]
    TooManyArguments { args: usize, cap: usize },

    #[error("program has {atoms} atoms, exceeding the solver cap of {cap}")]
    TooManyAtoms { atoms: usize, cap: usize },

    /// `para` is not handled by the classical enumerator; it is resolved by
    /// the stabilizer solver (see `reasoning::extensions` for the dispatch).
    #[error("semantics `para` is not handled by the classical enumerator")]
    ParaDispatch,

    #[error("unknown argument `{0}`")]
    UnknownArgument(String),

    #[error("invalid framework: {}", fmt_defects(.0))]
    InvalidFramework(Vec<Defect>),

    #[error("argument name `{0}` collides with a reserved prefix")]
    ReservedName(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Input(String),

    #[error("{0}")]
    Precondition(String),
}

fn fmt_defects(defects: &[Defect]) -> String {
    defects
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
