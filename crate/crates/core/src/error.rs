use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed formula, sequent or S-expression text; `pos` is a byte offset.
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// A rule or cut was applied to premises of the wrong shape.
    #[error("mismatch: {0}")]
    Mismatch(String),

    /// A search or rewrite exceeded its node/step budget.
    #[error("budget of {0} exhausted")]
    Budget(usize),

    /// A rewrite step was requested at a position where it does not match.
    #[error("rewrite step not applicable: {0}")]
    NotApplicable(String),
}

impl Error {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax { pos, msg: msg.into() }
    }

    pub(crate) fn mismatch(msg: impl Into<String>) -> Self {
        Error::Mismatch(msg.into())
    }
}
