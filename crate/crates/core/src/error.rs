use thiserror::Error;

/// Errors produced by parsing, circuit construction and synthesis.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("variable count {n} out of range ({min}..={max})")]
    VarCount { n: u32, min: u32, max: u32 },

    #[error("gate is malformed: {0}")]
    BadGate(String),

    #[error("gate references line {line} but the circuit has {width} lines")]
    LineOutOfRange { line: u32, width: u32 },

    #[error("state has {got} bits but the circuit has {want} lines")]
    StateWidth { got: usize, want: usize },

    #[error("line {line} is declared constant {expected} but the input sets it differently")]
    ConstantViolated { line: u32, expected: bool },

    #[error("circuit width {width} exceeds the enumeration limit of {limit} lines")]
    WidthTooLarge { width: u32, limit: u32 },

    #[error("images do not form a permutation: {0}")]
    NotBijective(String),

    #[error("circuit input lines do not match the function: {0}")]
    VariableMismatch(String),

    #[error("leaf mentions variable x{var} outside the bank's variable set")]
    LeafOutsideBank { var: u32 },

    #[error("invalid decomposition depth k={k} for n={n} (need 0 <= k < n)")]
    BadDepth { k: u32, n: u32 },

    #[error("single-target gate control mentions its own target x{0}")]
    ControlMentionsTarget(u32),

    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
