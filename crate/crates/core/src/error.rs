use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix must be square and non-empty, got {rows} rows with row lengths {cols:?}")]
    DimensionMismatch { rows: usize, cols: Vec<usize> },

    #[error("expected 16 integers, got {0}")]
    Arity(usize),

    #[error("could not parse `{0}` as an integer")]
    Parse(String),

    #[error("input {value} exceeds the fixed-width bound |a_i| <= {bound}")]
    InputOutOfRange { value: i128, bound: i128 },

    #[error("fixed-width product overflowed")]
    Overflow,

    #[error("Frobenius product has nonzero imaginary part {im} (real part {re})")]
    NonRealFrobenius { re: String, im: String },

    #[error("unknown witness family {0}, expected 1..=5")]
    UnknownFamily(u8),

    #[error("invalid search configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
