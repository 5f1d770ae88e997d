use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("machine is not invertible: state `{0}` has a non-bijective output map")]
    NotInvertible(String),
    #[error("alphabet mismatch: `{0}`")]
    AlphabetMismatch(String),
    #[error("malformed convolution word: {0}")]
    Malformed(String),
    #[error("no cofinal tail image for state `{state}` at phase {phase}")]
    NotCofinal { state: String, phase: usize },
    #[error("`{0}` is not a canonical vertex encoding")]
    InvalidEncoding(String),
    #[error("a-line walk range {0} exceeded")]
    RangeExceeded(i64),
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("no affine correspondence between the integer model and the action model")]
    NoCorrespondence,
    #[error("correspondence ambiguous: {0} affine maps survive, enlarge the radius")]
    Ambiguous(usize),
    #[error("unsupported omega word: {0}")]
    UnsupportedOmega(String),
    #[error("radius {0} too small for growth diagnostics")]
    InsufficientRadius(u32),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
