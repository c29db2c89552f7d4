use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnchorError {
    #[error("arity mismatch: slot expects {expected}, inner tangle outputs {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("slot {slot} out of range (tangle has {inputs} inputs)")]
    BadSlot { slot: usize, inputs: usize },
    #[error("braid letter references position {pos} on {inputs} inputs")]
    BadBraidLetter { pos: usize, inputs: usize },
    #[error("operation mixes distinct backends")]
    BackendMismatch,
    #[error("backend has no braiding")]
    NotBraided,
    #[error("morphism shapes do not match: {0}")]
    ShapeMismatch(String),
    #[error("box arity {needed} exceeds instance cutoff n_max = {n_max}")]
    CutoffExceeded { needed: usize, n_max: usize },
    #[error("morphism level list does not match instances")]
    LevelMismatch,
    #[error("eigenvalue clusters too close for reliable idempotent extraction")]
    NumericalDegeneracy,
    #[error("traciator-defining matrix is numerically singular")]
    SingularMate,
    #[error("invalid backend description: {0}")]
    InvalidBackend(String),
    #[error("loop parameter delta must be >= 2 (got {0})")]
    DeltaTooSmall(f64),
    #[error("parse error at line {line}, col {col}: {msg}")]
    ParseError { line: usize, col: usize, msg: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, AnchorError>;
