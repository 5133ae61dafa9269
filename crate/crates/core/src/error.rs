use thiserror::Error;

/// Errors raised by the engine.
///
/// Verification outcomes (d² ≠ 0, a failed Sullivan closure, a violated bound)
/// are reported as values in the corresponding report types, not through this
/// enum. Variants here signal inputs that cannot be processed at all.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("elements belong to different algebras")]
    MixedAlgebras,

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("d({generator}) is not homogeneous of degree {expected}")]
    InhomogeneousDifferential { generator: String, expected: usize },

    #[error("not a KS complex: generators {0:?} are never absorbed by the Sullivan filtration")]
    NotSullivan(Vec<String>),

    #[error("not a Λ-extension: {0}")]
    NotExtension(String),

    #[error("ill-formed window: {0}")]
    IllFormedWindow(String),

    #[error("degree cap {cap} is too small, {needed} is required")]
    CapShortfall { needed: i64, cap: i64 },

    #[error("dimension mismatch: {0}")]
    Shape(String),

    #[error("not a chain map: {0}")]
    NotChainMap(String),

    #[error("homotopy check failed: {0}")]
    NotHomotopy(String),

    #[error("filtration level I_{level} is not closed under d: {detail}")]
    FiltrationNotClosed { level: usize, detail: String },

    #[error("lift failed at generator `{generator}`: {reason}")]
    LiftFailed { generator: String, reason: String },

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("input error: {0}")]
    Input(String),

    #[error("random generation gave up: {0}")]
    GenerationBudget(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
