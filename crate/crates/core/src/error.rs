use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed presentation: {0}")]
    Malformed(String),

    #[error("incomplete squares: {0}")]
    IncompleteSquares(String),

    #[error("cube inconsistent: {0}")]
    CubeInconsistent(String),

    #[error("paths not composable: source {source_vertex} != range {range_vertex}")]
    NotComposable { source_vertex: String, range_vertex: String },

    #[error("degree out of range: need {lower} <= {upper} <= {degree}")]
    DegreeOutOfRange { lower: String, upper: String, degree: String },

    #[error("degree overflow")]
    DegreeOverflow,

    #[error("graph has sources: {0}")]
    HasSources(String),

    #[error("set is not contained in vΛ for v = {0}")]
    NotAtVertex(String),

    #[error("element belongs to a different graph")]
    MixedGraphs,

    #[error("no basis path lies inside the exact window (cap {cap}, margin {margin})")]
    WindowTooSmall { cap: String, margin: String },

    #[error("uniqueness hypothesis failed at vertex {vertex} with r = {r}: {which}")]
    HypothesisFailed { vertex: String, r: String, which: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable code used in reports and by the C ABI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "PARSE",
            Error::Malformed(_) => "MALFORMED",
            Error::IncompleteSquares(_) => "INCOMPLETE_SQUARES",
            Error::CubeInconsistent(_) => "CUBE_INCONSISTENT",
            Error::NotComposable { .. } => "NOT_COMPOSABLE",
            Error::DegreeOutOfRange { .. } => "DEGREE_OUT_OF_RANGE",
            Error::DegreeOverflow => "DEGREE_OVERFLOW",
            Error::HasSources(_) => "HAS_SOURCES",
            Error::NotAtVertex(_) => "NOT_AT_VERTEX",
            Error::MixedGraphs => "MIXED_GRAPHS",
            Error::WindowTooSmall { .. } => "WINDOW_TOO_SMALL",
            Error::HypothesisFailed { .. } => "HYPOTHESIS_FAILED",
            Error::InvalidArgument(_) => "INVALID_ARGUMENT",
            Error::Json(_) => "JSON",
            Error::Io(_) => "IO",
        }
    }
}
