use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("alpha is not a fixed-point-free involution: {0}")]
    InvalidInvolution(String),
    #[error("orientation violation: darts {0} and {1} have the same direction")]
    OrientationViolation(usize, usize),
    #[error("dangling dart {0}")]
    DanglingDart(usize),
    #[error("face of mixed direction through dart {0}")]
    MixedDirectionFace(usize),
    #[error("map is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("not a melon at vertices ({0}, {1})")]
    NotAMelon(usize, usize),
    #[error("not a dipole")]
    NotADipole,
    #[error("not a ladder vertex")]
    NotALadderVertex,
    #[error("edge pair is not a two-edge cut")]
    NotACut,
    #[error("cut edges do not lie on the same loop")]
    EdgesNotOnSameLoop,
    #[error("rung parity incompatible with the cut orientations")]
    ParityForbidden,
    #[error("edge orientations incompatible with the requested insertion")]
    OrientationMismatch,
    #[error("enumeration not supported for g={0}, l={1}")]
    UnsupportedGrade(usize, usize),
    #[error("vertex bound {0} exceeds the supported maximum {1}")]
    BoundExceeded(usize, usize),
    #[error("diagram has {0} crossings, bracket evaluation capped at {1}")]
    TooManyCrossings(usize, usize),
    #[error("map is not planar (genus {0})")]
    NotPlanar(usize),
    #[error("map has {0} straight faces, a knot diagram needs exactly one")]
    NotAKnot(usize),
    #[error("format version mismatch: expected {expected}, found {found}")]
    FormatVersionMismatch { expected: String, found: String },
    #[error("corrupt catalog entry: {0}")]
    CorruptEntry(String),
    #[error("catalog key mismatch: {0}")]
    KeyMismatch(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
