use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate pair: a line needs two distinct points")]
    DegeneratePair,
    #[error("degenerate line: coefficients a and b are both zero")]
    DegenerateLine,
    #[error("coincident lines have no unique intersection")]
    CoincidentLines,

    #[error("too few points: need at least 3, got {0}")]
    TooFewPoints(usize),
    #[error("duplicate point at indices ({0},{1})")]
    DuplicatePoint(usize, usize),
    #[error("points are contained in a line")]
    ContainedInLine,
    #[error("point index {index} out of range for {n} points")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("indices must be distinct, got {0} twice")]
    SameIndex(usize),
    #[error("not 3-bounded on this line: line through {0} and {1} holds {2} points")]
    NotThreeBoundedOnLine(usize, usize, usize),
    #[error("configuration is not 3-bounded (a line holds {0} points)")]
    NotThreeBounded(usize),
    #[error("line through {0} and {1} is not simple")]
    NotSimple(usize, usize),
    #[error("start point {0} lies on the base line")]
    StartOnBase(usize),

    #[error("orbit anomaly: step from {seq:?} revisits {repeated}")]
    OrbitAnomaly { seq: Vec<usize>, repeated: usize },
    #[error("orbit exceeded the step bound of {0}")]
    OrbitRunaway(usize),
    #[error("characterization violated: line through {0} and {1} is not simple")]
    CharacterizationViolated(usize, usize),
    #[error("main claim violated: no simple wedge from base ({0},{1}) in odd 3-bounded set")]
    MainClaimViolated(usize, usize),
    #[error("Gallai-Sylvester violated: no simple line found")]
    NoSimpleLine,

    #[error("construction failed for {0}")]
    ConstructionFailed(String),

    #[error("parse error line {0}")]
    Parse(usize),
    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    /// True for errors that indicate a lemma or theorem falsifier rather
    /// than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::OrbitAnomaly { .. }
                | Error::OrbitRunaway(_)
                | Error::CharacterizationViolated(..)
                | Error::MainClaimViolated(..)
                | Error::NoSimpleLine
                | Error::ConstructionFailed(_)
        )
    }
}
