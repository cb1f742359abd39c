use core::fmt;

/// Errors reported by the exact kernel and the analysis layers on top of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The zero triple is not a valid homogeneous coordinate vector.
    InvalidHomogeneous,
    /// Join of a point with itself.
    DegenerateJoin,
    /// Meet of a line with itself.
    DegenerateMeet,
    /// Transform matrix with zero determinant.
    SingularTransform,
    /// Betweenness query on points that are not finite and collinear.
    NotOnSegmentLine,
    /// Half-line query with an invalid apex or a point off the line.
    InvalidHalfLineQuery,
    /// All points of the configuration lie on a single line.
    CollinearInput,
    /// Fewer than three points, or duplicates after canonicalization.
    InvalidConfiguration,
    /// The supplied concurrent structure does not cover the configuration.
    StructureMismatch,
    /// Invalid generator parameters.
    InvalidParams,
    /// A generated family failed its construction-time bound check.
    FamilyCheckFailed,
    /// Random generation exceeded its retry budget.
    GenerationExhausted,
    /// The witness certificate disagrees with the recomputed incidence count,
    /// or a proof-path fact failed to hold. Always a bug, never hidden.
    CertificateMismatch(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidHomogeneous => write!(f, "zero triple is not a homogeneous coordinate"),
            Error::DegenerateJoin => write!(f, "join of coincident points is undefined"),
            Error::DegenerateMeet => write!(f, "meet of coincident lines is undefined"),
            Error::SingularTransform => write!(f, "projective transform must have nonzero determinant"),
            Error::NotOnSegmentLine => write!(f, "betweenness requires finite collinear points"),
            Error::InvalidHalfLineQuery => write!(f, "half-line query requires a finite apex and a distinct point on the line"),
            Error::CollinearInput => write!(f, "all points are collinear"),
            Error::InvalidConfiguration => write!(f, "configuration needs at least 3 pairwise distinct points"),
            Error::StructureMismatch => write!(f, "structure does not describe this configuration"),
            Error::InvalidParams => write!(f, "invalid generator parameters"),
            Error::FamilyCheckFailed => write!(f, "family construction failed its bound check"),
            Error::GenerationExhausted => write!(f, "random generation exhausted its retry budget"),
            Error::CertificateMismatch(what) => write!(f, "witness certificate mismatch: {what}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
