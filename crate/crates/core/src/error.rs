use thiserror::Error;

/// Why a tracked path was reported as crossing a singularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingReason {
    /// det(A) changed sign (or vanished) between two refined steps.
    DetSignChange,
    /// The joints entered a degenerate set (self-motion pair or trivial-only).
    DegenerateJoints,
    /// Two direct-kinematics candidates were too close to pick one.
    Ambiguous,
}

impl std::fmt::Display for CrossingReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CrossingReason::DetSignChange => "det(A) sign change",
            CrossingReason::DegenerateJoints => "degenerate joints",
            CrossingReason::Ambiguous => "ambiguous continuation",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not a proper rotation (orthogonality error {orthogonality:.3e}, det {det})")]
    MalformedRotation { orthogonality: f64, det: f64 },

    #[error("unknown self-motion family {0} (expected 1..=6)")]
    UnknownFamily(u8),

    #[error("unknown assembly mode {0} (expected 1..=4)")]
    UnknownAssemblyMode(u8),

    #[error("closed-form B{leg}{leg} denominator vanishes: leg {leg} is singular")]
    DenominatorDegenerate { leg: usize },

    #[error("configuration is not assembled (max residual {max_residual:.3e})")]
    NotAssembled { max_residual: f64 },

    #[error("B diagonal entry {leg} is zero: configuration is serial-singular")]
    SingularNoSignature { leg: usize },

    #[error("requested working mode is not realized by these joints")]
    NoSuchMode,

    #[error("direct kinematics is degenerate for these joints")]
    Degenerate,

    #[error("orientation matches no nontrivial direct-kinematics solution")]
    NoMatch,

    #[error("start orientation is not a direct-kinematics solution of the first path point")]
    StartNotASolution,

    #[error("path is empty")]
    EmptyPath,

    #[error("singularity crossing at step {step} ({reason})")]
    SingularityCrossing { step: usize, reason: CrossingReason },
}

pub type Result<T> = std::result::Result<T, Error>;
