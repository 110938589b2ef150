//! Kinematics of the orthogonal 3-RRR spherical parallel wrist (the "Agile
//! Eye"): a three-legged spherical parallel mechanism in which every pair of
//! adjacent revolute axes is perpendicular.
//!
//! The crate provides
//!
//! * closed-form inverse kinematics with all eight working modes ([`ik`]),
//! * closed-form direct kinematics with the four trivial and four nontrivial
//!   solutions and every degenerate case ([`dk`]),
//! * Jacobians and classification of singular configurations
//!   ([`singularity`]),
//! * working/assembly mode correspondence and path tracking ([`modes`]),
//! * joint-space sweeps and the `agile` command-line front end ([`analysis`]).
//!
//! All angles are radians in `(-pi, pi]`.
//!
//! ```
//! use agile_eye::{solve_dk, JointTriplet};
//!
//! let dk = solve_dk(&JointTriplet::new(-0.3, -0.7, 0.1));
//! let modes = dk.finite().expect("generic joints");
//! assert!((modes[0].theta() + 0.672).abs() < 1e-3);
//! ```

pub mod analysis;
pub mod dk;
pub mod error;
pub mod ik;
pub mod mechanism;
pub mod modes;
pub mod singularity;
pub mod so3;
pub mod tolerance;

pub use dk::{
    classify_joint_degeneracy, self_motion_family, solve_dk, trivial_orientations, ConditionPair,
    DkBranch, DkResult, JointDegeneracy, SelfMotionFamily,
};
pub use error::{CrossingReason, Error, Result};
pub use ik::{leg_ik, solve_ik, IkSolutionSet, LegIkOutcome};
pub use mechanism::{constraint_residuals, JointTriplet};
pub use modes::{
    assembly_mode_for, assembly_mode_id, track_path, working_mode_signature, AssemblyModeId,
    TrackStep, WorkingModeSignature,
};
pub use singularity::{
    b_diag_closed_form, classify_configuration, det_a_closed_form, jacobians, JacobianPair,
    SingularityClass, SolutionBranch,
};
pub use so3::{
    canonicalize_euler, euler_to_rotation, rotation_distance, rotation_to_euler, EulerFamily,
    EulerZyx, RotationMatrix, Vec3,
};
pub use tolerance::Tolerances;
