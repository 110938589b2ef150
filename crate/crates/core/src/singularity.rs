//! Velocity Jacobians and singularity classification.
//!
//! The platform angular velocity `w` and actuator rates `dθ` satisfy
//! `A w + B dθ = 0`, with rows of `A` equal to `(w_i × v_i)ᵀ` and `B` diagonal
//! with `B_ii = (w_i × v_i)ᵀ u_i`.
//!
//! On the nontrivial solutions `det A = q2(θ)` for all four assembly modes,
//! and on the trivial orientations `det A = -q2(θ)`. Every `|B_ii|` is `|q2|`
//! divided by leg-dependent square roots, so a parallel singularity is always
//! also a serial one.

use nalgebra::Matrix3;

use crate::dk::{condition_pair, q_terms, trivial_orientation_id, SelfMotionFamily};
use crate::error::{Error, Result};
use crate::mechanism::{base_axes, intermediate_axes, leg_is_singular, max_residual,
    platform_axes_base, JointTriplet};
use crate::modes::AssemblyModeId;
use crate::so3::RotationMatrix;
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobianPair {
    /// Rows `(w_i × v_i)ᵀ`.
    pub a: Matrix3<f64>,
    /// Diagonal of `B`.
    pub b_diag: [f64; 3],
}

impl JacobianPair {
    pub fn det_a(&self) -> f64 {
        self.a.determinant()
    }

    pub fn det_b(&self) -> f64 {
        self.b_diag.iter().product()
    }
}

pub fn jacobians(j: &JointTriplet, r: &RotationMatrix) -> JacobianPair {
    let u = base_axes();
    let v = platform_axes_base(r);
    let w = intermediate_axes(j);
    let alpha = [0, 1, 2].map(|i| w[i].cross(&v[i]));
    JacobianPair {
        a: Matrix3::from_rows(&[alpha[0].transpose(), alpha[1].transpose(), alpha[2].transpose()]),
        b_diag: [alpha[0].dot(&u[0]), alpha[1].dot(&u[1]), alpha[2].dot(&u[2])],
    }
}

/// Which solution set a closed-form determinant refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionBranch {
    Nontrivial,
    Trivial,
}

/// `±(s1 s2 s3 + c1 c2 c3)`: positive on the nontrivial branch.
pub fn det_a_closed_form(j: &JointTriplet, branch: SolutionBranch) -> f64 {
    let (_, q2) = q_terms(j);
    match branch {
        SolutionBranch::Nontrivial => q2,
        SolutionBranch::Trivial => -q2,
    }
}

/// Sign rows of the `B` diagonal for modes 1..=4 when mode 1 is all negative.
pub const MODE_SIGN_TABLE: [[f64; 3]; 4] = [
    [-1.0, -1.0, -1.0],
    [1.0, 1.0, -1.0],
    [-1.0, 1.0, 1.0],
    [1.0, -1.0, 1.0],
];

/// Closed-form `B_ii` for assembly mode `mode` of the nontrivial solutions.
///
/// Mode 1 carries the sign of `q2` in every entry (so the table row above is
/// exact when `det A < 0`, and globally negated when `det A > 0`). The values
/// agree with [`jacobians`] evaluated at the matching [`crate::dk::solve_dk`]
/// solution.
pub fn b_diag_closed_form(j: &JointTriplet, mode: AssemblyModeId) -> Result<[f64; 3]> {
    b_diag_closed_form_with(j, mode, &Tolerances::default())
}

pub fn b_diag_closed_form_with(
    j: &JointTriplet,
    mode: AssemblyModeId,
    tol: &Tolerances,
) -> Result<[f64; 3]> {
    let (s1, c1) = j.theta1().sin_cos();
    let (s2, c2) = j.theta2().sin_cos();
    let (s3, c3) = j.theta3().sin_cos();
    let (_, q2) = q_terms(j);
    // 1 - c3² s1² written as s3² + c3² c1², and cyclically.
    let r31 = (s3 * s3 + c3 * c3 * c1 * c1).sqrt();
    let r12 = (s1 * s1 + c1 * c1 * c2 * c2).sqrt();
    let r23 = (s2 * s2 + c2 * c2 * c3 * c3).sqrt();
    let dens = [r31 * r12, r23 * r12, r23 * r31];
    if let Some(leg) = dens.iter().position(|d| *d < tol.structure) {
        return Err(Error::DenominatorDegenerate { leg: leg + 1 });
    }
    let signs = MODE_SIGN_TABLE[mode.index()];
    Ok([0, 1, 2].map(|i| -signs[i] * q2 / dens[i]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityClass {
    Regular,
    /// On a self-motion curve with matching joint condition pair.
    SelfMotion { family: SelfMotionFamily },
    /// Trivial orientation with `q2 = 0`: the platform can move infinitesimally.
    InfinitesimalAtTrivial { trivial_id: u8 },
    /// Trivial orientation with `q2 ≠ 0`: the platform cannot move at all.
    Lockup { trivial_id: u8 },
    /// Within the singular tolerance of a singularity, but matching none of
    /// the exact families at the structure tolerance.
    NearSingular,
}

impl SingularityClass {
    pub fn tag(&self) -> &'static str {
        match self {
            SingularityClass::Regular => "regular",
            SingularityClass::SelfMotion { .. } => "self_motion",
            SingularityClass::InfinitesimalAtTrivial { .. } => "infinitesimal_at_trivial",
            SingularityClass::Lockup { .. } => "lockup",
            SingularityClass::NearSingular => "near_singular",
        }
    }

    pub fn is_regular(&self) -> bool {
        matches!(self, SingularityClass::Regular)
    }
}

pub fn classify_configuration(j: &JointTriplet, r: &RotationMatrix) -> Result<SingularityClass> {
    classify_configuration_with(j, r, &Tolerances::default())
}

pub fn classify_configuration_with(
    j: &JointTriplet,
    r: &RotationMatrix,
    tol: &Tolerances,
) -> Result<SingularityClass> {
    let max_residual = max_residual(j, r);
    if max_residual.is_nan() || max_residual > tol.residual {
        return Err(Error::NotAssembled { max_residual });
    }
    if let Some(pair) = condition_pair(j, tol.structure) {
        for family in pair.families() {
            let (_, d) = family.nearest_parameter(r);
            if d <= tol.membership {
                return Ok(SingularityClass::SelfMotion { family });
            }
        }
    }
    if let Some(trivial_id) = trivial_orientation_id(r, tol.membership) {
        let (_, q2) = q_terms(j);
        return Ok(if q2.abs() <= tol.structure {
            SingularityClass::InfinitesimalAtTrivial { trivial_id }
        } else {
            SingularityClass::Lockup { trivial_id }
        });
    }
    let det = jacobians(j, r).det_a();
    let leg_singular = (0..3).any(|leg| leg_is_singular(leg, r));
    if det.abs() > tol.singular && !leg_singular {
        Ok(SingularityClass::Regular)
    } else {
        Ok(SingularityClass::NearSingular)
    }
}
