//! Rotation representations used throughout the crate.
//!
//! Orientations are stored as proper-orthogonal 3×3 matrices and parameterized
//! with ZYX Euler angles, `R = Rz(phi) · Ry(theta) · Rx(psi)`. All angles are
//! kept in the half-open interval `(-pi, pi]`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::ops::Mul;

use nalgebra::{Matrix3, Rotation3, Unit, Vector3};

use crate::error::{Error, Result};

pub type Vec3 = Vector3<f64>;

/// Entrywise tolerance on `RᵀR = I` and `det R = 1`.
pub const ORTHOGONALITY_TOL: f64 = 1e-10;

/// `|cos theta|` below this selects the representation-singular branch.
pub const REPRESENTATION_SINGULAR_TOL: f64 = 1e-9;

/// Maps any real angle into `(-pi, pi]`. Values already in range are returned
/// unchanged, except that `-0.0` becomes `0.0`.
pub fn normalize_angle(x: f64) -> f64 {
    if x > -PI && x <= PI {
        return x + 0.0;
    }
    let r = x.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Smallest signed difference `b - a`, in `(-pi, pi]`.
pub fn angle_diff(a: f64, b: f64) -> f64 {
    normalize_angle(b - a)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix(Matrix3<f64>);

impl RotationMatrix {
    /// Validates orthogonality and orientation before wrapping.
    pub fn new(m: Matrix3<f64>) -> Result<Self> {
        let r = RotationMatrix(m);
        r.check()?;
        Ok(r)
    }

    pub fn from_rows(rows: [[f64; 3]; 3]) -> Result<Self> {
        Self::new(Matrix3::from_fn(|i, j| rows[i][j]))
    }

    /// Wraps a matrix the caller knows to be a rotation.
    pub fn from_matrix_unchecked(m: Matrix3<f64>) -> Self {
        RotationMatrix(m)
    }

    pub fn identity() -> Self {
        RotationMatrix(Matrix3::identity())
    }

    pub fn rot_x(a: f64) -> Self {
        let (s, c) = a.sin_cos();
        RotationMatrix(Matrix3::new(1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c))
    }

    pub fn rot_y(a: f64) -> Self {
        let (s, c) = a.sin_cos();
        RotationMatrix(Matrix3::new(c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c))
    }

    pub fn rot_z(a: f64) -> Self {
        let (s, c) = a.sin_cos();
        RotationMatrix(Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0))
    }

    /// Rotation by `angle` about `axis` (need not be normalized, must be nonzero).
    pub fn about_axis(axis: &Vec3, angle: f64) -> Self {
        let r = Rotation3::from_axis_angle(&Unit::new_normalize(*axis), angle);
        RotationMatrix(r.into_inner())
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.0
    }

    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.0[(row, col)]
    }

    pub fn to_rows(&self) -> [[f64; 3]; 3] {
        let m = &self.0;
        [
            [m[(0, 0)], m[(0, 1)], m[(0, 2)]],
            [m[(1, 0)], m[(1, 1)], m[(1, 2)]],
            [m[(2, 0)], m[(2, 1)], m[(2, 2)]],
        ]
    }

    pub fn transpose(&self) -> Self {
        RotationMatrix(self.0.transpose())
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        self.0 * v
    }

    /// Largest entrywise deviation of `RᵀR` from the identity.
    pub fn orthogonality_error(&self) -> f64 {
        (self.0.transpose() * self.0 - Matrix3::identity()).abs().max()
    }

    pub fn check(&self) -> Result<()> {
        let orthogonality = self.orthogonality_error();
        let det = self.0.determinant();
        if !(orthogonality <= ORTHOGONALITY_TOL && (det - 1.0).abs() <= ORTHOGONALITY_TOL) {
            return Err(Error::MalformedRotation { orthogonality, det });
        }
        Ok(())
    }
}

impl Mul for RotationMatrix {
    type Output = RotationMatrix;

    fn mul(self, rhs: RotationMatrix) -> RotationMatrix {
        RotationMatrix(self.0 * rhs.0)
    }
}

impl Mul<&RotationMatrix> for &RotationMatrix {
    type Output = RotationMatrix;

    fn mul(self, rhs: &RotationMatrix) -> RotationMatrix {
        RotationMatrix(self.0 * rhs.0)
    }
}

/// ZYX Euler triplet with every angle in `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerZyx {
    phi: f64,
    theta: f64,
    psi: f64,
}

impl EulerZyx {
    pub fn new(phi: f64, theta: f64, psi: f64) -> Self {
        EulerZyx {
            phi: normalize_angle(phi),
            theta: normalize_angle(theta),
            psi: normalize_angle(psi),
        }
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn psi(&self) -> f64 {
        self.psi
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.phi, self.theta, self.psi]
    }

    /// The triplet `(phi + pi, pi - theta, psi + pi)`, which describes the
    /// same orientation.
    pub fn companion(&self) -> Self {
        EulerZyx::new(self.phi + PI, PI - self.theta, self.psi + PI)
    }

    /// Largest per-angle wrapped difference to `other`.
    pub fn max_angle_error(&self, other: &EulerZyx) -> f64 {
        let d = [
            angle_diff(self.phi, other.phi),
            angle_diff(self.theta, other.theta),
            angle_diff(self.psi, other.psi),
        ];
        d.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    pub fn to_rotation(&self) -> RotationMatrix {
        euler_to_rotation(self)
    }
}

/// Result of reading Euler angles off a rotation matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EulerFamily {
    Unique(EulerZyx),
    /// `theta = ±pi/2`; only `phi - psi` (for `+pi/2`) or `phi + psi`
    /// (for `-pi/2`) is determined.
    RepresentationSingular { theta: f64, combination: f64 },
}

impl EulerFamily {
    /// One concrete triplet from the family (`psi = 0` on the singular branch).
    pub fn representative(&self) -> EulerZyx {
        match *self {
            EulerFamily::Unique(e) => e,
            EulerFamily::RepresentationSingular { theta, combination } => {
                EulerZyx::new(combination, theta, 0.0)
            }
        }
    }
}

pub fn euler_to_rotation(e: &EulerZyx) -> RotationMatrix {
    let (sf, cf) = e.phi.sin_cos();
    let (st, ct) = e.theta.sin_cos();
    let (sp, cp) = e.psi.sin_cos();
    RotationMatrix(Matrix3::new(
        cf * ct,
        cf * st * sp - sf * cp,
        cf * st * cp + sf * sp,
        sf * ct,
        sf * st * sp + cf * cp,
        sf * st * cp - cf * sp,
        -st,
        ct * sp,
        ct * cp,
    ))
}

pub fn rotation_to_euler(r: &RotationMatrix) -> Result<EulerFamily> {
    r.check()?;
    let m = r.matrix();
    let cos_theta = m[(0, 0)].hypot(m[(1, 0)]);
    if cos_theta < REPRESENTATION_SINGULAR_TOL {
        // At sin(theta) = ±1 both R01 = -sin(phi ∓ psi) and R11 = cos(phi ∓ psi).
        let theta = if -m[(2, 0)] > 0.0 { FRAC_PI_2 } else { -FRAC_PI_2 };
        let combination = normalize_angle((-m[(0, 1)]).atan2(m[(1, 1)]));
        return Ok(EulerFamily::RepresentationSingular { theta, combination });
    }
    let theta = (-m[(2, 0)]).atan2(cos_theta);
    let phi = m[(1, 0)].atan2(m[(0, 0)]);
    let psi = m[(2, 1)].atan2(m[(2, 2)]);
    Ok(EulerFamily::Unique(EulerZyx::new(phi, theta, psi)))
}

/// Deterministic representative with `theta` in `(-pi/2, pi/2]`. Triplets on
/// the representation singularity (`theta = -pi/2`) are returned normalized.
pub fn canonicalize_euler(e: &EulerZyx) -> EulerZyx {
    let e = EulerZyx::new(e.phi, e.theta, e.psi);
    if e.theta > -FRAC_PI_2 && e.theta <= FRAC_PI_2 {
        return e;
    }
    let c = e.companion();
    if c.theta > -FRAC_PI_2 && c.theta <= FRAC_PI_2 {
        c
    } else {
        e
    }
}

/// Geodesic angle between two orientations, in `[0, pi]`.
///
/// Evaluated as `atan2(|axis|, cos)` on `aᵀb`, which equals
/// `arccos((trace - 1) / 2)` but keeps full precision near zero and pi.
pub fn rotation_distance(a: &RotationMatrix, b: &RotationMatrix) -> f64 {
    let m = a.0.transpose() * b.0;
    let cos = ((m.trace() - 1.0) / 2.0).clamp(-1.0, 1.0);
    let axis = Vec3::new(
        m[(2, 1)] - m[(1, 2)],
        m[(0, 2)] - m[(2, 0)],
        m[(1, 0)] - m[(0, 1)],
    );
    let sin = (axis.norm() / 2.0).min(1.0);
    sin.atan2(cos)
}
