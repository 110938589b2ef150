//! Joint-axis geometry of the orthogonal 3-RRR wrist.
//!
//! Base axes are the base-frame unit vectors. At the reference orientation the
//! platform axes are `-y`, `-z`, `-x` and every intermediate axis is
//! perpendicular to its base axis for all joint values.

use crate::so3::{normalize_angle, RotationMatrix, Vec3};

/// `|u_i · v_i|` above `1 - LEG_SINGULAR_TOL` means leg `i` is fully
/// extended or folded.
pub const LEG_SINGULAR_TOL: f64 = 1e-9;

/// Actuated joint angles, each in `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointTriplet([f64; 3]);

impl JointTriplet {
    pub fn new(theta1: f64, theta2: f64, theta3: f64) -> Self {
        JointTriplet([
            normalize_angle(theta1),
            normalize_angle(theta2),
            normalize_angle(theta3),
        ])
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn angles(&self) -> [f64; 3] {
        self.0
    }

    /// Angle of leg `i` (zero-based).
    pub fn get(&self, i: usize) -> f64 {
        self.0[i]
    }

    pub fn theta1(&self) -> f64 {
        self.0[0]
    }

    pub fn theta2(&self) -> f64 {
        self.0[1]
    }

    pub fn theta3(&self) -> f64 {
        self.0[2]
    }

    /// Largest per-joint wrapped difference to `other`.
    pub fn max_angle_error(&self, other: &JointTriplet) -> f64 {
        (0..3).fold(0.0_f64, |m, i| {
            m.max(normalize_angle(other.0[i] - self.0[i]).abs())
        })
    }
}

/// The three joint axes of one leg, all in the base frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegAxes {
    pub u: Vec3,
    pub v: Vec3,
    pub w: Vec3,
}

pub fn base_axes() -> [Vec3; 3] {
    [Vec3::x(), Vec3::y(), Vec3::z()]
}

/// Platform joint axes in the mobile frame.
pub fn platform_axes_mobile() -> [Vec3; 3] {
    [
        Vec3::new(0.0, -1.0, 0.0),
        Vec3::new(0.0, 0.0, -1.0),
        Vec3::new(-1.0, 0.0, 0.0),
    ]
}

pub fn platform_axes_base(r: &RotationMatrix) -> [Vec3; 3] {
    platform_axes_mobile().map(|v| r.apply(&v))
}

pub fn intermediate_axes(j: &JointTriplet) -> [Vec3; 3] {
    let (s1, c1) = j.theta1().sin_cos();
    let (s2, c2) = j.theta2().sin_cos();
    let (s3, c3) = j.theta3().sin_cos();
    [
        Vec3::new(0.0, -s1, c1),
        Vec3::new(c2, 0.0, -s2),
        Vec3::new(-s3, c3, 0.0),
    ]
}

pub fn leg_axes(j: &JointTriplet, r: &RotationMatrix) -> [LegAxes; 3] {
    let u = base_axes();
    let v = platform_axes_base(r);
    let w = intermediate_axes(j);
    [0, 1, 2].map(|i| LegAxes {
        u: u[i],
        v: v[i],
        w: w[i],
    })
}

/// `w_i · v_i` for each leg; all zero iff the configuration is assembled.
pub fn constraint_residuals(j: &JointTriplet, r: &RotationMatrix) -> [f64; 3] {
    let v = platform_axes_base(r);
    let w = intermediate_axes(j);
    [w[0].dot(&v[0]), w[1].dot(&v[1]), w[2].dot(&v[2])]
}

pub fn max_residual(j: &JointTriplet, r: &RotationMatrix) -> f64 {
    constraint_residuals(j, r)
        .iter()
        .fold(0.0_f64, |m, x| m.max(x.abs()))
}

/// Whether leg `leg` (zero-based) has coincident base and platform axes at `r`.
pub fn leg_is_singular(leg: usize, r: &RotationMatrix) -> bool {
    let u = base_axes()[leg];
    let v = platform_axes_base(r)[leg];
    u.dot(&v).abs() > 1.0 - LEG_SINGULAR_TOL
}
