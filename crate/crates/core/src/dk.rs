//! Direct kinematics: platform orientations that assemble with given joints.
//!
//! Four trivial orientations assemble with every joint triplet. Away from the
//! degenerate joint sets there are four further, nontrivial orientations,
//! obtained in closed form by fixing `phi = theta3` and solving the two
//! remaining constraints for `theta` and `psi`. They are related pairwise by
//! half turns about the platform joint axes:
//!
//! | mode | phi | theta      | psi         |
//! |------|-----|------------|-------------|
//! | 1    | phi | theta      | psi         |
//! | 2    | phi | theta      | psi + pi    |
//! | 3    | phi | theta + pi | -psi        |
//! | 4    | phi | theta + pi | -psi + pi   |
//!
//! Mode 1 is the solution whose three `B_ii` share one sign. That label is
//! continuous inside each region of constant `sign(det A)`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{Error, Result};
use crate::mechanism::JointTriplet;
use crate::so3::{normalize_angle, rotation_distance, EulerZyx, RotationMatrix};
use crate::tolerance::Tolerances;

/// The four orientations that assemble for any joint values.
pub fn trivial_orientations() -> [RotationMatrix; 4] {
    let m = |rows: [[f64; 3]; 3]| RotationMatrix::from_rows(rows).expect("exact rotation");
    [
        m([[0.0, -1.0, 0.0], [0.0, 0.0, 1.0], [-1.0, 0.0, 0.0]]),
        m([[0.0, 1.0, 0.0], [0.0, 0.0, -1.0], [-1.0, 0.0, 0.0]]),
        m([[0.0, -1.0, 0.0], [0.0, 0.0, -1.0], [1.0, 0.0, 0.0]]),
        m([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]]),
    ]
}

/// One-based index of the trivial orientation within `tol` of `r`, if any.
pub fn trivial_orientation_id(r: &RotationMatrix, tol: f64) -> Option<u8> {
    trivial_orientations()
        .iter()
        .position(|t| rotation_distance(t, r) <= tol)
        .map(|i| i as u8 + 1)
}

/// Joint conditions under which the nontrivial solutions collapse onto a
/// self-motion. Pair `k` leaves leg `k` singular with its joint free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConditionPair {
    /// `sin theta2 = 0` and `cos theta3 = 0`.
    First,
    /// `sin theta3 = 0` and `cos theta1 = 0`.
    Second,
    /// `sin theta1 = 0` and `cos theta2 = 0`.
    Third,
}

impl ConditionPair {
    pub const ALL: [ConditionPair; 3] =
        [ConditionPair::First, ConditionPair::Second, ConditionPair::Third];

    pub fn index(&self) -> u8 {
        match self {
            ConditionPair::First => 1,
            ConditionPair::Second => 2,
            ConditionPair::Third => 3,
        }
    }

    /// Zero-based leg that is singular along the pair's self-motions.
    pub fn singular_leg(&self) -> usize {
        self.index() as usize - 1
    }

    pub fn families(&self) -> [SelfMotionFamily; 2] {
        match self {
            ConditionPair::First => [SelfMotionFamily::Sm1a, SelfMotionFamily::Sm1b],
            ConditionPair::Second => [SelfMotionFamily::Sm2a, SelfMotionFamily::Sm2b],
            ConditionPair::Third => [SelfMotionFamily::Sm3a, SelfMotionFamily::Sm3b],
        }
    }

    fn holds(&self, j: &JointTriplet, tol: f64) -> bool {
        let small = |x: f64| x.abs() < tol;
        let [t1, t2, t3] = j.angles();
        match self {
            ConditionPair::First => small(t2.sin()) && small(t3.cos()),
            ConditionPair::Second => small(t3.sin()) && small(t1.cos()),
            ConditionPair::Third => small(t1.sin()) && small(t2.cos()),
        }
    }
}

/// The self-motion condition pair satisfied by `j`, if any. Pairs are
/// mutually exclusive.
pub fn condition_pair(j: &JointTriplet, tol: f64) -> Option<ConditionPair> {
    ConditionPair::ALL.into_iter().find(|p| p.holds(j, tol))
}

/// One-parameter families of orientations along which the platform moves
/// with locked actuators. Variant `a` has platform axis `v_k = +u_k` for the
/// singular leg `k`, variant `b` has `v_k = -u_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SelfMotionFamily {
    Sm1a,
    Sm1b,
    Sm2a,
    Sm2b,
    Sm3a,
    Sm3b,
}

impl SelfMotionFamily {
    pub const ALL: [SelfMotionFamily; 6] = [
        SelfMotionFamily::Sm1a,
        SelfMotionFamily::Sm1b,
        SelfMotionFamily::Sm2a,
        SelfMotionFamily::Sm2b,
        SelfMotionFamily::Sm3a,
        SelfMotionFamily::Sm3b,
    ];

    pub fn from_id(id: u8) -> Result<Self> {
        match id {
            1..=6 => Ok(Self::ALL[id as usize - 1]),
            _ => Err(Error::UnknownFamily(id)),
        }
    }

    /// One-based id in the order 1a, 1b, 2a, 2b, 3a, 3b.
    pub fn id(&self) -> u8 {
        Self::ALL.iter().position(|f| f == self).unwrap() as u8 + 1
    }

    pub fn label(&self) -> &'static str {
        match self {
            SelfMotionFamily::Sm1a => "SM1a",
            SelfMotionFamily::Sm1b => "SM1b",
            SelfMotionFamily::Sm2a => "SM2a",
            SelfMotionFamily::Sm2b => "SM2b",
            SelfMotionFamily::Sm3a => "SM3a",
            SelfMotionFamily::Sm3b => "SM3b",
        }
    }

    pub fn pair(&self) -> ConditionPair {
        match self {
            SelfMotionFamily::Sm1a | SelfMotionFamily::Sm1b => ConditionPair::First,
            SelfMotionFamily::Sm2a | SelfMotionFamily::Sm2b => ConditionPair::Second,
            SelfMotionFamily::Sm3a | SelfMotionFamily::Sm3b => ConditionPair::Third,
        }
    }

    /// Whether the singular leg is fully extended (`b` variants).
    pub fn is_extended(&self) -> bool {
        matches!(
            self,
            SelfMotionFamily::Sm1b | SelfMotionFamily::Sm2b | SelfMotionFamily::Sm3b
        )
    }

    /// Euler-angle constraints that define the family.
    pub fn description(&self) -> &'static str {
        match self {
            SelfMotionFamily::Sm1a => "phi = pi/2, psi = 0, theta free",
            SelfMotionFamily::Sm1b => "phi = pi/2, psi = pi, theta free",
            SelfMotionFamily::Sm2a => "phi = 0, psi = pi/2, theta free",
            SelfMotionFamily::Sm2b => "phi = 0, psi = -pi/2, theta free",
            SelfMotionFamily::Sm3a => "theta = pi/2, phi - psi free",
            SelfMotionFamily::Sm3b => "theta = -pi/2, phi + psi free",
        }
    }

    pub fn rotation(&self, param: f64) -> RotationMatrix {
        let (s, c) = param.sin_cos();
        let rows = match self {
            SelfMotionFamily::Sm1a => [[0.0, -1.0, 0.0], [c, 0.0, s], [-s, 0.0, c]],
            SelfMotionFamily::Sm1b => [[0.0, 1.0, 0.0], [c, 0.0, -s], [-s, 0.0, -c]],
            SelfMotionFamily::Sm2a => [[c, s, 0.0], [0.0, 0.0, -1.0], [-s, c, 0.0]],
            SelfMotionFamily::Sm2b => [[c, -s, 0.0], [0.0, 0.0, 1.0], [-s, -c, 0.0]],
            SelfMotionFamily::Sm3a => [[0.0, -s, c], [0.0, c, s], [-1.0, 0.0, 0.0]],
            SelfMotionFamily::Sm3b => [[0.0, -s, -c], [0.0, c, -s], [1.0, 0.0, 0.0]],
        };
        RotationMatrix::from_matrix_unchecked(nalgebra::Matrix3::from_fn(|i, j| rows[i][j]))
    }

    /// Parameter of the family member closest to `r` and its rotation
    /// distance: a coarse scan followed by golden-section refinement.
    pub fn nearest_parameter(&self, r: &RotationMatrix) -> (f64, f64) {
        const SAMPLES: usize = 72;
        let dist = |t: f64| rotation_distance(&self.rotation(t), r);
        let step = TAU / SAMPLES as f64;
        let (best_t, _) = (0..SAMPLES)
            .map(|k| {
                let t = -PI + step * (k as f64 + 1.0);
                (t, dist(t))
            })
            .fold((0.0, f64::INFINITY), |acc, x| if x.1 < acc.1 { x } else { acc });

        let ratio = (5f64.sqrt() - 1.0) / 2.0;
        let (mut a, mut b) = (best_t - step, best_t + step);
        let mut c = b - ratio * (b - a);
        let mut d = a + ratio * (b - a);
        let (mut fc, mut fd) = (dist(c), dist(d));
        for _ in 0..200 {
            if b - a < 1e-14 {
                break;
            }
            if fc < fd {
                b = d;
                d = c;
                fd = fc;
                c = b - ratio * (b - a);
                fc = dist(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + ratio * (b - a);
                fd = dist(d);
            }
        }
        let t = 0.5 * (a + b);
        (normalize_angle(t), dist(t))
    }
}

/// Rotation matrix of a self-motion family (`family_id` in 1..=6) at the
/// given free angle.
pub fn self_motion_family(family_id: u8, param: f64) -> Result<RotationMatrix> {
    Ok(SelfMotionFamily::from_id(family_id)?.rotation(param))
}

/// Auxiliary quantities of the closed-form cascade.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CascadeIntermediates {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p4: f64,
    pub q1: f64,
    pub q2: f64,
}

/// `(q1, q2)`; `q2` also equals det(A) on the nontrivial solutions.
pub fn q_terms(j: &JointTriplet) -> (f64, f64) {
    let (s1, c1) = j.theta1().sin_cos();
    let (s2, c2) = j.theta2().sin_cos();
    let (s3, c3) = j.theta3().sin_cos();
    (
        s1 * c2 * c3 * s3 - c1 * s2,
        s1 * s2 * s3 + c1 * c2 * c3,
    )
}

/// Cascade terms for joints `j` and a candidate `theta` (with `phi = theta3`).
pub fn cascade(j: &JointTriplet, theta: f64) -> CascadeIntermediates {
    let (s1, c1) = j.theta1().sin_cos();
    let (s2, c2) = j.theta2().sin_cos();
    let (s3, c3) = j.theta3().sin_cos();
    let (st, ct) = theta.sin_cos();
    let (q1, q2) = q_terms(j);
    CascadeIntermediates {
        p1: s1 * c3,
        p2: s1 * st * s3 - ct * c1,
        p3: c2 * st * c3 - ct * s2,
        p4: c2 * s3,
        q1,
        q2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JointDegeneracy {
    /// Four isolated nontrivial solutions.
    Generic,
    /// The nontrivial solutions degenerate into both self-motions of `pair`.
    SelfMotion { pair: ConditionPair },
    /// `q2 = 0` without a condition pair: only the trivial solutions remain.
    TrivialOnly,
}

impl JointDegeneracy {
    /// Short tag used in machine-readable output.
    pub fn tag(&self) -> &'static str {
        match self {
            JointDegeneracy::Generic => "generic",
            JointDegeneracy::SelfMotion { pair: ConditionPair::First } => "self_motion_1",
            JointDegeneracy::SelfMotion { pair: ConditionPair::Second } => "self_motion_2",
            JointDegeneracy::SelfMotion { pair: ConditionPair::Third } => "self_motion_3",
            JointDegeneracy::TrivialOnly => "trivial_only",
        }
    }
}

pub fn classify_joint_degeneracy(j: &JointTriplet) -> JointDegeneracy {
    classify_joint_degeneracy_with(j, &Tolerances::default())
}

pub fn classify_joint_degeneracy_with(j: &JointTriplet, tol: &Tolerances) -> JointDegeneracy {
    if let Some(pair) = condition_pair(j, tol.structure) {
        return JointDegeneracy::SelfMotion { pair };
    }
    let (_, q2) = q_terms(j);
    if q2.abs() < tol.structure {
        JointDegeneracy::TrivialOnly
    } else {
        JointDegeneracy::Generic
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DkBranch {
    /// The four nontrivial solutions in mode order 1..=4.
    Finite([EulerZyx; 4]),
    SelfMotion {
        pair: ConditionPair,
        families: [SelfMotionFamily; 2],
    },
    TrivialOnly,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DkResult {
    pub trivial: [RotationMatrix; 4],
    pub branch: DkBranch,
}

impl DkResult {
    pub fn finite(&self) -> Option<&[EulerZyx; 4]> {
        match &self.branch {
            DkBranch::Finite(s) => Some(s),
            _ => None,
        }
    }

    pub fn finite_rotations(&self) -> Option<[RotationMatrix; 4]> {
        self.finite().map(|s| s.map(|e| e.to_rotation()))
    }
}

/// The four mode-ordered triplets generated from `(phi, theta, psi)`.
pub fn table_solutions(base: &EulerZyx) -> [EulerZyx; 4] {
    let (phi, theta, psi) = (base.phi(), base.theta(), base.psi());
    [
        EulerZyx::new(phi, theta, psi),
        EulerZyx::new(phi, theta, psi + PI),
        EulerZyx::new(phi, theta + PI, -psi),
        EulerZyx::new(phi, theta + PI, -psi + PI),
    ]
}

/// One nontrivial solution straight from the cascade, before mode ordering.
fn cascade_solution(j: &JointTriplet) -> EulerZyx {
    let (q1, q2) = q_terms(j);
    let theta = (-q1).atan2(q2);
    let c = cascade(j, theta);
    let psi = if c.p1.abs().max(c.p2.abs()) >= c.p3.abs().max(c.p4.abs()) {
        (-c.p1).atan2(c.p2)
    } else {
        (-c.p3).atan2(c.p4)
    };
    EulerZyx::new(j.theta3(), theta, psi)
}

fn uniform_signature(j: &JointTriplet, e: &EulerZyx) -> bool {
    let b = crate::singularity::jacobians(j, &e.to_rotation()).b_diag;
    (b[0] > 0.0) == (b[1] > 0.0) && (b[1] > 0.0) == (b[2] > 0.0)
}

pub fn solve_dk(j: &JointTriplet) -> DkResult {
    solve_dk_with(j, &Tolerances::default())
}

pub fn solve_dk_with(j: &JointTriplet, tol: &Tolerances) -> DkResult {
    let branch = match classify_joint_degeneracy_with(j, tol) {
        JointDegeneracy::SelfMotion { pair } => DkBranch::SelfMotion {
            pair,
            families: pair.families(),
        },
        JointDegeneracy::TrivialOnly => DkBranch::TrivialOnly,
        JointDegeneracy::Generic => {
            let candidates = table_solutions(&cascade_solution(j));
            let first = candidates
                .iter()
                .find(|e| uniform_signature(j, e))
                .copied()
                .unwrap_or(candidates[0]);
            DkBranch::Finite(table_solutions(&first))
        }
    };
    DkResult {
        trivial: trivial_orientations(),
        branch,
    }
}

/// Euler angles of the trivial orientations parameterize as `theta = ±pi/2`.
pub fn trivial_orientation_euler() -> [EulerZyx; 4] {
    [
        EulerZyx::new(FRAC_PI_2, FRAC_PI_2, 0.0),
        EulerZyx::new(-FRAC_PI_2, FRAC_PI_2, 0.0),
        EulerZyx::new(FRAC_PI_2, -FRAC_PI_2, 0.0),
        EulerZyx::new(-FRAC_PI_2, -FRAC_PI_2, 0.0),
    ]
}
