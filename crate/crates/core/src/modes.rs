//! Working modes, assembly modes and singularity-free path tracking.
//!
//! A working mode is the sign pattern of the `B` diagonal. For fixed joints
//! the four nontrivial assembly modes realize four distinct working modes,
//! all with the same sign product, which equals `sign(det A)`. Relative to
//! mode 1 with signature `(s1, s2, s3)` the others are `(-s1, -s2, s3)`,
//! `(s1, -s2, -s3)` and `(-s1, s2, -s3)`.

use std::fmt;

use crate::dk::{q_terms, solve_dk_with, DkResult};
use crate::error::{CrossingReason, Error, Result};
use crate::mechanism::JointTriplet;
use crate::singularity::jacobians;
use crate::so3::{angle_diff, rotation_distance, EulerZyx, RotationMatrix};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(x: f64) -> Sign {
        if x < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Signs of `(B11, B22, B33)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WorkingModeSignature(pub [Sign; 3]);

impl WorkingModeSignature {
    pub fn from_b_diag(b: &[f64; 3], tol: f64) -> Result<Self> {
        if let Some(leg) = b.iter().position(|x| x.is_nan() || x.abs() <= tol) {
            return Err(Error::SingularNoSignature { leg: leg + 1 });
        }
        Ok(WorkingModeSignature(b.map(Sign::of)))
    }

    /// Parses strings like `"+-+"`.
    pub fn parse(s: &str) -> Option<Self> {
        let signs: Vec<Sign> = s
            .chars()
            .map(|c| match c {
                '+' => Some(Sign::Plus),
                '-' => Some(Sign::Minus),
                _ => None,
            })
            .collect::<Option<_>>()?;
        let arr: [Sign; 3] = signs.try_into().ok()?;
        Some(WorkingModeSignature(arr))
    }

    pub fn product(&self) -> Sign {
        let neg = self.0.iter().filter(|s| **s == Sign::Minus).count();
        if neg % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_uniform(&self) -> bool {
        self.0[0] == self.0[1] && self.0[1] == self.0[2]
    }

    /// Flips the signs at the given zero-based positions.
    pub fn flipped(&self, positions: &[usize]) -> Self {
        let mut s = self.0;
        for &i in positions {
            s[i] = s[i].flip();
        }
        WorkingModeSignature(s)
    }

    /// Signatures of assembly modes 1..=4 when mode 1 has signature `self`.
    pub fn mode_pattern(&self) -> [WorkingModeSignature; 4] {
        [*self, self.flipped(&[0, 1]), self.flipped(&[1, 2]), self.flipped(&[0, 2])]
    }
}

impl fmt::Display for WorkingModeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.0 {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

/// One-based index of a nontrivial direct-kinematics solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AssemblyModeId(u8);

impl AssemblyModeId {
    pub fn new(id: u8) -> Result<Self> {
        if (1..=4).contains(&id) {
            Ok(AssemblyModeId(id))
        } else {
            Err(Error::UnknownAssemblyMode(id))
        }
    }

    pub fn from_index(index: usize) -> Self {
        assert!(index < 4, "assembly mode index {index} out of range");
        AssemblyModeId(index as u8 + 1)
    }

    pub fn get(&self) -> u8 {
        self.0
    }

    pub fn index(&self) -> usize {
        self.0 as usize - 1
    }
}

pub fn working_mode_signature(j: &JointTriplet, r: &RotationMatrix) -> Result<WorkingModeSignature> {
    working_mode_signature_with(j, r, &Tolerances::default())
}

pub fn working_mode_signature_with(
    j: &JointTriplet,
    r: &RotationMatrix,
    tol: &Tolerances,
) -> Result<WorkingModeSignature> {
    WorkingModeSignature::from_b_diag(&jacobians(j, r).b_diag, tol.structure)
}

fn finite_or_degenerate(dk: &DkResult) -> Result<&[EulerZyx; 4]> {
    dk.finite().ok_or(Error::Degenerate)
}

/// The nontrivial solution of `j` operating in working mode `sig`.
pub fn assembly_mode_for(j: &JointTriplet, sig: &WorkingModeSignature) -> Result<EulerZyx> {
    let tol = Tolerances::default();
    let dk = solve_dk_with(j, &tol);
    for e in finite_or_degenerate(&dk)? {
        if working_mode_signature_with(j, &e.to_rotation(), &tol)? == *sig {
            return Ok(*e);
        }
    }
    Err(Error::NoSuchMode)
}

pub fn assembly_mode_id(j: &JointTriplet, r: &RotationMatrix) -> Result<AssemblyModeId> {
    assembly_mode_id_with(j, r, &Tolerances::default())
}

pub fn assembly_mode_id_with(
    j: &JointTriplet,
    r: &RotationMatrix,
    tol: &Tolerances,
) -> Result<AssemblyModeId> {
    let dk = solve_dk_with(j, tol);
    let sols = finite_or_degenerate(&dk)?;
    let (idx, d) = nearest(sols, r).0;
    if d <= tol.residual {
        Ok(AssemblyModeId::from_index(idx))
    } else {
        Err(Error::NoMatch)
    }
}

/// Nearest and second-nearest solution `(index, distance)` to `r`.
fn nearest(sols: &[EulerZyx; 4], r: &RotationMatrix) -> ((usize, f64), (usize, f64)) {
    let mut d: Vec<(usize, f64)> = sols
        .iter()
        .enumerate()
        .map(|(i, e)| (i, rotation_distance(&e.to_rotation(), r)))
        .collect();
    d.sort_by(|a, b| a.1.total_cmp(&b.1));
    (d[0], d[1])
}

/// Largest joint change per coarse tracking step.
pub const MAX_STEP: f64 = 0.2;
/// Joint step used when `det A` may vanish inside a coarse step.
pub const FINE_STEP: f64 = 0.05;
/// Smallest joint step tried before a continuation is declared ambiguous.
pub const MIN_STEP: f64 = 1e-6;
/// Bound on `|∂q2/∂θ_i|` summed over the three joints.
const Q2_LIPSCHITZ: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrackStep {
    pub joints: JointTriplet,
    pub solution: EulerZyx,
    pub orientation: RotationMatrix,
    pub mode: AssemblyModeId,
    pub signature: WorkingModeSignature,
}

pub fn track_path(path: &[JointTriplet], start: &RotationMatrix) -> Result<Vec<TrackStep>> {
    track_path_with(path, start, &Tolerances::default())
}

/// Follows one assembly mode along a joint path by nearest-solution
/// continuation, returning one step per input path point.
///
/// Segments are interpolated along the shortest wrapped joint difference and
/// subdivided so no joint moves more than [`MAX_STEP`], or [`FINE_STEP`] where
/// `det A` is close enough to zero to change sign within a step. A step whose
/// nearest solution is not clearly separated from the second nearest is
/// halved, down to [`MIN_STEP`].
pub fn track_path_with(
    path: &[JointTriplet],
    start: &RotationMatrix,
    tol: &Tolerances,
) -> Result<Vec<TrackStep>> {
    let first = path.first().ok_or(Error::EmptyPath)?;
    let dk = solve_dk_with(first, tol);
    let sols = dk.finite().ok_or(Error::StartNotASolution)?;
    let ((idx, d), _) = nearest(sols, start);
    if d > tol.residual {
        return Err(Error::StartNotASolution);
    }
    let make_step = |j: JointTriplet, e: EulerZyx, idx: usize| -> Result<TrackStep> {
        let orientation = e.to_rotation();
        Ok(TrackStep {
            joints: j,
            solution: e,
            orientation,
            mode: AssemblyModeId::from_index(idx),
            signature: working_mode_signature_with(&j, &orientation, tol)?,
        })
    };

    let mut current = sols[idx];
    let mut current_idx = idx;
    let det_sign = |j: &JointTriplet| q_terms(j).1 > 0.0;
    let start_sign = det_sign(first);
    let mut steps = vec![make_step(*first, current, idx)?];

    for (k, pair) in path.windows(2).enumerate() {
        let step_index = k + 1;
        let crossing = |reason| Error::SingularityCrossing { step: step_index, reason };
        let (a, b) = (pair[0].angles(), pair[1].angles());
        let delta = [0, 1, 2].map(|i| angle_diff(a[i], b[i]));
        let at = |t: f64| JointTriplet::new(a[0] + t * delta[0], a[1] + t * delta[1], a[2] + t * delta[2]);
        let span = delta.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        let coarse = (span / MAX_STEP).ceil().max(1.0) as usize;
        let coarse_len = span / coarse as f64;

        for c in 0..coarse {
            let (t0, t1) = (c as f64 / coarse as f64, (c + 1) as f64 / coarse as f64);
            let q_lo = q_terms(&at(t0)).1.abs().min(q_terms(&at(t1)).1.abs());
            let fine = if q_lo <= Q2_LIPSCHITZ * coarse_len {
                (coarse_len / FINE_STEP).ceil().max(1.0) as usize
            } else {
                1
            };
            let mut h = (t1 - t0) / fine as f64;
            let mut t = t0;
            while t < t1 {
                let tn = if t1 - t <= h { t1 } else { t + h };
                let j = at(tn);
                let q2 = q_terms(&j).1;
                if q2.abs() <= tol.singular || det_sign(&j) != start_sign {
                    return Err(crossing(CrossingReason::DetSignChange));
                }
                let dk = solve_dk_with(&j, tol);
                let sols = dk
                    .finite()
                    .ok_or_else(|| crossing(CrossingReason::DegenerateJoints))?;
                let ((best, d0), (_, d1)) = nearest(sols, &current.to_rotation());
                if d1 < 2.0 * d0 {
                    if h * span <= MIN_STEP {
                        return Err(crossing(CrossingReason::Ambiguous));
                    }
                    h /= 2.0;
                    continue;
                }
                current = sols[best];
                current_idx = best;
                t = tn;
            }
        }
        steps.push(make_step(pair[1], current, current_idx)?);
    }
    Ok(steps)
}

/// Whether every step shares the first step's assembly mode and signature.
pub fn mode_is_constant(steps: &[TrackStep]) -> bool {
    steps.first().is_none_or(|s0| {
        steps
            .iter()
            .all(|s| s.mode == s0.mode && s.signature == s0.signature)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dk::{solve_dk, trivial_orientations};
    use crate::so3::euler_to_rotation;

    fn reference_joints() -> JointTriplet {
        JointTriplet::new(-0.3, -0.7, 0.1)
    }

    fn sig(s: &str) -> WorkingModeSignature {
        WorkingModeSignature::parse(s).unwrap()
    }

    #[test]
    fn reference_signature() {
        let s = working_mode_signature(&JointTriplet::new(0.0, 0.0, 0.0), &RotationMatrix::identity())
            .unwrap();
        assert_eq!(s, sig("+++"));
    }

    #[test]
    fn second_solution_flips_first_two_signs() {
        let sols = solve_dk(&reference_joints()).finite_rotations().unwrap();
        let a = working_mode_signature(&reference_joints(), &sols[0]).unwrap();
        let b = working_mode_signature(&reference_joints(), &sols[1]).unwrap();
        assert_eq!(b, a.flipped(&[0, 1]));
    }

    #[test]
    fn trivial_orientation_has_no_signature() {
        let r = trivial_orientations()[0];
        assert!(matches!(
            working_mode_signature(&JointTriplet::new(0.0, 0.0, 0.0), &r),
            Err(Error::SingularNoSignature { .. })
        ));
    }

    #[test]
    fn mode_lookup_by_signature() {
        let sols = solve_dk(&reference_joints()).finite_rotations().unwrap();
        let third = working_mode_signature(&reference_joints(), &sols[2]).unwrap();
        let e = assembly_mode_for(&reference_joints(), &third).unwrap();
        assert!(e.max_angle_error(&EulerZyx::new(0.100, 2.470, 0.383)) < 1e-3);

        let zero = JointTriplet::new(0.0, 0.0, 0.0);
        let e = assembly_mode_for(&zero, &sig("+++")).unwrap();
        assert!(e.max_angle_error(&EulerZyx::new(0.0, 0.0, 0.0)) < 1e-15);

        // q2 > 0 here, so odd-product signatures belong to the other group.
        assert_eq!(assembly_mode_for(&reference_joints(), &sig("---")), Err(Error::NoSuchMode));
        assert_eq!(assembly_mode_for(&reference_joints(), &sig("+-+")), Err(Error::NoSuchMode));

        let degenerate = JointTriplet::new(0.5, 0.0, std::f64::consts::FRAC_PI_2);
        assert_eq!(assembly_mode_for(&degenerate, &sig("+++")), Err(Error::Degenerate));
    }

    #[test]
    fn mode_ids() {
        let r = euler_to_rotation(&EulerZyx::new(0.100, -0.672, -0.383));
        let tol = Tolerances { residual: 1e-3, ..Tolerances::default() };
        assert_eq!(assembly_mode_id_with(&reference_joints(), &r, &tol).unwrap().get(), 1);
        let r = euler_to_rotation(&EulerZyx::new(0.100, 2.470, 3.525));
        assert_eq!(assembly_mode_id_with(&reference_joints(), &r, &tol).unwrap().get(), 4);
        assert_eq!(
            assembly_mode_id(&JointTriplet::new(0.0, 0.0, 0.0), &trivial_orientations()[0]),
            Err(Error::NoMatch)
        );
    }

    #[test]
    fn constant_path_is_constant() {
        let start = solve_dk(&reference_joints()).finite_rotations().unwrap()[0];
        let steps = track_path(&[reference_joints(); 5], &start).unwrap();
        assert_eq!(steps.len(), 5);
        for s in &steps {
            assert_eq!(rotation_distance(&s.orientation, &start), 0.0);
        }
        assert!(mode_is_constant(&steps));
    }

    #[test]
    fn start_must_be_a_solution() {
        let r = euler_to_rotation(&EulerZyx::new(1.0, 0.2, 0.3));
        assert_eq!(track_path(&[reference_joints()], &r), Err(Error::StartNotASolution));
        assert_eq!(track_path(&[], &r), Err(Error::EmptyPath));
    }

    #[test]
    fn straight_path_through_q2_zero_is_reported() {
        // q2(0, 0, t) = cos t vanishes at t = pi/2.
        let a = JointTriplet::new(0.0, 0.0, 1.2);
        let b = JointTriplet::new(0.0, 0.0, 2.0);
        let start = solve_dk(&a).finite_rotations().unwrap()[0];
        match track_path(&[a, a, b], &start) {
            Err(Error::SingularityCrossing { step, reason }) => {
                assert_eq!(step, 2);
                assert_eq!(reason, CrossingReason::DetSignChange);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn loop_closes() {
        let a = reference_joints();
        let path = [
            a,
            JointTriplet::new(0.4, -0.7, 0.1),
            JointTriplet::new(0.4, 0.2, 0.5),
            JointTriplet::new(-0.3, 0.2, 0.3),
            a,
        ];
        assert!(path.iter().all(|j| q_terms(j).1 > 0.3));
        for start in solve_dk(&a).finite_rotations().unwrap() {
            let steps = track_path(&path, &start).unwrap();
            assert!(mode_is_constant(&steps));
            assert!(rotation_distance(&steps.last().unwrap().orientation, &start) < 1e-8);
        }
    }
}
