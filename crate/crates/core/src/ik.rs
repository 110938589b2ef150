//! Inverse kinematics: the eight working modes of a platform orientation.
//!
//! Leg `i` is assembled when `w_i · v_i = 0`. Because each `w_i` lies in the
//! plane orthogonal to `u_i`, that constraint fixes `theta_i` up to a half
//! turn, and both solutions put `w_i` on the same line with opposite sense.

use std::f64::consts::PI;

use crate::mechanism::JointTriplet;
use crate::so3::{normalize_angle, RotationMatrix};

/// Both `|numerator|` and `|denominator|` below this make a leg arbitrary.
pub const LEG_DEGENERACY_TOL: f64 = 1e-9;

/// Joint value used for arbitrary legs when filling is requested.
pub const ARBITRARY_FILL_ANGLE: f64 = 0.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LegIkOutcome {
    /// `second` is `first + pi`, normalized.
    TwoSolutions { first: f64, second: f64 },
    /// Leg fully extended or folded: any joint value assembles it.
    Arbitrary,
}

impl LegIkOutcome {
    pub fn is_arbitrary(&self) -> bool {
        matches!(self, LegIkOutcome::Arbitrary)
    }
}

/// How `solve_ik_with` treats legs whose angle is arbitrary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ArbitraryLegs {
    /// Emit no joint triplets when any leg is arbitrary.
    #[default]
    Skip,
    /// Substitute [`ARBITRARY_FILL_ANGLE`] for an arbitrary leg.
    Fill,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IkSolutionSet {
    pub legs: [LegIkOutcome; 3],
    /// Cartesian product of the per-leg solutions, leg 1 varying slowest.
    pub solutions: Vec<JointTriplet>,
}

impl IkSolutionSet {
    pub fn arbitrary_legs(&self) -> usize {
        self.legs.iter().filter(|l| l.is_arbitrary()).count()
    }
}

/// `(numerator, denominator)` of `tan(theta_i)` read off the rotation matrix.
fn tangent_terms(leg: usize, r: &RotationMatrix) -> (f64, f64) {
    match leg {
        // cos(theta) sin(psi), cos(phi) cos(psi) + sin(phi) sin(theta) sin(psi)
        0 => (r.entry(2, 1), r.entry(1, 1)),
        // sin(phi) sin(psi) + cos(phi) sin(theta) cos(psi), cos(theta) cos(psi)
        1 => (r.entry(0, 2), r.entry(2, 2)),
        // sin(phi) cos(theta), cos(phi) cos(theta)
        2 => (r.entry(1, 0), r.entry(0, 0)),
        _ => panic!("leg index {leg} out of range"),
    }
}

/// IK of one leg; `leg` is zero-based.
pub fn leg_ik(leg: usize, r: &RotationMatrix) -> LegIkOutcome {
    let (num, den) = tangent_terms(leg, r);
    if num.abs().max(den.abs()) < LEG_DEGENERACY_TOL {
        return LegIkOutcome::Arbitrary;
    }
    let first = num.atan2(den);
    LegIkOutcome::TwoSolutions {
        first,
        second: normalize_angle(first + PI),
    }
}

pub fn solve_ik(r: &RotationMatrix) -> IkSolutionSet {
    solve_ik_with(r, ArbitraryLegs::Skip)
}

pub fn solve_ik_with(r: &RotationMatrix, arbitrary: ArbitraryLegs) -> IkSolutionSet {
    let legs = [leg_ik(0, r), leg_ik(1, r), leg_ik(2, r)];
    let choices: Vec<Vec<f64>> = legs
        .iter()
        .map(|l| match (l, arbitrary) {
            (LegIkOutcome::TwoSolutions { first, second }, _) => vec![*first, *second],
            (LegIkOutcome::Arbitrary, ArbitraryLegs::Fill) => vec![ARBITRARY_FILL_ANGLE],
            (LegIkOutcome::Arbitrary, ArbitraryLegs::Skip) => Vec::new(),
        })
        .collect();
    let mut solutions = Vec::with_capacity(8);
    for &a in &choices[0] {
        for &b in &choices[1] {
            for &c in &choices[2] {
                solutions.push(JointTriplet::new(a, b, c));
            }
        }
    }
    IkSolutionSet { legs, solutions }
}
