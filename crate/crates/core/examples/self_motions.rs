//! The six self-motion families, their IK joints and membership tests. The
//! singular leg of each family is filled with angle 0.

use agile_eye::dk::SelfMotionFamily;
use agile_eye::ik::{solve_ik_with, ArbitraryLegs};
use agile_eye::{classify_joint_degeneracy, constraint_residuals};

fn main() {
    for f in SelfMotionFamily::ALL {
        let r = f.rotation(0.7);
        let ik = solve_ik_with(&r, ArbitraryLegs::Fill);
        let j = ik.solutions[0];
        let res = constraint_residuals(&j, &r);
        let max = res.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        let (t, d) = f.nearest_parameter(&r);
        println!(
            "{}  {:<32} joints tag {:<14} residual {max:.1e}  recovered param {t:+.6} (dist {d:.1e})",
            f.label(),
            f.description(),
            classify_joint_degeneracy(&j).tag()
        );
    }
}
