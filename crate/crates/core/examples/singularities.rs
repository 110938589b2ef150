//! Jacobians and singularity classes at regular, trivial and self-motion
//! configurations.

use agile_eye::{
    classify_configuration, jacobians, self_motion_family, trivial_orientations, JointTriplet,
    RotationMatrix,
};

fn report(label: &str, j: &JointTriplet, r: &RotationMatrix) {
    let jp = jacobians(j, r);
    let class = classify_configuration(j, r).expect("assembled");
    println!(
        "{label:<22} det A = {:+.6}  B = ({:+.4}, {:+.4}, {:+.4})  {}",
        jp.det_a(),
        jp.b_diag[0],
        jp.b_diag[1],
        jp.b_diag[2],
        class.tag()
    );
}

fn main() {
    let zero = JointTriplet::new(0.0, 0.0, 0.0);
    report("reference", &zero, &RotationMatrix::identity());
    report("lockup at TO1", &zero, &trivial_orientations()[0]);

    let q2_zero = JointTriplet::new(0.4, 0.9, -1.0812649501766962);
    report("infinitesimal at TO1", &q2_zero, &trivial_orientations()[0]);

    let sm = JointTriplet::new(0.5, 0.0, std::f64::consts::FRAC_PI_2);
    report("self-motion SM1a", &sm, &self_motion_family(1, 0.3).unwrap());
}
