//! Working-mode signatures and the matching assembly modes.

use agile_eye::{
    assembly_mode_for, assembly_mode_id, solve_dk, working_mode_signature, JointTriplet,
    WorkingModeSignature,
};

fn main() {
    let j = JointTriplet::new(-0.3, -0.7, 0.1);
    let sols = *solve_dk(&j).finite().expect("generic joints");
    for e in &sols {
        let r = e.to_rotation();
        let sig = working_mode_signature(&j, &r).unwrap();
        let id = assembly_mode_id(&j, &r).unwrap();
        println!("mode {}  signature {sig}  product {:?}", id.get(), sig.product());
    }
    for s in ["+++", "---"] {
        let sig = WorkingModeSignature::parse(s).unwrap();
        match assembly_mode_for(&j, &sig) {
            Ok(e) => println!("{s} -> ({:+.4}, {:+.4}, {:+.4})", e.phi(), e.theta(), e.psi()),
            Err(err) => println!("{s} -> {err}"),
        }
    }
}
