//! All eight inverse-kinematic solutions of one orientation, with their
//! working-mode signatures.

use agile_eye::{solve_ik, working_mode_signature, EulerZyx, LegIkOutcome, RotationMatrix};

fn main() {
    let r = EulerZyx::new(0.100, -0.672, -0.383).to_rotation();
    let set = solve_ik(&r);
    for (i, leg) in set.legs.iter().enumerate() {
        match leg {
            LegIkOutcome::TwoSolutions { first, second } => {
                println!("leg {}: {first:+.6} or {second:+.6}", i + 1)
            }
            LegIkOutcome::Arbitrary => println!("leg {}: arbitrary", i + 1),
        }
    }
    for j in &set.solutions {
        let sig = working_mode_signature(j, &r).expect("regular configuration");
        let [a, b, c] = j.angles();
        println!("({a:+.4}, {b:+.4}, {c:+.4})  {sig}");
    }

    // At a trivial orientation every leg is singular.
    let to1 = RotationMatrix::from_rows([[0.0, -1.0, 0.0], [0.0, 0.0, 1.0], [-1.0, 0.0, 0.0]])
        .expect("proper rotation");
    println!("arbitrary legs at TO1: {}", solve_ik(&to1).arbitrary_legs());
}
