//! The four nontrivial and four trivial direct-kinematic solutions.

use agile_eye::{canonicalize_euler, solve_dk, DkBranch, JointTriplet};

fn main() {
    for joints in [
        JointTriplet::new(-0.3, -0.7, 0.1),
        JointTriplet::new(0.0, 0.0, 0.0),
        JointTriplet::new(0.5, 0.0, std::f64::consts::FRAC_PI_2),
    ] {
        let [a, b, c] = joints.angles();
        println!("joints ({a:+.4}, {b:+.4}, {c:+.4})");
        let dk = solve_dk(&joints);
        match dk.branch {
            DkBranch::Finite(sols) => {
                for (i, e) in sols.iter().enumerate() {
                    let k = canonicalize_euler(e);
                    println!(
                        "  mode {}: ({:+.4}, {:+.4}, {:+.4})  canonical ({:+.4}, {:+.4}, {:+.4})",
                        i + 1,
                        e.phi(),
                        e.theta(),
                        e.psi(),
                        k.phi(),
                        k.theta(),
                        k.psi()
                    );
                }
            }
            DkBranch::SelfMotion { pair, families } => {
                println!("  self-motion, condition pair {}", pair.index());
                for f in families {
                    println!("    {}: {}", f.label(), f.description());
                }
            }
            DkBranch::TrivialOnly => println!("  only the trivial orientations"),
        }
        println!("  plus {} trivial orientations", dk.trivial.len());
    }
}
