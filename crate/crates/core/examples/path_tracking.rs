//! Following one assembly mode along a joint-space loop, and detecting a
//! path that crosses det A = 0.

use agile_eye::modes::mode_is_constant;
use agile_eye::{rotation_distance, solve_dk, track_path, JointTriplet};

fn main() {
    let center = [-0.3, -0.7, 0.1];
    let loop_path: Vec<JointTriplet> = (0..=40)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / 40.0;
            JointTriplet::new(center[0] + 0.2 * t.cos(), center[1] + 0.2 * t.sin(), center[2])
        })
        .collect();
    let start = solve_dk(&loop_path[0]).finite_rotations().unwrap()[2];
    let steps = track_path(&loop_path, &start).expect("loop stays in one domain");
    let end = steps.last().unwrap();
    println!(
        "loop: {} steps, mode {}, constant {}, closure {:.2e}",
        steps.len(),
        end.mode.get(),
        mode_is_constant(&steps),
        rotation_distance(&start, &end.orientation)
    );

    let crossing = [JointTriplet::new(-0.3, -0.7, 0.1), JointTriplet::new(1.5, -0.7, 0.1)];
    let start = solve_dk(&crossing[0]).finite_rotations().unwrap()[0];
    match track_path(&crossing, &start) {
        Ok(_) => println!("unexpected: no crossing"),
        Err(e) => println!("crossing path: {e}"),
    }
}
