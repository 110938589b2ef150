//! Uniform joint-space sweep: `det A` per grid cell, degeneracy tags and
//! connected components of each sign on the periodic grid.

use std::collections::VecDeque;
use std::f64::consts::PI;

use crate::dk::{classify_joint_degeneracy_with, q_terms, JointDegeneracy};
use crate::mechanism::JointTriplet;
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub joints: JointTriplet,
    /// `det A` on the nontrivial solutions.
    pub det_a: f64,
    pub degeneracy: JointDegeneracy,
    /// `None` for wall cells with `|det A| <= singular`.
    pub component_id: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSummary {
    pub grid_n: usize,
    pub cells: usize,
    pub positive_components: usize,
    pub negative_components: usize,
    pub wall_cells: usize,
    /// Cells that are walls or touch a cell of the opposite sign.
    pub singular_cells: usize,
    pub singular_cell_fraction: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    /// Row-major with `theta1` slowest and `theta3` fastest.
    pub records: Vec<SweepRecord>,
    pub summary: SweepSummary,
}

/// `-pi + 2 pi (k + 1) / n` for `k = 0..n`, ending exactly at `pi`.
pub fn grid_angles(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| -PI + 2.0 * PI * (k + 1) as f64 / n as f64)
        .collect()
}

fn neighbors(idx: usize, n: usize) -> [usize; 6] {
    let (i, j, k) = (idx / (n * n), (idx / n) % n, idx % n);
    let at = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let (ip, im) = ((i + 1) % n, (i + n - 1) % n);
    let (jp, jm) = ((j + 1) % n, (j + n - 1) % n);
    let (kp, km) = ((k + 1) % n, (k + n - 1) % n);
    [at(ip, j, k), at(im, j, k), at(i, jp, k), at(i, jm, k), at(i, j, kp), at(i, j, km)]
}

/// Labels 6-connected components of equal sign on an `n³` torus. Cells with
/// `None` are walls. Labels are assigned in scan order starting at 0; the
/// second vector gives each label's sign.
pub fn label_components(n: usize, sign: &[Option<bool>]) -> (Vec<Option<usize>>, Vec<bool>) {
    assert_eq!(sign.len(), n * n * n);
    let mut label = vec![None; sign.len()];
    let mut label_sign = Vec::new();
    let mut queue = VecDeque::new();
    for seed in 0..sign.len() {
        let Some(s) = sign[seed] else { continue };
        if label[seed].is_some() {
            continue;
        }
        let id = label_sign.len();
        label_sign.push(s);
        label[seed] = Some(id);
        queue.push_back(seed);
        while let Some(c) = queue.pop_front() {
            for nb in neighbors(c, n) {
                if label[nb].is_none() && sign[nb] == Some(s) {
                    label[nb] = Some(id);
                    queue.push_back(nb);
                }
            }
        }
    }
    (label, label_sign)
}

pub fn sweep(grid_n: usize, tol: &Tolerances) -> SweepReport {
    let n = grid_n;
    let angles = grid_angles(n);
    let mut joints = Vec::with_capacity(n * n * n);
    let mut det = Vec::with_capacity(n * n * n);
    for &t1 in &angles {
        for &t2 in &angles {
            for &t3 in &angles {
                let j = JointTriplet::from_array([t1, t2, t3]);
                det.push(q_terms(&j).1);
                joints.push(j);
            }
        }
    }
    let sign: Vec<Option<bool>> = det
        .iter()
        .map(|&d| (d.abs() > tol.singular).then_some(d > 0.0))
        .collect();
    let (labels, label_sign) = label_components(n, &sign);

    let wall_cells = sign.iter().filter(|s| s.is_none()).count();
    let singular_cells = (0..sign.len())
        .filter(|&c| match sign[c] {
            None => true,
            Some(s) => neighbors(c, n).iter().any(|&nb| sign[nb] == Some(!s)),
        })
        .count();
    let positive_components = label_sign.iter().filter(|&&s| s).count();

    let records = (0..joints.len())
        .map(|c| SweepRecord {
            joints: joints[c],
            det_a: det[c],
            degeneracy: classify_joint_degeneracy_with(&joints[c], tol),
            component_id: labels[c],
        })
        .collect();
    let cells = n * n * n;
    SweepReport {
        records,
        summary: SweepSummary {
            grid_n: n,
            cells,
            positive_components,
            negative_components: label_sign.len() - positive_components,
            wall_cells,
            singular_cells,
            singular_cell_fraction: singular_cells as f64 / cells as f64,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_ends_at_pi() {
        let g = grid_angles(8);
        assert_eq!(g.len(), 8);
        assert_eq!(g[7], PI);
        assert!((g[0] + PI - 2.0 * PI / 8.0).abs() < 1e-15);
    }

    #[test]
    fn labels_wrap_around() {
        // Two positive slabs at i = 0 and i = n-1 touch through the seam.
        let n = 4;
        let sign: Vec<Option<bool>> = (0..n * n * n)
            .map(|c| {
                let i = c / (n * n);
                match i {
                    0 | 3 => Some(true),
                    1 => None,
                    _ => Some(false),
                }
            })
            .collect();
        let (labels, signs) = label_components(n, &sign);
        assert_eq!(signs, vec![true, false]);
        assert_eq!(labels[0], Some(0));
        assert_eq!(labels[3 * n * n], Some(0));
        assert_eq!(labels[n * n], None);
        assert_eq!(labels[2 * n * n], Some(1));
    }

    #[test]
    fn coarse_sweep_has_one_component_per_sign() {
        // Counts from an independent numpy evaluation of the same grid.
        let r = sweep(32, &Tolerances::default());
        assert_eq!(r.summary.positive_components, 1);
        assert_eq!(r.summary.negative_components, 1);
        assert_eq!(r.summary.wall_cells, 1328);
        assert_eq!(r.summary.singular_cells, 4784);
        assert_eq!(r.records.len(), 32 * 32 * 32);
    }
}
