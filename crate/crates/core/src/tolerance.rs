/// Thresholds shared by the degeneracy, singularity and tracking logic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Max constraint residual for a configuration to count as assembled.
    pub residual: f64,
    /// `|det A|` at or below this is treated as parallel-singular.
    pub singular: f64,
    /// Absolute threshold on the sines/cosines that define exact structure
    /// (condition pairs, `q2 = 0`, zero B entries).
    pub structure: f64,
    /// Rotation distance under which an orientation is on a curve or equal
    /// to a trivial orientation.
    pub membership: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            residual: 1e-6,
            singular: 1e-7,
            structure: 1e-9,
            membership: 1e-7,
        }
    }
}
