//! Numeric tolerances shared by the geometric routines.

/// Two values closer than this are treated as equal.
pub const EQ_TOL: f64 = 1e-9;
/// Minimum magnitude accepted for a sign decision.
pub const MARGIN: f64 = 1e-6;
/// Double points closer than this in the plane are a degenerate projection.
pub const COINCIDENCE: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub eq: f64,
    pub margin: f64,
    pub coincidence: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eq: EQ_TOL,
            margin: MARGIN,
            coincidence: COINCIDENCE,
        }
    }
}

impl Tolerances {
    pub fn with_margin(margin: f64) -> Self {
        Tolerances {
            margin,
            ..Tolerances::default()
        }
    }
}
