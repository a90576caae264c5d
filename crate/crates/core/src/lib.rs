//! Combinatorics and invariants of Lissajous knot projections.
//!
//! * [`curves`]: exact double points, crossing signs and phase analysis of
//!   `x = cos(nx t + phx)`, `y = cos(ny t + phy)`, `z = cos(nz t + phz)`.
//! * [`diagram`]: Gauss-code knot diagrams built from Lissajous crossings,
//!   plat closures of braids, and band shadows of Lissajous arcs.
//! * [`invariants`]: Laurent polynomials, the Alexander polynomial, Arf
//!   invariant, square tests and a braid-group word-problem oracle.
//! * [`braids`]: braid and projection words, rewriting moves and the
//!   two-bridge and `(3, q)`-torus construction pipelines.

pub mod braids;
pub mod curves;
pub mod diagram;
pub mod exact;
pub mod invariants;
pub mod real;
pub mod tol;

pub use exact::{ExactAngle, Rational};
pub use real::Extended;
pub use tol::Tolerances;
