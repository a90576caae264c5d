//! The Lissajous projection seen as a thin twisted band around a Lissajous
//! arc, and the choice of crossings that turns the closure of the arc into a
//! diagram with that projection.
//!
//! With `phx = 0` and a small `phy = eps`, the curve runs along the arc
//! `(cos(nx t), cos(ny t))`, `t` in `[0, pi]`, and back along it for `t` in
//! `[pi, 2 pi]`. Every double point of the arc splits into four crossings and
//! every interior extremum of the arc leaves one more.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_integer::Integer;
use serde::Serialize;

use super::{Diagram, DiagramError};
use crate::curves::{double_points, DoublePointKind, Over};
use crate::exact::{rational, ExactAngle};
use crate::invariants::{alexander, CanonicalAlexander};
use crate::real::Extended;
use crate::tol::Tolerances;

/// A double point of the arc at times `0 < a1 < a2 < pi`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ArcCrossing {
    pub a1: ExactAngle,
    pub a2: ExactAngle,
    pub x: f64,
    pub y: f64,
}

/// Which pass of the band a visit belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Layer {
    /// `t` in `[0, pi]`.
    Original,
    /// `t` in `(pi, 2 pi)`, running back along the arc.
    Retrace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SiteKind {
    /// Copy of arc crossing `arc`; the layers are those of the visits near
    /// `a1` and `a2` respectively.
    Quad { arc: usize, near_a1: Layer, near_a2: Layer },
    /// Crossing at an interior extremum of the arc.
    Twist { slot: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShadowCrossing {
    pub t1: ExactAngle,
    pub t2: ExactAngle,
    pub kind: SiteKind,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BandShadow {
    pub nx: u32,
    pub ny: u32,
    /// The `phy` used to open the arc into a band.
    pub phase: ExactAngle,
    pub arc_crossings: Vec<ArcCrossing>,
    pub crossings: Vec<ShadowCrossing>,
    /// Indices into `crossings`, four per arc crossing.
    pub quad_sites: Vec<[usize; 4]>,
    /// Indices into `crossings`, one per interior extremum, by time.
    pub twist_slots: Vec<usize>,
}

impl BandShadow {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TwistChoice {
    RetraceOver,
    OriginalOver,
}

fn cmp_f64(a: f64, b: f64) -> Ordering {
    a.partial_cmp(&b).expect("finite")
}

/// Double points of the arc `(cos(nx t), cos(ny t))`, `0 <= t <= pi`, ordered
/// top to bottom (by decreasing `y`, then increasing `x`). Their times are
/// `pi |a/nx - b/ny|` and `pi (a/nx + b/ny)` for `a/nx + b/ny < 1`.
pub fn arc_crossings(nx: u32, ny: u32) -> Vec<ArcCrossing> {
    let (a_n, b_n) = (nx as i64, ny as i64);
    let mut out = Vec::new();
    for a in 1..a_n {
        for b in 1..b_n {
            if a * b_n + b * a_n >= a_n * b_n {
                continue;
            }
            let d = a * b_n - b * a_n;
            let a1 = ExactAngle::pi_frac(d.abs(), a_n * b_n);
            let a2 = ExactAngle::pi_frac(a * b_n + b * a_n, a_n * b_n);
            out.push(ArcCrossing {
                x: a1.scale_int(a_n).cos().to_f64(),
                y: a1.scale_int(b_n).cos().to_f64(),
                a1,
                a2,
            });
        }
    }
    out.sort_by(|p, q| {
        if (p.y - q.y).abs() > 1e-9 {
            cmp_f64(q.y, p.y)
        } else {
            cmp_f64(p.x, q.x)
        }
    });
    out
}

fn fold(t: &ExactAngle) -> f64 {
    let v = t.to_f64();
    if v <= PI {
        v
    } else {
        2.0 * PI - v
    }
}

fn layer(t: &ExactAngle) -> Layer {
    if *t <= ExactAngle::pi() {
        Layer::Original
    } else {
        Layer::Retrace
    }
}

/// The band shadow with frequencies `(nx, ny)`: the projection with `phx = 0`,
/// `phy = 1/(4 nx ny)`, each crossing classified as a copy of an arc crossing
/// or a twist at an extremum.
pub fn band_shadow(nx: u32, ny: u32) -> Result<BandShadow, DiagramError> {
    if nx == 0 || ny == 0 || nx.gcd(&ny) != 1 {
        return Err(DiagramError::BadShadow(format!("frequencies ({nx}, {ny}) must be coprime")));
    }
    let phase = ExactAngle::unit(rational(1, 4 * nx as i64 * ny as i64));
    let dps = double_points(nx, ny, &ExactAngle::ZERO, &phase, &Tolerances::default())
        .map_err(|e| DiagramError::BadShadow(e.to_string()))?;
    let arcs = arc_crossings(nx, ny);
    let mut crossings = Vec::with_capacity(dps.len());
    let mut quads: Vec<Vec<usize>> = vec![Vec::new(); arcs.len()];
    let mut twists: Vec<(f64, usize)> = Vec::new();
    for dp in &dps {
        let at_extremum = match dp.kind {
            DoublePointKind::TypeI => dp.j == ny as i64,
            DoublePointKind::TypeII => dp.j == nx as i64,
        };
        let (f1, f2) = (fold(&dp.t1), fold(&dp.t2));
        let idx = crossings.len();
        let kind = if at_extremum {
            if (f1 - f2).abs() > 0.5 * PI / (nx * ny) as f64 {
                return Err(DiagramError::BadShadow("twist crossing away from an extremum".into()));
            }
            twists.push((f1.min(f2), idx));
            SiteKind::Twist { slot: 0 }
        } else {
            let (lo, hi) = if f1 < f2 { (f1, f2) } else { (f2, f1) };
            let (arc, dist) = arcs
                .iter()
                .enumerate()
                .map(|(i, a)| (i, (a.a1.to_f64() - lo).abs() + (a.a2.to_f64() - hi).abs()))
                .min_by(|a, b| cmp_f64(a.1, b.1))
                .ok_or_else(|| DiagramError::BadShadow("double point with no arc crossing".into()))?;
            if dist > 0.5 * PI / (nx * ny) as f64 {
                return Err(DiagramError::BadShadow("double point far from every arc crossing".into()));
            }
            quads[arc].push(idx);
            let (l1, l2) = (layer(&dp.t1), layer(&dp.t2));
            let (near_a1, near_a2) = if f1 < f2 { (l1, l2) } else { (l2, l1) };
            SiteKind::Quad { arc, near_a1, near_a2 }
        };
        crossings.push(ShadowCrossing {
            t1: dp.t1,
            t2: dp.t2,
            kind,
        });
    }
    twists.sort_by(|a, b| cmp_f64(a.0, b.0));
    for (slot, &(_, idx)) in twists.iter().enumerate() {
        crossings[idx].kind = SiteKind::Twist { slot };
    }
    let mut quad_sites = Vec::with_capacity(quads.len());
    for (i, q) in quads.iter().enumerate() {
        let mut layers: Vec<(Layer, Layer)> = q
            .iter()
            .map(|&c| match crossings[c].kind {
                SiteKind::Quad { near_a1, near_a2, .. } => (near_a1, near_a2),
                SiteKind::Twist { .. } => unreachable!(),
            })
            .collect();
        layers.sort_by_key(|&(a, b)| (a == Layer::Retrace, b == Layer::Retrace));
        let expect = [
            (Layer::Original, Layer::Original),
            (Layer::Original, Layer::Retrace),
            (Layer::Retrace, Layer::Original),
            (Layer::Retrace, Layer::Retrace),
        ];
        if layers != expect {
            return Err(DiagramError::BadShadow(format!("arc crossing {i} does not split into four")));
        }
        quad_sites.push([q[0], q[1], q[2], q[3]]);
    }
    if twists.len() != (nx + ny - 2) as usize {
        return Err(DiagramError::BadShadow(format!(
            "{} twist crossings, expected {}",
            twists.len(),
            nx + ny - 2
        )));
    }
    Ok(BandShadow {
        nx,
        ny,
        phase,
        arc_crossings: arcs,
        crossings,
        quad_sites,
        twist_slots: twists.into_iter().map(|(_, i)| i).collect(),
    })
}

fn velocity(nx: u32, ny: u32, phy: &ExactAngle, t: &ExactAngle) -> (Extended, Extended) {
    let dx = -((t.scale_int(nx as i64)).sin() * Extended::from_i64(nx as i64));
    let dy = -((t.scale_int(ny as i64) + *phy).sin() * Extended::from_i64(ny as i64));
    (dx, dy)
}

/// Sign of a crossing from the velocities of its over and under passes.
pub(crate) fn sign_from_velocities(over: (Extended, Extended), under: (Extended, Extended)) -> i8 {
    let c = over.0 * under.1 - over.1 * under.0;
    assert!(c.abs().to_f64() > 1e-12, "tangent passes at a crossing");
    if c.signum() > 0 {
        1
    } else {
        -1
    }
}

/// Gauss code of the closed band for a given over/under at the arc crossings
/// and at the twists.
///
/// Copies of an arc crossing on the original pass keep its over/under. The
/// retrace is laid on top: it passes over the original pass at every copy
/// and, among its own crossings, each earlier visit is over.
pub fn band_diagram(shadow: &BandShadow, arc_signs: &[Over], twists: &[TwistChoice]) -> Result<Diagram, DiagramError> {
    if arc_signs.len() != shadow.arc_crossings.len() || twists.len() != shadow.twist_slots.len() {
        return Err(DiagramError::BadShadow(format!(
            "expected {} arc signs and {} twist choices",
            shadow.arc_crossings.len(),
            shadow.twist_slots.len()
        )));
    }
    let mut visits: Vec<(ExactAngle, usize, bool)> = Vec::with_capacity(2 * shadow.crossings.len());
    let mut signs = Vec::with_capacity(shadow.crossings.len());
    for (i, c) in shadow.crossings.iter().enumerate() {
        let first_over = match c.kind {
            SiteKind::Twist { slot } => match twists[slot] {
                TwistChoice::RetraceOver => layer(&c.t1) == Layer::Retrace,
                TwistChoice::OriginalOver => layer(&c.t1) == Layer::Original,
            },
            SiteKind::Quad { arc, .. } => match (layer(&c.t1), layer(&c.t2)) {
                (Layer::Original, Layer::Original) => {
                    let t1_near_a1 = fold(&c.t1) < fold(&c.t2);
                    (arc_signs[arc] == Over::AtT1) == t1_near_a1
                }
                (Layer::Original, Layer::Retrace) => false,
                (Layer::Retrace, Layer::Original) => true,
                (Layer::Retrace, Layer::Retrace) => c.t1 < c.t2,
            },
        };
        let v1 = velocity(shadow.nx, shadow.ny, &shadow.phase, &c.t1);
        let v2 = velocity(shadow.nx, shadow.ny, &shadow.phase, &c.t2);
        signs.push(if first_over {
            sign_from_velocities(v1, v2)
        } else {
            sign_from_velocities(v2, v1)
        });
        visits.push((c.t1, i, first_over));
        visits.push((c.t2, i, !first_over));
    }
    visits.sort_by(|a, b| a.0.cmp(&b.0));
    Diagram::from_visits(visits.into_iter().map(|(_, i, o)| (i, o, signs[i])))
}

/// Result of the twist-crossing search.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BandAssignment {
    pub diagram: crate::diagram::Diagram,
    pub twists: Vec<TwistChoice>,
    /// Number of assignments evaluated, including the successful one.
    pub tried: usize,
}

/// Searches over/under choices at the twist crossings for a diagram with
/// the target Alexander polynomial: all retrace-over, all original-over,
/// then every pattern in Gray-code order.
pub fn assign_twist_crossings(
    shadow: &BandShadow,
    arc_signs: &[Over],
    target: &CanonicalAlexander,
) -> Result<BandAssignment, DiagramError> {
    let s = shadow.twist_slots.len();
    let choice = |mask: u64| -> Vec<TwistChoice> {
        (0..s)
            .map(|i| {
                if mask >> i & 1 == 0 {
                    TwistChoice::RetraceOver
                } else {
                    TwistChoice::OriginalOver
                }
            })
            .collect()
    };
    let all_ones = if s == 0 { 0 } else { (1u64 << s) - 1 };
    let mut order = vec![0u64];
    if all_ones != 0 {
        order.push(all_ones);
    }
    order.extend((0..1u64 << s).map(|i| i ^ (i >> 1)).filter(|&g| g != 0 && g != all_ones));
    for (tried, mask) in order.into_iter().enumerate() {
        let twists = choice(mask);
        let diagram = band_diagram(shadow, arc_signs, &twists)?;
        let delta = alexander(&diagram).map_err(|_| DiagramError::MalformedTraversal("not a knot".into()))?;
        if delta == *target {
            return Ok(BandAssignment {
                diagram,
                twists,
                tried: tried + 1,
            });
        }
    }
    Err(DiagramError::NoAssignmentFound)
}
