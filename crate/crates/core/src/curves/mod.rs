//! Exact analytic geometry of Lissajous parameterizations.
//!
//! A Lissajous knot is `K(t) = (cos(nx t + phx), cos(ny t + phy), cos(nz t + phz))`
//! for `t` in `[0, 2pi)`. Its `xy`-projection has `2 nx ny - nx - ny` double
//! points, all given in closed form by [`double_points`].

mod claims;
pub mod oracle;

pub use claims::{twist_claims, ClaimCheck};

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::{int, rational, ExactAngle, OverPi, Rational};
use crate::real::Extended;
use crate::tol::Tolerances;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurveError {
    #[error("frequencies must be positive")]
    ZeroFrequency,
    #[error("frequencies {0:?} are not pairwise coprime")]
    NonCoprimeFrequencies(Vec<u32>),
    #[error("singular phase: {0}")]
    SingularPhase(String),
    #[error("degenerate projection: {0}")]
    DegenerateProjection(String),
    #[error("singular crossing at t1 = {t1}, t2 = {t2}: {reason}")]
    SingularCrossing {
        t1: String,
        t2: String,
        reason: String,
    },
    #[error("bad frequency: {0}")]
    BadFrequency(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LissajousParams {
    pub nx: u32,
    pub ny: u32,
    pub nz: u32,
    pub phx: ExactAngle,
    pub phy: ExactAngle,
    pub phz: ExactAngle,
}

impl LissajousParams {
    pub fn new(
        (nx, ny, nz): (u32, u32, u32),
        (phx, phy, phz): (ExactAngle, ExactAngle, ExactAngle),
    ) -> Self {
        LissajousParams {
            nx,
            ny,
            nz,
            phx,
            phy,
            phz,
        }
    }

    /// The twist-knot family member
    /// `(2, 2m+1, 6m+7; 0, 1/2, (6m+7 - 3pi)/(4m+2))`.
    pub fn twist_family(m: u32) -> Self {
        let m = m as i64;
        let nz = 6 * m + 7;
        LissajousParams {
            nx: 2,
            ny: (2 * m + 1) as u32,
            nz: nz as u32,
            phx: ExactAngle::ZERO,
            phy: ExactAngle::unit(rational(1, 2)),
            phz: ExactAngle::new(rational(-3, 4 * m + 2), rational(nz, 4 * m + 2)),
        }
    }

    pub fn with_phz(&self, phz: ExactAngle) -> Self {
        LissajousParams {
            phz,
            ..self.clone()
        }
    }

    fn axis(&self, a: Axis) -> (u32, &ExactAngle) {
        match a {
            Axis::X => (self.nx, &self.phx),
            Axis::Y => (self.ny, &self.phy),
            Axis::Z => (self.nz, &self.phz),
        }
    }

    /// `cos(n t + phi)` for the given coordinate, in extended precision.
    pub fn coord(&self, a: Axis, t: &ExactAngle) -> Extended {
        let (n, phi) = self.axis(a);
        (t.scale_int(n as i64) + *phi).cos()
    }

    /// Derivative `-n sin(n t + phi)` of the given coordinate.
    pub fn deriv(&self, a: Axis, t: &ExactAngle) -> Extended {
        let (n, phi) = self.axis(a);
        -((t.scale_int(n as i64) + *phi).sin() * Extended::from_i64(n as i64))
    }

    /// Point on the curve at a floating-point time.
    pub fn point_f64(&self, t: f64) -> [f64; 3] {
        [
            (self.nx as f64 * t + self.phx.to_f64()).cos(),
            (self.ny as f64 * t + self.phy.to_f64()).cos(),
            (self.nz as f64 * t + self.phz.to_f64()).cos(),
        ]
    }

    pub fn frequencies(&self) -> [u32; 3] {
        [self.nx, self.ny, self.nz]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Validity {
    Valid,
    Singular(String),
}

fn check_coprime(freqs: &[u32]) -> Result<(), CurveError> {
    if freqs.iter().any(|&n| n == 0) {
        return Err(CurveError::ZeroFrequency);
    }
    for (i, a) in freqs.iter().enumerate() {
        for b in &freqs[i + 1..] {
            if a.gcd(b) != 1 {
                return Err(CurveError::NonCoprimeFrequencies(freqs.to_vec()));
            }
        }
    }
    Ok(())
}

/// True when `a = k pi / n` for some integer `k`.
fn is_pi_multiple(a: &ExactAngle, n: u32) -> bool {
    a.unit_part.is_zero() && (a.pi_part * int(n as i64)).is_integer()
}

/// Decides exactly whether the phases fall into a forbidden family.
///
/// With time shifted so that `phz = 0`, the curve is singular iff
/// `phx = k pi/nz`, `phy = k pi/nz`, or `phx = (nx/ny) phy + k pi/ny`.
pub fn validate_params(p: &LissajousParams) -> Result<Validity, CurveError> {
    check_coprime(&p.frequencies())?;
    let nz = int(p.nz as i64);
    let phx = p.phx - p.phz.scale(int(p.nx as i64) / nz);
    let phy = p.phy - p.phz.scale(int(p.ny as i64) / nz);
    if is_pi_multiple(&phx, p.nz) {
        return Ok(Validity::Singular("phi_x = k*pi/n_z".into()));
    }
    if is_pi_multiple(&phy, p.nz) {
        return Ok(Validity::Singular("phi_y = k*pi/n_z".into()));
    }
    let mixed = phx - phy.scale(rational(p.nx as i64, p.ny as i64));
    if is_pi_multiple(&mixed, p.ny) {
        return Ok(Validity::Singular(
            "phi_x = (n_x/n_y)*phi_y + k*pi/n_y".into(),
        ));
    }
    Ok(Validity::Valid)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DoublePointKind {
    TypeI,
    TypeII,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DoublePoint {
    pub kind: DoublePointKind,
    pub k: i64,
    pub j: i64,
    pub t1: ExactAngle,
    pub t2: ExactAngle,
    pub x: f64,
    pub y: f64,
}

impl DoublePoint {
    /// The same point with the two visit times exchanged.
    pub fn swapped(&self) -> DoublePoint {
        DoublePoint {
            t1: self.t2,
            t2: self.t1,
            ..self.clone()
        }
    }
}

/// Integer range `ceil(lo) ..= floor(hi)` for `lo = c_lo + phi/pi`,
/// `hi = c_hi + phi/pi`; an exact integer at either end is a tie.
fn index_range(
    c_lo: Rational,
    c_hi: Rational,
    phi: &ExactAngle,
) -> Result<(i64, i64), CurveError> {
    match phi.over_pi() {
        OverPi::Exact(q) => {
            let (lo, hi) = (c_lo + q, c_hi + q);
            if lo.is_integer() || hi.is_integer() {
                return Err(CurveError::DegenerateProjection(
                    "double point at the start of the period".into(),
                ));
            }
            Ok((lo.ceil().to_integer(), hi.floor().to_integer()))
        }
        OverPi::Approx(e) => {
            let lo = Extended::from_rational(&c_lo) + e;
            let hi = Extended::from_rational(&c_hi) + e;
            Ok((lo.ceil() as i64, hi.floor() as i64))
        }
    }
}

/// One family of double points: the coordinate with frequency `na` matches
/// by a shift of `2 pi k / na` and the other by reflection.
fn family(
    kind: DoublePointKind,
    (na, nb): (i64, i64),
    phb: &ExactAngle,
) -> Result<Vec<(DoublePointKind, i64, i64, ExactAngle, ExactAngle)>, CurveError> {
    let mut out = Vec::new();
    let base = -phb.scale(rational(1, nb));
    for k in 1..na {
        let (jlo, jhi) = index_range(rational(nb * k, na), rational(2 * nb * na - nb * k, na), phb)?;
        for j in jlo..=jhi {
            let mid = ExactAngle::pi_frac(j, nb) + base;
            let half = ExactAngle::pi_frac(k, na);
            out.push((kind, k, j, mid - half, mid + half));
        }
    }
    Ok(out)
}

/// All double points of the projection `(cos(nx t + phx), cos(ny t + phy))`,
/// sorted by `t1`.
///
/// Type I points have `t2 - t1 = 2 pi k/nx` and `t1 + t2 = (2 pi j - 2 phy)/ny`;
/// Type II points swap the roles of the two coordinates. There are
/// `nx ny - ny` of the first kind and `nx ny - nx` of the second.
pub fn double_points(
    nx: u32,
    ny: u32,
    phx: &ExactAngle,
    phy: &ExactAngle,
    tol: &Tolerances,
) -> Result<Vec<DoublePoint>, CurveError> {
    check_coprime(&[nx, ny])?;
    let (a, b) = (nx as i64, ny as i64);
    let mut raw = family(DoublePointKind::TypeI, (a, b), phy)?;
    raw.extend(family(DoublePointKind::TypeII, (b, a), phx)?);
    let mut pts: Vec<DoublePoint> = raw
        .into_iter()
        .map(|(kind, k, j, t1, t2)| {
            let x = (t1.scale_int(a) + *phx).cos().to_f64();
            let y = (t1.scale_int(b) + *phy).cos().to_f64();
            DoublePoint {
                kind,
                k,
                j,
                t1,
                t2,
                x,
                y,
            }
        })
        .collect();
    pts.sort_by(|p, q| p.t1.cmp(&q.t1).then_with(|| p.t2.cmp(&q.t2)));
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            if (p.x - q.x).hypot(p.y - q.y) < tol.coincidence {
                return Err(CurveError::DegenerateProjection(format!(
                    "double points at t = ({}, {}) and ({}, {}) coincide",
                    p.t1, p.t2, q.t1, q.t2
                )));
            }
        }
    }
    Ok(pts)
}

/// Crossing sign `sign[(x'(t1) y'(t2) - x'(t2) y'(t1)) (z(t1) - z(t2))]`.
///
/// This is the usual right-handed convention: `+1` when the over strand's
/// direction turns counterclockwise onto the under strand's.
pub fn crossing_sign(
    p: &LissajousParams,
    dp: &DoublePoint,
    tol: &Tolerances,
) -> Result<i8, CurveError> {
    let cross = p.deriv(Axis::X, &dp.t1) * p.deriv(Axis::Y, &dp.t2)
        - p.deriv(Axis::X, &dp.t2) * p.deriv(Axis::Y, &dp.t1);
    let dz = p.coord(Axis::Z, &dp.t1) - p.coord(Axis::Z, &dp.t2);
    let singular = |reason: &str| CurveError::SingularCrossing {
        t1: dp.t1.to_string(),
        t2: dp.t2.to_string(),
        reason: reason.into(),
    };
    let (c, z) = (cross.to_f64(), dz.to_f64());
    if c.abs() < tol.eq {
        return Err(singular("tangent directions are parallel"));
    }
    if z.abs() < tol.eq {
        return Err(singular("heights coincide"));
    }
    if (c * z).abs() < tol.margin {
        return Err(singular("sign below decision margin"));
    }
    Ok(if c * z > 0.0 { 1 } else { -1 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Over {
    AtT1,
    AtT2,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossingSite {
    pub dp: DoublePoint,
    pub over: Over,
    pub sign: i8,
}

/// One pass of the curve through a crossing.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Visit {
    pub site: usize,
    pub t: ExactAngle,
    pub over: bool,
}

/// Crossings of a Lissajous knot together with the time-ordered list of
/// visits (two per crossing).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Traversal {
    pub sites: Vec<CrossingSite>,
    pub visits: Vec<Visit>,
}

impl Traversal {
    pub fn crossing_count(&self) -> usize {
        self.sites.len()
    }
}

/// Sorts visits by time; equal times mean the curve passes a point twice at
/// once, which only a degenerate projection can do.
pub fn order_visits(mut visits: Vec<Visit>) -> Result<Vec<Visit>, CurveError> {
    visits.sort_by(|a, b| a.t.cmp(&b.t));
    if visits.windows(2).any(|w| w[0].t.cmp(&w[1].t) == Ordering::Equal) {
        return Err(CurveError::DegenerateProjection(
            "two visits at the same time".into(),
        ));
    }
    Ok(visits)
}

/// All crossings of a valid Lissajous knot, decorated with over/under (by
/// height) and sign, plus the traversal order.
pub fn build_crossings(p: &LissajousParams, tol: &Tolerances) -> Result<Traversal, CurveError> {
    if let Validity::Singular(reason) = validate_params(p)? {
        return Err(CurveError::SingularPhase(reason));
    }
    let dps = double_points(p.nx, p.ny, &p.phx, &p.phy, tol)?;
    let mut sites = Vec::with_capacity(dps.len());
    let mut visits = Vec::with_capacity(2 * dps.len());
    for dp in dps {
        let sign = crossing_sign(p, &dp, tol)?;
        let dz = p.coord(Axis::Z, &dp.t1) - p.coord(Axis::Z, &dp.t2);
        let over = if dz.signum() > 0 { Over::AtT1 } else { Over::AtT2 };
        let site = sites.len();
        visits.push(Visit {
            site,
            t: dp.t1,
            over: over == Over::AtT1,
        });
        visits.push(Visit {
            site,
            t: dp.t2,
            over: over == Over::AtT2,
        });
        sites.push(CrossingSite { dp, over, sign });
    }
    let visits = order_visits(visits)?;
    Ok(Traversal { sites, visits })
}

/// Values of `phz` in `(0, pi)` at which some crossing of the family
/// `(2, 2m+1, nz; 0, 1/2, phz)` has equal heights.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularPhases {
    /// Sorted, strictly inside `(0, pi)`.
    pub interior: Vec<ExactAngle>,
    /// `0` and `pi`, where the crossings `C^II_{k,2}` are singular.
    pub endpoints: [ExactAngle; 2],
}

fn check_family(m: u32, nz: u32) -> Result<(), CurveError> {
    let ny = 2 * m + 1;
    if nz % 2 == 0 {
        return Err(CurveError::BadFrequency(format!("n_z = {nz} must be odd")));
    }
    if nz.gcd(&ny) != 1 {
        return Err(CurveError::BadFrequency(format!(
            "n_z = {nz} must be coprime to 2m+1 = {ny}"
        )));
    }
    Ok(())
}

/// Singular heights phases of the family `(2, 2m+1, nz; 0, 1/2, phz)`.
///
/// Type I crossings are singular at
/// `phz = nz/(2(2m+1)) - j nz pi/(2m+1) + i pi`, `j = m+1 ..= 3m+1`, and Type II
/// crossings with odd `k` at `pi/2`.
pub fn family_singular_phases(m: u32, nz: u32) -> Result<SingularPhases, CurveError> {
    check_family(m, nz)?;
    let (mi, nzi) = (m as i64, nz as i64);
    let ny = 2 * mi + 1;
    let mut interior: Vec<ExactAngle> = (mi + 1..=3 * mi + 1)
        .map(|j| {
            let c = ExactAngle::new(rational(-j * nzi, ny), rational(nzi, 2 * ny));
            let turns = match c.over_pi() {
                OverPi::Exact(q) => q.floor().to_integer(),
                OverPi::Approx(e) => e.floor() as i64,
            };
            c + ExactAngle::pi_frac(-turns, 1)
        })
        .collect();
    interior.push(ExactAngle::pi_frac(1, 2));
    interior.sort();
    interior.dedup();
    Ok(SingularPhases {
        interior,
        endpoints: [ExactAngle::ZERO, ExactAngle::pi()],
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhaseInterval {
    pub lo: ExactAngle,
    pub hi: ExactAngle,
    pub representative: ExactAngle,
}

impl PhaseInterval {
    /// The point `lo + f (hi - lo)`.
    pub fn sample(&self, f: Rational) -> ExactAngle {
        self.lo + (self.hi - self.lo).scale(f)
    }
}

/// The open intervals of `(0, pi)` on which the family's diagram is constant.
pub fn family_phase_intervals(m: u32, nz: u32) -> Result<Vec<PhaseInterval>, CurveError> {
    let s = family_singular_phases(m, nz)?;
    let mut cuts = vec![s.endpoints[0]];
    cuts.extend(s.interior.iter().copied());
    cuts.push(s.endpoints[1]);
    Ok(cuts
        .windows(2)
        .map(|w| PhaseInterval {
            lo: w[0],
            hi: w[1],
            representative: w[0].midpoint(&w[1]),
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetryReport {
    /// `K(t + pi) = -K(t)`; checked when all frequencies are odd.
    pub amphicheiral_identity: Option<bool>,
    /// `K(t + pi)` is `K(t)` rotated by pi about the even coordinate's axis.
    pub two_periodic_identity: Option<bool>,
    /// The axis of that rotation.
    pub axis: Option<Axis>,
    /// Winding of the other two coordinates around the axis over a period;
    /// `None` when the curve meets the axis.
    pub axis_winding: Option<i64>,
}

const SYMMETRY_SAMPLES: usize = 1000;

/// Numeric check of the point-reflection or 2-periodic symmetry a Lissajous
/// knot has by construction, and of the axis linking number.
pub fn symmetry_check(p: &LissajousParams, tol: &Tolerances) -> SymmetryReport {
    let freqs = p.frequencies();
    let even: Vec<usize> = (0..3).filter(|&i| freqs[i] % 2 == 0).collect();
    let times = (0..SYMMETRY_SAMPLES).map(|i| 2.0 * PI * i as f64 / SYMMETRY_SAMPLES as f64);
    let mut report = SymmetryReport {
        amphicheiral_identity: None,
        two_periodic_identity: None,
        axis: None,
        axis_winding: None,
    };
    match even.as_slice() {
        [] => {
            report.amphicheiral_identity = Some(times.into_iter().all(|t| {
                let (a, b) = (p.point_f64(t), p.point_f64(t + PI));
                (0..3).all(|i| (a[i] + b[i]).abs() < tol.eq)
            }));
        }
        [e] => {
            let e = *e;
            report.axis = Some([Axis::X, Axis::Y, Axis::Z][e]);
            report.two_periodic_identity = Some(times.into_iter().all(|t| {
                let (a, b) = (p.point_f64(t), p.point_f64(t + PI));
                (0..3).all(|i| {
                    let expect = if i == e { a[i] } else { -a[i] };
                    (b[i] - expect).abs() < tol.eq
                })
            }));
            report.axis_winding = winding_about(p, e);
        }
        _ => {}
    }
    report
}

fn winding_about(p: &LissajousParams, axis: usize) -> Option<i64> {
    let (u, v) = ((axis + 1) % 3, (axis + 2) % 3);
    let n = 4096 * *p.frequencies().iter().max().unwrap() as usize;
    let angle = |t: f64| {
        let q = p.point_f64(t);
        (q[u].hypot(q[v]), q[v].atan2(q[u]))
    };
    let (_, mut prev) = angle(0.0);
    let mut total = 0.0;
    for i in 1..=n {
        let (r, a) = angle(2.0 * PI * i as f64 / n as f64);
        if r < 1e-6 {
            return None;
        }
        let mut d = a - prev;
        if d > PI {
            d -= 2.0 * PI;
        } else if d < -PI {
            d += 2.0 * PI;
        }
        total += d;
        prev = a;
    }
    (total / (2.0 * PI)).round().to_i64()
}
