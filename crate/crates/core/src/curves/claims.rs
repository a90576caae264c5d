//! Handedness pattern of the crossings of the twist family
//! `(2, 2m+1, 6m+7; 0, 1/2, (6m+7 - 3pi)/(4m+2))`.
//!
//! Left-handed means sign `-1`. Half-planes are taken by the sign of `x`.

use serde::Serialize;

use super::{build_crossings, CrossingSite, CurveError, DoublePointKind, LissajousParams};
use crate::tol::Tolerances;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub claim: u8,
    pub statement: String,
    pub holds: bool,
    /// Crossings that break the statement, as `(kind, k, j, x, sign)`.
    pub violations: Vec<String>,
}

fn describe(s: &CrossingSite) -> String {
    let kind = match s.dp.kind {
        DoublePointKind::TypeI => "I",
        DoublePointKind::TypeII => "II",
    };
    format!("type {kind} (k={}, j={}) at x={:.6}, sign {}", s.dp.k, s.dp.j, s.dp.x, s.sign)
}

fn check<'a>(
    claim: u8,
    statement: &str,
    sites: impl Iterator<Item = &'a CrossingSite>,
    expected: impl Fn(&CrossingSite) -> i8,
) -> ClaimCheck {
    let violations: Vec<String> = sites.filter(|s| s.sign != expected(s)).map(describe).collect();
    ClaimCheck {
        claim,
        statement: statement.into(),
        holds: violations.is_empty(),
        violations,
    }
}

/// Checks the four handedness statements for member `m` of the family.
///
/// 1. `m` even: type I crossings with `x > 0` are left-handed; those with
///    `x < 0` are right-handed except the one nearest the `y`-axis.
/// 2. `m` odd: type I crossings with `x < 0` are right-handed; those with
///    `x > 0` are left-handed except the one nearest the `y`-axis.
/// 3. Type II crossings with `j = 2` are left-handed iff `x > 0`.
/// 4. Type II crossings with `j = 1, 3` are right-handed iff `x > 0`.
///
/// Only the statement matching the parity of `m` among 1 and 2 is reported.
pub fn twist_claims(m: u32, tol: &Tolerances) -> Result<Vec<ClaimCheck>, CurveError> {
    let p = LissajousParams::twist_family(m);
    let tr = build_crossings(&p, tol)?;
    let type1: Vec<&CrossingSite> = tr.sites.iter().filter(|s| s.dp.kind == DoublePointKind::TypeI).collect();
    let type2 = || tr.sites.iter().filter(|s| s.dp.kind == DoublePointKind::TypeII);
    let even = m % 2 == 0;
    // The exceptional crossing sits on the side that is not uniformly handed.
    let nearest = type1
        .iter()
        .filter(|s| if even { s.dp.x < 0.0 } else { s.dp.x > 0.0 })
        .min_by(|a, b| a.dp.x.abs().total_cmp(&b.dp.x.abs()))
        .map(|s| (s.dp.t1, s.dp.t2));
    let is_nearest = |s: &CrossingSite| Some((s.dp.t1, s.dp.t2)) == nearest;
    let mut out = Vec::with_capacity(3);
    if even {
        out.push(check(
            1,
            "m even: type I crossings in the right half-plane are left-handed; in the left half-plane all but the one nearest the y-axis are right-handed",
            type1.iter().copied(),
            |s| if s.dp.x > 0.0 || is_nearest(s) { -1 } else { 1 },
        ));
    } else {
        out.push(check(
            2,
            "m odd: type I crossings in the left half-plane are right-handed; in the right half-plane all but the one nearest the y-axis are left-handed",
            type1.iter().copied(),
            |s| if s.dp.x < 0.0 || is_nearest(s) { 1 } else { -1 },
        ));
    }
    out.push(check(
        3,
        "type II crossings with j = 2 are left-handed iff they lie in the right half-plane",
        type2().filter(|s| s.dp.j == 2),
        |s| if s.dp.x > 0.0 { -1 } else { 1 },
    ));
    out.push(check(
        4,
        "type II crossings with j = 1 or 3 are right-handed iff they lie in the right half-plane",
        type2().filter(|s| s.dp.j == 1 || s.dp.j == 3),
        |s| if s.dp.x > 0.0 { 1 } else { -1 },
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claims_hold_for_small_members() {
        for m in 2..=5 {
            for c in twist_claims(m, &Tolerances::default()).unwrap() {
                assert!(c.holds, "m={m} claim {}: {:?}", c.claim, c.violations);
            }
        }
    }
}
