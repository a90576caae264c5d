//! Two-bridge knots as closures of Lissajous arcs with `ny = 3`.
//!
//! A 2-bridge knot is the plat closure of a 4-strand braid in `sigma_1`,
//! `sigma_2`, i.e. of a 3-strand braid plus a trivial fourth strand. After
//! making the projection alternate and sliding `sigma_1` letters off the ends
//! into the caps, the projection is `s2 (s1 s2)^k`: the braid of the arc with
//! frequencies `(2k + 2, 3)`.

use serde::Serialize;

use super::{alternate_3braid, lissajous_projection_word, BraidError, BraidWord};
use crate::curves::Over;
use crate::diagram::{arc_crossings, band_shadow, diagram_from_plat, plat_components, BandShadow, Diagram, PlatSpec};
use crate::exact::ExactAngle;
use crate::invariants::{alexander, CanonicalAlexander};
use crate::real::Extended;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwoBridgeConstruction {
    pub input: BraidWord,
    pub alternated: BraidWord,
    /// Alternating word with projection `s2 (s1 s2)^k`.
    pub reduced: BraidWord,
    pub k: usize,
    pub nx: u32,
    pub ny: u32,
    /// Over/under at the arc crossings, in the order of
    /// [`arc_crossings`](crate::diagram::arc_crossings).
    pub arc_signs: Vec<Over>,
    /// Alexander polynomial of the 4-plat, checked against the arc closure.
    pub target: CanonicalAlexander,
    pub shadow: BandShadow,
}

fn four_plat(w: &BraidWord) -> PlatSpec {
    PlatSpec::standard(w.widen(4))
}

/// Runs the construction for a braid in `sigma_1, sigma_2` (3 or 4 strands).
pub fn two_bridge_pipeline(w: &BraidWord) -> Result<TwoBridgeConstruction, BraidError> {
    if w.letters().iter().any(|l| l.abs() > 2) || w.strands() > 4 || w.strands() < 3 {
        return Err(BraidError::WrongStrandCount {
            expected: 3,
            got: w.strands(),
        });
    }
    let input = BraidWord::new(3, w.letters().to_vec())?;
    let alternated = alternate_3braid(&input)?;
    let mut letters = alternated.letters();
    while letters.first().is_some_and(|l| l.abs() == 1) {
        letters = &letters[1..];
    }
    while letters.last().is_some_and(|l| l.abs() == 1) {
        letters = &letters[..letters.len() - 1];
    }
    let reduced = BraidWord::new(3, letters.to_vec())?;
    let components = plat_components(&four_plat(&input))?;
    if reduced.is_empty() {
        return Err(BraidError::NotAKnot(components));
    }
    let k = (reduced.len() - 1) / 2;
    if k % 3 == 2 {
        return Err(BraidError::LinkNotKnot(k));
    }
    if components != 1 {
        return Err(BraidError::NotAKnot(components));
    }
    let nx = 2 * k as u32 + 2;
    let expected = lissajous_projection_word(nx, 3)?;
    if reduced.projection() != expected {
        return Err(BraidError::Verification(format!(
            "reduced projection {} is not {}",
            reduced.projection(),
            expected
        )));
    }
    let target = alexander(&diagram_from_plat(&four_plat(&reduced))?)?;
    let original = alexander(&diagram_from_plat(&four_plat(&input))?)?;
    if original != target {
        return Err(BraidError::Verification(format!(
            "cap slides changed the Alexander polynomial: {original} vs {target}"
        )));
    }
    let arc_signs = arc_crossing_signs(&reduced, nx)?;
    let closure = alexander(&arc_closure_diagram(nx, 3, &arc_signs)?)?;
    if closure != target {
        return Err(BraidError::Verification(format!(
            "arc closure has Alexander polynomial {closure}, plat has {target}"
        )));
    }
    let shadow = band_shadow(nx, 3)?;
    Ok(TwoBridgeConstruction {
        input,
        alternated,
        reduced,
        k,
        nx,
        ny: 3,
        arc_signs,
        target,
        shadow,
    })
}

fn velocity(nx: u32, ny: u32, t: &ExactAngle) -> (f64, f64) {
    let d = |n: u32| -(t.scale_int(n as i64).sin() * Extended::from_i64(n as i64)).to_f64();
    (d(nx), d(ny))
}

/// Over/under at each crossing of the arc `(nx, ny)` read from a braid whose
/// projection is the arc's braid.
///
/// Crossings are matched to letters from the top down. The two strands'
/// left-to-right order just above a crossing is given by `dx/dy`; with
/// `sigma_i` the right one passes over.
pub fn arc_crossing_signs(word: &BraidWord, nx: u32) -> Result<Vec<Over>, BraidError> {
    let ny = word.strands() as u32;
    let arcs = arc_crossings(nx, ny);
    if arcs.len() != word.len() {
        return Err(BraidError::Verification(format!(
            "arc ({nx}, {ny}) has {} crossings, word has {}",
            arcs.len(),
            word.len()
        )));
    }
    let piece = |t: &ExactAngle| (t.to_f64() * ny as f64 / std::f64::consts::PI).floor() as u32;
    let mut out = Vec::with_capacity(arcs.len());
    for (c, &letter) in arcs.iter().zip(word.letters()) {
        let (p1, p2) = (piece(&c.a1), piece(&c.a2));
        let u = c.y.clamp(-1.0, 1.0).acos();
        let left_of = (0..ny)
            .filter(|&p| p != p1 && p != p2)
            .filter(|&p| {
                let s = if p % 2 == 0 { u } else { std::f64::consts::PI - u };
                let t = (p as f64 * std::f64::consts::PI + s) / ny as f64;
                (nx as f64 * t).cos() < c.x
            })
            .count() as i32;
        if left_of + 1 != letter.abs() {
            return Err(BraidError::Verification(format!(
                "arc crossing at y = {:.6} sits between positions {} and {}, letter is {}",
                c.y,
                left_of + 1,
                left_of + 2,
                letter
            )));
        }
        let slope = |t: &ExactAngle| {
            let (dx, dy) = velocity(nx, ny, t);
            dx / dy
        };
        let a1_right = slope(&c.a1) > slope(&c.a2);
        let a1_over = a1_right == (letter > 0);
        out.push(if a1_over { Over::AtT1 } else { Over::AtT2 });
    }
    Ok(out)
}

/// Diagram of the arc `(nx, ny)` closed by an arc without crossings.
pub fn arc_closure_diagram(nx: u32, ny: u32, signs: &[Over]) -> Result<Diagram, BraidError> {
    let arcs = arc_crossings(nx, ny);
    if arcs.len() != signs.len() {
        return Err(BraidError::Verification("one over/under per arc crossing".into()));
    }
    if arcs.is_empty() {
        return Ok(Diagram::unknot());
    }
    let mut visits = Vec::with_capacity(2 * arcs.len());
    let mut sign = Vec::with_capacity(arcs.len());
    for (i, (c, o)) in arcs.iter().zip(signs).enumerate() {
        let (v1, v2) = (velocity(nx, ny, &c.a1), velocity(nx, ny, &c.a2));
        let (vo, vu) = if *o == Over::AtT1 { (v1, v2) } else { (v2, v1) };
        sign.push(if vo.0 * vu.1 - vo.1 * vu.0 > 0.0 { 1i8 } else { -1 });
        visits.push((c.a1, i, *o == Over::AtT1));
        visits.push((c.a2, i, *o == Over::AtT2));
    }
    visits.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Diagram::from_visits(visits.into_iter().map(|(_, i, o)| (i, o, sign[i])))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(l: &[i32]) -> BraidWord {
        BraidWord::new(3, l.to_vec()).unwrap()
    }

    #[test]
    fn trefoil_reduces_to_k3() {
        let c = two_bridge_pipeline(&bw(&[2, 2, 2])).unwrap();
        assert_eq!(c.k, 3);
        assert_eq!((c.nx, c.ny), (8, 3));
        assert_eq!(c.target.coeffs(), &[1, -1, 1]);
        assert_eq!(c.shadow.crossing_count(), 2 * 8 * 3 - 8 - 3);
    }

    #[test]
    fn k_two_is_a_link() {
        assert!(matches!(two_bridge_pipeline(&bw(&[2, 1, 2, 1, 2])), Err(BraidError::LinkNotKnot(2))));
    }

    #[test]
    fn sigma_one_only_is_not_a_knot() {
        assert!(matches!(two_bridge_pipeline(&bw(&[1])), Err(BraidError::NotAKnot(2))));
        assert!(matches!(two_bridge_pipeline(&bw(&[1, 1])), Err(BraidError::LinkNotKnot(2))));
    }
}
