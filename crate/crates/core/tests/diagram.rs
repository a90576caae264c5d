mod common;

use common::braid_word;
use lissaknot::braids::{arc_crossing_signs, BraidWord};
use lissaknot::curves::{build_crossings, LissajousParams, Traversal};
use lissaknot::diagram::*;
use lissaknot::invariants::{alexander, twist_alexander, CanonicalAlexander};
use lissaknot::Tolerances;
use num_integer::Integer;
use proptest::prelude::*;

fn check_well_formed(d: &Diagram) {
    let c = d.crossing_count();
    assert_eq!(d.gauss().len(), 2 * c);
    for id in 1..=c {
        let visits: Vec<_> = d.gauss().iter().filter(|e| e.id == id).collect();
        assert_eq!(visits.len(), 2);
        assert_ne!(visits[0].over, visits[1].over);
        assert_eq!(visits[0].sign, visits[1].sign);
    }
    let pd = d.pd();
    assert_eq!(pd.len(), c);
    let mut counts = vec![0; 2 * c + 1];
    for x in &pd {
        for &e in x {
            counts[e] += 1;
        }
    }
    assert!(counts[1..].iter().all(|&n| n == 2));
    let mut arcs = d.arcs();
    arcs.sort_unstable();
    arcs.dedup();
    assert_eq!(arcs.len(), c);
}

#[test]
fn twist_family_diagrams() {
    let d = diagram_from_crossings(&build_crossings(&LissajousParams::twist_family(0), &Tolerances::default()).unwrap()).unwrap();
    assert_eq!(d.crossing_count(), 1);
    assert_eq!(d.gauss().len(), 2);
    let d = diagram_from_crossings(&build_crossings(&LissajousParams::twist_family(2), &Tolerances::default()).unwrap()).unwrap();
    assert_eq!(d.crossing_count(), 13);
    check_well_formed(&d);
    let empty = Traversal {
        sites: vec![],
        visits: vec![],
    };
    assert!(matches!(diagram_from_crossings(&empty), Err(DiagramError::MalformedTraversal(_))));
}

#[test]
fn band_shadow_totals() {
    for nx in 1..=8u32 {
        for ny in 1..=7u32 {
            if nx.gcd(&ny) != 1 || nx + ny < 3 {
                continue;
            }
            let s = band_shadow(nx, ny).unwrap();
            assert_eq!(s.crossing_count() as u32, 2 * nx * ny - nx - ny, "({nx},{ny})");
            assert_eq!(s.quad_sites.len() as u32, (nx - 1) * (ny - 1) / 2);
            assert_eq!(s.twist_slots.len() as u32, nx + ny - 2);
        }
    }
}

#[test]
fn trefoil_on_the_four_three_shadow() {
    let w = BraidWord::new(3, vec![2, -1, 2]).unwrap();
    let signs = arc_crossing_signs(&w, 4).unwrap();
    let s = band_shadow(4, 3).unwrap();
    let target = CanonicalAlexander::from_coeffs(&[1, -1, 1]);
    let a = assign_twist_crossings(&s, &signs, &target).unwrap();
    assert_eq!(a.diagram.crossing_count(), 17);
    assert_eq!(alexander(&a.diagram).unwrap(), target);
    check_well_formed(&a.diagram);
    let unknot = assign_twist_crossings(&band_shadow(2, 1).unwrap(), &[], &CanonicalAlexander::one()).unwrap();
    assert_eq!(unknot.tried, 1);
}

#[test]
fn unreachable_target_exhausts_the_search() {
    let w = BraidWord::new(3, vec![2, -1, 2]).unwrap();
    let signs = arc_crossing_signs(&w, 4).unwrap();
    let s = band_shadow(4, 3).unwrap();
    // Determinant 400001 is far above what a 17-crossing diagram can reach.
    let r = assign_twist_crossings(&s, &signs, &twist_alexander(100_000));
    assert!(matches!(r, Err(DiagramError::NoAssignmentFound)));
}

#[test]
fn modified_pairing_only_on_six_strands() {
    let w = BraidWord::new(6, vec![2, 4, 1, 3]).unwrap();
    let spec = PlatSpec {
        word: w,
        top: Pairing::Standard,
        bottom: Pairing::Modified,
    };
    assert!(plat_components(&spec).is_ok());
    assert!(Pairing::Modified.partners(4).is_err());
}

fn knot_plat(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    braid_word(strands, max_len)
        .prop_filter("closes to a knot", |w| plat_components(&PlatSpec::standard(w.clone())).unwrap() == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn plat_diagrams_are_well_formed(w in knot_plat(4, 12)) {
        let d = diagram_from_plat(&PlatSpec::standard(w.clone())).unwrap();
        prop_assert_eq!(d.crossing_count(), w.len());
        if !w.is_empty() {
            check_well_formed(&d);
        }
    }

    #[test]
    fn mirrored_braid_gives_mirrored_polynomial(w in knot_plat(4, 10)) {
        let a = alexander(&diagram_from_plat(&PlatSpec::standard(w.clone())).unwrap()).unwrap();
        let b = alexander(&diagram_from_plat(&PlatSpec::standard(w.mirror())).unwrap()).unwrap();
        prop_assert_eq!(b, a.mirror());
    }

    #[test]
    fn components_ignore_cancelling_pairs(w in braid_word(6, 10), at in 0usize..11, i in 1i32..6) {
        let mut l = w.letters().to_vec();
        let at = at.min(l.len());
        l.splice(at..at, [i, -i]);
        let padded = BraidWord::new(6, l).unwrap();
        prop_assert_eq!(
            plat_components(&PlatSpec::standard(w)).unwrap(),
            plat_components(&PlatSpec::standard(padded)).unwrap()
        );
    }
}
