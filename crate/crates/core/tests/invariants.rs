mod common;

use common::braid_word;
use lissaknot::braids::BraidWord;
use lissaknot::diagram::{diagram_from_plat, plat_components, Diagram, GaussEntry, PlatSpec};
use lissaknot::invariants::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn plat_alexander(strands: usize, l: &[i32]) -> CanonicalAlexander {
    let w = BraidWord::new(strands, l.to_vec()).unwrap();
    alexander(&diagram_from_plat(&PlatSpec::standard(w)).unwrap()).unwrap()
}

#[test]
fn two_strand_torus_knots_from_plats() {
    for k in 1..=6i64 {
        let l = vec![2; 2 * k as usize + 1];
        assert_eq!(plat_alexander(4, &l), torus_alexander(2, 2 * k + 1).unwrap(), "k={k}");
    }
}

#[test]
fn torus_formula_values() {
    assert_eq!(torus_alexander(2, 3).unwrap().coeffs(), &[1, -1, 1]);
    assert_eq!(torus_alexander(3, 4).unwrap().coeffs(), &[1, -1, 0, 1, 0, -1, 1]);
    assert!(matches!(torus_alexander(3, 6), Err(InvariantError::NotCoprime(3, 6))));
}

#[test]
fn twist_knot_arf_and_squares() {
    for n in -20..=20i64 {
        let d = twist_alexander(n);
        assert_eq!(arf(&d).unwrap() as i64, n.rem_euclid(2), "n={n}");
        assert_eq!(is_square_mod2(&d), n % 2 == 0);
        assert_eq!(is_perfect_square(&d), n == 0);
    }
    assert_eq!(arf(&CanonicalAlexander::from_coeffs(&[1, -3, 1])).unwrap(), 1);
}

#[test]
fn squares_are_recognized() {
    let g = LaurentPoly::from_coeffs(&[1, -1, 1]);
    let sq = CanonicalAlexander::from_poly(&(&g * &g)).unwrap().unwrap();
    assert!(is_perfect_square(&sq));
    assert!(is_square_mod2(&sq));
}

#[test]
fn identification_candidates() {
    assert_eq!(identify(&CanonicalAlexander::one()), vec![KnotId::Unknot]);
    let c = identify(&twist_alexander(2));
    assert!(c.contains(&KnotId::Twist(4)));
    assert!(c.contains(&KnotId::Twist(-5)));
    let c = identify(&torus_alexander(2, 3).unwrap());
    assert!(c.contains(&KnotId::Torus(2, 3)));
    assert!(c.contains(&KnotId::Twist(-2)) || c.contains(&KnotId::Twist(1)));
    assert!(identify(&torus_alexander(3, 5).unwrap()).contains(&KnotId::Torus(3, 5)));
}

#[test]
fn broken_diagram_is_rejected() {
    // The Gauss word 1 2 1 2 is not planar.
    let g = vec![
        GaussEntry { id: 1, over: true, sign: 1 },
        GaussEntry { id: 2, over: true, sign: 1 },
        GaussEntry { id: 1, over: false, sign: 1 },
        GaussEntry { id: 2, over: false, sign: 1 },
    ];
    let r = Diagram::from_gauss(g).map_err(|_| ()).and_then(|d| alexander(&d).map_err(|_| ()));
    assert!(r.is_err() || r.unwrap().coeffs().iter().sum::<i64>().abs() == 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn alexander_is_symmetric_and_normalized(w in braid_word(6, 12)) {
        prop_assume!(plat_components(&PlatSpec::standard(w.clone())).unwrap() == 1);
        let d = alexander(&diagram_from_plat(&PlatSpec::standard(w)).unwrap()).unwrap();
        let c = d.coeffs();
        prop_assert_eq!(c.iter().sum::<i64>().abs(), 1);
        let rev: Vec<i64> = c.iter().rev().copied().collect();
        prop_assert_eq!(rev.as_slice(), c);
        prop_assert!(arf(&d).is_ok());
        prop_assert!(d.at_minus_one() % BigInt::from(2) != BigInt::from(0));
    }
}
