use lissaknot::curves::oracle::double_points_oracle;
use lissaknot::curves::*;
use lissaknot::diagram::diagram_from_crossings;
use lissaknot::exact::rational;
use lissaknot::{ExactAngle, Tolerances};
use num_integer::Integer;
use proptest::prelude::*;

fn tol() -> Tolerances {
    Tolerances::default()
}

fn params(n: (u32, u32, u32), ph: (ExactAngle, ExactAngle, ExactAngle)) -> LissajousParams {
    LissajousParams::new(n, ph)
}

fn coprime_triple() -> impl Strategy<Value = (u32, u32, u32)> {
    (1u32..8, 1u32..8, 1u32..12).prop_filter("pairwise coprime", |&(a, b, c)| {
        a.gcd(&b) == 1 && a.gcd(&c) == 1 && b.gcd(&c) == 1
    })
}

fn generic_phase() -> impl Strategy<Value = ExactAngle> {
    (1i64..200, 1i64..97).prop_map(|(a, b)| ExactAngle::unit(rational(a, b)))
}

/// Sign from finite-difference tangents and `f64` heights.
fn finite_difference_sign(p: &LissajousParams, t1: f64, t2: f64) -> f64 {
    let h = 1e-6;
    let tangent = |t: f64| {
        let (a, b) = (p.point_f64(t + h), p.point_f64(t - h));
        ((a[0] - b[0]) / (2.0 * h), (a[1] - b[1]) / (2.0 * h))
    };
    let (v1, v2) = (tangent(t1), tangent(t2));
    let cross = v1.0 * v2.1 - v2.0 * v1.1;
    let dz = p.point_f64(t1)[2] - p.point_f64(t2)[2];
    (cross * dz).signum()
}

#[test]
fn forbidden_phase_is_rejected() {
    let p = params((2, 3, 5), (ExactAngle::pi_frac(1, 5), ExactAngle::ZERO, ExactAngle::ZERO));
    assert_eq!(validate_params(&p).unwrap(), Validity::Singular("phi_x = k*pi/n_z".into()));
    assert!(matches!(build_crossings(&p, &tol()), Err(CurveError::SingularPhase(_))));
    let p = params((3, 2, 7), (ExactAngle::unit(rational(1, 10)), ExactAngle::unit(rational(1, 5)), ExactAngle::ZERO));
    assert_eq!(validate_params(&p).unwrap(), Validity::Valid);
}

#[test]
fn non_coprime_and_zero_frequencies() {
    let z = ExactAngle::ZERO;
    assert!(matches!(validate_params(&params((2, 4, 5), (z, z, z))), Err(CurveError::NonCoprimeFrequencies(_))));
    assert!(matches!(validate_params(&params((0, 1, 5), (z, z, z))), Err(CurveError::ZeroFrequency)));
}

#[test]
fn twist_family_crossing_counts() {
    for m in 0..=8 {
        let tr = build_crossings(&LissajousParams::twist_family(m), &tol()).unwrap();
        assert_eq!(tr.crossing_count(), 6 * m as usize + 1);
        assert_eq!(tr.visits.len(), 2 * tr.crossing_count());
    }
}

#[test]
fn type_two_middle_crossings_have_sign_opposite_to_x() {
    let tr = build_crossings(&LissajousParams::twist_family(2), &tol()).unwrap();
    let mids: Vec<_> = tr
        .sites
        .iter()
        .filter(|s| s.dp.kind == DoublePointKind::TypeII && s.dp.j == 2)
        .collect();
    assert_eq!(mids.len(), 4);
    for s in mids {
        assert_eq!(s.sign as f64, -s.dp.x.signum());
    }
}

#[test]
fn family_sign_symmetries() {
    for m in 1..=6u32 {
        let tr = build_crossings(&LissajousParams::twist_family(m), &tol()).unwrap();
        let sign = |k: i64, j: i64| {
            tr.sites
                .iter()
                .find(|s| s.dp.kind == DoublePointKind::TypeII && s.dp.k == k && s.dp.j == j)
                .map(|s| s.sign)
        };
        let ny = 2 * m as i64 + 1;
        for k in 1..ny {
            // Points with j = 1, 3 exist only for k <= m.
            assert_eq!(sign(k, 1).is_some(), k <= m as i64);
            assert_eq!(sign(k, 1), sign(k, 3), "m={m} k={k}");
            assert_eq!(sign(k, 2).unwrap(), sign(ny - k, 2).unwrap(), "m={m} k={k}");
        }
    }
}

#[test]
fn claims_hold_across_the_family() {
    for m in 2..=8 {
        let checks = twist_claims(m, &tol()).unwrap();
        assert_eq!(checks.len(), 3);
        for c in checks {
            assert!(c.holds, "m={m} claim {}: {:?}", c.claim, c.violations);
        }
    }
}

#[test]
fn singular_phases_and_intervals() {
    for (m, nz) in [(1, 13), (2, 19), (3, 25)] {
        let s = family_singular_phases(m, nz).unwrap();
        assert_eq!(s.interior.len(), 2 * m as usize + 2);
        let iv = family_phase_intervals(m, nz).unwrap();
        assert_eq!(iv.len(), 2 * m as usize + 3);
        for w in iv.windows(2) {
            assert_eq!(w[0].hi, w[1].lo);
        }
    }
    assert!(matches!(family_singular_phases(2, 20), Err(CurveError::BadFrequency(_))));
    assert!(matches!(family_singular_phases(2, 15), Err(CurveError::BadFrequency(_))));
}

#[test]
fn twist_phase_lies_in_a_safe_interval() {
    for m in 1..=4 {
        let p = LissajousParams::twist_family(m);
        let phz = p.phz;
        let iv = family_phase_intervals(m, p.nz).unwrap();
        assert!(iv.iter().any(|i| i.lo < phz && phz < i.hi), "m={m}");
    }
}

#[test]
fn gauss_code_is_constant_on_each_interval() {
    for (m, nz) in [(1, 13), (2, 19)] {
        let base = LissajousParams::twist_family(m).with_phz(ExactAngle::ZERO);
        let base = LissajousParams { nz, ..base };
        for iv in family_phase_intervals(m, nz).unwrap() {
            let codes: Vec<_> = [rational(1, 4), rational(1, 2), rational(3, 4)]
                .into_iter()
                .map(|f| {
                    let tr = build_crossings(&base.with_phz(iv.sample(f)), &tol()).unwrap();
                    diagram_from_crossings(&tr).unwrap()
                })
                .collect();
            assert_eq!(codes[0], codes[1]);
            assert_eq!(codes[1], codes[2]);
        }
    }
}

#[test]
fn symmetry_of_odd_and_even_frequencies() {
    let p = params((3, 5, 7), (ExactAngle::unit(rational(1, 3)), ExactAngle::unit(rational(2, 7)), ExactAngle::ZERO));
    let r = symmetry_check(&p, &tol());
    assert_eq!(r.amphicheiral_identity, Some(true));
    assert_eq!(r.axis, None);
    for m in 0..=4 {
        let r = symmetry_check(&LissajousParams::twist_family(m), &tol());
        assert_eq!(r.two_periodic_identity, Some(true));
        assert_eq!(r.axis, Some(Axis::X));
        assert_eq!(r.axis_winding.map(i64::abs), Some(1), "m={m}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn double_point_count_and_oracle((nx, ny, _) in coprime_triple(), phx in generic_phase(), phy in generic_phase()) {
        let dps = match double_points(nx, ny, &phx, &phy, &tol()) {
            Ok(d) => d,
            Err(CurveError::DegenerateProjection(_)) => return Ok(()),
            Err(e) => panic!("{e}"),
        };
        prop_assert_eq!(dps.len() as u32, 2 * nx * ny - nx - ny);
        let oracle = double_points_oracle(nx, ny, phx.to_f64(), phy.to_f64(), 400 * (nx + ny) as usize);
        prop_assert_eq!(oracle.len(), dps.len());
        for dp in &dps {
            let (a, b) = (dp.t1.to_f64().rem_euclid(std::f64::consts::TAU), dp.t2.to_f64().rem_euclid(std::f64::consts::TAU));
            let (a, b) = (a.min(b), a.max(b));
            prop_assert!(oracle.iter().any(|&(u, v)| (u - a).abs() < 1e-6 && (v - b).abs() < 1e-6));
        }
    }

    #[test]
    fn sign_is_swap_invariant_and_matches_finite_differences(
        n in coprime_triple(), phx in generic_phase(), phy in generic_phase(), phz in generic_phase()
    ) {
        let p = params(n, (phx, phy, phz));
        let dps = match double_points(p.nx, p.ny, &p.phx, &p.phy, &tol()) {
            Ok(d) => d,
            Err(_) => return Ok(()),
        };
        for dp in dps {
            let s = match crossing_sign(&p, &dp, &tol()) {
                Ok(s) => s,
                Err(CurveError::SingularCrossing { .. }) => continue,
                Err(e) => panic!("{e}"),
            };
            prop_assert_eq!(crossing_sign(&p, &dp.swapped(), &tol()).unwrap(), s);
            let fd = finite_difference_sign(&p, dp.t1.to_f64(), dp.t2.to_f64());
            prop_assert_eq!(fd, s as f64);
        }
    }

    #[test]
    fn odd_frequencies_are_point_symmetric(a in 0u32..4, b in 0u32..4, c in 0u32..6, phx in generic_phase(), phy in generic_phase()) {
        let n = (2 * a + 1, 2 * b + 1, 2 * c + 1);
        prop_assume!(n.0.gcd(&n.1) == 1 && n.0.gcd(&n.2) == 1 && n.1.gcd(&n.2) == 1);
        let r = symmetry_check(&params(n, (phx, phy, ExactAngle::ZERO)), &tol());
        prop_assert_eq!(r.amphicheiral_identity, Some(true));
    }
}
