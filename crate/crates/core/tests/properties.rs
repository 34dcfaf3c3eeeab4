mod common;

use std::f64::consts::PI;

use common as oracle;
use elastic_core::geometry::canonicalize;
use elastic_core::scurve::AngleConfig;
use elastic_core::{elastica, solve, Similarity, UnitTangent, Vec2};
use proptest::prelude::*;

fn angle() -> impl Strategy<Value = f64> {
    -PI..PI
}

fn point() -> impl Strategy<Value = Vec2> {
    (-10.0..10.0, -10.0..10.0).prop_map(|(x, y)| Vec2::new(x, y))
}

fn tangent() -> impl Strategy<Value = UnitTangent> {
    (point(), angle()).prop_map(|(p, a)| UnitTangent::from_angle(p, a))
}

fn pair() -> impl Strategy<Value = (UnitTangent, UnitTangent)> {
    (tangent(), tangent()).prop_filter("distinct positions", |(u, v)| (v.pos - u.pos).hypot() > 1e-3)
}

fn config() -> impl Strategy<Value = (f64, f64)> {
    (0.05..PI - 0.05, 0.0..=1.0f64).prop_map(|(alpha, s)| {
        let lo = (-alpha).max(alpha - PI);
        (alpha, lo + s * (alpha - lo))
    })
}

fn motion() -> impl Strategy<Value = Similarity> {
    (0.2..5.0, angle(), point(), any::<bool>())
        .prop_map(|(s, r, t, f)| Similarity::new(s, r, t, f).unwrap())
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_reconstructs_input((u, v) in pair()) {
        let c = canonicalize(&u, &v).unwrap();
        prop_assert!(c.alpha >= 0.0 && c.alpha <= PI + 1e-12);
        prop_assert!(c.beta.abs() <= c.alpha + 1e-12);
        let (a, b) = c.reconstruct();
        for (x, y) in [(a, u), (b, v)] {
            prop_assert!((x.pos - y.pos).hypot() < 1e-9);
            prop_assert!((x.dir - y.dir).hypot() < 1e-12);
        }
    }

    #[test]
    fn solutions_connect_and_are_s_curves((u, v) in pair()) {
        let c = canonicalize(&u, &v).unwrap();
        match solve(&u, &v) {
            Ok(r) => {
                let (pos, dir, s) = oracle::connection_residuals(&u, &v, &r);
                prop_assert!(pos < 1e-7 && dir < 1e-7, "residuals {pos:e} {dir:e}");
                prop_assert!(s);
                prop_assert!(r.energy >= 0.0);
            }
            Err(_) => prop_assert!(!c.is_feasible()),
        }
    }

    #[test]
    fn energy_is_similarity_invariant((alpha, beta) in config(), map in motion()) {
        let (u, v) = oracle::canonical_pair(alpha, beta);
        let base = solve(&u, &v).unwrap().energy;
        let moved = solve(&u.transformed(&map), &v.transformed(&map)).unwrap().energy;
        prop_assert!(close(moved * map.scale, base, 1e-9), "{moved} vs {base}");
    }

    #[test]
    fn reversed_pair_has_same_energy((alpha, beta) in config()) {
        let (u, v) = oracle::canonical_pair(alpha, beta);
        let a = solve(&u, &v).unwrap();
        let b = solve(&v.reversed(), &u.reversed()).unwrap();
        prop_assert!(close(a.energy, b.energy, 1e-9));
        prop_assert_eq!(a.case_tag, b.case_tag);
    }

    #[test]
    fn minimum_is_below_every_sample((alpha, beta) in config(), s in 0.0..1.0f64) {
        let cfg = AngleConfig::new(alpha, beta).unwrap();
        let m = cfg.minimize_g().unwrap();
        let (lo, hi, open) = oracle::gamma_range(alpha, beta);
        let gamma = lo + s * (hi - lo);
        prop_assume!(!open || gamma < -1e-9);
        prop_assert!(m.g_min <= oracle::g(alpha, beta, gamma) * (1.0 + 1e-9));
    }

    #[test]
    fn energy_matches_quadrature(t in 0.0..PI) {
        prop_assert!((elastica::xi(t).unwrap() - oracle::xi(t)).abs() < 1e-12);
    }
}

#[test]
fn tanh_sinh_handles_endpoint_singularities() {
    let v = oracle::tanh_sinh(|x| x.sqrt(), 0.0, 1.0);
    assert!((v - 2.0 / 3.0).abs() < 1e-14);
    let v = oracle::tanh_sinh(|x| (1.0 - x * x).sqrt(), -1.0, 1.0);
    assert!((v - PI / 2.0).abs() < 1e-14);
    let v = oracle::tanh_sinh(f64::sin, 0.0, PI);
    assert!((v - 2.0).abs() < 1e-14);
}

#[test]
fn polyline_oracle_tracks_model_points() {
    let line = oracle::model_polyline(-2.0, 0.5, 400);
    let end = oracle::model_tangent(0.5).pos;
    assert!((line[400] - end).hypot() < 1e-13);
}
