use elastic_core::{fit, solve, FitOptions, SplineProblem, UnitTangent, Vec2};

fn problems() -> Vec<SplineProblem> {
    let p = |v: &[(f64, f64)]| v.iter().map(|&(x, y)| Vec2::new(x, y)).collect::<Vec<_>>();
    vec![
        SplineProblem::open(p(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)])).unwrap(),
        SplineProblem::open(p(&[(0.0, 0.0), (1.0, 0.6), (2.0, -0.2), (3.0, 0.4)])).unwrap(),
        SplineProblem::new(p(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (0.0, 1.0)]), Vec::new(), true).unwrap(),
        SplineProblem::new(
            p(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]),
            vec![Some(Vec2::new(0.0, 1.0)), None, None],
            false,
        )
        .unwrap(),
    ]
}

fn opts() -> FitOptions {
    FitOptions { restarts: 1, ..FitOptions::default() }
}

#[test]
fn segments_are_self_consistent_and_admissible() {
    for p in problems() {
        let f = fit(&p, &opts()).unwrap();
        let sum: f64 = f.segment_energies.iter().sum();
        assert!((f.total_energy - sum).abs() <= 1e-9);
        let n = p.points.len();
        for (k, &e) in f.segment_energies.iter().enumerate() {
            let j = (k + 1) % n;
            let u = UnitTangent::from_angle(p.points[k], f.angles[k]);
            let v = UnitTangent::from_angle(p.points[j], f.angles[j]);
            let r = solve(&u, &v).unwrap();
            assert!((r.energy - e).abs() <= 1e-9 * e.max(1.0));
            assert!(r.curve.is_s_curve(512).unwrap());
            assert_eq!(r.case_tag, f.case_tags[k]);
        }
        // Joins inherit the solver's connection tolerance.
        f.curve.check_g1(1e-7).unwrap();
    }
}

#[test]
fn fitted_angles_are_locally_optimal() {
    for p in problems() {
        let f = fit(&p, &opts()).unwrap();
        let free = (0..p.points.len()).filter(|&i| p.fixed_dirs.get(i).copied().flatten().is_none());
        for i in free {
            for h in [-0.1, 0.1] {
                let mut a = f.angles.clone();
                a[i] += h;
                if let Some(e) = p.total_energy(&a).unwrap() {
                    assert!(e >= f.total_energy - 1e-9, "node {i} by {h}: {e} < {}", f.total_energy);
                }
            }
        }
    }
}

#[test]
fn fixed_directions_are_kept() {
    let p = &problems()[3];
    let f = fit(p, &opts()).unwrap();
    let start = f.curve.start_tangent();
    assert!((start.dir - Vec2::new(0.0, 1.0)).hypot() < 1e-9);
}

#[test]
fn angle_count_is_checked() {
    let p = &problems()[0];
    assert!(p.total_energy(&[0.0, 0.0]).is_err());
}
