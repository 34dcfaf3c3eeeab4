//! Reference computations kept independent of the library: tanh-sinh
//! quadrature for `ξ` and `½∫√sin`, the `Γ` functions built on it, and
//! helpers for random configurations and result checks.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};

use elastic_core::{Similarity, SolverResult, UnitTangent, Vec2};
use rand::Rng;

/// Double exponential quadrature of `f` over `[a, b]`. Tolerates integrable
/// endpoint singularities such as `√(b − x)`.
pub fn tanh_sinh(f: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let (c, r) = (0.5 * (a + b), 0.5 * (b - a));
    if r == 0.0 {
        return 0.0;
    }
    const U_MAX: f64 = 3.2;
    let pair = |u: f64| {
        let s = FRAC_PI_2 * u.sinh();
        let x = s.tanh();
        let w = FRAC_PI_2 * u.cosh() / s.cosh().powi(2);
        w * (f(c + r * x) + f(c - r * x))
    };
    let mut h = 0.5;
    let mut sum = FRAC_PI_2 * f(c);
    let mut k = 1;
    while k as f64 * h <= U_MAX {
        sum += pair(k as f64 * h);
        k += 1;
    }
    let mut est = r * h * sum;
    for _ in 0..12 {
        h *= 0.5;
        let mut k = 1;
        while k as f64 * h <= U_MAX {
            sum += pair(k as f64 * h);
            k += 2;
        }
        let next = r * h * sum;
        let done = (next - est).abs() <= 1e-15 * next.abs().max(1e-3);
        est = next;
        if done {
            break;
        }
    }
    est
}

pub fn xi_prime(t: f64) -> f64 {
    let s2 = t.sin().powi(2);
    s2 / (1.0 + s2).sqrt()
}

pub fn xi(t: f64) -> f64 {
    tanh_sinh(xi_prime, 0.0, t)
}

/// `½∫₀^δ √sin τ dτ`, integrated in `τ` directly.
pub fn half_sqrt_sin(delta: f64) -> f64 {
    0.5 * tanh_sinh(|x| x.sin().max(0.0).sqrt(), 0.0, delta)
}

pub fn d() -> f64 {
    xi(PI)
}

/// `(y₁, y₂)` at `γ`.
pub fn ys(alpha: f64, beta: f64, gamma: f64) -> (f64, f64) {
    (half_sqrt_sin(alpha - gamma), half_sqrt_sin(beta - gamma))
}

pub fn g(alpha: f64, beta: f64, gamma: f64) -> f64 {
    let (y1, y2) = ys(alpha, beta, gamma);
    (y1 + y2).powi(2) / -gamma.sin()
}

/// Lower end, upper end and openness of `Γ`.
pub fn gamma_range(alpha: f64, beta: f64) -> (f64, f64, bool) {
    if beta < 0.0 {
        (alpha - PI, beta, false)
    } else {
        (alpha - PI, 0.0, true)
    }
}

/// Golden section minimum of `f` on `[a, b]`.
pub fn golden(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - r * (b - a);
    let mut e = a + r * (b - a);
    let (mut fc, mut fe) = (f(c), f(e));
    while b - a > tol {
        if fc < fe {
            b = e;
            e = c;
            fe = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + r * (b - a);
            fe = f(e);
        }
    }
    if fc < fe {
        (c, fc)
    } else {
        (e, fe)
    }
}

/// Brute-force minimum of `G` on an `n`-point grid over `Γ`, returned raw and
/// after golden refinement around the best grid point.
pub fn grid_min_g(alpha: f64, beta: f64, n: usize) -> (f64, f64) {
    let (lo, hi, open) = gamma_range(alpha, beta);
    let step = (hi - lo) / if open { n as f64 } else { (n - 1) as f64 };
    let xs: Vec<f64> = (0..n).map(|k| lo + step * k as f64).collect();
    let vals: Vec<f64> = xs.iter().map(|&x| g(alpha, beta, x)).collect();
    let (k, raw) = vals
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::INFINITY), |best, (k, v)| if v < best.1 { (k, v) } else { best });
    let a = if k == 0 { lo } else { xs[k - 1] };
    let b = if k + 1 == n { if open { hi - 1e-9 } else { hi } } else { xs[k + 1] };
    let (_, refined) = golden(|x| g(alpha, beta, x), a, b, 1e-10);
    (raw, refined.min(raw))
}

/// Uniformly random feasible canonical configuration.
pub fn random_config(rng: &mut impl Rng) -> (f64, f64) {
    let alpha = rng.gen_range(0.05..PI - 0.05);
    let lo = (-alpha).max(alpha - PI);
    (alpha, rng.gen_range(lo..=alpha))
}

/// Point and unit direction of `E` at `t`, using the quadrature `ξ`.
pub fn model_tangent(t: f64) -> UnitTangent {
    let s = t.sin();
    let dir = Vec2::new(t.cos() * (1.0 + s * s).sqrt(), s * s);
    UnitTangent::new(Vec2::new(s, xi(t)), dir).unwrap()
}

/// Dense polyline of `E` on `[a, b]`, with `ξ` accumulated by 5-point
/// Gauss–Legendre panels.
pub fn model_polyline(a: f64, b: f64, n: usize) -> Vec<Vec2> {
    const X: [f64; 5] = [0.0, -0.5384693101056831, 0.5384693101056831, -0.906179845938664, 0.906179845938664];
    const W: [f64; 5] = [0.5688888888888889, 0.47862867049936647, 0.47862867049936647, 0.23692688505618908, 0.23692688505618908];
    let h = (b - a) / n as f64;
    let mut y = xi(a);
    let mut out = Vec::with_capacity(n + 1);
    out.push(Vec2::new(a.sin(), y));
    for k in 0..n {
        let m = a + h * (k as f64 + 0.5);
        y += 0.5 * h * X.iter().zip(W).map(|(x, w)| w * xi_prime(m + 0.5 * h * x)).sum::<f64>();
        let t = a + h * (k + 1) as f64;
        out.push(Vec2::new(t.sin(), y));
    }
    out
}

pub fn distance_to_polyline(p: Vec2, line: &[Vec2]) -> f64 {
    line.windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            let ab = b - a;
            let s = ((p - a).dot(ab) / ab.dot(ab)).clamp(0.0, 1.0);
            (a + ab * s - p).hypot()
        })
        .fold(f64::INFINITY, f64::min)
}

pub fn angle_between(a: Vec2, b: Vec2) -> f64 {
    a.cross(b).atan2(a.dot(b)).abs()
}

/// Residuals of a result against its inputs: worst position error relative
/// to the chord and worst direction error in radians, plus the s-curve flag.
pub fn connection_residuals(u: &UnitTangent, v: &UnitTangent, r: &SolverResult) -> (f64, f64, bool) {
    let chord = (v.pos - u.pos).hypot();
    let (s, e) = (r.curve.start_tangent(), r.curve.end_tangent());
    let pos = ((s.pos - u.pos).hypot()).max((e.pos - v.pos).hypot()) / chord;
    let dir = angle_between(s.dir, u.dir).max(angle_between(e.dir, v.dir));
    (pos, dir, r.curve.is_s_curve(512).unwrap())
}

/// A random rotation, translation and optionally a dilation.
pub fn random_motion(rng: &mut impl Rng, dilate: bool) -> Similarity {
    let scale = if dilate { rng.gen_range(0.2..5.0) } else { 1.0 };
    Similarity::new(
        scale,
        rng.gen_range(-PI..PI),
        Vec2::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)),
        false,
    )
    .unwrap()
}

pub fn canonical_pair(alpha: f64, beta: f64) -> (UnitTangent, UnitTangent) {
    (
        UnitTangent::from_angle(Vec2::ZERO, alpha),
        UnitTangent::from_angle(Vec2::new(1.0, 0.0), beta),
    )
}
