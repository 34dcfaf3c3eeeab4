//! The rectangular elastica `E(t) = (sin t, ξ(t))`, `ξ' = sin²t / √(1 + sin²t)`, `ξ(0) = 0`.
//!
//! `ξ` is odd and `ξ(t + π) = d + ξ(t)` with `d = ξ(π) ≈ 1.1981402347355922`,
//! so `E(t + 2π) = E(t) + (0, 2d)`. The signed curvature is `2 sin t` and the
//! bending energy of `E` over `[a, b]` is `ξ(b) − ξ(a)`.
//!
//! Two independent routes are provided for the energy of the arc `E[0, t]`:
//! direct quadrature of `ξ'`, and `½∫₀^δ √sin τ dτ` where `δ` is the turning
//! angle of the arc. Hot paths use Chebyshev interpolants of both, built once
//! from the direct quadratures.

use core::f64::consts::{FRAC_PI_2, PI, SQRT_2};

#[cfg(not(feature = "std"))]
use num_traits::Float;
use once_cell::race::OnceBox;

use alloc::boxed::Box;

use crate::quad::integrate;
use crate::vec2::Vec2;
use crate::{Error, TOL};

type Result<T> = core::result::Result<T, Error>;

#[inline]
fn xi_integrand(t: f64) -> f64 {
    let s2 = t.sin().powi(2);
    s2 / (1.0 + s2).sqrt()
}

/// `∫₀^x s·√sin(s²) ds`, which equals `½∫₀^{x²} √sin τ dτ`. Smooth in `x` on
/// `[0, √π)`, unlike the integrand in `τ`.
fn sqrt_sin_substituted(x: f64) -> f64 {
    integrate(|s| s * (s * s).sin().max(0.0).sqrt(), 0.0, x, TOL.sqrt_sin_abs)
}

/// `ξ` on `[0, π/2]` by quadrature.
fn xi_base_direct(r: f64) -> f64 {
    integrate(xi_integrand, 0.0, r, TOL.xi_abs)
}

static D: OnceBox<f64> = OnceBox::new();

/// `d = ξ(π)`, the rise of `E` over half a period and the energy of `E[0, π]`.
pub fn d() -> f64 {
    *D.get_or_init(|| Box::new(2.0 * xi_base_direct(FRAC_PI_2)))
}

/// Splits `t ≥ 0` as `kπ + r` and evaluates `ξ` with a base routine valid on `[0, π/2]`.
#[inline]
fn xi_reduced(t: f64, base: impl Fn(f64) -> f64) -> f64 {
    let (sign, t) = if t < 0.0 { (-1.0, -t) } else { (1.0, t) };
    let k = (t / PI).floor();
    let mut r = t - k * PI;
    let mut k = k;
    if r >= PI {
        r -= PI;
        k += 1.0;
    } else if r < 0.0 {
        r += PI;
        k -= 1.0;
    }
    let dv = d();
    let v = if r <= FRAC_PI_2 { base(r) } else { dv - base(PI - r) };
    sign * (k * dv + v)
}

fn check_finite(t: f64) -> Result<()> {
    if t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("elastica parameter must be finite"))
    }
}

/// `ξ(t)` by adaptive quadrature after odd/quasi-periodic reduction.
pub fn xi(t: f64) -> Result<f64> {
    check_finite(t)?;
    Ok(xi_reduced(t, xi_base_direct))
}

/// The model point `E(t) = (sin t, ξ(t))`.
pub fn point(t: f64) -> Result<Vec2> {
    Ok(Vec2::new(t.sin(), xi(t)?))
}

/// `|E'(t)| = 1/√(1 + sin²t)`.
pub fn speed(t: f64) -> f64 {
    1.0 / (1.0 + t.sin().powi(2)).sqrt()
}

/// Signed curvature `2 sin t`.
pub fn curvature(t: f64) -> f64 {
    2.0 * t.sin()
}

/// Unit tangent direction `(cos t·√(1 + sin²t), sin²t)`.
pub fn unit_direction(t: f64) -> Vec2 {
    let s = t.sin();
    Vec2::new(t.cos() * (1.0 + s * s).sqrt(), s * s)
}

/// `A(t) = 2·arccos(cos t / √2)`; the continuous direction angle of `E` is `A(t) − π/2`.
#[inline]
fn turning_potential(t: f64) -> f64 {
    2.0 * (t.cos() / SQRT_2).acos()
}

/// Continuous direction angle of `E` at `t`, zero at `t = 0`. Even and `2π`-periodic.
pub fn direction_angle(t: f64) -> f64 {
    turning_potential(t) - FRAC_PI_2
}

/// Signed turning angle of `E` over `[a, b]`.
pub fn turning(a: f64, b: f64) -> f64 {
    turning_potential(b) - turning_potential(a)
}

/// The `t ∈ [0, π]` for which `E[0, t]` turns by `delta`.
pub fn param_from_turning(delta: f64) -> Result<f64> {
    let delta = clamp_angle(delta)?;
    Ok(if delta <= FRAC_PI_2 {
        param_from_turning_raw(delta)
    } else {
        PI - param_from_turning_raw(PI - delta)
    })
}

/// `cos t = √2·cos((δ + π/2)/2)` and `sin t = √sin δ`. Accurate for `δ ≤ π/2`;
/// larger angles use the symmetry `t(π − δ) = π − t(δ)`.
#[inline]
fn param_from_turning_raw(delta: f64) -> f64 {
    let c = SQRT_2 * (0.5 * (delta + FRAC_PI_2)).cos();
    delta.sin().max(0.0).sqrt().atan2(c)
}

/// Accepts `[0, π]` with a few ulps of slack.
fn clamp_angle(delta: f64) -> Result<f64> {
    if !(-TOL.boundary..=PI + TOL.boundary).contains(&delta) {
        return Err(Error::Domain("turning angle must lie in [0, π]"));
    }
    Ok(delta.clamp(0.0, PI))
}

/// Bending energy `ξ(b) − ξ(a)` of `E[a, b]`.
pub fn segment_energy(a: f64, b: f64) -> Result<f64> {
    check_finite(a)?;
    check_finite(b)?;
    if a > b {
        return Err(Error::Domain("segment energy needs a ≤ b"));
    }
    Ok(xi(b)? - xi(a)?)
}

/// `½∫₀^δ √sin τ dτ` for `δ ∈ [0, π]`.
///
/// The square-root endpoint behaviour is removed by substituting `τ = s²` on
/// `[0, π/2]` and `τ = π − s²` on `[π/2, π]`.
pub fn half_sqrt_sin_integral(delta: f64) -> Result<f64> {
    let delta = clamp_angle(delta)?;
    let half = sqrt_sin_substituted(FRAC_PI_2.sqrt());
    Ok(if delta <= FRAC_PI_2 {
        sqrt_sin_substituted(delta.sqrt())
    } else {
        2.0 * half - sqrt_sin_substituted((PI - delta).sqrt())
    })
}

/// Model arclength of `E[a, b]`.
pub fn arclength(a: f64, b: f64) -> f64 {
    integrate(speed, a, b, TOL.arclength_rel * (b - a).abs().max(1e-300))
}

/// Angles `(ψ, θ)` between the chord `[0, E(t)]` and the arc `E[0, t]` at
/// `E(0)` and `E(t)` respectively.
pub fn chord_angles(t: f64) -> Result<(f64, f64)> {
    check_finite(t)?;
    if !(TOL.chord_min_t..=PI).contains(&t) {
        return Err(Error::Domain("chord angles need t in (0, π]"));
    }
    let chord = Vec2::new(t.sin(), xi(t)?).atan2();
    Ok((chord, direction_angle(t) - chord))
}

/// Distance from the origin to the tangent line of `E` at `E(t)`:
/// `sin³t − ξ(t)·cos t·√(1 + sin²t)`.
pub fn tangent_line_distance(t: f64) -> Result<f64> {
    check_finite(t)?;
    if !(0.0..=PI).contains(&t) {
        return Err(Error::Domain("tangent line distance needs t in [0, π]"));
    }
    let s = t.sin();
    Ok(s.powi(3) - xi(t)? * t.cos() * (1.0 + s * s).sqrt())
}

// ---------------------------------------------------------------------------
// Chebyshev interpolants for hot paths. Both `ξ(r)` and `Φ(x)` vanish to third
// order at 0, so the tables hold `ξ(r)/r³` and `Φ(x)/x³`.

const CHEB_N: usize = 64;

#[derive(Debug)]
struct Chebyshev {
    lo: f64,
    hi: f64,
    c: [f64; CHEB_N],
    /// Coefficients past this index are negligible and skipped.
    len: usize,
}

impl Chebyshev {
    fn fit(lo: f64, hi: f64, f: impl Fn(f64) -> f64) -> Self {
        let n = CHEB_N as f64;
        let mut vals = [0.0; CHEB_N];
        for (j, v) in vals.iter_mut().enumerate() {
            let u = (PI * (j as f64 + 0.5) / n).cos();
            *v = f(0.5 * (lo + hi) + 0.5 * (hi - lo) * u);
        }
        let mut c = [0.0; CHEB_N];
        for (k, ck) in c.iter_mut().enumerate() {
            let mut s = 0.0;
            for (j, v) in vals.iter().enumerate() {
                s += v * (PI * k as f64 * (j as f64 + 0.5) / n).cos();
            }
            *ck = 2.0 * s / n;
        }
        c[0] *= 0.5;
        // The tail is quadrature noise near 1e-16; drop it.
        let len = c.iter().rposition(|v| v.abs() > 1e-15).map_or(1, |k| k + 1);
        Chebyshev { lo, hi, c, len }
    }

    #[inline]
    fn eval(&self, x: f64) -> f64 {
        let u = (2.0 * x - self.lo - self.hi) / (self.hi - self.lo);
        let (mut b1, mut b2) = (0.0, 0.0);
        for &ck in self.c[1..self.len.max(1)].iter().rev() {
            let b0 = 2.0 * u * b1 - b2 + ck;
            b2 = b1;
            b1 = b0;
        }
        u * b1 - b2 + self.c[0]
    }
}

static XI_TABLE: OnceBox<Chebyshev> = OnceBox::new();
static SQRT_SIN_TABLE: OnceBox<Chebyshev> = OnceBox::new();

fn xi_table() -> &'static Chebyshev {
    XI_TABLE.get_or_init(|| Box::new(Chebyshev::fit(0.0, FRAC_PI_2, |r| xi_base_direct(r) / (r * r * r))))
}

fn sqrt_sin_table() -> &'static Chebyshev {
    SQRT_SIN_TABLE.get_or_init(|| {
        Box::new(Chebyshev::fit(0.0, FRAC_PI_2.sqrt(), |x| sqrt_sin_substituted(x) / (x * x * x)))
    })
}

/// Interpolated `ξ`; agrees with [`xi`] to about 1e-14. No finiteness check.
pub(crate) fn xi_fast(t: f64) -> f64 {
    let table = xi_table();
    xi_reduced(t, |r| r * r * r * table.eval(r))
}

/// `Φ(x) = ∫₀^x s·√sin(s²) ds` from its table.
#[inline]
fn phi_fast(x: f64) -> f64 {
    x * x * x * sqrt_sin_table().eval(x)
}

/// Interpolated [`half_sqrt_sin_integral`]; `delta` is clamped to `[0, π]`.
#[cfg(test)]
fn half_sqrt_sin_fast(delta: f64) -> f64 {
    let delta = delta.clamp(0.0, PI);
    half_sqrt_sin_split(delta, PI - delta)
}

/// Interpolated [`half_sqrt_sin_integral`] given both `δ` and `π − δ`, so that
/// callers holding an accurate complement keep full precision near `π`.
pub(crate) fn half_sqrt_sin_split(delta: f64, complement: f64) -> f64 {
    if delta <= FRAC_PI_2 {
        phi_fast(delta.max(0.0).sqrt())
    } else {
        d() - phi_fast(complement.max(0.0).sqrt())
    }
}

/// Interpolated model point.
pub(crate) fn point_fast(t: f64) -> Vec2 {
    Vec2::new(t.sin(), xi_fast(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_PI_4;

    // ξ(π) from an arbitrary-precision quadrature of both integrands.
    const D_REF: f64 = 1.198_140_234_735_592_2;

    #[test]
    fn d_value() {
        assert!((d() - D_REF).abs() < 1e-13);
        assert!((half_sqrt_sin_integral(PI).unwrap() - D_REF).abs() < 1e-12);
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi(0.0).unwrap(), 0.0);
        assert!((xi(PI).unwrap() - d()).abs() < 1e-15);
        assert!((xi(-PI).unwrap() + d()).abs() < 1e-15);
        let half = xi(FRAC_PI_2).unwrap();
        assert!((half - 0.5 * D_REF).abs() < 1e-13);
        assert!((xi(1.5 * PI).unwrap() - (d() + half)).abs() < 1e-13);
        assert!(xi(f64::NAN).is_err());
        assert!(xi(f64::INFINITY).is_err());
    }

    #[test]
    fn point_examples() {
        assert_eq!(point(0.0).unwrap(), Vec2::ZERO);
        let p = point(PI).unwrap();
        assert!(p.x.abs() < 1e-15 && (p.y - d()).abs() < 1e-14);
        let p = point(2.0 * PI).unwrap();
        assert!(p.x.abs() < 1e-15 && (p.y - 2.0 * d()).abs() < 1e-14);
    }

    #[test]
    fn speed_curvature_examples() {
        assert_eq!(speed(0.0), 1.0);
        assert!((speed(FRAC_PI_2) - 1.0 / SQRT_2).abs() < 1e-15);
        for t in [0.3, -1.2, 2.5] {
            assert!((speed(t) - speed(t + PI)).abs() < 1e-14);
        }
        assert_eq!(curvature(0.0), 0.0);
        assert_eq!(curvature(FRAC_PI_2), 2.0);
        assert_eq!(curvature(-FRAC_PI_2), -2.0);
    }

    #[test]
    fn turning_examples() {
        assert!((turning(0.0, PI) - PI).abs() < 1e-15);
        assert!((turning(0.0, FRAC_PI_2) - FRAC_PI_2).abs() < 1e-15);
        assert!((turning(-PI, 0.0) + PI).abs() < 1e-15);
        assert_eq!(param_from_turning(0.0).unwrap(), 0.0);
        assert!((param_from_turning(PI).unwrap() - PI).abs() < 1e-15);
        assert!((param_from_turning(FRAC_PI_2).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!(param_from_turning(-0.1).is_err());
        assert!(param_from_turning(PI + 0.1).is_err());
    }

    #[test]
    fn direction_matches_angle() {
        for i in 0..=40 {
            let t = -2.0 * PI + 4.0 * PI * i as f64 / 40.0;
            let a = Vec2::from_angle(direction_angle(t));
            assert!((a - unit_direction(t)).hypot() < 1e-14, "t = {t}");
        }
    }

    #[test]
    fn segment_energy_examples() {
        assert!((segment_energy(0.0, PI).unwrap() - d()).abs() < 1e-15);
        assert_eq!(segment_energy(0.7, 0.7).unwrap(), 0.0);
        let t = 2.2;
        assert!((segment_energy(-t, 0.0).unwrap() - xi(t).unwrap()).abs() < 1e-15);
        assert!(segment_energy(1.0, 0.5).is_err());
    }

    #[test]
    fn half_sqrt_sin_examples() {
        assert_eq!(half_sqrt_sin_integral(0.0).unwrap(), 0.0);
        let v = half_sqrt_sin_integral(FRAC_PI_2).unwrap();
        assert!((v - xi(FRAC_PI_2).unwrap()).abs() < 1e-12);
        assert!(half_sqrt_sin_integral(4.0).is_err());
    }

    #[test]
    fn chord_angle_examples() {
        let (psi, theta) = chord_angles(PI).unwrap();
        assert!((psi - FRAC_PI_2).abs() < 1e-14 && (theta - FRAC_PI_2).abs() < 1e-14);
        let (psi, theta) = chord_angles(FRAC_PI_2).unwrap();
        // arbitrary-precision reference: ψ = atan(ξ(π/2)), θ = π/2 − ψ
        assert!((psi - 0.539_735_482_534_623_1).abs() < 1e-13);
        assert!((theta - 1.031_060_844_260_273_5).abs() < 1e-13);
        assert!(chord_angles(0.0).is_err());
        assert!(chord_angles(1e-12).is_err());
        assert!(chord_angles(3.2).is_err());
    }

    #[test]
    fn tangent_distance_examples() {
        assert_eq!(tangent_line_distance(0.0).unwrap(), 0.0);
        assert!((tangent_line_distance(FRAC_PI_2).unwrap() - 1.0).abs() < 1e-15);
        assert!((tangent_line_distance(PI).unwrap() - d()).abs() < 1e-14);
        assert!(tangent_line_distance(-0.1).is_err());
    }

    #[test]
    fn tables_match_direct() {
        for i in 0..=997 {
            let t = -3.0 * PI + 6.0 * PI * i as f64 / 997.0;
            assert!((xi_fast(t) - xi(t).unwrap()).abs() < 1e-13, "xi at {t}");
        }
        for i in 0..=1000 {
            let delta = PI * i as f64 / 1000.0;
            let a = half_sqrt_sin_fast(delta);
            let b = half_sqrt_sin_integral(delta).unwrap();
            assert!((a - b).abs() < 1e-13, "sqrt-sin at {delta}");
        }
        assert!((half_sqrt_sin_fast(FRAC_PI_4) - half_sqrt_sin_integral(FRAC_PI_4).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn arclength_half_period() {
        // arbitrary-precision reference value of ∫₀^π |E'| dt
        assert!((arclength(0.0, PI) - 2.622_057_554_292_119_8).abs() < 1e-12);
    }
}
