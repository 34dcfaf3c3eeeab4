//! Chord construction on `J`, the curve following `E` on `[−π, 0]` and the
//! positive real axis afterwards.

use super::forms::closing_map;
use super::AngleConfig;
use crate::elastica::{direction_angle, param_from_turning, point_fast};
use crate::roots::bisect_sign;
use crate::{CurveSegment, Error, PiecewiseCurve, Vec2, TOL};
use core::f64::consts::PI;

/// Result of the case (c) construction in the canonical frame.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseCSolution {
    pub curve: PiecewiseCurve,
    pub t1: f64,
    pub t2: f64,
}

/// Where the ray from `J(t)` meets `J` again, and the angle it makes there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayHit {
    /// Parameter of the second intersection; values above 0 lie on the real axis.
    pub mu: f64,
    /// Interior angle between the chord and `J` at the second intersection.
    pub omega: f64,
}

fn j_point(s: f64) -> Vec2 {
    if s <= 0.0 {
        point_fast(s)
    } else {
        Vec2::new(s, 0.0)
    }
}

fn j_angle(s: f64) -> f64 {
    if s <= 0.0 {
        direction_angle(s)
    } else {
        0.0
    }
}

impl AngleConfig {
    /// `b < 0` with `τ(b) = α`: the start of the ray construction must lie
    /// before the point where `J` already points along `e^{iα}`.
    pub fn ray_limit(&self) -> Result<f64, Error> {
        Ok(-param_from_turning(self.alpha)?)
    }

    /// Casts the ray from `J(t)` at angle `α` clockwise from the tangent and
    /// finds its next intersection with `J`. Needs `−π ≤ t < b`.
    pub fn ray_hit(&self, t: f64) -> Result<RayHit, Error> {
        let b = self.ray_limit()?;
        if !(t >= -PI - TOL.boundary && t < b) {
            return Err(Error::Domain("ray start must lie in [−π, b)"));
        }
        let p = j_point(t);
        let heading = direction_angle(t) - self.alpha;
        let w = Vec2::from_angle(heading);
        if !(w.y > 0.0) {
            return Err(Error::Internal("ray does not point upward"));
        }
        // The ray meets the real axis at x*, so J(s) is right of the ray there.
        let x_star = p.x - w.x * p.y / w.y;
        let hi = x_star.max(0.0) + 1.0;
        let left = |s: f64| w.cross(j_point(s) - p) > 0.0;
        let (lo, hi) = bisect_sign(left, t, hi, TOL.ray_param);
        let mu = 0.5 * (lo + hi);
        Ok(RayHit { mu, omega: heading - j_angle(mu) })
    }

    /// Case (c): a single arc `E[t₁, t₂]` with `−π < t₁ < t₂ ≤ 0` whose chord
    /// meets it at interior angles `α` and `−β`.
    pub fn solve_case_c(&self) -> Result<CaseCSolution, Error> {
        if !(self.beta < 0.0) {
            return Err(Error::Domain("case (c) needs β < 0"));
        }
        let delta = -self.beta;
        let b = self.ray_limit()?;
        let (lo, hi) = (-PI + TOL.chord_min_t, b - TOL.chord_min_t);
        if !(lo < hi) {
            return Err(Error::Internal("case (c) bracket is empty"));
        }
        let f = |t: f64| self.ray_hit(t).map(|h| h.omega - delta);
        if !(f(lo)? > 0.0 && f(hi)? < 0.0) {
            return Err(Error::Internal("ω − δ does not change sign on the bracket"));
        }
        let mut err = None;
        let (a, c) = bisect_sign(
            |t| match f(t) {
                Ok(v) => v > 0.0,
                Err(e) => {
                    err = Some(e);
                    false
                }
            },
            lo,
            hi,
            TOL.ray_param,
        );
        if let Some(e) = err {
            return Err(e);
        }
        let t1 = 0.5 * (a + c);
        let t2 = self.ray_hit(t1)?.mu;
        if t2 > TOL.case_c_end {
            return Err(Error::Internal("case (c) chord ends past J(0)"));
        }
        let t2 = t2.min(0.0);
        let map = closing_map(t1, t2)?;
        let curve = PiecewiseCurve::single(CurveSegment::arc(map, t1, t2, false)?);
        Ok(CaseCSolution { curve, t1, t2 })
    }
}
