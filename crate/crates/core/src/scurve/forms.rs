use alloc::vec::Vec;

use super::gamma::Piece;
use super::AngleConfig;
use crate::elastica::{d, point_fast};
use crate::{CurveSegment, Error, PiecewiseCurve, Similarity, Vec2, TOL};

/// Maps `E(t0) ↦ 0` and `E(t1) ↦ 1`.
pub(super) fn closing_map(t0: f64, t1: f64) -> Result<Similarity, Error> {
    Similarity::from_points(point_fast(t0), point_fast(t1), Vec2::ZERO, Vec2::new(1.0, 0.0))
}

impl AngleConfig {
    /// The single arc directly similar to `E[−t₁, t₂]`, where `E[0, t₁]` turns
    /// by `α − γ` and `E[0, t₂]` by `β − γ`.
    pub fn build_first_form(&self, gamma: f64) -> Result<PiecewiseCurve, Error> {
        let dom = self.gamma_domain();
        if !dom.contains(gamma) {
            return Err(Error::Domain("γ lies outside Γ"));
        }
        let sigma = self.sigma(gamma)?;
        if sigma.abs() > TOL.sigma_consistency {
            return Err(Error::Internal("first form needs σ(γ) = 0"));
        }
        let t1 = Piece::new(self.alpha, gamma)?.param();
        let t2 = Piece::new(self.beta, gamma)?.param();
        let map = closing_map(-t1, t2)?;
        Ok(PiecewiseCurve::single(CurveSegment::arc(map, -t1, t2, false)?))
    }

    /// A u-turn congruent to `λE[−π, 0]`, a line of length `σ/λ` along the
    /// inflection direction `α − π`, then an arc congruent to `λE[0, t₂]`.
    pub fn build_second_form(&self) -> Result<PiecewiseCurve, Error> {
        let gamma = self.alpha - core::f64::consts::PI;
        let terms = self.terms(gamma)?;
        if terms.sigma < -TOL.sigma_consistency {
            return Err(Error::Internal("second form needs σ(α − π) ≥ 0"));
        }
        let lambda = terms.lambda;
        let dir = Vec2::from_angle(gamma);
        let p1 = dir.cmul(Vec2::new(0.0, d())) * lambda;
        let u_turn = Similarity::new(lambda, gamma, p1, false)?;

        let mut segs = Vec::with_capacity(3);
        segs.push(CurveSegment::arc(u_turn, -core::f64::consts::PI, 0.0, false)?);
        let mut p2 = p1;
        if terms.sigma > TOL.min_line {
            p2 = p1 + dir * terms.sigma;
            segs.push(CurveSegment::line(p1, p2)?);
        }
        let t2 = Piece::new(self.beta, gamma)?.param();
        if t2 > 0.0 {
            segs.push(CurveSegment::arc(Similarity::new(lambda, gamma, p2, false)?, 0.0, t2, false)?);
        }
        let curve = PiecewiseCurve::new(segs)?;
        // Absorb rounding so the ends land exactly on 0 and 1.
        let end = curve.end_tangent().pos;
        let fix = Similarity::from_points(Vec2::ZERO, end, Vec2::ZERO, Vec2::new(1.0, 0.0))?;
        Ok(curve.transformed(&fix))
    }
}
