//! Minimal bending energy s-curves between two unit tangents.
//!
//! A tangent pair is brought to the canonical configuration `(α, β)` and
//! classified:
//!
//! - `α = 0`: the chord itself.
//! - `β = α − π`: a u-turn, a line, then a c-curve (second form).
//! - `β ≥ 0`, or `β < 0` with `σ(β) ≥ 0`: the minimiser `γ*` of `G` over `Γ`
//!   picks either the second form or a single elastica arc (first form).
//! - otherwise: a single elastica arc found by a chord construction.

mod case_c;
mod forms;
mod gamma;

use alloc::vec::Vec;
use core::f64::consts::PI;

pub use case_c::{CaseCSolution, RayHit};
pub use gamma::{GammaDomain, GammaMinimum, GammaTerms};

use gamma::Piece;
use crate::geometry::{canonicalize, feasible, CanonicalConfig, LineSegment};
use crate::{CurveSegment, Error, PiecewiseCurve, UnitTangent, Vec2, TOL};

/// A feasible canonical configuration: `u = (0, e^{iα})`, `v = (1, e^{iβ})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleConfig {
    pub alpha: f64,
    pub beta: f64,
}

/// Which construction produced a [`SolverResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CaseTag {
    TrivialLine,
    SecondForm,
    FirstFormInterior,
    FirstFormRightC,
    CCurveCaseC,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::TrivialLine => "trivial_line",
            CaseTag::SecondForm => "second_form",
            CaseTag::FirstFormInterior => "first_form_interior",
            CaseTag::FirstFormRightC => "first_form_right_c",
            CaseTag::CCurveCaseC => "c_curve_case_c",
        }
    }
}

impl core::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Values of `G`, `σ`, `λ` at `γ*`, in the canonical frame.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Diagnostics {
    pub g_min: f64,
    pub sigma: f64,
    pub lambda: f64,
    /// All `γ` found to attain `G_min`, ascending. `gamma_star` is the first.
    pub minimizers: Vec<f64>,
}

/// Output of the solver in the canonical frame.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalSolution {
    pub curve: PiecewiseCurve,
    pub case_tag: CaseTag,
    pub gamma_star: Option<f64>,
    pub t_params: Option<(f64, f64)>,
    pub diagnostics: Option<Diagnostics>,
}

/// The optimal s-curve between two tangents, in world coordinates.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SolverResult {
    pub curve: PiecewiseCurve,
    pub energy: f64,
    pub case_tag: CaseTag,
    pub gamma_star: Option<f64>,
    pub t_params: Option<(f64, f64)>,
    pub diagnostics: Option<Diagnostics>,
    pub alpha: f64,
    pub beta: f64,
}

impl AngleConfig {
    /// Checks `α ∈ [0, π]`, `|β| ≤ α` and feasibility. A `β` within rounding
    /// of `α − π` is snapped onto it.
    pub fn new(alpha: f64, beta: f64) -> Result<Self, Error> {
        if !feasible(alpha, beta)? {
            return Err(Error::Infeasible { alpha, beta });
        }
        let alpha = alpha.clamp(0.0, PI);
        let beta = beta.clamp(-alpha, alpha).max(alpha - PI);
        let beta = if beta - (alpha - PI) <= TOL.boundary { alpha - PI } else { beta };
        Ok(AngleConfig { alpha, beta })
    }

    pub fn is_u_turn_boundary(&self) -> bool {
        self.beta == self.alpha - PI
    }

    fn diagnostics(&self, gamma: f64, minimizers: Vec<f64>) -> Result<Diagnostics, Error> {
        let t = self.terms(gamma)?;
        Ok(Diagnostics { g_min: t.g, sigma: t.sigma, lambda: t.lambda, minimizers })
    }

    fn second_form_solution(&self, minimizers: Vec<f64>) -> Result<CanonicalSolution, Error> {
        let gamma = self.alpha - PI;
        let t2 = Piece::new(self.beta, gamma)?.param();
        Ok(CanonicalSolution {
            curve: self.build_second_form()?,
            case_tag: CaseTag::SecondForm,
            gamma_star: Some(gamma),
            t_params: Some((-PI, t2)),
            diagnostics: Some(self.diagnostics(gamma, minimizers)?),
        })
    }

    /// Case (b): minimise `G` and build the matching form.
    pub fn solve_case_b(&self) -> Result<CanonicalSolution, Error> {
        let m = self.minimize_g()?;
        let gamma = m.gamma;
        if gamma == self.alpha - PI {
            return self.second_form_solution(m.minimizers);
        }
        let tag = if self.beta < 0.0 && gamma == self.beta {
            CaseTag::FirstFormRightC
        } else {
            CaseTag::FirstFormInterior
        };
        let t1 = Piece::new(self.alpha, gamma)?.param();
        let t2 = Piece::new(self.beta, gamma)?.param();
        Ok(CanonicalSolution {
            curve: self.build_first_form(gamma)?,
            case_tag: tag,
            gamma_star: Some(gamma),
            t_params: Some((-t1, t2)),
            diagnostics: Some(self.diagnostics(gamma, m.minimizers)?),
        })
    }

    /// Whether case (c) applies: `α − π < β < 0` and `σ(β)` clearly negative.
    pub fn is_case_c(&self) -> Result<bool, Error> {
        if self.alpha < TOL.alpha_zero || self.is_u_turn_boundary() || self.beta >= 0.0 {
            return Ok(false);
        }
        Ok(self.sigma(self.beta)? < -TOL.sigma_boundary)
    }

    /// Dispatches on the case and solves in the canonical frame.
    pub fn solve(&self) -> Result<CanonicalSolution, Error> {
        if self.alpha < TOL.alpha_zero {
            let line = LineSegment::new(Vec2::ZERO, Vec2::new(1.0, 0.0))?;
            return Ok(CanonicalSolution {
                curve: PiecewiseCurve::single(CurveSegment::Line(line)),
                case_tag: CaseTag::TrivialLine,
                gamma_star: None,
                t_params: None,
                diagnostics: None,
            });
        }
        if self.is_u_turn_boundary() {
            return self.second_form_solution(alloc::vec![self.alpha - PI]);
        }
        if self.is_case_c()? {
            let sol = self.solve_case_c()?;
            return Ok(CanonicalSolution {
                curve: sol.curve,
                case_tag: CaseTag::CCurveCaseC,
                gamma_star: None,
                t_params: Some((sol.t1, sol.t2)),
                diagnostics: None,
            });
        }
        self.solve_case_b()
    }
}

impl CanonicalSolution {
    /// Carries the solution to the world frame of `cfg`.
    pub fn into_world(self, cfg: &CanonicalConfig) -> SolverResult {
        let mut curve = self.curve.transformed(&cfg.to_world);
        if cfg.reversed_pair {
            curve = curve.reversed();
        }
        SolverResult {
            energy: curve.energy(),
            curve,
            case_tag: self.case_tag,
            gamma_star: self.gamma_star,
            t_params: self.t_params,
            diagnostics: self.diagnostics,
            alpha: cfg.alpha,
            beta: cfg.beta,
        }
    }
}

/// The minimal bending energy s-curve from `u` to `v`.
pub fn solve(u: &UnitTangent, v: &UnitTangent) -> Result<SolverResult, Error> {
    let cfg = canonicalize(u, v)?;
    let angles = AngleConfig::new(cfg.alpha, cfg.beta)?;
    Ok(angles.solve()?.into_world(&cfg))
}

/// Inserts a line of length `extra` before and after the u-turn arc at
/// `index`, shifting the u-turn along its start direction. The curve keeps
/// its endpoints and energy.
pub fn elongate_u_turn(curve: &PiecewiseCurve, index: usize, extra: f64) -> Result<PiecewiseCurve, Error> {
    let seg = curve.segments.get(index).ok_or(Error::Domain("segment index out of range"))?;
    if !(extra >= 0.0 && extra.is_finite()) {
        return Err(Error::Domain("elongation must be finite and nonnegative"));
    }
    if (seg.turning().abs() - PI).abs() > 1e-9 {
        return Err(Error::Domain("segment is not a u-turn"));
    }
    if extra == 0.0 {
        return Ok(curve.clone());
    }
    let (a, b) = (seg.start_point(), seg.end_point());
    let shift = seg.start_dir() * extra;
    let moved = seg.transformed(&crate::Similarity::translate(shift));
    let mut segs = Vec::with_capacity(curve.segments.len() + 2);
    segs.extend_from_slice(&curve.segments[..index]);
    segs.push(CurveSegment::line(a, a + shift)?);
    segs.push(moved);
    segs.push(CurveSegment::line(b + shift, b)?);
    segs.extend_from_slice(&curve.segments[index + 1..]);
    PiecewiseCurve::new(segs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elastica::{chord_angles, d};
    use core::f64::consts::FRAC_PI_2;

    fn tangent(x: f64, y: f64, deg: f64) -> UnitTangent {
        UnitTangent::from_angle(Vec2::new(x, y), deg.to_radians())
    }

    fn check_connects(r: &SolverResult, u: &UnitTangent, v: &UnitTangent) {
        let chord = (v.pos - u.pos).hypot();
        let (s, e) = (r.curve.start_tangent(), r.curve.end_tangent());
        assert!((s.pos - u.pos).hypot() <= 1e-7 * chord);
        assert!((e.pos - v.pos).hypot() <= 1e-7 * chord);
        assert!(s.dir.cross(u.dir).atan2(s.dir.dot(u.dir)).abs() <= 1e-7);
        assert!(e.dir.cross(v.dir).atan2(e.dir.dot(v.dir)).abs() <= 1e-7);
        assert!(r.curve.is_s_curve(512).unwrap());
    }

    #[test]
    fn aligned_is_line() {
        let (u, v) = (tangent(1.0, 1.0, 45.0), tangent(3.0, 3.0, 45.0));
        let r = solve(&u, &v).unwrap();
        assert_eq!(r.case_tag, CaseTag::TrivialLine);
        assert_eq!(r.energy, 0.0);
        check_connects(&r, &u, &v);
    }

    #[test]
    fn u_turn_pair() {
        let (u, v) = (tangent(0.0, 0.0, 90.0), tangent(1.0, 0.0, -90.0));
        let r = solve(&u, &v).unwrap();
        assert_eq!(r.case_tag, CaseTag::SecondForm);
        assert!((r.energy - d() * d()).abs() < 1e-12);
        check_connects(&r, &u, &v);
    }

    #[test]
    fn infeasible_pair() {
        let (u, v) = (tangent(0.0, 0.0, 180.0), tangent(1.0, 0.0, 0.0));
        assert!(matches!(solve(&u, &v), Err(Error::Infeasible { .. })));
        let (u, v) = (tangent(0.0, 0.0, 120.0), tangent(1.0, 0.0, -80.0));
        assert!(matches!(solve(&u, &v), Err(Error::Infeasible { .. })));
    }

    #[test]
    fn coincident_points() {
        let u = tangent(0.0, 0.0, 10.0);
        assert!(matches!(solve(&u, &u), Err(Error::Domain(_))));
    }

    #[test]
    fn every_case_connects() {
        let cases = [
            (90.0, 0.0, CaseTag::FirstFormInterior),
            (60.0, 60.0, CaseTag::FirstFormInterior),
            (150.0, -20.0, CaseTag::SecondForm),
            (68.75, -45.84, CaseTag::CCurveCaseC),
            (120.0, 30.0, CaseTag::FirstFormInterior),
        ];
        for (a, b, tag) in cases {
            let (u, v) = (tangent(0.0, 0.0, a), tangent(1.0, 0.0, b));
            let r = solve(&u, &v).unwrap();
            assert_eq!(r.case_tag, tag, "({a}, {b})");
            check_connects(&r, &u, &v);
            assert!((r.energy - r.curve.energy()).abs() <= 1e-9 * r.energy);
            if let Some(diag) = &r.diagnostics {
                assert!((r.energy - diag.g_min).abs() <= 1e-9 * r.energy);
            }
        }
    }

    #[test]
    fn chord_boundary_paths_agree() {
        for t in [0.4, 1.2, 2.0, 2.8] {
            let (psi, theta) = chord_angles(t).unwrap();
            let cfg = AngleConfig::new(theta, -psi).unwrap();
            let b = cfg.solve_case_b().unwrap();
            assert_eq!(b.case_tag, CaseTag::FirstFormRightC);
            let c = cfg.solve_case_c().unwrap();
            let (eb, ec) = (b.curve.energy(), c.curve.energy());
            assert!((eb - ec).abs() <= 1e-6 * eb, "t = {t}: {eb} vs {ec}");
        }
    }

    #[test]
    fn elongation_keeps_energy() {
        let cfg = AngleConfig::new(FRAC_PI_2, -FRAC_PI_2).unwrap();
        let sol = cfg.solve().unwrap();
        let long = elongate_u_turn(&sol.curve, 0, 0.3).unwrap();
        assert_eq!(long.segments.len(), 3);
        assert!((long.energy() - sol.curve.energy()).abs() < 1e-14);
        long.check_g1(1e-12).unwrap();
        assert!((long.end_tangent().pos - Vec2::new(1.0, 0.0)).hypot() < 1e-12);
        assert!(elongate_u_turn(&sol.curve, 1, 0.3).is_err());
    }
}
