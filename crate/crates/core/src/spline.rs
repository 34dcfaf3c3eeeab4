//! Elastic splines: interpolants through a point sequence whose pieces are
//! optimal s-curves, with node tangents chosen to minimise total energy.
//!
//! The fitter parameterises the problem by one tangent angle per node and runs
//! coordinate descent (a coarse scan then golden section per angle) from a
//! chord-averaged start and a few seeded random perturbations of it. It finds
//! a local minimum; nothing here claims global optimality.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

#[cfg(not(feature = "std"))]
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::canonicalize;
use crate::scurve::{solve, CaseTag, SolverResult};
use crate::{Error, PiecewiseCurve, UnitTangent, Vec2};

/// Points to interpolate, with optional fixed tangent directions.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawProblem"))]
pub struct SplineProblem {
    pub points: Vec<Vec2>,
    /// Empty, or one entry per point.
    pub fixed_dirs: Vec<Option<Vec2>>,
    /// Adds a segment from the last point back to the first.
    pub closed: bool,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawProblem {
    points: Vec<Vec2>,
    #[serde(default)]
    fixed_dirs: Option<Vec<Option<Vec2>>>,
    #[serde(default)]
    closed: bool,
}

#[cfg(feature = "serde")]
impl TryFrom<RawProblem> for SplineProblem {
    type Error = Error;

    fn try_from(r: RawProblem) -> Result<Self, Error> {
        SplineProblem::new(r.points, r.fixed_dirs.unwrap_or_default(), r.closed)
    }
}

impl SplineProblem {
    pub fn new(points: Vec<Vec2>, fixed_dirs: Vec<Option<Vec2>>, closed: bool) -> Result<Self, Error> {
        let n = points.len();
        if n < 2 {
            return Err(Error::Domain("a spline needs at least two points"));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::Domain("points must be finite"));
        }
        if points.windows(2).any(|w| w[0] == w[1]) || (closed && points[0] == points[n - 1]) {
            return Err(Error::Domain("consecutive points must be distinct"));
        }
        if !fixed_dirs.is_empty() && fixed_dirs.len() != n {
            return Err(Error::Domain("fixed_dirs must be empty or match points"));
        }
        let fixed_dirs = fixed_dirs
            .into_iter()
            .map(|d| match d {
                Some(d) => d.normalize().map(Some).ok_or(Error::Domain("fixed direction must be nonzero")),
                None => Ok(None),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SplineProblem { points, fixed_dirs, closed })
    }

    /// Open polyline through `points` with no fixed directions.
    pub fn open(points: Vec<Vec2>) -> Result<Self, Error> {
        Self::new(points, Vec::new(), false)
    }

    pub fn segment_count(&self) -> usize {
        self.points.len() - if self.closed { 0 } else { 1 }
    }

    fn fixed(&self, i: usize) -> Option<Vec2> {
        self.fixed_dirs.get(i).copied().flatten()
    }

    /// Node indices of segment `k`.
    fn ends(&self, k: usize) -> (usize, usize) {
        (k, (k + 1) % self.points.len())
    }

    fn tangent(&self, i: usize, angle: f64) -> UnitTangent {
        UnitTangent::from_angle(self.points[i], angle)
    }

    fn solve_segment(&self, k: usize, angles: &[f64]) -> Result<SolverResult, Error> {
        let (i, j) = self.ends(k);
        solve(&self.tangent(i, angles[i]), &self.tangent(j, angles[j]))
    }

    fn segment_energy(&self, k: usize, angles: &[f64]) -> f64 {
        self.solve_segment(k, angles).map_or(f64::INFINITY, |r| r.energy)
    }

    /// Segments touching node `i`.
    fn adjacent(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let m = self.segment_count();
        let prev = if i > 0 { Some(i - 1) } else if self.closed { Some(m - 1) } else { None };
        let next = if i < m { Some(i) } else { None };
        prev.into_iter().chain(next.filter(move |&k| Some(k) != prev))
    }

    /// Feasibility of every segment under `angles`.
    pub fn report(&self, angles: &[f64]) -> Result<Vec<SegmentReport>, Error> {
        self.check_len(angles)?;
        (0..self.segment_count())
            .map(|k| {
                let (i, j) = self.ends(k);
                let cfg = canonicalize(&self.tangent(i, angles[i]), &self.tangent(j, angles[j]))?;
                Ok(SegmentReport { index: k, alpha: cfg.alpha, beta: cfg.beta, feasible: cfg.is_feasible() })
            })
            .collect()
    }

    fn check_len(&self, angles: &[f64]) -> Result<(), Error> {
        if angles.len() != self.points.len() {
            return Err(Error::Domain("one angle per point is required"));
        }
        Ok(())
    }

    /// Sum of the optimal segment energies, or `None` when some segment has no
    /// connecting s-curve.
    pub fn total_energy(&self, angles: &[f64]) -> Result<Option<f64>, Error> {
        self.check_len(angles)?;
        let mut total = 0.0;
        for k in 0..self.segment_count() {
            match self.solve_segment(k, angles) {
                Ok(r) => total += r.energy,
                Err(Error::Infeasible { .. }) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
        Ok(Some(total))
    }

    /// Chord-averaged tangent angles; fixed directions are respected.
    pub fn initial_angles(&self) -> Vec<f64> {
        let n = self.points.len();
        let chord = |k: usize| {
            let (i, j) = self.ends(k);
            (self.points[j] - self.points[i]).normalize().unwrap_or(Vec2::new(1.0, 0.0))
        };
        let m = self.segment_count();
        (0..n)
            .map(|i| {
                if let Some(d) = self.fixed(i) {
                    return d.atan2();
                }
                let inc = if i > 0 { Some(chord(i - 1)) } else if self.closed { Some(chord(m - 1)) } else { None };
                let out = if i < m { Some(chord(i)) } else { None };
                let dir = match (inc, out) {
                    (Some(a), Some(b)) => (a + b).normalize().unwrap_or(b),
                    (Some(a), None) => a,
                    (None, Some(b)) => b,
                    (None, None) => Vec2::new(1.0, 0.0),
                };
                dir.atan2()
            })
            .collect()
    }
}

/// Feasibility of one segment under a trial set of tangents, in normal form.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SegmentReport {
    pub index: usize,
    pub alpha: f64,
    pub beta: f64,
    pub feasible: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default))]
pub struct FitOptions {
    /// A sweep lowering the energy by less than this ends the descent.
    pub tol: f64,
    /// Maximum number of sweeps per start.
    pub max_iters: usize,
    /// Number of perturbed starts besides the chord-averaged one.
    pub restarts: usize,
    pub seed: u64,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions { tol: 1e-8, max_iters: 200, restarts: 4, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SplineFit {
    pub curve: PiecewiseCurve,
    pub angles: Vec<f64>,
    pub segment_energies: Vec<f64>,
    pub total_energy: f64,
    /// Sweeps run by the winning start.
    pub iterations: usize,
    pub converged: bool,
    /// Total energy at the start and after every sweep of the winning start.
    pub trace: Vec<f64>,
    pub case_tags: Vec<CaseTag>,
}

struct Descent {
    angles: Vec<f64>,
    energies: Vec<f64>,
    trace: Vec<f64>,
    iterations: usize,
    converged: bool,
}

fn ordered_sum(v: &[f64]) -> f64 {
    v.iter().sum()
}

const SCAN: usize = 12;
const GOLDEN_TOL: f64 = 1e-7;

/// Minimises `f` near `x0` within `±π/2`: a coarse scan keeps to the feasible
/// part of the window, then golden section refines the best bracket.
fn line_search(mut f: impl FnMut(f64) -> f64, x0: f64) -> (f64, f64) {
    let h = PI / SCAN as f64;
    let xs: Vec<f64> = (0..=SCAN).map(|k| x0 - FRAC_PI_2 + h * k as f64).collect();
    let fs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut best = SCAN / 2;
    for k in 0..=SCAN {
        if fs[k] < fs[best] {
            best = k;
        }
    }
    if !fs[best].is_finite() {
        return (x0, f64::INFINITY);
    }
    let (mut a, mut b) = (xs[best.saturating_sub(1)], xs[(best + 1).min(SCAN)]);
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > GOLDEN_TOL {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    let mut out = (xs[best], fs[best]);
    for (x, v) in [(c, fc), (d, fd)] {
        if v < out.1 {
            out = (x, v);
        }
    }
    out
}

fn descend(p: &SplineProblem, mut angles: Vec<f64>, opts: &FitOptions) -> Option<Descent> {
    let m = p.segment_count();
    let mut energies: Vec<f64> = (0..m).map(|k| p.segment_energy(k, &angles)).collect();
    let mut total = ordered_sum(&energies);
    if !total.is_finite() {
        return None;
    }
    let free: Vec<usize> = (0..p.points.len()).filter(|&i| p.fixed(i).is_none()).collect();
    let mut trace = alloc::vec![total];
    let mut iterations = 0;
    let mut converged = free.is_empty();
    while !converged && iterations < opts.max_iters {
        iterations += 1;
        let before = total;
        let start = angles.clone();
        for &i in &free {
            let adj: Vec<usize> = p.adjacent(i).collect();
            let mut trial = angles.clone();
            let local = |x: f64, trial: &mut Vec<f64>| {
                trial[i] = x;
                adj.iter().map(|&k| p.segment_energy(k, trial)).sum::<f64>()
            };
            let (x, _) = line_search(|x| local(x, &mut trial), angles[i]);
            trial[i] = x;
            let mut next = energies.clone();
            for &k in &adj {
                next[k] = p.segment_energy(k, &trial);
            }
            let t = ordered_sum(&next);
            if t < total {
                angles[i] = x;
                energies = next;
                total = t;
            }
        }
        // Pattern move along the sweep displacement, doubled while it helps.
        let step: Vec<f64> = angles.iter().zip(&start).map(|(a, b)| a - b).collect();
        let mut scale = 1.0;
        while total < before {
            let trial: Vec<f64> = angles.iter().zip(&step).map(|(a, s)| a + scale * s).collect();
            let next: Vec<f64> = (0..m).map(|k| p.segment_energy(k, &trial)).collect();
            let t = ordered_sum(&next);
            if !(t < total) {
                break;
            }
            angles = trial;
            energies = next;
            total = t;
            scale *= 2.0;
        }
        trace.push(total);
        converged = before - total < opts.tol;
    }
    Some(Descent { angles, energies, trace, iterations, converged })
}

/// Fits an elastic spline through `problem.points`.
pub fn fit(problem: &SplineProblem, opts: &FitOptions) -> Result<SplineFit, Error> {
    let init = problem.initial_angles();
    let free: Vec<usize> = (0..init.len()).filter(|&i| problem.fixed(i).is_none()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut best: Option<Descent> = descend(problem, init.clone(), opts);
    let restarts = if free.is_empty() { 0 } else { opts.restarts };
    for _ in 0..restarts {
        let mut start = init.clone();
        for &i in &free {
            start[i] += rng.gen_range(-0.5..0.5);
        }
        if let Some(run) = descend(problem, start, opts) {
            let better = match &best {
                Some(b) => run.trace.last() < b.trace.last(),
                None => true,
            };
            if better {
                best = Some(run);
            }
        }
    }
    let Some(best) = best else {
        return Err(Error::Fit { report: problem.report(&init)? });
    };

    let results: Vec<SolverResult> = (0..problem.segment_count())
        .map(|k| problem.solve_segment(k, &best.angles))
        .collect::<Result<_, _>>()?;
    let case_tags = results.iter().map(|r| r.case_tag).collect();
    let curve = PiecewiseCurve::new(results.into_iter().flat_map(|r| r.curve.segments).collect())?;
    Ok(SplineFit {
        curve,
        total_energy: ordered_sum(&best.energies),
        angles: best.angles,
        segment_energies: best.energies,
        iterations: best.iterations,
        converged: best.converged,
        trace: best.trace,
        case_tags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(f64, f64)]) -> Vec<Vec2> {
        v.iter().map(|&(x, y)| Vec2::new(x, y)).collect()
    }

    #[test]
    fn validation() {
        assert!(SplineProblem::open(pts(&[(0.0, 0.0)])).is_err());
        assert!(SplineProblem::open(pts(&[(0.0, 0.0), (0.0, 0.0)])).is_err());
        assert!(SplineProblem::new(pts(&[(0.0, 0.0), (1.0, 0.0)]), alloc::vec![None], false).is_err());
        assert!(SplineProblem::new(pts(&[(0.0, 0.0), (1.0, 0.0), (0.0, 0.0)]), Vec::new(), true).is_err());
    }

    #[test]
    fn collinear_is_free() {
        let p = SplineProblem::open(pts(&[(0.0, 0.0), (1.0, 1.0), (3.0, 3.0), (4.0, 4.0)])).unwrap();
        let f = fit(&p, &FitOptions::default()).unwrap();
        assert_eq!(f.total_energy, 0.0);
        assert!(f.converged && f.iterations <= 2);
    }

    #[test]
    fn right_angle() {
        let p = SplineProblem::open(pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)])).unwrap();
        let f = fit(&p, &FitOptions::default()).unwrap();
        assert!(f.total_energy > 0.0);
        assert!(f.trace.windows(2).all(|w| w[1] <= w[0]));
        let s: f64 = f.segment_energies.iter().sum();
        assert!((s - f.total_energy).abs() <= 1e-9 * s);
        f.curve.check_g1(1e-7).unwrap();
    }

    #[test]
    fn fixed_pair_passes_through() {
        let a = Vec2::from_angle(1.0);
        let b = Vec2::from_angle(-0.3);
        let p = SplineProblem::new(pts(&[(0.0, 0.0), (2.0, 0.5)]), alloc::vec![Some(a), Some(b)], false).unwrap();
        let f = fit(&p, &FitOptions::default()).unwrap();
        let direct = solve(
            &UnitTangent::new(Vec2::ZERO, a).unwrap(),
            &UnitTangent::new(Vec2::new(2.0, 0.5), b).unwrap(),
        )
        .unwrap();
        assert_eq!(f.total_energy, direct.energy);
        assert_eq!(f.iterations, 0);
        assert!(f.converged);
    }

    #[test]
    fn infeasible_fixed_dirs() {
        let p = SplineProblem::new(
            pts(&[(0.0, 0.0), (1.0, 0.0)]),
            alloc::vec![Some(Vec2::new(-1.0, 0.0)), Some(Vec2::new(1.0, 0.0))],
            false,
        )
        .unwrap();
        match fit(&p, &FitOptions::default()) {
            Err(Error::Fit { report }) => assert!(!report[0].feasible),
            other => panic!("expected a fit error, got {other:?}"),
        }
    }

    #[test]
    fn total_energy_marker() {
        let p = SplineProblem::open(pts(&[(0.0, 0.0), (1.0, 0.0)])).unwrap();
        assert_eq!(p.total_energy(&[0.0, 0.0]).unwrap(), Some(0.0));
        assert_eq!(p.total_energy(&[PI, 0.0]).unwrap(), None);
        assert!(p.total_energy(&[0.0]).is_err());
    }

    #[test]
    fn closed_square() {
        let p = SplineProblem::new(pts(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]), Vec::new(), true).unwrap();
        let f = fit(&p, &FitOptions { restarts: 1, ..FitOptions::default() }).unwrap();
        assert_eq!(f.segment_energies.len(), 4);
        assert!(f.converged);
        let e = f.curve.end_tangent();
        assert!((e.pos - Vec2::ZERO).hypot() < 1e-9);
    }
}
