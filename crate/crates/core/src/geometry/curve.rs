use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::elastica::{self, point_fast, xi_fast};
use crate::{Error, Similarity, UnitTangent, Vec2};

/// A straight piece `[A, B]`, `A ≠ B`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawLine"))]
pub struct LineSegment {
    #[cfg_attr(feature = "serde", serde(rename = "A"))]
    pub a: Vec2,
    #[cfg_attr(feature = "serde", serde(rename = "B"))]
    pub b: Vec2,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawLine {
    #[serde(rename = "A")]
    a: Vec2,
    #[serde(rename = "B")]
    b: Vec2,
}

#[cfg(feature = "serde")]
impl TryFrom<RawLine> for LineSegment {
    type Error = Error;

    fn try_from(r: RawLine) -> Result<Self, Error> {
        LineSegment::new(r.a, r.b)
    }
}

impl LineSegment {
    pub fn new(a: Vec2, b: Vec2) -> Result<Self, Error> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::Domain("line endpoints must be finite"));
        }
        if a == b {
            return Err(Error::Domain("line segment must have positive length"));
        }
        Ok(LineSegment { a, b })
    }

    pub fn length(&self) -> f64 {
        (self.b - self.a).hypot()
    }

    pub fn dir(&self) -> Vec2 {
        (self.b - self.a) / self.length()
    }
}

/// The image `map ∘ E[t0, t1]` of a piece of the model elastica, traversed
/// backwards when `reversed` is set. Always `t0 < t1`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawArc"))]
pub struct ElasticaArc {
    pub map: Similarity,
    pub t0: f64,
    pub t1: f64,
    pub reversed: bool,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawArc {
    map: Similarity,
    t0: f64,
    t1: f64,
    #[serde(default)]
    reversed: bool,
}

#[cfg(feature = "serde")]
impl TryFrom<RawArc> for ElasticaArc {
    type Error = Error;

    fn try_from(r: RawArc) -> Result<Self, Error> {
        ElasticaArc::new(r.map, r.t0, r.t1, r.reversed)
    }
}

/// Arcs never span more than one full period of `E`.
const MAX_ARC_SPAN: f64 = 2.0 * PI + 1e-9;

impl ElasticaArc {
    pub fn new(map: Similarity, t0: f64, t1: f64, reversed: bool) -> Result<Self, Error> {
        if !t0.is_finite() || !t1.is_finite() {
            return Err(Error::Domain("arc parameters must be finite"));
        }
        if t0 >= t1 {
            return Err(Error::Domain("arc needs t0 < t1"));
        }
        if t1 - t0 > MAX_ARC_SPAN {
            return Err(Error::Domain("arc spans more than 2π"));
        }
        Ok(ElasticaArc { map, t0, t1, reversed })
    }

    fn model_point(&self, t: f64) -> Vec2 {
        self.map.apply(point_fast(t))
    }

    fn model_dir(&self, t: f64) -> Vec2 {
        self.map.apply_dir(elastica::unit_direction(t))
    }

    /// Signed curvature at model parameter `t` in traversal orientation.
    fn curvature_at(&self, t: f64) -> f64 {
        self.sign() * elastica::curvature(t) / self.map.scale
    }

    fn sign(&self) -> f64 {
        let r = if self.reversed { -1.0 } else { 1.0 };
        r * self.map.orientation()
    }

    pub fn energy(&self) -> f64 {
        (xi_fast(self.t1) - xi_fast(self.t0)) / self.map.scale
    }

    pub fn length(&self) -> f64 {
        self.map.scale * elastica::arclength(self.t0, self.t1)
    }

    pub fn turning(&self) -> f64 {
        self.sign() * elastica::turning(self.t0, self.t1)
    }

    /// Model parameter at the start and end of traversal.
    pub fn traversal_params(&self) -> (f64, f64) {
        if self.reversed {
            (self.t1, self.t0)
        } else {
            (self.t0, self.t1)
        }
    }
}

/// A piece of a [`PiecewiseCurve`].
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "lowercase"))]
pub enum CurveSegment {
    Line(LineSegment),
    Elastica(ElasticaArc),
}

/// Point, unit direction and signed curvature at one sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSample {
    pub point: Vec2,
    pub dir: Vec2,
    pub curvature: f64,
}

impl CurveSegment {
    pub fn line(a: Vec2, b: Vec2) -> Result<Self, Error> {
        LineSegment::new(a, b).map(CurveSegment::Line)
    }

    pub fn arc(map: Similarity, t0: f64, t1: f64, reversed: bool) -> Result<Self, Error> {
        ElasticaArc::new(map, t0, t1, reversed).map(CurveSegment::Elastica)
    }

    pub fn start_point(&self) -> Vec2 {
        match self {
            CurveSegment::Line(l) => l.a,
            CurveSegment::Elastica(e) => e.model_point(e.traversal_params().0),
        }
    }

    pub fn end_point(&self) -> Vec2 {
        match self {
            CurveSegment::Line(l) => l.b,
            CurveSegment::Elastica(e) => e.model_point(e.traversal_params().1),
        }
    }

    pub fn start_dir(&self) -> Vec2 {
        match self {
            CurveSegment::Line(l) => l.dir(),
            CurveSegment::Elastica(e) => {
                let d = e.model_dir(e.traversal_params().0);
                if e.reversed {
                    -d
                } else {
                    d
                }
            }
        }
    }

    pub fn end_dir(&self) -> Vec2 {
        match self {
            CurveSegment::Line(l) => l.dir(),
            CurveSegment::Elastica(e) => {
                let d = e.model_dir(e.traversal_params().1);
                if e.reversed {
                    -d
                } else {
                    d
                }
            }
        }
    }

    pub fn energy(&self) -> f64 {
        match self {
            CurveSegment::Line(_) => 0.0,
            CurveSegment::Elastica(e) => e.energy(),
        }
    }

    pub fn length(&self) -> f64 {
        match self {
            CurveSegment::Line(l) => l.length(),
            CurveSegment::Elastica(e) => e.length(),
        }
    }

    pub fn turning(&self) -> f64 {
        match self {
            CurveSegment::Line(_) => 0.0,
            CurveSegment::Elastica(e) => e.turning(),
        }
    }

    pub fn transformed(&self, map: &Similarity) -> CurveSegment {
        match self {
            CurveSegment::Line(l) => CurveSegment::Line(LineSegment { a: map.apply(l.a), b: map.apply(l.b) }),
            CurveSegment::Elastica(e) => CurveSegment::Elastica(ElasticaArc { map: map.compose(&e.map), ..*e }),
        }
    }

    pub fn reversed(&self) -> CurveSegment {
        match self {
            CurveSegment::Line(l) => CurveSegment::Line(LineSegment { a: l.b, b: l.a }),
            CurveSegment::Elastica(e) => CurveSegment::Elastica(ElasticaArc { reversed: !e.reversed, ..*e }),
        }
    }

    /// Evaluates the segment at arclength fractions `fracs ∈ [0, 1]` (ascending
    /// order not required) measured along the traversal direction.
    pub fn eval_fractions(&self, fracs: &[f64]) -> Vec<CurveSample> {
        match self {
            CurveSegment::Line(l) => {
                let dir = l.dir();
                fracs
                    .iter()
                    .map(|&f| CurveSample { point: l.a.lerp(l.b, f), dir, curvature: 0.0 })
                    .collect()
            }
            CurveSegment::Elastica(e) => {
                let table = ArclengthTable::new(e.t0, e.t1, (4 * fracs.len()).max(64));
                fracs
                    .iter()
                    .map(|&f| {
                        let f = if e.reversed { 1.0 - f } else { f };
                        let t = table.param_at(f);
                        let d = e.model_dir(t);
                        CurveSample {
                            point: e.model_point(t),
                            dir: if e.reversed { -d } else { d },
                            curvature: e.curvature_at(t),
                        }
                    })
                    .collect()
            }
        }
    }

    /// `n ≥ 2` points at equal arclength spacing, endpoints included.
    pub fn sample(&self, n: usize) -> Result<Vec<Vec2>, Error> {
        if n < 2 {
            return Err(Error::Domain("sampling needs at least two points"));
        }
        let fracs: Vec<f64> = (0..n).map(|k| k as f64 / (n - 1) as f64).collect();
        let mut pts: Vec<Vec2> = self.eval_fractions(&fracs).into_iter().map(|s| s.point).collect();
        pts[0] = self.start_point();
        pts[n - 1] = self.end_point();
        Ok(pts)
    }
}

/// Cumulative model arclength on a uniform parameter grid, for inverting
/// arclength by interpolation.
struct ArclengthTable {
    t0: f64,
    h: f64,
    cum: Vec<f64>,
}

impl ArclengthTable {
    fn new(t0: f64, t1: f64, m: usize) -> Self {
        let h = (t1 - t0) / m as f64;
        let mut cum = Vec::with_capacity(m + 1);
        cum.push(0.0);
        let mut acc = 0.0;
        for i in 0..m {
            let a = t0 + i as f64 * h;
            // Simpson on one cell; the speed is smooth and bounded.
            acc += h / 6.0 * (elastica::speed(a) + 4.0 * elastica::speed(a + 0.5 * h) + elastica::speed(a + h));
            cum.push(acc);
        }
        ArclengthTable { t0, h, cum }
    }

    fn param_at(&self, frac: f64) -> f64 {
        let total = *self.cum.last().unwrap();
        let s = frac.clamp(0.0, 1.0) * total;
        let i = self.cum.partition_point(|&c| c < s).clamp(1, self.cum.len() - 1);
        let (c0, c1) = (self.cum[i - 1], self.cum[i]);
        let w = if c1 > c0 { (s - c0) / (c1 - c0) } else { 0.0 };
        self.t0 + (i as f64 - 1.0 + w) * self.h
    }
}

/// An ordered, nonempty sequence of segments.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawCurve"))]
pub struct PiecewiseCurve {
    pub segments: Vec<CurveSegment>,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawCurve {
    segments: Vec<CurveSegment>,
}

#[cfg(feature = "serde")]
impl TryFrom<RawCurve> for PiecewiseCurve {
    type Error = Error;

    fn try_from(r: RawCurve) -> Result<Self, Error> {
        PiecewiseCurve::new(r.segments)
    }
}

impl PiecewiseCurve {
    pub fn new(segments: Vec<CurveSegment>) -> Result<Self, Error> {
        if segments.is_empty() {
            return Err(Error::Domain("curve needs at least one segment"));
        }
        Ok(PiecewiseCurve { segments })
    }

    pub fn single(seg: CurveSegment) -> Self {
        PiecewiseCurve { segments: alloc::vec![seg] }
    }

    /// Appends `other` after `self`; G¹ continuity is the caller's business.
    pub fn concat(mut self, other: PiecewiseCurve) -> PiecewiseCurve {
        self.segments.extend(other.segments);
        self
    }

    pub fn energy(&self) -> f64 {
        self.segments.iter().map(CurveSegment::energy).sum()
    }

    pub fn length(&self) -> f64 {
        self.segments.iter().map(CurveSegment::length).sum()
    }

    pub fn turning(&self) -> f64 {
        self.segments.iter().map(CurveSegment::turning).sum()
    }

    pub fn start_tangent(&self) -> UnitTangent {
        let s = &self.segments[0];
        UnitTangent { pos: s.start_point(), dir: s.start_dir() }
    }

    pub fn end_tangent(&self) -> UnitTangent {
        let s = self.segments.last().unwrap();
        UnitTangent { pos: s.end_point(), dir: s.end_dir() }
    }

    pub fn transformed(&self, map: &Similarity) -> PiecewiseCurve {
        PiecewiseCurve { segments: self.segments.iter().map(|s| s.transformed(map)).collect() }
    }

    /// The same curve traversed from end to start.
    pub fn reversed(&self) -> PiecewiseCurve {
        PiecewiseCurve { segments: self.segments.iter().rev().map(CurveSegment::reversed).collect() }
    }

    /// Checks that consecutive segments meet in position (relative to the total
    /// length) and direction (radians) within `tol`.
    pub fn check_g1(&self, tol: f64) -> Result<(), Error> {
        let scale = self.length().max(f64::MIN_POSITIVE);
        for w in self.segments.windows(2) {
            if (w[0].end_point() - w[1].start_point()).hypot() > tol * scale {
                return Err(Error::Domain("curve has a gap between segments"));
            }
            if (w[0].end_dir() - w[1].start_dir()).hypot() > tol {
                return Err(Error::Domain("curve has a corner between segments"));
            }
        }
        Ok(())
    }

    /// `n ≥ 2` samples at approximately equal arclength spacing over the whole
    /// curve; the first and last are exactly the curve endpoints.
    pub fn sample_detailed(&self, n: usize) -> Result<Vec<CurveSample>, Error> {
        if n < 2 {
            return Err(Error::Domain("sampling needs at least two points"));
        }
        let lens: Vec<f64> = self.segments.iter().map(CurveSegment::length).collect();
        let total: f64 = lens.iter().sum();
        let mut out = Vec::with_capacity(n);
        let mut k = 0;
        let mut start = 0.0;
        for (j, (seg, &len)) in self.segments.iter().zip(&lens).enumerate() {
            let last = j + 1 == self.segments.len();
            let end = start + len;
            let mut fracs = Vec::new();
            while k < n {
                let s = total * k as f64 / (n - 1) as f64;
                if s > end && !last {
                    break;
                }
                fracs.push(((s - start) / len).clamp(0.0, 1.0));
                k += 1;
            }
            out.extend(seg.eval_fractions(&fracs));
            start = end;
        }
        let first = &self.segments[0];
        out[0].point = first.start_point();
        out[0].dir = first.start_dir();
        let last = self.segments.last().unwrap();
        out[n - 1].point = last.end_point();
        out[n - 1].dir = last.end_dir();
        Ok(out)
    }

    pub fn sample(&self, n: usize) -> Result<Vec<Vec2>, Error> {
        Ok(self.sample_detailed(n)?.into_iter().map(|s| s.point).collect())
    }

    /// Number of sign changes of the sampled signed curvature.
    pub fn curvature_sign_changes(&self, n: usize) -> Result<usize, Error> {
        let k: Vec<f64> = self.sample_detailed(n)?.iter().map(|s| s.curvature).collect();
        Ok(sign_changes(&k))
    }

    /// At most one curvature sign change over `n` samples.
    pub fn is_s_curve(&self, n: usize) -> Result<bool, Error> {
        Ok(self.curvature_sign_changes(n)? <= 1)
    }
}

/// Counts sign changes in `values`, skipping entries that are negligible
/// relative to the largest magnitude.
pub fn sign_changes(values: &[f64]) -> usize {
    let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let eps = 1e-9 * peak;
    let mut last = 0.0;
    let mut changes = 0;
    for &v in values {
        if v.abs() <= eps {
            continue;
        }
        if last != 0.0 && (v > 0.0) != (last > 0.0) {
            changes += 1;
        }
        last = v;
    }
    changes
}
