//! SVG rendering of piecewise curves.

use std::fmt::Write;

use elastic_core::{CurveSegment, Error, PiecewiseCurve, Vec2};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RenderStyle {
    /// Stroke width in output pixels.
    pub stroke_width: f64,
    /// Points per elastica segment; lines always use their two ends.
    pub samples: usize,
    pub show_tangents: bool,
    pub show_inflection: bool,
    /// Margin around the curve as a fraction of its larger extent.
    pub padding: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle { stroke_width: 1.5, samples: 128, show_tangents: false, show_inflection: false, padding: 0.05 }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<(), Error> {
        if self.samples < 2 {
            return Err(Error::Domain("render samples must be at least 2"));
        }
        if !(self.stroke_width > 0.0 && self.stroke_width.is_finite()) {
            return Err(Error::Domain("stroke width must be positive"));
        }
        if !(self.padding >= 0.0 && self.padding.is_finite()) {
            return Err(Error::Domain("padding must be nonnegative"));
        }
        Ok(())
    }
}

/// Reads a curve from either a bare curve document or any object carrying it
/// under `"curve"`, such as solver and fit output.
pub fn parse_curve(body: &[u8]) -> serde_json::Result<PiecewiseCurve> {
    let value: serde_json::Value = serde_json::from_slice(body)?;
    match value.get("curve") {
        Some(c) => serde_json::from_value(c.clone()),
        None => serde_json::from_value(value),
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.into() }
}

/// SVG y grows downward.
fn flip(p: Vec2) -> Vec2 {
    Vec2::new(p.x, -p.y)
}

/// Sampled points of each segment, in curve coordinates.
pub fn segment_polylines(curve: &PiecewiseCurve, samples: usize) -> Result<Vec<Vec<Vec2>>, Error> {
    curve
        .segments
        .iter()
        .map(|s| match s {
            CurveSegment::Line(l) => Ok(vec![l.a, l.b]),
            CurveSegment::Elastica(_) => s.sample(samples),
        })
        .collect()
}

/// Points where the sampled signed curvature changes sign.
fn inflections(curve: &PiecewiseCurve, samples: usize) -> Result<Vec<Vec2>, Error> {
    let n = samples.saturating_mul(curve.segments.len()).max(2);
    let pts = curve.sample_detailed(n)?;
    let peak = pts.iter().fold(0.0f64, |m, s| m.max(s.curvature.abs()));
    let mut out = Vec::new();
    let mut last: Option<(f64, Vec2)> = None;
    for s in &pts {
        if s.curvature.abs() <= 1e-9 * peak {
            continue;
        }
        if let Some((k, p)) = last {
            if k * s.curvature < 0.0 {
                out.push(p.lerp(s.point, 0.5));
            }
        }
        last = Some((s.curvature, s.point));
    }
    Ok(out)
}

/// A standalone SVG 1.1 document with one path per segment. Output depends
/// only on `curve` and `style`.
pub fn render_svg(curve: &PiecewiseCurve, style: &RenderStyle) -> Result<String, Error> {
    style.validate()?;
    let paths = segment_polylines(curve, style.samples)?;
    let mut all: Vec<Vec2> = paths.iter().flatten().copied().collect();
    let (mut lo, mut hi) = bounds(&all);
    let extent = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);

    let arrow = 0.1 * extent;
    let mut arrows = Vec::new();
    if style.show_tangents {
        for seg in &curve.segments {
            arrows.push((seg.start_point(), seg.start_point() + seg.start_dir() * arrow));
        }
        let last = curve.segments.last().expect("curves are nonempty");
        arrows.push((last.end_point(), last.end_point() + last.end_dir() * arrow));
        all.extend(arrows.iter().map(|a| a.1));
    }
    let marks = if style.show_inflection { inflections(curve, style.samples)? } else { Vec::new() };
    if !arrows.is_empty() {
        (lo, hi) = bounds(&all);
    }
    let pad = style.padding * extent;
    let (x0, y0) = (lo.x - pad, -hi.y - pad);
    let (w, h) = ((hi.x - lo.x + 2.0 * pad).max(1e-9), (hi.y - lo.y + 2.0 * pad).max(1e-9));

    let mut svg = String::new();
    let sw = num(style.stroke_width);
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}">"#,
        num(x0),
        num(y0),
        num(w),
        num(h)
    );
    let _ = writeln!(
        svg,
        r#"<g fill="none" stroke="black" stroke-width="{sw}" stroke-linejoin="round" stroke-linecap="round">"#
    );
    for (i, pts) in paths.iter().enumerate() {
        let d: Vec<String> = pts
            .iter()
            .enumerate()
            .map(|(k, &p)| {
                let p = flip(p);
                format!("{}{} {}", if k == 0 { "M" } else { "L" }, num(p.x), num(p.y))
            })
            .collect();
        let _ = writeln!(
            svg,
            r#"<path class="segment" data-index="{i}" vector-effect="non-scaling-stroke" d="{}"/>"#,
            d.join(" ")
        );
    }
    let _ = writeln!(svg, "</g>");
    if !arrows.is_empty() {
        let _ = writeln!(svg, r#"<g stroke="steelblue" stroke-width="{sw}">"#);
        for (a, b) in &arrows {
            let (a, b) = (flip(*a), flip(*b));
            let _ = writeln!(
                svg,
                r#"<line class="tangent" vector-effect="non-scaling-stroke" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                num(a.x),
                num(a.y),
                num(b.x),
                num(b.y)
            );
        }
        let _ = writeln!(svg, "</g>");
    }
    if !marks.is_empty() {
        let r = num(0.01 * extent);
        let _ = writeln!(svg, r#"<g fill="crimson">"#);
        for p in &marks {
            let p = flip(*p);
            let _ = writeln!(svg, r#"<circle class="inflection" cx="{}" cy="{}" r="{r}"/>"#, num(p.x), num(p.y));
        }
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}

fn bounds(pts: &[Vec2]) -> (Vec2, Vec2) {
    pts.iter().fold(
        (Vec2::new(f64::INFINITY, f64::INFINITY), Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY)),
        |(lo, hi), p| (Vec2::new(lo.x.min(p.x), lo.y.min(p.y)), Vec2::new(hi.x.max(p.x), hi.y.max(p.y))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(num(1.0), "1");
        assert_eq!(num(-0.0000001), "0");
        assert_eq!(num(2.5), "2.5");
        assert_eq!(num(-1.25), "-1.25");
    }

    #[test]
    fn style_validation() {
        assert!(RenderStyle::default().validate().is_ok());
        assert!(RenderStyle { samples: 1, ..Default::default() }.validate().is_err());
        assert!(RenderStyle { stroke_width: 0.0, ..Default::default() }.validate().is_err());
    }
}
