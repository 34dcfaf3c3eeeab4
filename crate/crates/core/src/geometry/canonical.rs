use core::f64::consts::PI;

use super::tangent::relative_angle;
use crate::{Error, Similarity, UnitTangent, Vec2, TOL};

/// Normal form of a tangent pair: after a similarity and possibly a direction
/// reversal `(u, v) → (−v, −u)`, the pair becomes `((0, e^{iα}), (1, e^{iβ}))`
/// with `α ∈ [0, π]` and `|β| ≤ α`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CanonicalConfig {
    pub alpha: f64,
    pub beta: f64,
    /// Maps the canonical frame onto the world.
    pub to_world: Similarity,
    /// The canonical pair is the reversal `(−v, −u)` of the input.
    pub reversed_pair: bool,
}

impl CanonicalConfig {
    /// `((0, e^{iα}), (1, e^{iβ}))`.
    pub fn canonical_pair(&self) -> (UnitTangent, UnitTangent) {
        (
            UnitTangent::from_angle(Vec2::ZERO, self.alpha),
            UnitTangent::from_angle(Vec2::new(1.0, 0.0), self.beta),
        )
    }

    /// Recovers the world pair `(u, v)` this configuration was built from.
    pub fn reconstruct(&self) -> (UnitTangent, UnitTangent) {
        let (a, b) = self.canonical_pair();
        let (a, b) = (a.transformed(&self.to_world), b.transformed(&self.to_world));
        if self.reversed_pair {
            (b.reversed(), a.reversed())
        } else {
            (a, b)
        }
    }

    pub fn is_feasible(&self) -> bool {
        feasible(self.alpha, self.beta).unwrap_or(false)
    }
}

/// Brings `(u, v)` to normal form.
///
/// The unreversed pair is preferred when both qualify, and no reflection is
/// used unless `α` would otherwise be negative.
pub fn canonicalize(u: &UnitTangent, v: &UnitTangent) -> Result<CanonicalConfig, Error> {
    let chord = v.pos - u.pos;
    let len = chord.hypot();
    if !(len > 0.0) || !len.is_finite() {
        return Err(Error::Domain("tangent positions must be distinct"));
    }
    let c = chord / len;
    let a = relative_angle(c, u.dir);
    let b = relative_angle(c, v.dir);

    let (origin, chord_dir, first, second, reversed_pair) = if a.abs() >= b.abs() {
        (u.pos, c, a, b, false)
    } else {
        // Reversed pair starts at v with direction −v.dir; relative to the
        // reversed chord its angles come out as (b, a).
        let rc = -c;
        (v.pos, rc, relative_angle(rc, -v.dir), relative_angle(rc, -u.dir), true)
    };
    let reflect = first < 0.0;
    let (alpha, beta) = if reflect {
        (wrap_neg(first), -second)
    } else {
        (first, second)
    };
    let to_world = Similarity {
        scale: len,
        rotation: chord_dir.atan2(),
        translation: origin,
        reflect,
    };
    Ok(CanonicalConfig { alpha, beta, to_world, reversed_pair })
}

/// Negates an angle in `(-π, π]` keeping the result in `(-π, π]`.
fn wrap_neg(a: f64) -> f64 {
    if a == -PI {
        PI
    } else {
        -a
    }
}

/// Whether an s-curve connects the canonical pair `(α, β)`: `α < π` and `β ≥ α − π`.
pub fn feasible(alpha: f64, beta: f64) -> Result<bool, Error> {
    let slack = TOL.boundary;
    if !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::Domain("canonical angles must be finite"));
    }
    if alpha < -slack || alpha > PI + slack || beta.abs() > alpha + slack {
        return Err(Error::Domain("canonical angles need α ∈ [0, π] and |β| ≤ α"));
    }
    Ok(alpha < PI - slack && beta >= alpha - PI - slack)
}
