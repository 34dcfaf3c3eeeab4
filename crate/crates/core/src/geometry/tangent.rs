#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::{Error, Similarity, Vec2};

/// A position with a unit direction; the datum interpolated by curves.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawTangent"))]
pub struct UnitTangent {
    pub pos: Vec2,
    pub dir: Vec2,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawTangent {
    pos: Vec2,
    dir: Vec2,
}

#[cfg(feature = "serde")]
impl TryFrom<RawTangent> for UnitTangent {
    type Error = Error;

    fn try_from(raw: RawTangent) -> Result<Self, Error> {
        UnitTangent::new(raw.pos, raw.dir)
    }
}

impl UnitTangent {
    /// Normalizes `dir`; fails on a zero or non-finite direction or position.
    pub fn new(pos: Vec2, dir: Vec2) -> Result<Self, Error> {
        if !pos.is_finite() {
            return Err(Error::Domain("tangent position must be finite"));
        }
        let dir = dir
            .normalize()
            .ok_or(Error::Domain("tangent direction must be a finite nonzero vector"))?;
        Ok(UnitTangent { pos, dir })
    }

    pub fn from_angle(pos: Vec2, angle: f64) -> Self {
        UnitTangent { pos, dir: Vec2::from_angle(angle) }
    }

    pub fn angle(&self) -> f64 {
        self.dir.atan2()
    }

    /// Same position, opposite direction.
    pub fn reversed(&self) -> Self {
        UnitTangent { pos: self.pos, dir: -self.dir }
    }

    pub fn transformed(&self, map: &Similarity) -> Self {
        UnitTangent { pos: map.apply(self.pos), dir: map.apply_dir(self.dir) }
    }

    /// Angle from `self.dir` to `other.dir` in `(-π, π]`.
    pub fn angle_to(&self, other: &UnitTangent) -> f64 {
        relative_angle(self.dir, other.dir)
    }
}

/// Angle from unit vector `from` to `to`, in `(-π, π]`.
pub(crate) fn relative_angle(from: Vec2, to: Vec2) -> f64 {
    let a = from.cross(to).atan2(from.dot(to));
    if a == -core::f64::consts::PI {
        core::f64::consts::PI
    } else {
        a
    }
}
