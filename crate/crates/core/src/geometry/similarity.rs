use crate::{Error, Vec2};

/// A plane similarity `z ↦ c₁z + c₂` or, when `reflect` is set, `z ↦ c₁z̄ + c₂`,
/// with `c₁ = scale·e^{i·rotation}` and `c₂ = translation`.
///
/// Lengths scale by `scale`, bending energy by `1/scale`; a reflection flips
/// the sign of curvature and turning.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawSimilarity"))]
pub struct Similarity {
    pub scale: f64,
    pub rotation: f64,
    pub translation: Vec2,
    pub reflect: bool,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawSimilarity {
    scale: f64,
    rotation: f64,
    translation: Vec2,
    #[serde(default)]
    reflect: bool,
}

#[cfg(feature = "serde")]
impl TryFrom<RawSimilarity> for Similarity {
    type Error = Error;

    fn try_from(r: RawSimilarity) -> Result<Self, Error> {
        Similarity::new(r.scale, r.rotation, r.translation, r.reflect)
    }
}

impl Default for Similarity {
    fn default() -> Self {
        Similarity::IDENTITY
    }
}

impl Similarity {
    pub const IDENTITY: Similarity = Similarity {
        scale: 1.0,
        rotation: 0.0,
        translation: Vec2::ZERO,
        reflect: false,
    };

    pub fn new(scale: f64, rotation: f64, translation: Vec2, reflect: bool) -> Result<Self, Error> {
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::Domain("similarity scale must be positive and finite"));
        }
        if !rotation.is_finite() || !translation.is_finite() {
            return Err(Error::Domain("similarity rotation and translation must be finite"));
        }
        Ok(Similarity { scale, rotation, translation, reflect })
    }

    pub fn translate(v: Vec2) -> Self {
        Similarity { translation: v, ..Similarity::IDENTITY }
    }

    /// Builds the map from its complex coefficients; `c1` must be nonzero.
    fn from_coeffs(c1: Vec2, c2: Vec2, reflect: bool) -> Self {
        Similarity { scale: c1.hypot(), rotation: c1.atan2(), translation: c2, reflect }
    }

    #[inline]
    fn c1(&self) -> Vec2 {
        Vec2::from_angle(self.rotation) * self.scale
    }

    #[inline]
    fn reflect_if(&self, z: Vec2) -> Vec2 {
        if self.reflect {
            z.conj()
        } else {
            z
        }
    }

    /// The orientation preserving similarity taking `p0 ↦ q0` and `p1 ↦ q1`.
    pub fn from_points(p0: Vec2, p1: Vec2, q0: Vec2, q1: Vec2) -> Result<Self, Error> {
        let dp = p1 - p0;
        if dp.hypot() == 0.0 {
            return Err(Error::Domain("similarity needs distinct source points"));
        }
        let c1 = (q1 - q0).cdiv(dp);
        if c1.hypot() == 0.0 {
            return Err(Error::Domain("similarity needs distinct target points"));
        }
        let c2 = q0 - c1.cmul(p0);
        Ok(Similarity::from_coeffs(c1, c2, false))
    }

    #[inline]
    pub fn apply(&self, z: Vec2) -> Vec2 {
        self.c1().cmul(self.reflect_if(z)) + self.translation
    }

    /// Image of a direction, renormalized.
    #[inline]
    pub fn apply_dir(&self, d: Vec2) -> Vec2 {
        Vec2::from_angle(self.rotation).cmul(self.reflect_if(d))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Similarity) -> Similarity {
        let c1 = self.c1().cmul(self.reflect_if(inner.c1()));
        let c2 = self.c1().cmul(self.reflect_if(inner.translation)) + self.translation;
        Similarity::from_coeffs(c1, c2, self.reflect != inner.reflect)
    }

    pub fn inverse(&self) -> Similarity {
        let one = Vec2::new(1.0, 0.0);
        let c1 = self.reflect_if(one.cdiv(self.c1()));
        let c2 = -self.reflect_if(self.translation.cdiv(self.c1()));
        Similarity::from_coeffs(c1, c2, self.reflect)
    }

    /// Orientation sign: `-1` for reflections.
    pub fn orientation(&self) -> f64 {
        if self.reflect {
            -1.0
        } else {
            1.0
        }
    }
}
