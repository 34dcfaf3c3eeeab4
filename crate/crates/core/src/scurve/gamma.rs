use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use core::f64::consts::{FRAC_PI_2, PI};

use super::AngleConfig;
use crate::elastica::{half_sqrt_sin_split, param_from_turning};
use crate::roots::illinois;
use crate::{Error, TOL};

/// The set `Γ` of inflection directions: `[α − π, β]` when `β < 0`, otherwise
/// `[α − π, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaDomain {
    pub lo: f64,
    pub hi: f64,
    /// `hi` itself is excluded (`β ≥ 0`).
    pub hi_open: bool,
}

impl GammaDomain {
    pub fn is_singleton(&self) -> bool {
        !self.hi_open && self.lo == self.hi
    }

    /// Largest point used when sampling, stepping back from an open end.
    pub fn sample_hi(&self) -> f64 {
        if self.hi_open {
            self.hi - TOL.gamma_open_gap
        } else {
            self.hi
        }
    }

    pub fn contains(&self, gamma: f64) -> bool {
        let slack = TOL.boundary;
        gamma >= self.lo - slack && if self.hi_open { gamma < self.hi } else { gamma <= self.hi + slack }
    }
}

/// `y₁, y₂, G, σ, λ` at one `γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaTerms {
    pub gamma: f64,
    /// Energy of the elastica piece turning by `α − γ`.
    pub y1: f64,
    /// Energy of the elastica piece turning by `β − γ`.
    pub y2: f64,
    /// Lower bound on the energy of right-left s-curves with inflection direction `γ`.
    pub g: f64,
    /// Signed gap between the two optimal c-curves along the inflection line.
    pub sigma: f64,
    /// Common dilation factor of the two c-curves.
    pub lambda: f64,
}

/// A turning angle `δ = φ − γ ∈ [0, π]` held together with `π − δ`, both
/// computed by a single subtraction so that neither end loses precision.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Piece {
    pub delta: f64,
    pub complement: f64,
}

impl Piece {
    pub(crate) fn new(phi: f64, gamma: f64) -> Result<Self, Error> {
        let delta = phi - gamma;
        let complement = gamma - (phi - PI);
        if !(delta >= -TOL.boundary && complement >= -TOL.boundary) {
            return Err(Error::Domain("γ lies outside Γ"));
        }
        Ok(Piece { delta: delta.clamp(0.0, PI), complement: complement.clamp(0.0, PI) })
    }

    pub(crate) fn energy(&self) -> f64 {
        half_sqrt_sin_split(self.delta, self.complement)
    }

    pub(crate) fn sqrt_sin(&self) -> f64 {
        self.delta.min(self.complement).sin().max(0.0).sqrt()
    }

    /// The `t ∈ [0, π]` with `E[0, t]` turning by `δ`.
    pub(crate) fn param(&self) -> f64 {
        if self.delta <= FRAC_PI_2 {
            param_from_turning(self.delta).unwrap_or(0.0)
        } else {
            PI - param_from_turning(self.complement).unwrap_or(0.0)
        }
    }
}

/// Outcome of minimising `G` over `Γ`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaMinimum {
    pub gamma: f64,
    pub g_min: f64,
    /// Every candidate whose `G` ties the minimum, ascending.
    pub minimizers: Vec<f64>,
}

impl AngleConfig {
    pub fn gamma_domain(&self) -> GammaDomain {
        let lo = self.alpha - PI;
        if self.beta < 0.0 {
            GammaDomain { lo, hi: self.beta.max(lo), hi_open: false }
        } else {
            GammaDomain { lo, hi: 0.0, hi_open: true }
        }
    }

    /// `y₁` and `y₂` as pieces.
    fn pieces(&self, gamma: f64) -> Result<(Piece, Piece), Error> {
        Ok((Piece::new(self.alpha, gamma)?, Piece::new(self.beta, gamma)?))
    }

    /// `½∫₀^{α−γ} √sin τ dτ`.
    pub fn y1(&self, gamma: f64) -> Result<f64, Error> {
        Ok(Piece::new(self.alpha, gamma)?.energy())
    }

    /// `½∫₀^{β−γ} √sin τ dτ`.
    pub fn y2(&self, gamma: f64) -> Result<f64, Error> {
        Ok(Piece::new(self.beta, gamma)?.energy())
    }

    pub fn terms(&self, gamma: f64) -> Result<GammaTerms, Error> {
        if !(gamma < 0.0) {
            return Err(Error::Domain("G, σ and λ need γ < 0"));
        }
        let (p1, p2) = self.pieces(gamma)?;
        let (y1, y2) = (p1.energy(), p2.energy());
        let y = y1 + y2;
        if !(y > 0.0) {
            return Err(Error::Domain("G, σ and λ need y₁ + y₂ > 0"));
        }
        let (s, c) = gamma.sin_cos();
        let roots = p1.sqrt_sin() + p2.sqrt_sin();
        Ok(GammaTerms {
            gamma,
            y1,
            y2,
            g: y * y / -s,
            sigma: c + s / y * roots,
            lambda: -s / y,
        })
    }

    pub fn g(&self, gamma: f64) -> Result<f64, Error> {
        Ok(self.terms(gamma)?.g)
    }

    pub fn sigma(&self, gamma: f64) -> Result<f64, Error> {
        Ok(self.terms(gamma)?.sigma)
    }

    pub fn lambda(&self, gamma: f64) -> Result<f64, Error> {
        Ok(self.terms(gamma)?.lambda)
    }

    /// Minimises `G` over `Γ`.
    ///
    /// `G' = σ/λ²`, so interior minima sit where `σ` changes sign from
    /// negative to positive. These are bracketed on a uniform scan, polished,
    /// and compared against the closed endpoints. Ties go to the smaller `γ`.
    pub fn minimize_g(&self) -> Result<GammaMinimum, Error> {
        if self.alpha <= 0.0 {
            return Err(Error::Domain("minimising G needs α > 0"));
        }
        let dom = self.gamma_domain();
        if dom.is_singleton() {
            let g = self.g(dom.lo)?;
            return Ok(GammaMinimum { gamma: dom.lo, g_min: g, minimizers: alloc::vec![dom.lo] });
        }
        let (lo, hi) = (dom.lo, dom.sample_hi());
        let n = TOL.gamma_scan;
        let grid: Vec<f64> = (0..n)
            .map(|k| if k + 1 == n { hi } else { lo + (hi - lo) * k as f64 / (n - 1) as f64 })
            .collect();
        let sig: Vec<f64> = grid.iter().map(|&g| self.sigma(g)).collect::<Result<_, _>>()?;

        let mut cands: Vec<(f64, f64)> = Vec::new();
        cands.push((lo, self.g(lo)?));
        for k in 0..n - 1 {
            let (s0, s1) = (sig[k], sig[k + 1]);
            if s0 < 0.0 && s1 >= 0.0 {
                let root = if s1 == 0.0 {
                    grid[k + 1]
                } else {
                    illinois(
                        |g| self.sigma(g).unwrap_or(f64::NAN),
                        grid[k],
                        grid[k + 1],
                        s0,
                        s1,
                        1e-15,
                        TOL.sigma_root,
                    )
                };
                cands.push((root, self.g(root)?));
            }
        }
        if !dom.hi_open {
            cands.push((hi, self.g(hi)?));
        }
        cands.sort_by(|a, b| a.0.total_cmp(&b.0));
        cands.dedup_by(|a, b| a.0 == b.0);

        let mut best = cands[0];
        for &c in &cands[1..] {
            if c.1 < best.1 * (1.0 - 1e-14) {
                best = c;
            }
        }
        let minimizers = cands
            .iter()
            .filter(|c| c.1 <= best.1 * (1.0 + 1e-9))
            .map(|c| c.0)
            .collect();
        Ok(GammaMinimum { gamma: best.0, g_min: best.1, minimizers })
    }
}
