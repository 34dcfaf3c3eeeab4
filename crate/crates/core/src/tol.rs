/// Numerical tolerances shared by the solver and its checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Absolute error target of the direct `ξ` quadrature.
    pub xi_abs: f64,
    /// Absolute error target of the `½∫√sin` quadrature.
    pub sqrt_sin_abs: f64,
    /// Relative error target for elastica arclength.
    pub arclength_rel: f64,
    /// Below this `α` a tangent pair is treated as aligned with its chord.
    pub alpha_zero: f64,
    /// Slack when comparing `β` against the boundary `α − π` and `|β| ≤ α`.
    pub boundary: f64,
    /// `|σ(β)|` at or below this is the boundary between cases (b) and (c).
    pub sigma_boundary: f64,
    /// Root polishing target for `σ`.
    pub sigma_root: f64,
    /// Largest `|σ|` accepted when assembling a first form curve.
    pub sigma_consistency: f64,
    /// Number of scan points over `Γ` when minimising `G`.
    pub gamma_scan: usize,
    /// Gap left at the open end `γ → 0⁻` of `Γ`.
    pub gamma_open_gap: f64,
    /// Bracket width at which the ray construction bisection stops.
    pub ray_param: f64,
    /// Largest positive terminal parameter tolerated in case (c).
    pub case_c_end: f64,
    /// Minimum chord shortening below which a line segment is dropped.
    pub min_line: f64,
    /// Smallest parameter for which chord angles are evaluated.
    pub chord_min_t: f64,
}

pub const TOL: Tolerances = Tolerances {
    xi_abs: 1e-13,
    sqrt_sin_abs: 1e-13,
    arclength_rel: 1e-11,
    alpha_zero: 1e-9,
    boundary: 1e-12,
    sigma_boundary: 1e-10,
    sigma_root: 1e-12,
    sigma_consistency: 1e-8,
    gamma_scan: 512,
    gamma_open_gap: 1e-9,
    ray_param: 1e-13,
    case_c_end: 1e-8,
    min_line: 1e-12,
    chord_min_t: 1e-9,
};
