//! Bracketed scalar root finding.

/// Finds a root of `f` in `[a, b]` given `f(a)` and `f(b)` of opposite sign.
///
/// Illinois-modified regula falsi. Stops when `|f| ≤ ftol` or the bracket is
/// narrower than `xtol`; returns the endpoint with the smaller residual.
pub(crate) fn illinois<F: FnMut(f64) -> f64>(
    mut f: F,
    mut a: f64,
    mut b: f64,
    mut fa: f64,
    mut fb: f64,
    xtol: f64,
    ftol: f64,
) -> f64 {
    debug_assert!(fa * fb <= 0.0);
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    let mut side = 0i8;
    for _ in 0..200 {
        let mut x = (a * fb - b * fa) / (fb - fa);
        if !(x > a.min(b) && x < a.max(b)) {
            x = 0.5 * (a + b);
        }
        let fx = f(x);
        if fx.abs() <= ftol {
            return x;
        }
        if (fx > 0.0) == (fb > 0.0) {
            b = x;
            fb = fx;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = x;
            fa = fx;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        }
        if (b - a).abs() <= xtol {
            break;
        }
    }
    if fa.abs() < fb.abs() {
        a
    } else {
        b
    }
}

/// Plain bisection on a sign predicate: `pos(lo)` is true, `pos(hi)` false.
/// Returns the final bracket.
pub(crate) fn bisect_sign<F: FnMut(f64) -> bool>(mut pos: F, mut lo: f64, mut hi: f64, xtol: f64) -> (f64, f64) {
    for _ in 0..200 {
        if (hi - lo).abs() <= xtol {
            break;
        }
        let m = 0.5 * (lo + hi);
        if m == lo || m == hi {
            break;
        }
        if pos(m) {
            lo = m;
        } else {
            hi = m;
        }
    }
    (lo, hi)
}
