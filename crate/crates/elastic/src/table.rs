//! Tabulation of `G`, `σ` and `λ` over `Γ`.

use elastic_core::scurve::AngleConfig;
use elastic_core::Error;
use serde::{Deserialize, Serialize};

use crate::json::format_f64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub gamma: f64,
    #[serde(rename = "G")]
    pub g: f64,
    pub sigma: f64,
    pub lambda: f64,
}

/// `n` equally spaced rows over `Γ`, stopping short of an open end. A
/// singleton `Γ` gives one row whatever `n` is.
pub fn gamma_table(alpha: f64, beta: f64, n: usize) -> Result<Vec<TableRow>, Error> {
    let cfg = AngleConfig::new(alpha, beta)?;
    let dom = cfg.gamma_domain();
    let gammas: Vec<f64> = if dom.is_singleton() {
        vec![dom.lo]
    } else {
        if n < 2 {
            return Err(Error::Domain("a table over an interval needs n ≥ 2"));
        }
        let hi = dom.sample_hi();
        (0..n)
            .map(|k| if k + 1 == n { hi } else { dom.lo + (hi - dom.lo) * k as f64 / (n - 1) as f64 })
            .collect()
    };
    gammas
        .into_iter()
        .map(|gamma| {
            let t = cfg.terms(gamma)?;
            Ok(TableRow { gamma, g: t.g, sigma: t.sigma, lambda: t.lambda })
        })
        .collect()
}

/// CSV with header `gamma,G,sigma,lambda`, numbers to 17 significant digits.
pub fn write_csv<W: std::io::Write>(rows: &[TableRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["gamma", "G", "sigma", "lambda"])?;
    for r in rows {
        w.write_record([r.gamma, r.g, r.sigma, r.lambda].map(|x| format_f64(x).unwrap_or_default()))?;
    }
    w.flush()?;
    Ok(())
}
