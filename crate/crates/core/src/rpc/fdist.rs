//! F-distribution quantiles by bisection on the regularized incomplete
//! beta function.

use statrs::function::beta::checked_beta_reg;

use super::RpcError;

/// CDF of F(d1, d2) at `x >= 0`.
pub fn f_cdf(d1: f64, d2: f64, x: f64) -> Result<f64, RpcError> {
    if x <= 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() {
        return Ok(1.0);
    }
    let z = d1 * x / (d1 * x + d2);
    checked_beta_reg(d1 / 2.0, d2 / 2.0, z).map_err(|_| RpcError::QuantileNoConvergence { d1, d2, alpha: x })
}

/// The `x` with `P(F(d1, d2) <= x) = alpha`.
pub fn f_quantile(d1: usize, d2: usize, alpha: f64) -> Result<f64, RpcError> {
    if d1 == 0 || d2 == 0 || !(alpha > 0.0 && alpha < 1.0) {
        return Err(RpcError::InvalidQuantileArgs { d1, d2, alpha });
    }
    let (a, b) = (d1 as f64 / 2.0, d2 as f64 / 2.0);
    let fail = || RpcError::QuantileNoConvergence { d1: d1 as f64, d2: d2 as f64, alpha };
    // Solve I_z(a, b) = alpha for z in (0, 1), then map back to x.
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let p = checked_beta_reg(a, b, mid).map_err(|_| fail())?;
        if !p.is_finite() {
            return Err(fail());
        }
        if p < alpha {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let z = 0.5 * (lo + hi);
    if z >= 1.0 {
        return Err(fail());
    }
    Ok(d2 as f64 * z / (d1 as f64 * (1.0 - z)))
}
