//! One-sample Hotelling T² on paired differences.

use nalgebra::{DMatrix, DVector};

use super::RpcError;

const RIDGE: f64 = 1e-9;
const FLOOR: f64 = 1e-30;
/// Relative size below which a covariance or mean counts as zero.
const ZERO_TOL: f64 = 1e-12;

/// `q` difference vectors of equal dimension `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct DifferenceSample {
    diffs: Vec<Vec<f64>>,
    dim: usize,
}

impl DifferenceSample {
    pub fn new(diffs: Vec<Vec<f64>>) -> Result<Self, RpcError> {
        let dim = diffs.first().map_or(0, Vec::len);
        if diffs.len() < 2 || dim == 0 {
            return Err(RpcError::SampleTooSmall { copies: diffs.len(), dim });
        }
        if let Some(bad) = diffs.iter().find(|v| v.len() != dim) {
            return Err(RpcError::DimensionMismatch { expected: dim, found: bad.len() });
        }
        if diffs.iter().flatten().any(|x| !x.is_finite()) {
            return Err(RpcError::NonFinite);
        }
        Ok(DifferenceSample { diffs, dim })
    }

    /// `f(G_i) − f(H_i)` for aligned copies.
    pub fn paired(left: &[Vec<f64>], right: &[Vec<f64>]) -> Result<Self, RpcError> {
        if left.len() != right.len() {
            return Err(RpcError::CopyCountMismatch { left: left.len(), right: right.len() });
        }
        let diffs = left
            .iter()
            .zip(right)
            .map(|(a, b)| {
                if a.len() != b.len() {
                    return Err(RpcError::DimensionMismatch { expected: a.len(), found: b.len() });
                }
                Ok(a.iter().zip(b).map(|(x, y)| x - y).collect())
            })
            .collect::<Result<Vec<Vec<f64>>, _>>()?;
        DifferenceSample::new(diffs)
    }

    pub fn copies(&self) -> usize {
        self.diffs.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// `q · d̄ᵀ S⁻¹ d̄` with `S` the unbiased sample covariance.
///
/// `S` is factored by Cholesky. If that fails, a ridge
/// `1e-9 · (trace(S)/d + 1e-30) · I` is added. A numerically zero `S`
/// gives 0 when the mean is also zero and `+∞` otherwise.
pub fn hotelling_t2(sample: &DifferenceSample) -> f64 {
    let (q, d) = (sample.copies(), sample.dim());
    let x = DMatrix::from_fn(q, d, |i, j| sample.diffs[i][j]);
    let mean: DVector<f64> = DVector::from_fn(d, |j, _| x.column(j).mean());
    let centered = DMatrix::from_fn(q, d, |i, j| x[(i, j)] - mean[j]);
    let s = centered.transpose() * &centered / (q as f64 - 1.0);

    let scale = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale == 0.0 {
        return 0.0;
    }
    let trace = s.trace();
    if trace <= (ZERO_TOL * scale).powi(2) * d as f64 {
        let mean_max = mean.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        return if mean_max <= ZERO_TOL * scale { 0.0 } else { f64::INFINITY };
    }
    let solved = match s.clone().cholesky() {
        Some(ch) => ch.solve(&mean),
        None => {
            let ridge = RIDGE * (trace / d as f64 + FLOOR);
            let reg = s + DMatrix::identity(d, d) * ridge;
            match reg.cholesky() {
                Some(ch) => ch.solve(&mean),
                None => return f64::INFINITY,
            }
        }
    };
    (q as f64 * mean.dot(&solved)).max(0.0)
}
