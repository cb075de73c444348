//! Paired comparison of model embeddings: Hotelling T² tests between
//! reindexed copies, a fixed or adaptive threshold, and a reliability
//! check against an isomorphic copy.

mod embeddings;
mod fdist;
mod hotelling;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use embeddings::{
    evaluate_table, parse_verdict_csv, write_verdict_csv, EmbeddingTable, EvalMode, PairEmbeddings, PairRows, Role,
    VerdictRecord,
};
pub use fdist::{f_cdf, f_quantile};
pub use hotelling::{hotelling_t2, DifferenceSample};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RpcError {
    #[error("q = {q} copies with dimension d = {d}: need q > d")]
    TooFewCopies { q: usize, d: usize },
    #[error("alpha must lie strictly between 0 and 1, got {0}")]
    InvalidAlpha(f64),
    #[error("manual threshold must be positive and finite, got {0}")]
    InvalidThreshold(f64),
    #[error("rapc needs at least one group")]
    NoGroups,
    #[error("F quantile needs d1, d2 >= 1 and 0 < alpha < 1, got ({d1}, {d2}, {alpha})")]
    InvalidQuantileArgs { d1: usize, d2: usize, alpha: f64 },
    #[error("F quantile did not converge for ({d1}, {d2}, {alpha})")]
    QuantileNoConvergence { d1: f64, d2: f64, alpha: f64 },
    #[error("difference sample needs at least 2 copies of positive dimension, got {copies} of dimension {dim}")]
    SampleTooSmall { copies: usize, dim: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("copy counts differ: {left} vs {right}")]
    CopyCountMismatch { left: usize, right: usize },
    #[error("embedding contains NaN or infinity")]
    NonFinite,
    #[error("role {role} group {group}: expected copies 0..{expected}, found {found}")]
    MissingCopies { role: Role, group: usize, expected: usize, found: usize },
    #[error("malformed row: {0}")]
    MalformedRow(String),
    #[error("embedding file: {0}")]
    Schema(String),
    #[error("verdict file: {0}")]
    VerdictFile(String),
    #[error("zero vector has no direction")]
    ZeroVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Distinguished,
    NotDistinguished,
    Unreliable,
}

impl Outcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            Outcome::Distinguished => "distinguished",
            Outcome::NotDistinguished => "not_distinguished",
            Outcome::Unreliable => "unreliable",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Outcome::Distinguished, Outcome::NotDistinguished, Outcome::Unreliable].into_iter().find(|o| o.as_str() == s)
    }

    /// Unreliable when the isomorphic copy reaches the threshold;
    /// otherwise distinguished when the test statistic exceeds it.
    pub fn decide(t2_test: f64, t2_reliability: f64, threshold: f64) -> Self {
        if t2_reliability >= threshold {
            Outcome::Unreliable
        } else if t2_test > threshold {
            Outcome::Distinguished
        } else {
            Outcome::NotDistinguished
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RpcVerdict {
    pub t2_test: f64,
    pub t2_reliability: f64,
    pub threshold: f64,
    pub outcome: Outcome,
}

impl RpcVerdict {
    fn new(t2_test: f64, t2_reliability: f64, threshold: f64) -> Self {
        RpcVerdict { t2_test, t2_reliability, threshold, outcome: Outcome::decide(t2_test, t2_reliability, threshold) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RpcConfig {
    /// Copies per role.
    pub q: usize,
    /// Embedding dimension.
    pub d: usize,
    pub alpha: f64,
    pub manual_threshold: Option<f64>,
    /// Seed for the reindexing list handed to the model runner.
    pub seed: u64,
}

impl RpcConfig {
    pub fn new(q: usize, d: usize, alpha: f64) -> Self {
        RpcConfig { q, d, alpha, manual_threshold: None, seed: 0 }
    }

    pub fn with_threshold(mut self, t: f64) -> Self {
        self.manual_threshold = Some(t);
        self
    }

    pub fn validate(&self) -> Result<(), RpcError> {
        check_copies(self.q, self.d)?;
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(RpcError::InvalidAlpha(self.alpha));
        }
        match self.manual_threshold {
            Some(t) if !(t.is_finite() && t > 0.0) => Err(RpcError::InvalidThreshold(t)),
            _ => Ok(()),
        }
    }
}

fn check_copies(q: usize, d: usize) -> Result<(), RpcError> {
    if d == 0 || q <= d {
        return Err(RpcError::TooFewCopies { q, d });
    }
    Ok(())
}

/// `(q−1)d/(q−d) · F_{d,q−d}(α)`, or the manual override.
pub fn rpc_threshold(cfg: &RpcConfig) -> Result<f64, RpcError> {
    cfg.validate()?;
    if let Some(t) = cfg.manual_threshold {
        return Ok(t);
    }
    let (q, d) = (cfg.q as f64, cfg.d as f64);
    Ok((q - 1.0) * d / (q - d) * f_quantile(cfg.d, cfg.q - cfg.d, cfg.alpha)?)
}

/// Statistic between roles `G` and `H`, and between `G` and `G_pi`, each
/// pairing copy `i` with copy `i`.
fn major_and_reliability(emb: &PairEmbeddings, q: usize, d: usize) -> Result<(f64, f64), RpcError> {
    for (role, rows) in [(Role::G, &emb.g), (Role::H, &emb.h), (Role::GPi, &emb.g_pi)] {
        if rows.len() != q {
            return Err(RpcError::MissingCopies { role, group: 0, expected: q, found: rows.len() });
        }
        if let Some(v) = rows.iter().find(|v| v.len() != d) {
            return Err(RpcError::DimensionMismatch { expected: d, found: v.len() });
        }
    }
    let test = hotelling_t2(&DifferenceSample::paired(&emb.g, &emb.h)?);
    let rel = hotelling_t2(&DifferenceSample::paired(&emb.g, &emb.g_pi)?);
    Ok((test, rel))
}

pub fn rpc_decide(emb: &PairEmbeddings, cfg: &RpcConfig) -> Result<RpcVerdict, RpcError> {
    let threshold = rpc_threshold(cfg)?;
    let (test, rel) = major_and_reliability(emb, cfg.q, cfg.d)?;
    Ok(RpcVerdict::new(test, rel, threshold))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RapcConfig {
    /// Null groups per graph.
    pub p: usize,
    /// Pairs per group; each group holds `2q` copies.
    pub q: usize,
    pub seed: u64,
}

/// Threshold = max of the `2p` within-group statistics, where group `j`
/// of a graph pairs copy `k` with copy `k + q`.
pub fn rapc_decide(emb: &PairEmbeddings, cfg: &RapcConfig) -> Result<RpcVerdict, RpcError> {
    if cfg.p == 0 {
        return Err(RpcError::NoGroups);
    }
    let d = emb.dim();
    check_copies(cfg.q, d)?;
    let mut threshold = f64::NEG_INFINITY;
    for (role, groups) in [(Role::G, &emb.g_groups), (Role::H, &emb.h_groups)] {
        if groups.len() != cfg.p {
            return Err(RpcError::MissingCopies { role, group: groups.len() + 1, expected: 2 * cfg.q, found: 0 });
        }
        for (j, copies) in groups.iter().enumerate() {
            if copies.len() != 2 * cfg.q {
                return Err(RpcError::MissingCopies { role, group: j + 1, expected: 2 * cfg.q, found: copies.len() });
            }
            let t = hotelling_t2(&DifferenceSample::paired(&copies[..cfg.q], &copies[cfg.q..])?);
            threshold = threshold.max(t);
        }
    }
    let (test, rel) = major_and_reliability(emb, cfg.q, d)?;
    Ok(RpcVerdict::new(test, rel, threshold))
}

/// `max(0, cos(x, y) − γ)`.
pub fn cosine_margin_loss(x: &[f64], y: &[f64], gamma: f64) -> Result<f64, RpcError> {
    if x.len() != y.len() {
        return Err(RpcError::DimensionMismatch { expected: x.len(), found: y.len() });
    }
    let norm = |v: &[f64]| v.iter().map(|a| a * a).sum::<f64>().sqrt();
    let (nx, ny) = (norm(x), norm(y));
    if nx == 0.0 || ny == 0.0 {
        return Err(RpcError::ZeroVector);
    }
    let dot: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    Ok((dot / (nx * ny) - gamma).max(0.0))
}
