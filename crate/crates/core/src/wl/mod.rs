//! Weisfeiler-Lehman color refinement: 1-WL on nodes, k-WL and k-FWL on
//! k-tuples.
//!
//! Every run records a digest of the color histogram after each round.
//! Colors of different graphs are comparable because they come from the
//! same injective-by-construction encoding, so two graphs are told apart
//! exactly when their digest sequences differ.

mod palette;
mod tuple;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
pub use palette::Palette;
pub(crate) use palette::hash_words;

/// Default cap on tuple updates per round, `n^k · k · n`.
pub const DEFAULT_TUPLE_BUDGET: u64 = 100_000_000;

const TAG_NODE_INIT: u128 = 0x6e6f_6465;
const TAG_NODE_ROUND: u128 = 0x7769_6c31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WlMethod {
    Wl1,
    Wlk(usize),
    Fwlk(usize),
}

impl fmt::Display for WlMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WlMethod::Wl1 => write!(f, "1wl"),
            WlMethod::Wlk(k) => write!(f, "kwl:{k}"),
            WlMethod::Fwlk(k) => write!(f, "kfwl:{k}"),
        }
    }
}

impl FromStr for WlMethod {
    type Err = WlError;

    fn from_str(s: &str) -> Result<Self, WlError> {
        let bad = || WlError::UnknownMethod(s.to_string());
        if s == "1wl" {
            return Ok(WlMethod::Wl1);
        }
        let (name, k) = s.split_once(':').ok_or_else(bad)?;
        let k: usize = k.parse().map_err(|_| bad())?;
        match name {
            "kwl" => Ok(WlMethod::Wlk(k)),
            "kfwl" => Ok(WlMethod::Fwlk(k)),
            _ => Err(bad()),
        }
    }
}

/// Hashed colors, or exact interned ids (slow; meant for small graphs).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColorMode {
    #[default]
    Hashed,
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WlConfig {
    pub method: WlMethod,
    /// Number of refinement rounds; `None` runs to the stable coloring.
    pub max_iterations: Option<usize>,
    /// Per-node starting colors, 1-WL only.
    pub initial_colors: Option<Vec<u64>>,
    pub color_mode: ColorMode,
    pub tuple_budget: u64,
}

impl WlConfig {
    pub fn new(method: WlMethod) -> Self {
        WlConfig {
            method,
            max_iterations: None,
            initial_colors: None,
            color_mode: ColorMode::Hashed,
            tuple_budget: DEFAULT_TUPLE_BUDGET,
        }
    }

    pub fn wl1() -> Self {
        Self::new(WlMethod::Wl1)
    }

    pub fn kwl(k: usize) -> Self {
        Self::new(WlMethod::Wlk(k))
    }

    pub fn kfwl(k: usize) -> Self {
        Self::new(WlMethod::Fwlk(k))
    }

    pub fn with_max_iterations(mut self, t: usize) -> Self {
        self.max_iterations = Some(t);
        self
    }

    pub fn with_initial_colors(mut self, colors: Vec<u64>) -> Self {
        self.initial_colors = Some(colors);
        self
    }

    pub fn with_color_mode(mut self, mode: ColorMode) -> Self {
        self.color_mode = mode;
        self
    }

    pub fn validate(&self) -> Result<(), WlError> {
        match self.method {
            WlMethod::Wlk(k) | WlMethod::Fwlk(k) if k < 2 => return Err(WlError::InvalidOrder(k)),
            WlMethod::Wlk(_) | WlMethod::Fwlk(_) if self.initial_colors.is_some() => {
                return Err(WlError::InitialColorsUnsupported(self.method))
            }
            _ => {}
        }
        if self.max_iterations == Some(0) {
            return Err(WlError::ZeroIterationCap);
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorRefinementResult {
    pub stable_histogram_hash: u128,
    pub iterations_used: usize,
    /// Digest after round 0 (initial coloring) and after each round.
    pub per_round_hashes: Vec<u128>,
    /// Number of color classes after each round, aligned with the digests.
    pub class_counts: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WlError {
    #[error("tuple order must be at least 2, got {0}")]
    InvalidOrder(usize),
    #[error("max_iterations must be at least 1")]
    ZeroIterationCap,
    #[error("initial colors are only supported for 1-WL, not {0}")]
    InitialColorsUnsupported(WlMethod),
    #[error("initial colors cover {found} nodes but the graph has {expected}")]
    InitialColorsLength { expected: usize, found: usize },
    #[error("{method} on {n} nodes needs {required} tuple updates per round, over the budget of {budget}")]
    BudgetExceeded { method: WlMethod, n: usize, required: u128, budget: u64 },
    #[error("expected a {expected} configuration, got {found}")]
    WrongMethod { expected: &'static str, found: WlMethod },
    #[error("unknown method `{0}` (expected 1wl, kwl:<k> or kfwl:<k>)")]
    UnknownMethod(String),
}

fn expect_method(cfg: &WlConfig, ok: bool, expected: &'static str) -> Result<(), WlError> {
    if ok {
        Ok(())
    } else {
        Err(WlError::WrongMethod { expected, found: cfg.method })
    }
}

pub fn refine_1wl(g: &Graph, cfg: &WlConfig) -> Result<ColorRefinementResult, WlError> {
    expect_method(cfg, cfg.method == WlMethod::Wl1, "1wl")?;
    refine(g, cfg)
}

pub fn refine_kwl(g: &Graph, cfg: &WlConfig) -> Result<ColorRefinementResult, WlError> {
    expect_method(cfg, matches!(cfg.method, WlMethod::Wlk(_)), "kwl:<k>")?;
    refine(g, cfg)
}

pub fn refine_kfwl(g: &Graph, cfg: &WlConfig) -> Result<ColorRefinementResult, WlError> {
    expect_method(cfg, matches!(cfg.method, WlMethod::Fwlk(_)), "kfwl:<k>")?;
    refine(g, cfg)
}

/// Runs whichever method `cfg` names.
pub fn refine(g: &Graph, cfg: &WlConfig) -> Result<ColorRefinementResult, WlError> {
    refine_with(g, cfg, &mut Palette::new(cfg.color_mode))
}

/// Like [`refine`] but draws colors from a caller-owned palette.
pub fn refine_with(g: &Graph, cfg: &WlConfig, palette: &mut Palette) -> Result<ColorRefinementResult, WlError> {
    cfg.validate()?;
    match cfg.method {
        WlMethod::Wl1 => node_refine(g, cfg, palette),
        WlMethod::Wlk(k) => tuple::refine_tuples(g, k, false, cfg, palette),
        WlMethod::Fwlk(k) => tuple::refine_tuples(g, k, true, cfg, palette),
    }
}

fn node_refine(g: &Graph, cfg: &WlConfig, palette: &mut Palette) -> Result<ColorRefinementResult, WlError> {
    let n = g.n();
    let init: Vec<u128> = match &cfg.initial_colors {
        Some(c) if c.len() != n => return Err(WlError::InitialColorsLength { expected: n, found: c.len() }),
        Some(c) => c.iter().map(|&x| palette.color(&[TAG_NODE_INIT, u128::from(x)])).collect(),
        None => vec![palette.color(&[TAG_NODE_INIT, 0]); n],
    };
    Ok(palette::run_rounds(init, cfg.max_iterations, palette, |prev, v, buf| {
        buf.push(TAG_NODE_ROUND);
        buf.push(prev[v]);
        let start = buf.len();
        buf.extend(g.neighbors(v).iter().map(|&w| prev[w]));
        buf[start..].sort_unstable();
    }))
}

/// True when the method separates `g` from `h`. Both graphs are refined
/// with one palette and their per-round histogram digests are compared.
pub fn distinguishes(cfg: &WlConfig, g: &Graph, h: &Graph) -> Result<bool, WlError> {
    if g.n() != h.n() {
        return Ok(true);
    }
    let mut palette = Palette::new(cfg.color_mode);
    let a = refine_with(g, cfg, &mut palette)?;
    let b = refine_with(h, cfg, &mut palette)?;
    Ok(a.per_round_hashes != b.per_round_hashes)
}
