//! Non-neural extension baselines, each a twist on 1-WL: substructure
//! counts (`S_k`), rooted ego-net types (`N_k`) and single-node marking
//! (`M_1`).

mod substructure;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{canonical_form, ego_net, CanonicalForm, Graph};
use crate::wl::{hash_words, refine_with, ColorRefinementResult, Palette, WlConfig, WlError};
pub use substructure::{substructure_init_colors, substructure_init_colors_with_budget, DEFAULT_SUBGRAPH_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExtensionKind {
    /// Connected induced subgraphs on exactly `k` nodes.
    Sk(usize),
    /// Rooted ego-nets of radius `k`.
    Nk(usize),
    M1,
}

impl fmt::Display for ExtensionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtensionKind::Sk(k) => write!(f, "s{k}"),
            ExtensionKind::Nk(k) => write!(f, "n{k}"),
            ExtensionKind::M1 => write!(f, "m1"),
        }
    }
}

impl FromStr for ExtensionKind {
    type Err = ExtensionError;

    fn from_str(s: &str) -> Result<Self, ExtensionError> {
        let bad = || ExtensionError::UnknownKind(s.to_string());
        if s == "m1" {
            return Ok(ExtensionKind::M1);
        }
        let (head, k) = s.split_at_checked(1).ok_or_else(bad)?;
        let k: usize = k.parse().map_err(|_| bad())?;
        let kind = match head {
            "s" => ExtensionKind::Sk(k),
            "n" => ExtensionKind::Nk(k),
            _ => return Err(bad()),
        };
        ExtensionConfig::new(kind).validate()?;
        Ok(kind)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionConfig {
    pub kind: ExtensionKind,
    pub subgraph_budget: u64,
    /// Largest ego-net handed to the canonical labeler.
    pub max_ego_nodes: usize,
}

impl ExtensionConfig {
    pub fn new(kind: ExtensionKind) -> Self {
        ExtensionConfig { kind, subgraph_budget: DEFAULT_SUBGRAPH_BUDGET, max_ego_nodes: 512 }
    }

    pub fn validate(&self) -> Result<(), ExtensionError> {
        match self.kind {
            ExtensionKind::Sk(k) if !(3..=6).contains(&k) => Err(ExtensionError::InvalidOrder(k)),
            ExtensionKind::Nk(0) => Err(ExtensionError::InvalidRadius(0)),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("substructure order must be between 3 and 6, got {0}")]
    InvalidOrder(usize),
    #[error("ego-net radius must be at least 1, got {0}")]
    InvalidRadius(usize),
    #[error("{what} exceed the budget of {budget}")]
    BudgetExceeded { what: &'static str, budget: u64 },
    #[error("unknown extension `{0}` (expected s3, s4, n1, n2, m1, ...)")]
    UnknownKind(String),
    #[error(transparent)]
    Wl(#[from] WlError),
}

/// Assigns class indices to rooted ego-nets by exact canonical form. Share
/// one pool between graphs that are to be compared.
#[derive(Debug, Default)]
pub struct EgoNetPool {
    classes: BTreeMap<CanonicalForm, u64>,
}

impl EgoNetPool {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    fn class_of(&mut self, form: CanonicalForm) -> u64 {
        let next = self.classes.len() as u64;
        *self.classes.entry(form).or_insert(next)
    }
}

fn rooted_ego_forms(g: &Graph, radius: usize, max_nodes: usize) -> Result<Vec<CanonicalForm>, ExtensionError> {
    (0..g.n())
        .into_par_iter()
        .map(|v| {
            let ego = ego_net(g, v, radius);
            if ego.n() > max_nodes {
                return Err(ExtensionError::BudgetExceeded { what: "ego-net nodes", budget: max_nodes as u64 });
            }
            let mut colors = vec![0u64; ego.n()];
            colors[0] = 1;
            Ok(canonical_form(&ego, Some(&colors)))
        })
        .collect()
}

/// Node color: pool index of the node's rooted radius-`k` ego-net class.
pub fn egonet_init_colors(g: &Graph, k: usize, pool: &mut EgoNetPool) -> Result<Vec<u64>, ExtensionError> {
    egonet_init_colors_capped(g, k, pool, ExtensionConfig::new(ExtensionKind::Nk(k)).max_ego_nodes)
}

fn egonet_init_colors_capped(
    g: &Graph,
    k: usize,
    pool: &mut EgoNetPool,
    max_nodes: usize,
) -> Result<Vec<u64>, ExtensionError> {
    if k == 0 {
        return Err(ExtensionError::InvalidRadius(0));
    }
    let forms = rooted_ego_forms(g, k, max_nodes)?;
    Ok(forms.into_iter().map(|f| pool.class_of(f)).collect())
}

/// Digest of the sorted multiset of stable 1-WL hashes, one run per node
/// with that node given a distinct color.
pub fn marking_signature(g: &Graph) -> u128 {
    let mut hashes: Vec<u128> = (0..g.n())
        .into_par_iter()
        .map(|u| {
            let mut marks = vec![0u64; g.n()];
            marks[u] = 1;
            let cfg = WlConfig::wl1().with_initial_colors(marks);
            refine_with(g, &cfg, &mut Palette::Hashed).expect("marks cover every node").stable_histogram_hash
        })
        .collect();
    hashes.sort_unstable();
    let mut words = vec![g.n() as u128];
    words.extend(hashes);
    hash_words(&words)
}

/// Initial colors for `g` and `h` under `kind`, drawn from shared pools.
fn init_pair(cfg: &ExtensionConfig, g: &Graph, h: &Graph) -> Result<(Vec<u64>, Vec<u64>), ExtensionError> {
    match cfg.kind {
        ExtensionKind::Sk(k) => Ok((
            substructure_init_colors_with_budget(g, k, cfg.subgraph_budget)?,
            substructure_init_colors_with_budget(h, k, cfg.subgraph_budget)?,
        )),
        ExtensionKind::Nk(k) => {
            let mut pool = EgoNetPool::new();
            let a = egonet_init_colors_capped(g, k, &mut pool, cfg.max_ego_nodes)?;
            let b = egonet_init_colors_capped(h, k, &mut pool, cfg.max_ego_nodes)?;
            Ok((a, b))
        }
        ExtensionKind::M1 => unreachable!("marking has no single initial coloring"),
    }
}

/// 1-WL seeded with the extension's initial colors, for one graph. The
/// stable hash is comparable between separate calls.
pub fn extension_refine(cfg: &ExtensionConfig, g: &Graph) -> Result<ColorRefinementResult, ExtensionError> {
    cfg.validate()?;
    let colors = match cfg.kind {
        ExtensionKind::Sk(k) => substructure_init_colors_with_budget(g, k, cfg.subgraph_budget)?,
        // No shared pool here, so classes are keyed by form digest to keep
        // results comparable between graphs.
        ExtensionKind::Nk(k) => {
            rooted_ego_forms(g, k, cfg.max_ego_nodes)?.iter().map(|f| f.digest() as u64).collect()
        }
        ExtensionKind::M1 => {
            let d = marking_signature(g);
            return Ok(ColorRefinementResult {
                stable_histogram_hash: d,
                iterations_used: 0,
                per_round_hashes: vec![d],
                class_counts: vec![],
            });
        }
    };
    Ok(refine_with(g, &WlConfig::wl1().with_initial_colors(colors), &mut Palette::Hashed)?)
}

pub fn extension_distinguishes(cfg: &ExtensionConfig, g: &Graph, h: &Graph) -> Result<bool, ExtensionError> {
    cfg.validate()?;
    if g.n() != h.n() {
        return Ok(true);
    }
    if cfg.kind == ExtensionKind::M1 {
        return Ok(marking_signature(g) != marking_signature(h));
    }
    let (cg, ch) = init_pair(cfg, g, h)?;
    let mut palette = Palette::Hashed;
    let a = refine_with(g, &WlConfig::wl1().with_initial_colors(cg), &mut palette)?;
    let b = refine_with(h, &WlConfig::wl1().with_initial_colors(ch), &mut palette)?;
    Ok(a.per_round_hashes != b.per_round_hashes)
}
