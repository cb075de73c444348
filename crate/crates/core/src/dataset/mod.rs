//! Pair files, JSON sidecars, verdict aggregation and dataset statistics.

mod reduce;
mod report;
mod stats;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::generators::cfi::WlDifficulty;
use crate::graph::{is_isomorphic, parse_graph6, write_graph6, Graph, Graph6Error, Permutation, GRAPH6_HEADER};
use crate::wl::{distinguishes, WlConfig};
pub use reduce::{reduce_seeds, ReduceError, SeedReduction};
pub use report::{verdict_csv, BenchmarkReport, PairVerdict, ReportRow, VerdictRow};
pub use stats::{dataset_stats, StatsReport, StatsRow};

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("pair file line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error("pair file has {0} graph lines; pairs need an even count")]
    OddLineCount(usize),
    #[error("sidecar is not valid JSON: {0}")]
    Sidecar(#[from] serde_json::Error),
    #[error("sidecar lists {entries} entries for {pairs} pairs")]
    SidecarMismatch { pairs: usize, entries: usize },
    #[error("duplicate pair id `{0}`")]
    DuplicatePairId(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Audit {
    pub wl1_indistinguishable: bool,
    pub non_isomorphic: bool,
}

impl Audit {
    pub fn run(g: &Graph, h: &Graph) -> Audit {
        Audit {
            wl1_indistinguishable: !distinguishes(&WlConfig::wl1(), g, h).expect("1-WL has no budget"),
            non_isomorphic: !is_isomorphic(g, h),
        }
    }

    pub fn passed(&self) -> bool {
        self.wl1_indistinguishable && self.non_isomorphic
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphPair {
    pub pair_id: String,
    pub g: Graph,
    pub h: Graph,
    pub category: String,
    pub subcategory: String,
    pub wl_difficulty: WlDifficulty,
    pub audit: Audit,
}

/// Metadata line of the JSON sidecar, aligned with the pair file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SidecarEntry {
    pub pair_id: String,
    pub category: String,
    pub subcategory: String,
    pub wl_difficulty: WlDifficulty,
    pub audit: Audit,
}

impl GraphPair {
    pub fn sidecar(&self) -> SidecarEntry {
        SidecarEntry {
            pair_id: self.pair_id.clone(),
            category: self.category.clone(),
            subcategory: self.subcategory.clone(),
            wl_difficulty: self.wl_difficulty,
            audit: self.audit,
        }
    }
}

/// Two graph6 lines per pair.
pub fn write_pair_file(pairs: &[GraphPair]) -> String {
    let mut out = String::new();
    for p in pairs {
        for g in [&p.g, &p.h] {
            out.push_str(&write_graph6(g));
            out.push('\n');
        }
    }
    out
}

pub fn write_sidecar(pairs: &[GraphPair]) -> String {
    let entries: Vec<SidecarEntry> = pairs.iter().map(GraphPair::sidecar).collect();
    let mut s = serde_json::to_string_pretty(&entries).expect("sidecar entries serialize");
    s.push('\n');
    s
}

/// Graph pairs of a pair file. Blank lines and a leading graph6 header are
/// skipped; line numbers in errors are 1-based.
pub fn parse_pair_file(text: &str) -> Result<Vec<(Graph, Graph)>, DatasetError> {
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() || (graphs.is_empty() && line == GRAPH6_HEADER) {
            continue;
        }
        graphs.push(parse_graph6(line).map_err(|source| DatasetError::Graph6 { line: i + 1, source })?);
    }
    if graphs.len() % 2 == 1 {
        return Err(DatasetError::OddLineCount(graphs.len()));
    }
    let mut it = graphs.into_iter();
    let mut out = Vec::new();
    while let (Some(g), Some(h)) = (it.next(), it.next()) {
        out.push((g, h));
    }
    Ok(out)
}

pub fn parse_sidecar(text: &str) -> Result<Vec<SidecarEntry>, DatasetError> {
    Ok(serde_json::from_str(text)?)
}

/// Pairs with metadata. Without a sidecar, ids are `pair-0000`, ... with
/// an empty category, and the audit is recomputed.
pub fn load_pairs(pair_text: &str, sidecar_text: Option<&str>) -> Result<Vec<GraphPair>, DatasetError> {
    let raw = parse_pair_file(pair_text)?;
    let pairs: Vec<GraphPair> = match sidecar_text {
        Some(text) => {
            let entries = parse_sidecar(text)?;
            if entries.len() != raw.len() {
                return Err(DatasetError::SidecarMismatch { pairs: raw.len(), entries: entries.len() });
            }
            raw.into_iter()
                .zip(entries)
                .map(|((g, h), e)| GraphPair {
                    pair_id: e.pair_id,
                    g,
                    h,
                    category: e.category,
                    subcategory: e.subcategory,
                    wl_difficulty: e.wl_difficulty,
                    audit: e.audit,
                })
                .collect()
        }
        None => raw
            .into_iter()
            .enumerate()
            .map(|(i, (g, h))| {
                let audit = Audit::run(&g, &h);
                GraphPair {
                    pair_id: format!("pair-{i:04}"),
                    g,
                    h,
                    category: String::new(),
                    subcategory: String::new(),
                    wl_difficulty: WlDifficulty::Wl1,
                    audit,
                }
            })
            .collect(),
    };
    let mut ids: Vec<&str> = pairs.iter().map(|p| p.pair_id.as_str()).collect();
    ids.sort_unstable();
    if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
        return Err(DatasetError::DuplicatePairId(w[0].to_string()));
    }
    Ok(pairs)
}

/// Reindexing list for an external model runner, as CSV
/// `pair_id,role,group,copy,perm`. Group 0 holds `copies` rows for each of
/// the roles `G`, `H` and `G_pi`; groups `1..=groups` hold `2·copies` rows
/// for `G` and `H`. `perm` lists the image of each node of the role's base
/// graph, space separated. For `G_pi` the base graph is `G`. One ChaCha8
/// stream seeded with `seed` is consumed in row order.
pub fn emit_permutations(pairs: &[GraphPair], copies: usize, groups: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::from("pair_id,role,group,copy,perm\n");
    for p in pairs {
        let mut rows: Vec<(&str, usize, usize, usize)> = Vec::new();
        for (role, n) in [("G", p.g.n()), ("H", p.h.n()), ("G_pi", p.g.n())] {
            rows.extend((0..copies).map(|c| (role, 0, c, n)));
        }
        for group in 1..=groups {
            for (role, n) in [("G", p.g.n()), ("H", p.h.n())] {
                rows.extend((0..2 * copies).map(|c| (role, group, c, n)));
            }
        }
        for (role, group, copy, n) in rows {
            let perm = Permutation::random(n, &mut rng);
            let images: Vec<String> = perm.as_slice().iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("{},{role},{group},{copy},{}\n", p.pair_id, images.join(" ")));
        }
    }
    out
}
