//! Category assembly: pools of candidate pairs, seeded or simplest-first
//! selection, and a per-pair audit.
//!
//! Seeded selection sorts the candidate pool, shuffles it with a ChaCha8
//! stream seeded by `seed` mixed with a fixed per-pool salt, and walks the
//! shuffled list, so the output does not depend on the worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use super::catalog::{
    apex_cycle_pair, dedup_isomorphic, drg_catalog, four_vertex_catalog, regular_graphs, srg_catalog, with_drg_arrays,
    with_srg_params, CatalogGraph,
};
use super::cfi::{cfi_pair, treewidth, validate_backbone, WlDifficulty};
use super::collision::find_collision_pairs;
use super::regular::verify_4vc;
use crate::dataset::{Audit, GraphPair};
use crate::distinguisher::{DistinguishError, Distinguisher};
use crate::extensions::{ExtensionConfig, ExtensionKind};
use crate::graph::{canonical_form, enumerate_nonisomorphic, CanonicalForm, EnumerateError, Graph};
use crate::wl::WlConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    Basic,
    RegularSimple,
    Srg,
    FourVc,
    Drg,
    Extension,
    Cfi,
}

impl Category {
    pub const ALL: [Category; 7] = [
        Category::Basic,
        Category::RegularSimple,
        Category::Srg,
        Category::FourVc,
        Category::Drg,
        Category::Extension,
        Category::Cfi,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Category::Basic => "basic",
            Category::RegularSimple => "regular-simple",
            Category::Srg => "srg",
            Category::FourVc => "4vc",
            Category::Drg => "drg",
            Category::Extension => "extension",
            Category::Cfi => "cfi",
        }
    }

    /// Top-level label written to the sidecar.
    pub fn group(&self) -> &'static str {
        match self {
            Category::Basic => "basic",
            Category::RegularSimple | Category::Srg | Category::FourVc | Category::Drg => "regular",
            Category::Extension => "extension",
            Category::Cfi => "cfi",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Category {
    type Err = AssembleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Category::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| AssembleError::UnknownCategory(s.to_string()))
    }
}

/// Pair counts per category and subcategory. Defaults are the full-size
/// recipe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotas {
    pub basic: usize,
    pub regular_simple: usize,
    pub srg: usize,
    pub four_vc: usize,
    pub drg: usize,
    pub ext_s3: usize,
    pub ext_n1: usize,
    pub ext_s4: usize,
    /// Split evenly between regular-plus-apex and apex cycle pairs, the
    /// odd one going to regular-plus-apex.
    pub ext_virtual: usize,
    /// Backbones of treewidth at most 2.
    pub cfi_tw2: usize,
    pub cfi_tw3: usize,
    /// Backbones of treewidth 4 or more.
    pub cfi_tw4: usize,
}

impl Default for Quotas {
    fn default() -> Self {
        Quotas {
            basic: 60,
            regular_simple: 50,
            srg: 50,
            four_vc: 20,
            drg: 20,
            ext_s3: 60,
            ext_n1: 20,
            ext_s4: 10,
            ext_virtual: 10,
            cfi_tw2: 60,
            cfi_tw3: 20,
            cfi_tw4: 20,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AssembleConfig {
    pub seed: u64,
    /// Order of the internally enumerated graphs searched for Basic and
    /// Extension collisions.
    pub max_n: usize,
    /// Replaces the internal enumeration, e.g. a graph6 stream of all
    /// 10-node graphs. Must be pairwise non-isomorphic.
    pub collision_graphs: Option<Vec<Graph>>,
    /// Extra graphs for the SRG, 4VC and DRG pools.
    pub catalog: Vec<Graph>,
    pub builtin_catalog: bool,
    /// Regular graphs are drawn from 6..=regular_max_n nodes (at most 9).
    pub regular_max_n: usize,
    /// CFI backbones have 3..=cfi_max_backbone nodes (at most 8).
    pub cfi_max_backbone: usize,
    pub quotas: Quotas,
    /// Emit what is available instead of failing on a short pool.
    pub allow_shortfall: bool,
}

impl Default for AssembleConfig {
    fn default() -> Self {
        AssembleConfig {
            seed: 0,
            max_n: 8,
            collision_graphs: None,
            catalog: Vec::new(),
            builtin_catalog: true,
            regular_max_n: 9,
            cfi_max_backbone: 7,
            quotas: Quotas::default(),
            allow_shortfall: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shortfall {
    pub category: Category,
    pub subcategory: String,
    pub wanted: usize,
    pub available: usize,
}

impl fmt::Display for Shortfall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.category)?;
        if !self.subcategory.is_empty() {
            write!(f, "/{}", self.subcategory)?;
        }
        write!(f, ": wanted {}, available {} (short by {})", self.wanted, self.available, self.wanted - self.available)
    }
}

#[derive(Debug, Error)]
pub enum AssembleError {
    #[error("unknown category `{0}` (expected basic, regular-simple, srg, 4vc, drg, extension or cfi)")]
    UnknownCategory(String),
    #[error("insufficient source pool: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Shortfall(Vec<Shortfall>),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Distinguish(#[from] DistinguishError),
    #[error("pair {0} failed its audit")]
    AuditFailed(String),
}

#[derive(Clone, Debug, Default)]
pub struct Assembly {
    pub pairs: Vec<GraphPair>,
    pub shortfalls: Vec<Shortfall>,
}

struct Candidate {
    g: Graph,
    h: Graph,
    subcategory: String,
    difficulty: WlDifficulty,
}

fn rng_for(seed: u64, salt: &str) -> ChaCha8Rng {
    let mut s = seed;
    for b in salt.bytes() {
        s = s.rotate_left(5) ^ u64::from(b);
    }
    ChaCha8Rng::seed_from_u64(s)
}

/// Up to `count` items, drawn in shuffled order from the sorted pool.
fn seeded_pick<T: Clone>(pool: &[T], count: usize, seed: u64, salt: &str) -> Vec<T> {
    let mut idx: Vec<usize> = (0..pool.len()).collect();
    idx.shuffle(&mut rng_for(seed, salt));
    idx.truncate(count);
    idx.into_iter().map(|i| pool[i].clone()).collect()
}

/// All index pairs `(i, j)`, `i < j`, whose keys match.
fn same_key_pairs<K: Ord + Clone>(keys: &[K]) -> Vec<(usize, usize)> {
    let mut by_key: BTreeMap<K, Vec<usize>> = BTreeMap::new();
    for (i, k) in keys.iter().enumerate() {
        by_key.entry(k.clone()).or_default().push(i);
    }
    let mut out = Vec::new();
    for members in by_key.values() {
        for (a, &i) in members.iter().enumerate() {
            out.extend(members[a + 1..].iter().map(|&j| (i, j)));
        }
    }
    out.sort_unstable();
    out
}

fn collision_pool(cfg: &AssembleConfig) -> Result<(Vec<Graph>, Vec<(usize, usize)>), AssembleError> {
    let graphs = match &cfg.collision_graphs {
        Some(g) => g.clone(),
        None => enumerate_nonisomorphic(cfg.max_n)?,
    };
    let pairs = find_collision_pairs(&graphs, &Distinguisher::Wl(WlConfig::wl1()), None)?;
    Ok((graphs, pairs))
}

fn user_catalog(cfg: &AssembleConfig) -> Vec<CatalogGraph> {
    cfg.catalog
        .iter()
        .enumerate()
        .map(|(i, g)| CatalogGraph { name: format!("input{i}"), graph: g.clone() })
        .collect()
}

fn basic(cfg: &AssembleConfig) -> Result<(Vec<Candidate>, Vec<Shortfall>), AssembleError> {
    let (graphs, pairs) = collision_pool(cfg)?;
    let pool: Vec<(usize, usize)> =
        pairs.into_iter().filter(|&(i, j)| graphs[i].regular_degree().is_none() && graphs[j].regular_degree().is_none()).collect();
    let picked = seeded_pick(&pool, cfg.quotas.basic, cfg.seed, "basic");
    let short = shortfall(Category::Basic, "", cfg.quotas.basic, picked.len());
    let out = picked
        .into_iter()
        .map(|(i, j)| Candidate {
            g: graphs[i].clone(),
            h: graphs[j].clone(),
            subcategory: String::new(),
            difficulty: WlDifficulty::Wl1,
        })
        .collect();
    Ok((out, short))
}

fn shortfall(category: Category, sub: &str, wanted: usize, available: usize) -> Vec<Shortfall> {
    if available < wanted {
        vec![Shortfall { category, subcategory: sub.to_string(), wanted, available }]
    } else {
        Vec::new()
    }
}

/// Same-order, same-degree pairs of regular graphs on `min_n..=max_n` nodes.
fn regular_pairs(min_n: usize, max_n: usize) -> Result<Vec<(Graph, Graph)>, AssembleError> {
    let graphs = regular_graphs(min_n, max_n)?;
    let keys: Vec<(usize, Option<usize>)> = graphs.iter().map(|g| (g.n(), g.regular_degree())).collect();
    Ok(same_key_pairs(&keys).into_iter().map(|(i, j)| (graphs[i].clone(), graphs[j].clone())).collect())
}

fn regular_simple(cfg: &AssembleConfig) -> Result<(Vec<Candidate>, Vec<Shortfall>), AssembleError> {
    let pool = regular_pairs(6, cfg.regular_max_n)?;
    let picked = seeded_pick(&pool, cfg.quotas.regular_simple, cfg.seed, "regular-simple");
    let short = shortfall(Category::RegularSimple, "simple", cfg.quotas.regular_simple, picked.len());
    let out = picked
        .into_iter()
        .map(|(g, h)| Candidate { g, h, subcategory: "simple".into(), difficulty: WlDifficulty::Wl1 })
        .collect();
    Ok((out, short))
}

fn srg(cfg: &AssembleConfig) -> (Vec<Candidate>, Vec<Shortfall>) {
    let mut graphs: Vec<CatalogGraph> =
        if cfg.builtin_catalog { srg_catalog().into_iter().map(|(c, _)| c).collect() } else { Vec::new() };
    graphs.extend(user_catalog(cfg));
    let entries = with_srg_params(dedup_isomorphic(graphs));
    let keys: Vec<_> = entries.iter().map(|(_, p)| *p).collect();
    let pool = same_key_pairs(&keys);
    let picked = seeded_pick(&pool, cfg.quotas.srg, cfg.seed, "srg");
    let short = shortfall(Category::Srg, "srg", cfg.quotas.srg, picked.len());
    let out = picked
        .into_iter()
        .map(|(i, j)| Candidate {
            g: entries[i].0.graph.clone(),
            h: entries[j].0.graph.clone(),
            subcategory: "srg".into(),
            difficulty: WlDifficulty::Wl3,
        })
        .collect();
    (out, short)
}

/// Simplest first: fewer nodes, then fewer edges, then catalog order.
fn simplest_first(pool: &mut [(usize, usize)], graphs: &[&Graph]) {
    pool.sort_by_key(|&(i, j)| (graphs[i].n(), graphs[i].edge_count(), i, j));
}

fn four_vc(cfg: &AssembleConfig) -> (Vec<Candidate>, Vec<Shortfall>) {
    let mut graphs: Vec<CatalogGraph> = Vec::new();
    if cfg.builtin_catalog {
        graphs.extend(srg_catalog().into_iter().map(|(c, _)| c));
        graphs.extend(four_vertex_catalog());
    }
    graphs.extend(user_catalog(cfg));
    let entries: Vec<_> =
        with_srg_params(dedup_isomorphic(graphs)).into_iter().filter(|(c, _)| verify_4vc(&c.graph)).collect();
    let keys: Vec<_> = entries.iter().map(|(_, p)| *p).collect();
    let mut pool = same_key_pairs(&keys);
    simplest_first(&mut pool, &entries.iter().map(|(c, _)| &c.graph).collect::<Vec<_>>());
    pool.truncate(cfg.quotas.four_vc);
    let short = shortfall(Category::FourVc, "4vc", cfg.quotas.four_vc, pool.len());
    let out = pool
        .into_iter()
        .map(|(i, j)| Candidate {
            g: entries[i].0.graph.clone(),
            h: entries[j].0.graph.clone(),
            subcategory: "4vc".into(),
            difficulty: WlDifficulty::Wl3,
        })
        .collect();
    (out, short)
}

fn drg(cfg: &AssembleConfig) -> (Vec<Candidate>, Vec<Shortfall>) {
    let mut graphs: Vec<CatalogGraph> =
        if cfg.builtin_catalog { drg_catalog().into_iter().map(|(c, _)| c).collect() } else { Vec::new() };
    graphs.extend(user_catalog(cfg));
    let entries = with_drg_arrays(dedup_isomorphic(graphs));
    let keys: Vec<_> = entries.iter().map(|(_, a)| a.clone()).collect();
    let mut pool = same_key_pairs(&keys);
    simplest_first(&mut pool, &entries.iter().map(|(c, _)| &c.graph).collect::<Vec<_>>());
    pool.truncate(cfg.quotas.drg);
    let short = shortfall(Category::Drg, "drg", cfg.quotas.drg, pool.len());
    let out = pool
        .into_iter()
        .map(|(i, j)| Candidate {
            g: entries[i].0.graph.clone(),
            h: entries[j].0.graph.clone(),
            subcategory: "drg".into(),
            difficulty: WlDifficulty::Wl3,
        })
        .collect();
    (out, short)
}

/// Greedy walk over a seeded order that skips pairs reusing a graph.
fn pick_fresh(
    pool: &[(Graph, Graph)],
    count: usize,
    seed: u64,
    salt: &str,
    used: &mut BTreeSet<CanonicalForm>,
) -> Vec<(Graph, Graph)> {
    let mut out = Vec::new();
    for (g, h) in seeded_pick(pool, pool.len(), seed, salt) {
        if out.len() == count {
            break;
        }
        let (fg, fh) = (canonical_form(&g, None), canonical_form(&h, None));
        if used.contains(&fg) || used.contains(&fh) {
            continue;
        }
        used.insert(fg);
        used.insert(fh);
        out.push((g, h));
    }
    out
}

fn extension(cfg: &AssembleConfig) -> Result<(Vec<Candidate>, Vec<Shortfall>), AssembleError> {
    let (graphs, pairs) = collision_pool(cfg)?;
    let wl3 = Distinguisher::Wl(WlConfig::kwl(3));
    let pairs: Vec<(usize, usize)> = pairs
        .into_par_iter()
        .map(|(i, j)| wl3.distinguishes(&graphs[i], &graphs[j]).map(|d| d.then_some((i, j))))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let pool_for = |kind: ExtensionKind| -> Result<Vec<(Graph, Graph)>, AssembleError> {
        let method = Distinguisher::Extension(ExtensionConfig::new(kind));
        let keep = pairs
            .par_iter()
            .map(|&(i, j)| method.distinguishes(&graphs[i], &graphs[j]).map(|d| !d))
            .collect::<Result<Vec<bool>, _>>()?;
        Ok(pairs
            .iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(&(i, j), _)| (graphs[i].clone(), graphs[j].clone()))
            .collect())
    };
    let q = &cfg.quotas;
    let mut used = BTreeSet::new();
    let mut out = Vec::new();
    let mut shorts = Vec::new();
    // Rarest first so the larger pools cannot starve the smaller ones.
    let mut by_sub: BTreeMap<&str, Vec<(Graph, Graph)>> = BTreeMap::new();
    for (sub, kind, count) in
        [("s4", ExtensionKind::Sk(4), q.ext_s4), ("n1", ExtensionKind::Nk(1), q.ext_n1), ("s3", ExtensionKind::Sk(3), q.ext_s3)]
    {
        let picked = pick_fresh(&pool_for(kind)?, count, cfg.seed, sub, &mut used);
        shorts.extend(shortfall(Category::Extension, sub, count, picked.len()));
        by_sub.insert(sub, picked);
    }
    let n_regular = q.ext_virtual.div_ceil(2);
    let n_cycles = q.ext_virtual - n_regular;
    let regular_pool: Vec<(Graph, Graph)> = regular_pairs(cfg.regular_max_n, cfg.regular_max_n)?
        .into_iter()
        .map(|(g, h)| (g.with_apex(), h.with_apex()))
        .filter(|(g, h)| wl3.distinguishes(g, h).unwrap_or(false))
        .collect();
    let mut virtual_pairs = pick_fresh(&regular_pool, n_regular, cfg.seed, "virtual", &mut used);
    let cycle_pool: Vec<(Graph, Graph)> = (3..3 + n_cycles).map(apex_cycle_pair).collect();
    virtual_pairs.extend(pick_fresh(&cycle_pool, n_cycles, cfg.seed, "virtual-cycles", &mut used));
    shorts.extend(shortfall(Category::Extension, "virtual", q.ext_virtual, virtual_pairs.len()));
    by_sub.insert("virtual", virtual_pairs);
    for sub in ["s3", "n1", "s4", "virtual"] {
        out.extend(by_sub.remove(sub).unwrap_or_default().into_iter().map(|(g, h)| Candidate {
            g,
            h,
            subcategory: sub.into(),
            difficulty: WlDifficulty::Wl1,
        }));
    }
    Ok((out, shorts))
}

/// Valid CFI backbones on `3..=max_nodes` nodes with their treewidth.
pub fn cfi_backbones(max_nodes: usize) -> Result<Vec<(Graph, usize)>, AssembleError> {
    let mut out = Vec::new();
    for n in 3..=max_nodes {
        for g in enumerate_nonisomorphic(n)? {
            if validate_backbone(&g).is_ok() {
                let tw = treewidth(&g);
                out.push((g, tw));
            }
        }
    }
    Ok(out)
}

fn cfi(cfg: &AssembleConfig) -> Result<(Vec<Candidate>, Vec<Shortfall>), AssembleError> {
    let backbones = cfi_backbones(cfg.cfi_max_backbone)?;
    let q = &cfg.quotas;
    let mut out = Vec::new();
    let mut shorts = Vec::new();
    for (sub, count, range) in [("1wl", q.cfi_tw2, 0..=2), ("3wl", q.cfi_tw3, 3..=3), ("4wl", q.cfi_tw4, 4..=usize::MAX)] {
        let pool: Vec<(Graph, usize)> = backbones.iter().filter(|(_, tw)| range.contains(tw)).cloned().collect();
        let picked = seeded_pick(&pool, count, cfg.seed, sub);
        shorts.extend(shortfall(Category::Cfi, sub, count, picked.len()));
        for (backbone, tw) in picked {
            let (g, h) = cfi_pair(&backbone).expect("validated backbone");
            out.push(Candidate { g, h, subcategory: sub.into(), difficulty: WlDifficulty::from_treewidth(tw) });
        }
    }
    Ok((out, shorts))
}

/// Builds, selects and audits the pairs of one category.
pub fn assemble_category(category: Category, cfg: &AssembleConfig) -> Result<Assembly, AssembleError> {
    let (candidates, shortfalls) = match category {
        Category::Basic => basic(cfg)?,
        Category::RegularSimple => regular_simple(cfg)?,
        Category::Srg => srg(cfg),
        Category::FourVc => four_vc(cfg),
        Category::Drg => drg(cfg),
        Category::Extension => extension(cfg)?,
        Category::Cfi => cfi(cfg)?,
    };
    if !shortfalls.is_empty() && !cfg.allow_shortfall {
        return Err(AssembleError::Shortfall(shortfalls));
    }
    let audits: Vec<Audit> = candidates.par_iter().map(|c| Audit::run(&c.g, &c.h)).collect();
    let mut pairs = Vec::with_capacity(candidates.len());
    for (i, (c, audit)) in candidates.into_iter().zip(audits).enumerate() {
        let pair_id = format!("{}-{i:03}", category.name());
        if !audit.passed() {
            return Err(AssembleError::AuditFailed(pair_id));
        }
        pairs.push(GraphPair {
            pair_id,
            g: c.g,
            h: c.h,
            category: category.group().into(),
            subcategory: c.subcategory,
            wl_difficulty: c.difficulty,
            audit,
        });
    }
    Ok(Assembly { pairs, shortfalls })
}

/// Every category in order, shortfalls collected across all of them.
pub fn assemble_all(cfg: &AssembleConfig) -> Result<Assembly, AssembleError> {
    let mut lenient = cfg.clone();
    lenient.allow_shortfall = true;
    let mut all = Assembly::default();
    for cat in Category::ALL {
        let part = assemble_category(cat, &lenient)?;
        all.pairs.extend(part.pairs);
        all.shortfalls.extend(part.shortfalls);
    }
    if !all.shortfalls.is_empty() && !cfg.allow_shortfall {
        return Err(AssembleError::Shortfall(all.shortfalls));
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wl::distinguishes;

    fn small(seed: u64) -> AssembleConfig {
        AssembleConfig {
            seed,
            max_n: 7,
            regular_max_n: 8,
            cfi_max_backbone: 5,
            quotas: Quotas {
                basic: 5,
                regular_simple: 6,
                srg: 4,
                four_vc: 1,
                drg: 1,
                ext_s3: 0,
                ext_n1: 0,
                ext_s4: 0,
                ext_virtual: 4,
                cfi_tw2: 4,
                cfi_tw3: 2,
                cfi_tw4: 1,
            },
            ..AssembleConfig::default()
        }
    }

    #[test]
    fn category_names_round_trip() {
        for c in Category::ALL {
            assert_eq!(c.name().parse::<Category>().unwrap(), c);
        }
        assert!("regular".parse::<Category>().is_err());
    }

    #[test]
    fn same_seed_same_pairs() {
        for cat in [Category::Basic, Category::RegularSimple, Category::Srg, Category::Cfi] {
            let a = assemble_category(cat, &small(3)).unwrap();
            let b = assemble_category(cat, &small(3)).unwrap();
            assert_eq!(a.pairs, b.pairs, "{cat}");
        }
        let a = assemble_category(Category::RegularSimple, &small(3)).unwrap();
        let c = assemble_category(Category::RegularSimple, &small(4)).unwrap();
        assert_ne!(a.pairs, c.pairs);
    }

    #[test]
    fn every_pair_passes_audit() {
        let all = assemble_all(&AssembleConfig { allow_shortfall: true, ..small(1) }).unwrap();
        for p in &all.pairs {
            assert!(p.audit.passed());
            assert!(!distinguishes(&WlConfig::wl1(), &p.g, &p.h).unwrap());
        }
        let basic: Vec<_> = all.pairs.iter().filter(|p| p.category == "basic").collect();
        assert_eq!(basic.len(), 5);
        assert!(basic.iter().all(|p| p.g.regular_degree().is_none()));
        let cfi: Vec<_> = all.pairs.iter().filter(|p| p.category == "cfi").collect();
        assert_eq!(cfi.len(), 7);
        assert!(cfi.iter().filter(|p| p.subcategory == "3wl").all(|p| p.wl_difficulty == WlDifficulty::Wl3));
    }

    #[test]
    fn shortfall_is_reported() {
        let mut cfg = small(1);
        // backbones up to 4 nodes: K3, C4 and the diamond, then K4
        cfg.cfi_max_backbone = 4;
        cfg.quotas.cfi_tw2 = 3;
        cfg.quotas.cfi_tw3 = 1;
        cfg.quotas.cfi_tw4 = 3;
        match assemble_category(Category::Cfi, &cfg) {
            Err(AssembleError::Shortfall(s)) => {
                assert_eq!(s, vec![Shortfall { category: Category::Cfi, subcategory: "4wl".into(), wanted: 3, available: 0 }]);
                assert!(AssembleError::Shortfall(s).to_string().contains("short by 3"));
            }
            other => panic!("{other:?}"),
        }
        cfg.allow_shortfall = true;
        let got = assemble_category(Category::Cfi, &cfg).unwrap();
        assert_eq!(got.shortfalls.len(), 1);
    }

    #[test]
    fn virtual_pairs_do_not_repeat_graphs() {
        let got = assemble_category(Category::Extension, &small(2)).unwrap();
        assert_eq!(got.pairs.len(), 4);
        let forms: BTreeSet<_> =
            got.pairs.iter().flat_map(|p| [canonical_form(&p.g, None), canonical_form(&p.h, None)]).collect();
        assert_eq!(forms.len(), 8);
    }

    #[test]
    fn four_vc_takes_smallest_first() {
        let got = assemble_category(Category::FourVc, &small(0)).unwrap();
        assert_eq!(got.pairs[0].g.n(), 40);
        assert_eq!(got.pairs[0].g.edge_count(), 240);
    }
}
