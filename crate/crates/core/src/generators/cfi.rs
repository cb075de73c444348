//! Cai-Fürer-Immerman pairs over small backbones.
//!
//! Node layout: edge `i` of the backbone (in `Graph::edges` order) becomes
//! nodes `2i` (`e⁰`) and `2i + 1` (`e¹`); then, vertex by vertex, one node
//! per even-size subset of the vertex's incident edges, in increasing
//! bitmask order over the incident edges sorted by index.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfiSpec {
    pub backbone: Graph,
    pub twisted: bool,
    /// Index into the backbone's edge list; the twist flips the connections
    /// at the higher-numbered endpoint.
    pub twist_edge: usize,
}

impl CfiSpec {
    pub fn new(backbone: Graph, twisted: bool) -> Self {
        CfiSpec { backbone, twisted, twist_edge: 0 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CfiError {
    #[error("backbone must have at least 3 nodes, got {0}")]
    TooSmall(usize),
    #[error("backbone is disconnected")]
    Disconnected,
    #[error("backbone node {node} has degree {degree}; every node needs degree >= 2")]
    LowDegree { node: usize, degree: usize },
    #[error("twist edge {index} out of range for a backbone with {edges} edges")]
    TwistEdgeOutOfRange { index: usize, edges: usize },
    #[error("backbone node {node} has degree {degree}; gadgets are limited to degree 16")]
    DegreeTooLarge { node: usize, degree: usize },
}

pub fn validate_backbone(backbone: &Graph) -> Result<(), CfiError> {
    if backbone.n() < 3 {
        return Err(CfiError::TooSmall(backbone.n()));
    }
    if !backbone.is_connected() {
        return Err(CfiError::Disconnected);
    }
    for node in 0..backbone.n() {
        let degree = backbone.degree(node);
        if degree < 2 {
            return Err(CfiError::LowDegree { node, degree });
        }
        if degree > 16 {
            return Err(CfiError::DegreeTooLarge { node, degree });
        }
    }
    Ok(())
}

/// `Σ_v 2^{deg(v) − 1} + 2|E|`.
pub fn cfi_node_count(backbone: &Graph) -> usize {
    (0..backbone.n()).map(|v| 1usize << (backbone.degree(v) - 1)).sum::<usize>() + 2 * backbone.edge_count()
}

pub fn gen_cfi(spec: &CfiSpec) -> Result<Graph, CfiError> {
    let b = &spec.backbone;
    validate_backbone(b)?;
    let edges: Vec<(usize, usize)> = b.edges().collect();
    if spec.twist_edge >= edges.len() {
        return Err(CfiError::TwistEdgeOutOfRange { index: spec.twist_edge, edges: edges.len() });
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); b.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut g = Graph::empty(cfi_node_count(b));
    let mut next = 2 * edges.len();
    for (v, inc) in incident.iter().enumerate() {
        for mask in 0u32..1 << inc.len() {
            if mask.count_ones() % 2 == 1 {
                continue;
            }
            for (bit, &e) in inc.iter().enumerate() {
                let mut side = (mask >> bit) & 1;
                if spec.twisted && e == spec.twist_edge && v == edges[e].1 {
                    side ^= 1;
                }
                g.insert_edge(next, 2 * e + side as usize);
            }
            next += 1;
        }
    }
    Ok(g)
}

/// Untwisted and twisted CFI graphs over `backbone`.
pub fn cfi_pair(backbone: &Graph) -> Result<(Graph, Graph), CfiError> {
    let plain = gen_cfi(&CfiSpec::new(backbone.clone(), false))?;
    let twisted = gen_cfi(&CfiSpec::new(backbone.clone(), true))?;
    Ok((plain, twisted))
}

/// Exact treewidth by dynamic programming over vertex subsets (elimination
/// orderings). Intended for graphs with at most ~20 nodes.
pub fn treewidth(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 24, "exact treewidth is exponential in n");
    if n == 0 {
        return 0;
    }
    let nbr: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    // q(S, v): nodes outside S ∪ {v} reachable from v through S
    let q = |s: u32, v: usize| -> u32 {
        let mut seen = 1u32 << v;
        let mut frontier = 1u32 << v;
        let mut out = 0u32;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = nbr[x] & !seen;
            seen |= fresh;
            out |= fresh & !s;
            frontier |= fresh & s;
        }
        out
    };
    let full = (1u32 << n) - 1;
    let mut tw = vec![usize::MAX; 1usize << n];
    tw[0] = 0;
    // S \ {v} < S numerically, so plain counting order is a valid DP order
    for s in 1..=full {
        let mut best = usize::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1 << v);
            let cost = tw[without as usize].max(q(without, v).count_ones() as usize);
            best = best.min(cost);
        }
        tw[s as usize] = best;
    }
    tw[full as usize]
}

/// Weakest standard WL level that is known to fail on a CFI pair, derived
/// from the backbone's treewidth `t`: the pair is indistinguishable by
/// tuple refinement of order `t` and distinguishable at order `t + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WlDifficulty {
    #[serde(rename = "1WL")]
    Wl1,
    #[serde(rename = "3WL")]
    Wl3,
    #[serde(rename = "4WL")]
    Wl4,
    #[serde(rename = "beyond4WL")]
    Beyond4Wl,
}

impl WlDifficulty {
    pub fn from_treewidth(tw: usize) -> Self {
        match tw {
            0..=2 => WlDifficulty::Wl1,
            3 => WlDifficulty::Wl3,
            4 => WlDifficulty::Wl4,
            _ => WlDifficulty::Beyond4Wl,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            WlDifficulty::Wl1 => "1WL",
            WlDifficulty::Wl3 => "3WL",
            WlDifficulty::Wl4 => "4WL",
            WlDifficulty::Beyond4Wl => "beyond4WL",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [WlDifficulty::Wl1, WlDifficulty::Wl3, WlDifficulty::Wl4, WlDifficulty::Beyond4Wl]
            .into_iter()
            .find(|d| d.as_str() == s)
    }
}

impl fmt::Display for WlDifficulty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;
    use crate::graph::{enumerate_nonisomorphic, is_isomorphic};

    #[test]
    fn triangle_gives_hexagons_and_dodecagon() {
        let (plain, twisted) = cfi_pair(&named::complete(3)).unwrap();
        assert_eq!(plain.n(), 12);
        assert!(is_isomorphic(&plain, &named::cycles(&[6, 6])));
        assert!(is_isomorphic(&twisted, &named::cycle(12)));
    }

    #[test]
    fn node_count_formula() {
        for b in [named::complete(3), named::complete(4), named::cycle(5), named::petersen()] {
            let g = gen_cfi(&CfiSpec::new(b.clone(), true)).unwrap();
            let expected: usize = (0..b.n()).map(|v| 1 << (b.degree(v) - 1)).sum::<usize>() + 2 * b.edge_count();
            assert_eq!(g.n(), expected);
        }
        assert_eq!(cfi_node_count(&named::complete(4)), 28);
    }

    #[test]
    fn gadget_degrees() {
        // edge nodes see one gadget node per subset parity class at each end
        let b = named::complete(4);
        let g = gen_cfi(&CfiSpec::new(b.clone(), false)).unwrap();
        for e in 0..2 * b.edge_count() {
            assert_eq!(g.degree(e), 4);
        }
        for v in 2 * b.edge_count()..g.n() {
            assert_eq!(g.degree(v), 3);
        }
    }

    #[test]
    fn invalid_backbones() {
        assert_eq!(gen_cfi(&CfiSpec::new(named::path(3), false)), Err(CfiError::LowDegree { node: 0, degree: 1 }));
        assert_eq!(gen_cfi(&CfiSpec::new(named::cycles(&[3, 3]), false)), Err(CfiError::Disconnected));
        assert_eq!(gen_cfi(&CfiSpec::new(named::complete(2), false)), Err(CfiError::TooSmall(2)));
        let spec = CfiSpec { backbone: named::complete(3), twisted: true, twist_edge: 3 };
        assert_eq!(gen_cfi(&spec), Err(CfiError::TwistEdgeOutOfRange { index: 3, edges: 3 }));
    }

    #[test]
    fn twist_position_does_not_matter() {
        let b = named::complete(4);
        let base = gen_cfi(&CfiSpec::new(b.clone(), true)).unwrap();
        for twist_edge in 1..6 {
            let other = gen_cfi(&CfiSpec { backbone: b.clone(), twisted: true, twist_edge }).unwrap();
            assert!(is_isomorphic(&base, &other));
        }
    }

    #[test]
    fn pairs_are_never_isomorphic() {
        for n in 3..=5 {
            for b in enumerate_nonisomorphic(n).unwrap() {
                if validate_backbone(&b).is_err() {
                    continue;
                }
                let (g, h) = cfi_pair(&b).unwrap();
                assert!(!is_isomorphic(&g, &h), "backbone {b:?}");
            }
        }
    }

    #[test]
    fn treewidth_values() {
        assert_eq!(treewidth(&named::path(6)), 1);
        assert_eq!(treewidth(&named::cycle(7)), 2);
        assert_eq!(treewidth(&named::complete(6)), 5);
        assert_eq!(treewidth(&named::petersen()), 4);
        let grid = named::cartesian_product(&named::path(3), &named::path(3));
        assert_eq!(treewidth(&grid), 3);
        assert_eq!(treewidth(&Graph::empty(4)), 0);
    }

    #[test]
    fn difficulty_tags() {
        assert_eq!(WlDifficulty::from_treewidth(treewidth(&named::complete(3))), WlDifficulty::Wl1);
        assert_eq!(WlDifficulty::from_treewidth(treewidth(&named::complete(4))), WlDifficulty::Wl3);
        assert_eq!(WlDifficulty::from_treewidth(treewidth(&named::complete(5))), WlDifficulty::Wl4);
        assert_eq!(WlDifficulty::from_treewidth(treewidth(&named::complete(6))), WlDifficulty::Beyond4Wl);
        assert_eq!(serde_json::to_string(&WlDifficulty::Beyond4Wl).unwrap(), "\"beyond4WL\"");
        assert_eq!(WlDifficulty::parse("3WL"), Some(WlDifficulty::Wl3));
    }
}
