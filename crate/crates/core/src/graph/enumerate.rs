use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use super::{canonical_form, CanonicalForm, Graph};

/// Largest node count enumerated internally.
pub const MAX_ENUMERATION_NODES: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error(
        "internal enumeration stops at n = {max}; for n = {n} pipe a graph6 stream from an external generator (e.g. `geng {n}`)"
    )]
    TooLarge { n: usize, max: usize },
}

/// One representative per isomorphism class on `n` nodes, in canonical-form
/// order. Graphs are built by adding a node, with every possible
/// neighbourhood, to each class on `n - 1` nodes and deduplicating by
/// canonical form; every representative is the canonically labeled graph.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n > MAX_ENUMERATION_NODES {
        return Err(EnumerateError::TooLarge { n, max: MAX_ENUMERATION_NODES });
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for size in 2..=n {
        let prev = size - 1;
        let forms: Vec<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|g| {
                (0u32..1 << prev).map(move |mask| {
                    let mut h = g.clone();
                    h.adj.push(Vec::new());
                    for v in 0..prev {
                        if mask >> v & 1 == 1 {
                            h.insert_edge(v, prev);
                        }
                    }
                    canonical_form(&h, None)
                })
            })
            .collect();
        let unique: BTreeMap<CanonicalForm, ()> = forms.into_iter().map(|f| (f, ())).collect();
        level = unique.into_keys().map(|f| f.to_graph()).collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    /// Unlabeled graph count by orbit counting: the average over all n!
    /// permutations of 2^(number of cycles induced on unordered pairs).
    fn burnside_count(n: usize) -> u64 {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
        let perms = permutations(n);
        let total: u64 = perms
            .iter()
            .map(|p| {
                let mut seen = vec![false; pairs.len()];
                let mut cycles = 0;
                for start in 0..pairs.len() {
                    if seen[start] {
                        continue;
                    }
                    cycles += 1;
                    let mut cur = start;
                    while !seen[cur] {
                        seen[cur] = true;
                        let (a, b) = pairs[cur];
                        cur = index(p[a], p[b]);
                    }
                }
                1u64 << cycles
            })
            .sum();
        total / perms.len() as u64
    }

    /// Dedup of every labeled graph by its lexicographically smallest
    /// relabeled adjacency code.
    fn brute_force_classes(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
        let mut p: Vec<usize> = (0..n).collect();
        // Heap's algorithm would do; next_permutation is simpler to check.
        loop {
            let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
            let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            perms.push(p.clone());
        }
        let mut codes = std::collections::HashSet::new();
        for mask in 0u32..1 << pairs.len() {
            let code = perms
                .iter()
                .map(|perm| {
                    let mut c = 0u32;
                    for (k, &(a, b)) in pairs.iter().enumerate() {
                        if mask >> k & 1 == 1 {
                            let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
                            c |= 1 << pairs.iter().position(|&q| q == (x, y)).unwrap();
                        }
                    }
                    c
                })
                .min()
                .unwrap();
            codes.insert(code);
        }
        codes.len()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_nonisomorphic(0).unwrap().len(), 1);
        assert_eq!(enumerate_nonisomorphic(1).unwrap().len(), 1);
        assert_eq!(brute_force_classes(4), 11);
        assert_eq!(enumerate_nonisomorphic(4).unwrap().len(), 11);
    }

    #[test]
    fn counts_match_orbit_counting() {
        for n in 1..=7 {
            let expected = burnside_count(n);
            assert_eq!(enumerate_nonisomorphic(n).unwrap().len() as u64, expected, "n = {n}");
        }
        assert_eq!(burnside_count(7), 1044);
    }

    #[test]
    fn brute_force_agrees_up_to_five() {
        for n in 1..=5 {
            assert_eq!(enumerate_nonisomorphic(n).unwrap().len(), brute_force_classes(n));
        }
    }

    #[test]
    fn representatives_are_pairwise_nonisomorphic() {
        for n in 1..=6 {
            let graphs = enumerate_nonisomorphic(n).unwrap();
            for (i, g) in graphs.iter().enumerate() {
                for h in &graphs[i + 1..] {
                    assert!(!is_isomorphic(g, h));
                }
            }
        }
    }

    #[test]
    fn deterministic_order() {
        assert_eq!(enumerate_nonisomorphic(6).unwrap(), enumerate_nonisomorphic(6).unwrap());
    }

    #[test]
    fn rejects_large_n() {
        let err = enumerate_nonisomorphic(9).unwrap_err();
        assert!(err.to_string().contains("graph6"));
    }
}
