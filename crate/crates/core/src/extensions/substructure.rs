//! Per-node counts of connected induced k-node subgraphs, by rooted type.

use std::collections::{BTreeMap, HashMap};

use xxhash_rust::xxh3::Xxh3;

use super::ExtensionError;
use crate::graph::Graph;

/// Upper bound on enumerated subgraphs per graph.
pub const DEFAULT_SUBGRAPH_BUDGET: u64 = 20_000_000;

/// Bit index of position pair `(i, j)`, `i < j`, in a k-node adjacency mask.
fn pair_bit(i: usize, j: usize, k: usize) -> usize {
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

fn permutations_fixing_first(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0], &mut (1..k).collect(), &mut out);
    out
}

/// Rooted type codes for every position of an ordered k-node subgraph,
/// memoized by adjacency mask.
struct RootedTypes {
    k: usize,
    perms: Vec<Vec<usize>>,
    memo: HashMap<u32, Vec<u32>>,
}

impl RootedTypes {
    fn new(k: usize) -> Self {
        RootedTypes { k, perms: permutations_fixing_first(k), memo: HashMap::new() }
    }

    /// Smallest relabeled mask with `root` sent to position 0.
    fn rooted_code(&self, mask: u32, root: usize) -> u32 {
        let k = self.k;
        let mut order: Vec<usize> = vec![root];
        order.extend((0..k).filter(|&x| x != root));
        let adjacent = |a: usize, b: usize| {
            let (i, j) = (a.min(b), a.max(b));
            mask >> pair_bit(i, j, k) & 1 == 1
        };
        self.perms
            .iter()
            .map(|p| {
                let mut code = 0u32;
                for i in 0..k {
                    for j in i + 1..k {
                        if adjacent(order[p[i]], order[p[j]]) {
                            code |= 1 << pair_bit(i, j, k);
                        }
                    }
                }
                code
            })
            .min()
            .expect("at least one permutation")
    }

    fn types(&mut self, mask: u32) -> &[u32] {
        if !self.memo.contains_key(&mask) {
            let types = (0..self.k).map(|root| self.rooted_code(mask, root)).collect();
            self.memo.insert(mask, types);
        }
        &self.memo[&mask]
    }
}

/// Enumerates each connected induced `k`-subset once (ESU).
fn for_each_connected_subset(
    g: &Graph,
    k: usize,
    budget: u64,
    mut visit: impl FnMut(&[usize]),
) -> Result<(), ExtensionError> {
    fn extend(
        g: &Graph,
        k: usize,
        anchor: usize,
        sub: &mut Vec<usize>,
        mut ext: Vec<usize>,
        count: &mut u64,
        budget: u64,
        visit: &mut dyn FnMut(&[usize]),
    ) -> Result<(), ExtensionError> {
        if sub.len() == k {
            *count += 1;
            if *count > budget {
                return Err(ExtensionError::BudgetExceeded { what: "connected subgraphs", budget });
            }
            visit(sub);
            return Ok(());
        }
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            for &u in g.neighbors(w) {
                let exclusive = u > anchor
                    && !sub.contains(&u)
                    && u != w
                    && !next.contains(&u)
                    && sub.iter().all(|&s| !g.has_edge(s, u));
                if exclusive {
                    next.push(u);
                }
            }
            sub.push(w);
            extend(g, k, anchor, sub, next, count, budget, visit)?;
            sub.pop();
        }
        Ok(())
    }
    let mut count = 0;
    for v in 0..g.n() {
        let ext: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| u > v).collect();
        extend(g, k, v, &mut vec![v], ext, &mut count, budget, &mut visit)?;
    }
    Ok(())
}

/// Node color: digest of the count vector over rooted types of connected
/// induced `k`-node subgraphs containing the node.
pub fn substructure_init_colors(g: &Graph, k: usize) -> Result<Vec<u64>, ExtensionError> {
    substructure_init_colors_with_budget(g, k, DEFAULT_SUBGRAPH_BUDGET)
}

pub fn substructure_init_colors_with_budget(g: &Graph, k: usize, budget: u64) -> Result<Vec<u64>, ExtensionError> {
    if !(3..=6).contains(&k) {
        return Err(ExtensionError::InvalidOrder(k));
    }
    let mut types = RootedTypes::new(k);
    let mut counts: Vec<BTreeMap<u32, u64>> = vec![BTreeMap::new(); g.n()];
    for_each_connected_subset(g, k, budget, |sub| {
        let mut mask = 0u32;
        for i in 0..k {
            for j in i + 1..k {
                if g.has_edge(sub[i], sub[j]) {
                    mask |= 1 << pair_bit(i, j, k);
                }
            }
        }
        for (pos, &t) in types.types(mask).iter().enumerate() {
            *counts[sub[pos]].entry(t).or_default() += 1;
        }
    })?;
    Ok(counts
        .iter()
        .map(|c| {
            let mut h = Xxh3::new();
            h.update(&(k as u64).to_le_bytes());
            for (t, n) in c {
                h.update(&t.to_le_bytes());
                h.update(&n.to_le_bytes());
            }
            h.digest()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    /// Every k-subset, kept when its induced subgraph is connected.
    fn brute_force_subsets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
        let n = g.n();
        let mut out = Vec::new();
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize != k {
                continue;
            }
            let nodes: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if g.induced_subgraph(&nodes).is_connected() {
                out.push(nodes);
            }
        }
        out
    }

    #[test]
    fn esu_matches_brute_force() {
        for g in [named::petersen(), named::complete(6), named::star(5), named::cycles(&[3, 4]), named::shrikhande()] {
            for k in 3..=4 {
                let mut seen = Vec::new();
                for_each_connected_subset(&g, k, u64::MAX, |s| {
                    let mut s = s.to_vec();
                    s.sort_unstable();
                    seen.push(s);
                })
                .unwrap();
                seen.sort();
                let mut expected = brute_force_subsets(&g, k);
                expected.sort();
                assert_eq!(seen, expected);
            }
        }
    }

    #[test]
    fn rooted_types_of_three_node_graphs() {
        let mut t = RootedTypes::new(3);
        // path 0-1-2: mask bits (0,1)=0, (0,2)=1, (1,2)=2
        let path = t.types(0b101).to_vec();
        assert_eq!(path[0], path[2]);
        assert_ne!(path[0], path[1]);
        let tri = t.types(0b111).to_vec();
        assert!(tri.iter().all(|&x| x == tri[0]));
        assert_eq!(t.types(0b110)[1], path[0]);
    }

    #[test]
    fn triangle_counts_separate_hexagon() {
        let a = substructure_init_colors(&named::cycle(6), 3).unwrap();
        let b = substructure_init_colors(&named::cycles(&[3, 3]), 3).unwrap();
        assert!(a.iter().all(|&c| c == a[0]));
        assert!(b.iter().all(|&c| c == b[0]));
        assert_ne!(a[0], b[0]);
    }

    #[test]
    fn budget_and_order_errors() {
        assert_eq!(substructure_init_colors(&named::cycle(5), 2), Err(ExtensionError::InvalidOrder(2)));
        assert!(matches!(
            substructure_init_colors_with_budget(&named::complete(10), 4, 5),
            Err(ExtensionError::BudgetExceeded { .. })
        ));
    }
}
