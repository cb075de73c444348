//! Canonical labeling by individualization-refinement.
//!
//! The search tree branches on the members of the first non-singleton cell of
//! an equitable partition. Leaves are compared by the sequence of quotient
//! invariants along their path, then by the relabeled edge list. Automorphisms
//! found at equal leaves prune sibling subtrees in the same orbit and cut the
//! current branch back to where it left the stored leaf.

use xxhash_rust::xxh3::Xxh3;

use super::Graph;

/// Isomorphism-invariant encoding of a (possibly vertex-colored) graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    /// Initial color of the node at each canonical position.
    pub colors: Vec<u64>,
    /// Canonically relabeled edges `(a, b)`, `a < b`, sorted.
    pub edges: Vec<(u32, u32)>,
}

impl CanonicalForm {
    /// Stable 128-bit digest of the form.
    pub fn digest(&self) -> u128 {
        let mut h = Xxh3::new();
        h.update(b"canon");
        h.update(&(self.n as u64).to_le_bytes());
        for c in &self.colors {
            h.update(&c.to_le_bytes());
        }
        for &(a, b) in &self.edges {
            h.update(&a.to_le_bytes());
            h.update(&b.to_le_bytes());
        }
        h.digest128()
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for &(a, b) in &self.edges {
            g.insert_edge(a as usize, b as usize);
        }
        g
    }
}

fn dense_ranks<T: Ord + Copy>(values: &[T]) -> Vec<usize> {
    let mut distinct: Vec<T> = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    values.iter().map(|v| distinct.binary_search(v).expect("present")).collect()
}

fn class_count(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |&m| m + 1)
}

/// Refines a dense ordered coloring to the coarsest equitable partition
/// below it. New cell indices depend only on the old cell index and the
/// sorted multiset of neighbour cells, so the result is canonical.
pub fn refine_partition(g: &Graph, colors: &mut [usize]) {
    let n = g.n();
    let mut classes = class_count(colors);
    let mut sigs: Vec<(Vec<usize>, usize)> = Vec::with_capacity(n);
    loop {
        sigs.clear();
        for v in 0..n {
            let mut s = Vec::with_capacity(g.degree(v) + 1);
            s.push(colors[v]);
            s.extend(g.neighbors(v).iter().map(|&w| colors[w]));
            s[1..].sort_unstable();
            sigs.push((s, v));
        }
        sigs.sort_unstable();
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                rank += 1;
            }
            colors[sigs[i].1] = rank;
        }
        let refined = if n == 0 { 0 } else { rank + 1 };
        if refined == classes {
            return;
        }
        classes = refined;
    }
}

fn quotient_invariant(g: &Graph, colors: &[usize]) -> u64 {
    let k = class_count(colors);
    let mut rep = vec![usize::MAX; k];
    let mut size = vec![0u64; k];
    for (v, &c) in colors.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = v;
        }
        size[c] += 1;
    }
    let mut h = Xxh3::new();
    h.update(&(k as u64).to_le_bytes());
    let mut buf: Vec<usize> = Vec::new();
    for c in 0..k {
        h.update(&size[c].to_le_bytes());
        buf.clear();
        buf.extend(g.neighbors(rep[c]).iter().map(|&w| colors[w]));
        buf.sort_unstable();
        h.update(&(buf.len() as u64).to_le_bytes());
        for &x in &buf {
            h.update(&(x as u64).to_le_bytes());
        }
    }
    h.digest()
}

#[derive(Clone)]
struct Leaf {
    trace: Vec<u64>,
    cert: Vec<(u32, u32)>,
    labeling: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    trace: Vec<u64>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Search<'_> {
    fn automorphism(&self, stored: &[usize], labeling: &[usize]) -> Vec<usize> {
        // vertex carrying label i in the current leaf
        let mut by_label = vec![0; labeling.len()];
        for (v, &l) in labeling.iter().enumerate() {
            by_label[l] = v;
        }
        stored.iter().map(|&l| by_label[l]).collect()
    }

    fn leaf(&mut self, colors: Vec<usize>, path: &[usize]) -> Option<usize> {
        let mut cert: Vec<(u32, u32)> = self
            .g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (colors[u] as u32, colors[v] as u32);
                (a.min(b), a.max(b))
            })
            .collect();
        cert.sort_unstable();
        let leaf = Leaf { trace: self.trace.clone(), cert, labeling: colors, path: path.to_vec() };

        let Some(first) = &self.first else {
            self.best = Some(leaf.clone());
            self.first = Some(leaf);
            return None;
        };
        if first.cert == leaf.cert {
            let gamma = self.automorphism(&first.labeling, &leaf.labeling);
            let back = common_prefix(&first.path, path);
            self.generators.push(gamma);
            return Some(back);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match (&leaf.trace, &leaf.cert).cmp(&(&best.trace, &best.cert)) {
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let gamma = self.automorphism(&best.labeling, &leaf.labeling);
                let back = common_prefix(&best.path, path);
                self.generators.push(gamma);
                Some(back)
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    fn visit(&mut self, colors: Vec<usize>, path: &mut Vec<usize>) -> Option<usize> {
        let inv = quotient_invariant(self.g, &colors);
        self.trace.push(inv);
        let out = self.visit_inner(colors, path);
        self.trace.pop();
        out
    }

    fn visit_inner(&mut self, colors: Vec<usize>, path: &mut Vec<usize>) -> Option<usize> {
        if let Some(best) = &self.best {
            let len = self.trace.len().min(best.trace.len());
            if self.trace[..len] > best.trace[..len] {
                return None;
            }
        }
        let n = colors.len();
        let k = class_count(&colors);
        if k == n {
            return self.leaf(colors, path);
        }

        let mut size = vec![0usize; k];
        for &c in &colors {
            size[c] += 1;
        }
        let target = (0..k).find(|&c| size[c] > 1).expect("partition is not discrete");
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let depth = path.len();

        let mut explored: Vec<usize> = Vec::new();
        let mut seen_generators = usize::MAX;
        let mut parent: Vec<usize> = Vec::new();
        for &v in &cell {
            if self.generators.len() != seen_generators {
                seen_generators = self.generators.len();
                parent = (0..n).collect();
                for gamma in &self.generators {
                    if path.iter().all(|&p| gamma[p] == p) {
                        for (x, &y) in gamma.iter().enumerate() {
                            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                            if rx != ry {
                                parent[rx.max(ry)] = rx.min(ry);
                            }
                        }
                    }
                }
            }
            let root = find(&mut parent, v);
            if explored.iter().any(|&e| find(&mut parent, e) == root) {
                continue;
            }

            let mut child: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| c + usize::from(c > target || (c == target && u != v)))
                .collect();
            refine_partition(self.g, &mut child);
            path.push(v);
            let jump = self.visit(child, path);
            path.pop();
            explored.push(v);
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }
}

/// Canonical labeling: `labeling[v]` is the canonical position of node `v`.
/// Nodes with different `initial_colors` are never mapped onto each other.
pub fn canonical_labeling(g: &Graph, initial_colors: Option<&[u64]>) -> (Vec<usize>, CanonicalForm) {
    let n = g.n();
    let initial: Vec<u64> = match initial_colors {
        Some(c) => {
            assert_eq!(c.len(), n, "one initial color per node");
            c.to_vec()
        }
        None => vec![0; n],
    };
    let mut colors = dense_ranks(&initial);
    refine_partition(g, &mut colors);
    let mut search = Search { g, first: None, best: None, generators: Vec::new(), trace: Vec::new() };
    search.visit(colors, &mut Vec::new());
    let best = search.best.expect("search reaches at least one leaf");

    let mut colors_by_label = vec![0u64; n];
    for (v, &l) in best.labeling.iter().enumerate() {
        colors_by_label[l] = initial[v];
    }
    let form = CanonicalForm { n, colors: colors_by_label, edges: best.cert };
    (best.labeling, form)
}

pub fn canonical_form(g: &Graph, initial_colors: Option<&[u64]>) -> CanonicalForm {
    canonical_labeling(g, initial_colors).1
}

/// Exact isomorphism test. Cheap invariants first, then canonical forms.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let union = g.disjoint_union(h);
    let mut cu = vec![0; union.n()];
    refine_partition(&union, &mut cu);
    let (left, right) = cu.split_at(g.n());
    let mut l = left.to_vec();
    let mut r = right.to_vec();
    l.sort_unstable();
    r.sort_unstable();
    if l != r {
        return false;
    }
    canonical_form(g, None) == canonical_form(h, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named, regular};
    use crate::graph::Permutation;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Tries all n! bijections.
    fn brute_force_isomorphic(g: &Graph, h: &Graph) -> bool {
        fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let u = map.len();
            if u == g.n() {
                return true;
            }
            for w in 0..h.n() {
                if used[w] {
                    continue;
                }
                if (0..u).all(|x| g.has_edge(x, u) == h.has_edge(map[x], w)) {
                    map.push(w);
                    used[w] = true;
                    if extend(g, h, map, used) {
                        return true;
                    }
                    used[w] = false;
                    map.pop();
                }
            }
            false
        }
        g.n() == h.n() && g.edge_count() == h.edge_count() && extend(g, h, &mut Vec::new(), &mut vec![false; h.n()])
    }

    #[test]
    fn permuted_copies_are_isomorphic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [named::petersen(), named::shrikhande(), named::rook(4), named::cycle(9)] {
            let p = Permutation::random(g.n(), &mut rng);
            assert!(is_isomorphic(&g, &g.permuted(&p).unwrap()));
        }
    }

    #[test]
    fn cycle_vs_two_triangles() {
        let two_triangles = named::cycle(3).disjoint_union(&named::cycle(3));
        assert!(!is_isomorphic(&named::cycle(6), &two_triangles));
    }

    #[test]
    fn shrikhande_vs_rook() {
        assert!(!is_isomorphic(&named::shrikhande(), &named::rook(4)));
    }

    #[test]
    fn canonical_form_agrees_with_brute_force() {
        let graphs = crate::graph::enumerate_nonisomorphic(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for g in &graphs {
            for h in &graphs {
                let hp = h.permuted(&Permutation::random(h.n(), &mut rng)).unwrap();
                assert_eq!(is_isomorphic(g, &hp), brute_force_isomorphic(g, &hp));
            }
        }
    }

    #[test]
    fn colored_forms_respect_colors() {
        // path 0-1-2 rooted at an end vs rooted in the middle
        let p = named::path(3);
        let end = canonical_form(&p, Some(&[1, 0, 0]));
        let mid = canonical_form(&p, Some(&[0, 1, 0]));
        let other_end = canonical_form(&p, Some(&[0, 0, 1]));
        assert_ne!(end, mid);
        assert_eq!(end, other_end);
    }

    #[test]
    fn labeling_reproduces_form() {
        let g = named::shrikhande();
        let (lab, form) = canonical_labeling(&g, None);
        let relabeled = g.permuted(&Permutation::new(lab).unwrap()).unwrap();
        assert_eq!(relabeled, form.to_graph());
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        // large automorphism groups exercise the orbit pruning
        let k = named::complete(12);
        let e = Graph::empty(12);
        assert_eq!(canonical_form(&k, None).edges.len(), 66);
        assert!(canonical_form(&e, None).edges.is_empty());
        let h = named::hamming(3, 4);
        let d = named::doob();
        assert!(regular::verify_drg(&h).is_some());
        assert!(!is_isomorphic(&h, &d));
    }
}
