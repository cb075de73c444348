//! Undirected simple graphs and the utilities every other module builds on.
//!
//! Nodes are `0..n`. Text formats that count from one (the pair-file docs,
//! human-facing reports) convert at the boundary; graph6 is 0-based already.

mod canon;
mod enumerate;
mod graph6;
mod metrics;

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, refine_partition, CanonicalForm};
pub use enumerate::{enumerate_nonisomorphic, EnumerateError, MAX_ENUMERATION_NODES};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6, Graph6Error, GRAPH6_HEADER};
pub use metrics::{all_pairs_distances, ego_net, DistanceMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("node {node} out of range for a graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("size mismatch: expected {expected} nodes, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("mapping is not a bijection: image {0} repeated or out of range")]
    NotBijection(usize),
}

/// An undirected simple graph stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; returns whether the edge is new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.n();
        for node in [u, v] {
            if node >= n {
                return Err(GraphError::NodeOutOfRange { node, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.add_edge(u, v).expect("internal edge insertion must be valid");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degs.sort_unstable();
        degs
    }

    /// Row-major adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<bool> {
        let n = self.n();
        let mut m = vec![false; n * n];
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                m[u * n + v] = true;
            }
        }
        m
    }

    /// Relabels nodes so that `(u, v)` is an edge of `self` iff
    /// `(p(u), p(v))` is an edge of the result.
    pub fn permuted(&self, p: &Permutation) -> Result<Graph, GraphError> {
        if p.len() != self.n() {
            return Err(GraphError::SizeMismatch { expected: self.n(), found: p.len() });
        }
        let mut adj = vec![Vec::new(); self.n()];
        for (u, nbrs) in self.adj.iter().enumerate() {
            let pu = p.apply(u);
            adj[pu] = nbrs.iter().map(|&v| p.apply(v)).collect();
            adj[pu].sort_unstable();
        }
        Ok(Graph { adj })
    }

    /// Nodes of `other` follow those of `self`, shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|nbrs| nbrs.iter().map(|&v| v + shift).collect()));
        Graph { adj }
    }

    /// Subgraph induced by `nodes`; node `i` of the result is `nodes[i]`.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in nodes.iter().enumerate() {
            index[v] = i;
        }
        let adj = nodes
            .iter()
            .map(|&v| {
                let mut row: Vec<usize> =
                    self.adj[v].iter().filter_map(|&w| (index[w] != usize::MAX).then_some(index[w])).collect();
                row.sort_unstable();
                row
            })
            .collect();
        Graph { adj }
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph { adj }
    }

    /// Adds one node adjacent to every existing node.
    pub fn with_apex(&self) -> Graph {
        let n = self.n();
        let mut g = self.clone();
        g.adj.push((0..n).collect());
        for row in g.adj.iter_mut().take(n) {
            row.push(n);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n()
    }

    /// Some `k` when every node has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|r| r.len() == k).then_some(k)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A bijection on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self, GraphError> {
        let mut seen = vec![false; mapping.len()];
        for &image in &mapping {
            if image >= mapping.len() || std::mem::replace(&mut seen[image], true) {
                return Err(GraphError::NotBijection(image));
            }
        }
        Ok(Permutation(mapping))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut mapping: Vec<usize> = (0..n).collect();
        mapping.shuffle(rng);
        Permutation(mapping)
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (v, &image) in self.0.iter().enumerate() {
            inv[image] = v;
        }
        Permutation(inv)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// `g` relabeled by `p`; see [`Graph::permuted`].
pub fn apply_permutation(g: &Graph, p: &Permutation) -> Result<Graph, GraphError> {
    g.permuted(p)
}
