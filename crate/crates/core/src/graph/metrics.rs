use std::collections::VecDeque;

use super::Graph;

/// All-pairs hop counts. Unreachable pairs hold `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

const UNREACHABLE: u32 = u32::MAX;

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.dist[u * self.n + v];
        (d != UNREACHABLE).then_some(d as usize)
    }

    /// Largest finite distance (0 for graphs without edges).
    pub fn diameter(&self) -> usize {
        self.dist.iter().filter(|&&d| d != UNREACHABLE).max().copied().unwrap_or(0) as usize
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHABLE)
    }
}

fn bfs(g: &Graph, source: usize, limit: usize, out: &mut [u32]) {
    out.fill(UNREACHABLE);
    out[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = out[u];
        if du as usize >= limit {
            continue;
        }
        for &w in g.neighbors(u) {
            if out[w] == UNREACHABLE {
                out[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
}

/// BFS from every node.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut dist = vec![UNREACHABLE; n * n];
    for (v, row) in dist.chunks_mut(n.max(1)).enumerate().take(n) {
        bfs(g, v, usize::MAX, row);
    }
    DistanceMatrix { n, dist }
}

/// Subgraph induced by every node within distance `radius` of `root`.
/// The root becomes node 0; the rest keep their relative order.
pub fn ego_net(g: &Graph, root: usize, radius: usize) -> Graph {
    let mut d = vec![UNREACHABLE; g.n()];
    bfs(g, root, radius, &mut d);
    let mut nodes = vec![root];
    nodes.extend((0..g.n()).filter(|&v| v != root && d[v] != UNREACHABLE));
    g.induced_subgraph(&nodes)
}
