//! Small named graphs and product constructions.

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j)))).expect("valid")
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 nodes");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid")
}

/// Path on `n` nodes.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid")
}

/// `K_{1,leaves}` with the centre at node 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid")
}

/// Disjoint union of cycles of the given lengths.
pub fn cycles(lengths: &[usize]) -> Graph {
    lengths.iter().fold(Graph::empty(0), |acc, &l| acc.disjoint_union(&cycle(l)))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid")
}

/// Cartesian product; node `(a, b)` is `a * h.n() + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.n();
    let mut out = Graph::empty(g.n() * m);
    for a in 0..g.n() {
        for (b, c) in h.edges() {
            out.insert_edge(a * m + b, a * m + c);
        }
    }
    for (a, c) in g.edges() {
        for b in 0..m {
            out.insert_edge(a * m + b, c * m + b);
        }
    }
    out
}

/// Cayley graph on `Z_m x Z_m` with a symmetric connection set.
fn cayley_zm2(m: usize, connection: &[(usize, usize)]) -> Graph {
    let mut g = Graph::empty(m * m);
    for x in 0..m {
        for y in 0..m {
            for &(dx, dy) in connection {
                let (u, v) = (x * m + y, ((x + dx) % m) * m + (y + dy) % m);
                if u != v {
                    g.insert_edge(u, v);
                }
            }
        }
    }
    g
}

/// `k x k` rook's graph, `K_k □ K_k`.
pub fn rook(k: usize) -> Graph {
    cartesian_product(&complete(k), &complete(k))
}

/// srg(16, 6, 2, 2) that is not the 4x4 rook's graph.
pub fn shrikhande() -> Graph {
    cayley_zm2(4, &[(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)])
}

/// Hamming graph `H(d, q)`: words of length `d` over `q` symbols, adjacent
/// when they differ in one coordinate.
pub fn hamming(d: usize, q: usize) -> Graph {
    (1..d).fold(complete(q), |acc, _| cartesian_product(&acc, &complete(q)))
}

/// The Doob graph `Shrikhande □ K_4`; same intersection array as `H(3, 4)`.
pub fn doob() -> Graph {
    cartesian_product(&shrikhande(), &complete(4))
}

/// Paley graph on a prime `p ≡ 1 (mod 4)`.
pub fn paley(p: usize) -> Graph {
    assert!(p % 4 == 1 && (2..p).all(|d| d * d > p || p % d != 0), "need a prime p ≡ 1 mod 4");
    let squares: Vec<bool> = {
        let mut s = vec![false; p];
        for x in 1..p {
            s[x * x % p] = true;
        }
        s
    };
    Graph::from_edges(p, (0..p).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|&(i, j)| squares[j - i]))
        .expect("valid")
}

/// Triangular graph `T(n)`: 2-subsets of `0..n`, adjacent when they meet.
/// Returns the graph and the subset for each node.
pub fn triangular(n: usize) -> (Graph, Vec<(usize, usize)>) {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut g = Graph::empty(pairs.len());
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate().skip(a + 1) {
            if i == k || i == l || j == k || j == l {
                g.insert_edge(a, b);
            }
        }
    }
    (g, pairs)
}

/// Seidel switching: toggles every pair with exactly one end in `set`.
pub fn seidel_switch(g: &Graph, set: &[usize]) -> Graph {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    let mut out = g.clone();
    for u in (0..g.n()).filter(|&u| inside[u]) {
        for v in (0..g.n()).filter(|&v| !inside[v]) {
            if !out.remove_edge(u, v) {
                out.insert_edge(u, v);
            }
        }
    }
    out
}

/// Latin square graph: cells `(r, c)` adjacent when they share a row, a
/// column or a symbol. srg(n², 3(n−1), n, 6) for `n >= 2`.
pub fn latin_square_graph(square: &[Vec<usize>]) -> Graph {
    let n = square.len();
    let mut g = Graph::empty(n * n);
    for a in 0..n * n {
        for b in a + 1..n * n {
            let (r1, c1, r2, c2) = (a / n, a % n, b / n, b % n);
            if r1 == r2 || c1 == c2 || square[r1][c1] == square[r2][c2] {
                g.insert_edge(a, b);
            }
        }
    }
    g
}
