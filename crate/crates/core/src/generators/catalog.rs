//! Built-in graph catalogs: small strongly regular and distance-regular
//! families, regular graphs up to nine nodes, and apex constructions.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::named;
use super::regular::{verify_drg, verify_srg, IntersectionArray, SrgParams};
use crate::graph::{canonical_form, enumerate_nonisomorphic, CanonicalForm, EnumerateError, Graph};

#[derive(Clone, Debug)]
pub struct CatalogGraph {
    pub name: String,
    pub graph: Graph,
}

impl CatalogGraph {
    fn new(name: impl Into<String>, graph: Graph) -> Self {
        CatalogGraph { name: name.into(), graph }
    }
}

/// Keeps the first graph of each isomorphism class, in input order.
pub fn dedup_isomorphic(graphs: Vec<CatalogGraph>) -> Vec<CatalogGraph> {
    let forms: Vec<CanonicalForm> = graphs.par_iter().map(|c| canonical_form(&c.graph, None)).collect();
    let mut seen = BTreeSet::new();
    graphs.into_iter().zip(forms).filter(|(_, f)| seen.insert(f.clone())).map(|(c, _)| c).collect()
}

/// The three Chang graphs: T(8) switched on the edge sets of 4K2, C8 and
/// C3 ∪ C5 in K8.
pub fn chang_graphs() -> Vec<Graph> {
    let (t8, pairs) = named::triangular(8);
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).expect("pair of 0..8");
    let cycle_edges = |nodes: &[usize]| -> Vec<usize> {
        (0..nodes.len()).map(|i| index(nodes[i], nodes[(i + 1) % nodes.len()])).collect()
    };
    let matching: Vec<usize> = (0..4).map(|i| index(2 * i, 2 * i + 1)).collect();
    let c8 = cycle_edges(&[0, 1, 2, 3, 4, 5, 6, 7]);
    let mut c3c5 = cycle_edges(&[0, 1, 2]);
    c3c5.extend(cycle_edges(&[3, 4, 5, 6, 7]));
    [matching, c8, c3c5].iter().map(|set| named::seidel_switch(&t8, set)).collect()
}

/// Reduced Latin squares of the given order (first row and column in
/// natural order), in lexicographic order.
pub fn reduced_latin_squares(order: usize) -> Vec<Vec<Vec<usize>>> {
    fn fill(sq: &mut Vec<Vec<usize>>, cell: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if cell == n * n {
            out.push(sq.clone());
            return;
        }
        let (r, c) = (cell / n, cell % n);
        if r == 0 || c == 0 {
            fill(sq, cell + 1, n, out);
            return;
        }
        for s in 0..n {
            if (0..c).all(|j| sq[r][j] != s) && (0..r).all(|i| sq[i][c] != s) {
                sq[r][c] = s;
                fill(sq, cell + 1, n, out);
            }
        }
        sq[r][c] = usize::MAX;
    }
    let mut sq = vec![vec![usize::MAX; order]; order];
    for i in 0..order {
        sq[0][i] = i;
        sq[i][0] = i;
    }
    let mut out = Vec::new();
    fill(&mut sq, 0, order, &mut out);
    out
}

/// Cheap invariant of a Latin square under isotopy and conjugation: the
/// cycle types of `row_j ∘ row_i⁻¹` over all line pairs, for rows, columns
/// and symbols.
fn latin_invariant(sq: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let n = sq.len();
    // Lines as maps position -> value for the three line families.
    let rows: Vec<Vec<usize>> = sq.to_vec();
    let cols: Vec<Vec<usize>> = (0..n).map(|c| (0..n).map(|r| sq[r][c]).collect()).collect();
    let mut syms = vec![vec![0; n]; n];
    for (r, row) in sq.iter().enumerate() {
        for (c, &s) in row.iter().enumerate() {
            syms[s][r] = c;
        }
    }
    let family = |lines: &[Vec<usize>]| {
        let mut types = Vec::new();
        for i in 0..n {
            let mut inv = vec![0; n];
            for (p, &v) in lines[i].iter().enumerate() {
                inv[v] = p;
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let perm: Vec<usize> = (0..n).map(|v| lines[j][inv[v]]).collect();
                let mut seen = vec![false; n];
                let mut cycles = Vec::new();
                for s in 0..n {
                    let mut len = 0;
                    let mut x = s;
                    while !seen[x] {
                        seen[x] = true;
                        x = perm[x];
                        len += 1;
                    }
                    if len > 0 {
                        cycles.push(len);
                    }
                }
                cycles.sort_unstable();
                types.push(cycles);
            }
        }
        types.sort();
        types
    };
    let mut all = vec![family(&rows), family(&cols), family(&syms)];
    all.sort();
    all
}

/// Pairwise non-isomorphic Latin square graphs of the given order.
pub fn latin_square_graphs(order: usize) -> Vec<Graph> {
    let mut reps: BTreeMap<Vec<Vec<Vec<usize>>>, Vec<Vec<usize>>> = BTreeMap::new();
    for sq in reduced_latin_squares(order) {
        reps.entry(latin_invariant(&sq)).or_insert(sq);
    }
    let graphs = reps
        .values()
        .map(|sq| CatalogGraph::new("", named::latin_square_graph(sq)))
        .collect();
    dedup_isomorphic(graphs).into_iter().map(|c| c.graph).collect()
}

/// Finite group by multiplication table.
#[derive(Clone)]
struct FiniteGroup {
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    fn from_op(order: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        let mul: Vec<Vec<usize>> = (0..order).map(|a| (0..order).map(|b| op(a, b)).collect()).collect();
        let identity = (0..order).find(|&e| (0..order).all(|a| mul[e][a] == a)).expect("identity");
        let inv = (0..order).map(|a| (0..order).find(|&b| mul[a][b] == identity).expect("inverse")).collect();
        FiniteGroup { mul, inv }
    }

    /// `Z_{m_0} × ... × Z_{m_k}` in mixed radix, least significant first.
    fn abelian(moduli: &[usize]) -> Self {
        let order = moduli.iter().product();
        FiniteGroup::from_op(order, |mut a, mut b| {
            let (mut x, mut place) = (0, 1);
            for &m in moduli {
                x += ((a % m + b % m) % m) * place;
                a /= m;
                b /= m;
                place *= m;
            }
            x
        })
    }

    /// `Z_m ⋊ Z_n` with `y` acting on `x` by multiplication by `r^y`;
    /// element `(x, y)` is stored as `y·m + x`.
    fn metacyclic(m: usize, n: usize, r: usize) -> Self {
        FiniteGroup::from_op(m * n, |a, b| {
            let (x1, y1, x2, y2) = (a % m, a / m, b % m, b / m);
            let twist = (0..y1).fold(1, |acc, _| acc * r % m);
            ((y1 + y2) % n) * m + (x1 + twist * x2) % m
        })
    }

    fn times_z2(&self) -> Self {
        let n = self.mul.len();
        FiniteGroup::from_op(2 * n, |a, b| ((a / n + b / n) % 2) * n + self.mul[a % n][b % n])
    }

    fn order(&self) -> usize {
        self.mul.len()
    }

    fn identity(&self) -> usize {
        self.mul[0][self.inv[0]]
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `(v, k, λ)` difference sets containing the identity: every other
/// element is `a·b⁻¹` for exactly `λ` ordered pairs of the set.
fn difference_sets(group: &FiniteGroup, k: usize, lambda: usize) -> Vec<Vec<usize>> {
    let v = group.order();
    let e = group.identity();
    let others: Vec<usize> = (0..v).filter(|&x| x != e).collect();
    combinations(v - 1, k - 1)
        .into_iter()
        .map(|rest| {
            let mut set = vec![e];
            set.extend(rest.into_iter().map(|i| others[i]));
            set
        })
        .filter(|set| {
            let mut counts = vec![0; v];
            for &a in set {
                for &b in set {
                    if a != b {
                        counts[group.mul[a][group.inv[b]]] += 1;
                    }
                }
            }
            (0..v).all(|x| x == e || counts[x] == lambda)
        })
        .collect()
}

/// Point-block incidence graph of the left translates `gD`: points
/// `0..v`, blocks `v..2v`. With `complement` each block is replaced by its
/// complement.
fn development_incidence(group: &FiniteGroup, base: &[usize], complement: bool) -> Graph {
    let v = group.order();
    let mut g = Graph::empty(2 * v);
    for t in 0..v {
        let block: BTreeSet<usize> = base.iter().map(|&b| group.mul[t][b]).collect();
        for p in 0..v {
            if block.contains(&p) != complement {
                g.insert_edge(p, v + t);
            }
        }
    }
    g
}

/// Incidence graphs of the given base blocks and of their complementary
/// designs, deduplicated separately.
fn design_incidence_graphs(designs: &[(FiniteGroup, Vec<usize>)]) -> Vec<Graph> {
    let build = |complement: bool| -> Vec<Graph> {
        let graphs = designs
            .iter()
            .map(|(group, set)| CatalogGraph::new("", development_incidence(group, set, complement)))
            .collect();
        dedup_isomorphic(graphs).into_iter().map(|c| c.graph).collect()
    };
    let mut out = build(false);
    out.extend(build(true));
    out
}

/// Incidence graphs of the (16,6,2) biplanes arising from difference sets
/// in groups of order 16, followed by those of the complementary (16,10,6)
/// designs.
pub fn biplane_incidence_graphs() -> Vec<Graph> {
    let groups = [
        FiniteGroup::abelian(&[2, 2, 2, 2]),
        FiniteGroup::abelian(&[4, 2, 2]),
        FiniteGroup::abelian(&[4, 4]),
        FiniteGroup::abelian(&[8, 2]),
        FiniteGroup::metacyclic(8, 2, 3),
        FiniteGroup::metacyclic(8, 2, 5),
        FiniteGroup::metacyclic(8, 2, 7),
        FiniteGroup::metacyclic(4, 4, 3),
        FiniteGroup::metacyclic(4, 2, 3).times_z2(),
    ];
    let mut designs = Vec::new();
    for group in groups {
        let sets = difference_sets(&group, 6, 2);
        designs.extend(sets.into_iter().map(|s| (group.clone(), s)));
    }
    design_incidence_graphs(&designs)
}

/// Powers of a primitive element of GF(2^5) (modulus x^5 + x^2 + 1).
fn gf32_powers() -> Vec<u8> {
    let mut out = Vec::with_capacity(31);
    let mut x: u8 = 1;
    for _ in 0..31 {
        out.push(x);
        x <<= 1;
        if x & 0x20 != 0 {
            x ^= 0x25;
        }
    }
    out
}

/// Incidence graphs of the two cyclic (31,15,7) designs: quadratic
/// residues mod 31, and the Singer set `{i : Tr(α^i) = 0}` (points and
/// hyperplanes of PG(4,2)); then their complementary designs.
pub fn cyclic_31_incidence_graphs() -> Vec<Graph> {
    let residues: BTreeSet<usize> = (1..31).map(|x| x * x % 31).collect();
    let residues: Vec<usize> = residues.into_iter().collect();
    let powers = gf32_powers();
    let mul = |a: u8, b: u8| -> u8 {
        if a == 0 || b == 0 {
            return 0;
        }
        let la = powers.iter().position(|&p| p == a).expect("nonzero");
        let lb = powers.iter().position(|&p| p == b).expect("nonzero");
        powers[(la + lb) % 31]
    };
    let trace = |x: u8| {
        let mut t = 0;
        let mut y = x;
        for _ in 0..5 {
            t ^= y;
            y = mul(y, y);
        }
        t
    };
    let singer: Vec<usize> = (0..31).filter(|&i| trace(powers[i]) == 0).collect();
    let designs = vec![(FiniteGroup::abelian(&[31]), residues), (FiniteGroup::abelian(&[31]), singer)];
    design_incidence_graphs(&designs)
}

fn projective_points(dim: usize, q: usize) -> Vec<Vec<usize>> {
    // normalized: first nonzero coordinate is 1
    let mut out = Vec::new();
    for idx in 0..q.pow(dim as u32) {
        let v: Vec<usize> = (0..dim).map(|i| idx / q.pow(i as u32) % q).collect();
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

fn form_graph(points: &[Vec<usize>], orthogonal: impl Fn(&[usize], &[usize]) -> bool) -> Graph {
    let mut g = Graph::empty(points.len());
    for a in 0..points.len() {
        for b in a + 1..points.len() {
            if orthogonal(&points[a], &points[b]) {
                g.insert_edge(a, b);
            }
        }
    }
    g
}

/// Collinearity graph of the symplectic quadrangle W(q), q prime.
pub fn symplectic_quadrangle(q: usize) -> Graph {
    let points = projective_points(4, q);
    form_graph(&points, |x, y| (x[0] * y[1] + q * q - x[1] * y[0] + x[2] * y[3] + q * q - x[3] * y[2]) % q == 0)
}

/// Collinearity graph of the parabolic quadrangle Q(4,q), q an odd prime:
/// points of `x0² + x1x2 + x3x4 = 0`, adjacent when orthogonal.
pub fn parabolic_quadrangle(q: usize) -> Graph {
    let points: Vec<Vec<usize>> = projective_points(5, q)
        .into_iter()
        .filter(|x| (x[0] * x[0] + x[1] * x[2] + x[3] * x[4]) % q == 0)
        .collect();
    form_graph(&points, |x, y| (2 * x[0] * y[0] + x[1] * y[2] + x[2] * y[1] + x[3] * y[4] + x[4] * y[3]) % q == 0)
}

/// Built-in graphs meeting the 4-vertex condition in same-parameter
/// pairs: W(q) against Q(4,q) for q = 3, 5, and their complements.
pub fn four_vertex_catalog() -> Vec<CatalogGraph> {
    let mut out = Vec::new();
    for q in [3, 5] {
        let (w, p) = (symplectic_quadrangle(q), parabolic_quadrangle(q));
        out.push(CatalogGraph::new(format!("w{q}-complement"), w.complement()));
        out.push(CatalogGraph::new(format!("q4-{q}-complement"), p.complement()));
        out.push(CatalogGraph::new(format!("w{q}"), w));
        out.push(CatalogGraph::new(format!("q4-{q}"), p));
    }
    out
}

/// Built-in strongly regular graphs: srg(16,6,2,2), the T(8)/Chang family,
/// Latin square graphs of orders 4 to 6, and all complements. Pairwise
/// non-isomorphic; each entry is verified.
pub fn srg_catalog() -> Vec<(CatalogGraph, SrgParams)> {
    let mut base = vec![
        CatalogGraph::new("shrikhande", named::shrikhande()),
        CatalogGraph::new("rook4x4", named::rook(4)),
        CatalogGraph::new("triangular8", named::triangular(8).0),
    ];
    for (i, g) in chang_graphs().into_iter().enumerate() {
        base.push(CatalogGraph::new(format!("chang{}", i + 1), g));
    }
    for order in 4..=6 {
        for (i, g) in latin_square_graphs(order).into_iter().enumerate() {
            base.push(CatalogGraph::new(format!("latin{order}-{i}"), g));
        }
    }
    let complements: Vec<CatalogGraph> =
        base.iter().map(|c| CatalogGraph::new(format!("{}-complement", c.name), c.graph.complement())).collect();
    base.extend(complements);
    with_srg_params(dedup_isomorphic(base))
}

/// Keeps the strongly regular members, with their parameters.
pub fn with_srg_params(graphs: Vec<CatalogGraph>) -> Vec<(CatalogGraph, SrgParams)> {
    graphs.into_iter().filter_map(|c| verify_srg(&c.graph).map(|p| (c, p))).collect()
}

/// Built-in distance-regular graphs of diameter at least 3: H(3,4) and
/// H(4,4) with the Doob-type graphs of the same arrays, and incidence graphs of
/// symmetric designs on 16 and 31 points.
pub fn drg_catalog() -> Vec<(CatalogGraph, IntersectionArray)> {
    let mut base = vec![
        CatalogGraph::new("hamming3-4", named::hamming(3, 4)),
        CatalogGraph::new("shrikhande-x-k4", named::doob()),
        CatalogGraph::new("hamming4-4", named::hamming(4, 4)),
        CatalogGraph::new("shrikhande-x-k4-x-k4", named::cartesian_product(&named::doob(), &named::complete(4))),
        CatalogGraph::new("shrikhande-x-shrikhande", named::cartesian_product(&named::shrikhande(), &named::shrikhande())),
    ];
    for (i, g) in biplane_incidence_graphs().into_iter().enumerate() {
        base.push(CatalogGraph::new(format!("design16-incidence{i}"), g));
    }
    for (i, g) in cyclic_31_incidence_graphs().into_iter().enumerate() {
        base.push(CatalogGraph::new(format!("design31-incidence{i}"), g));
    }
    with_drg_arrays(dedup_isomorphic(base))
}

/// Keeps the connected distance-regular members of diameter at least 3.
pub fn with_drg_arrays(graphs: Vec<CatalogGraph>) -> Vec<(CatalogGraph, IntersectionArray)> {
    graphs
        .into_iter()
        .filter(|c| c.graph.is_connected())
        .filter_map(|c| verify_drg(&c.graph).map(|a| (c, a)))
        .filter(|(_, a)| a.diameter() >= 3)
        .collect()
}

/// Regular graphs on `n ∈ min_n..=max_n` nodes, one per isomorphism
/// class, sorted by `(n, degree)` and then enumeration order. Nine-node
/// graphs are built from eight-node graphs missing one apex: with `d`
/// nodes of degree `d − 1` and the rest of degree `d`.
pub fn regular_graphs(min_n: usize, max_n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if max_n > 9 {
        return Err(EnumerateError::TooLarge { n: max_n, max: 9 });
    }
    let mut out: Vec<(usize, usize, Graph)> = Vec::new();
    let mut eight = None;
    for n in min_n.max(1)..=max_n.min(8) {
        let graphs = enumerate_nonisomorphic(n)?;
        out.extend(graphs.iter().filter_map(|g| g.regular_degree().map(|d| (n, d, g.clone()))));
        if n == 8 {
            eight = Some(graphs);
        }
    }
    if max_n == 9 && min_n <= 9 {
        let eight = match eight {
            Some(e) => e,
            None => enumerate_nonisomorphic(8)?,
        };
        let mut nine = Vec::new();
        for d in 0..=8 {
            let extended: Vec<CatalogGraph> = eight
                .iter()
                .filter(|g| {
                    let low = (0..8).filter(|&v| g.degree(v) + 1 == d).count();
                    low == d && (0..8).all(|v| g.degree(v) == d || g.degree(v) + 1 == d)
                })
                .map(|g| {
                    let mut h = Graph::empty(9);
                    for (u, v) in g.edges() {
                        h.insert_edge(u, v);
                    }
                    for v in (0..8).filter(|&v| g.degree(v) + 1 == d) {
                        h.insert_edge(v, 8);
                    }
                    CatalogGraph::new("", h)
                })
                .collect();
            nine.extend(dedup_isomorphic(extended).into_iter().map(|c| (9, d, c.graph)));
        }
        out.extend(nine);
    }
    out.sort_by_key(|&(n, d, _)| (n, d));
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}

/// `C_{2l}` and `C_l ⊎ C_l`, each with an apex joined to every node.
pub fn apex_cycle_pair(l: usize) -> (Graph, Graph) {
    (named::cycle(2 * l).with_apex(), named::cycles(&[l, l]).with_apex())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::regular::verify_4vc;
    use crate::graph::is_isomorphic;
    use crate::wl::{distinguishes, WlConfig};

    #[test]
    fn chang_graphs_share_triangular_parameters() {
        let t8 = named::triangular(8).0;
        let params = verify_srg(&t8).unwrap();
        assert_eq!((params.v, params.k, params.lambda, params.mu), (28, 12, 6, 4));
        let changs = chang_graphs();
        for (i, g) in changs.iter().enumerate() {
            assert_eq!(verify_srg(g), Some(params));
            assert!(!is_isomorphic(g, &t8));
            for h in &changs[i + 1..] {
                assert!(!is_isomorphic(g, h));
            }
        }
    }

    #[test]
    fn latin_square_counts() {
        // reduced squares: 1, 1, 4, 56, 9408 for orders 1..=6
        let counts: Vec<usize> = (1..=5).map(|n| reduced_latin_squares(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 4, 56]);
        for sq in reduced_latin_squares(4) {
            let g = named::latin_square_graph(&sq);
            let p = verify_srg(&g).unwrap();
            assert_eq!((p.v, p.k, p.lambda, p.mu), (16, 9, 4, 6));
        }
    }

    #[test]
    fn latin_invariant_survives_transposition() {
        for sq in reduced_latin_squares(5) {
            let t: Vec<Vec<usize>> = (0..5).map(|c| (0..5).map(|r| sq[r][c]).collect()).collect();
            assert_eq!(latin_invariant(&sq), latin_invariant(&t));
        }
    }

    #[test]
    fn order_four_latin_graphs_are_shrikhande_and_rook_complements() {
        let graphs = latin_square_graphs(4);
        assert_eq!(graphs.len(), 2);
        let targets = [named::shrikhande().complement(), named::rook(4).complement()];
        for t in &targets {
            assert!(graphs.iter().any(|g| is_isomorphic(g, t)));
        }
    }

    #[test]
    fn srg_catalog_is_verified_and_distinct() {
        let cat = srg_catalog();
        for (c, p) in &cat {
            assert!(p.is_feasible(), "{}", c.name);
            assert_eq!(verify_srg(&c.graph), Some(*p));
        }
        let same_params = |v: usize, k: usize| cat.iter().filter(|(_, p)| p.v == v && p.k == k).count();
        assert_eq!(same_params(16, 6), 2);
        assert_eq!(same_params(28, 12), 4);
        assert!(same_params(36, 15) >= 2);
        assert!(cat.iter().any(|(c, _)| c.name == "rook4x4" && verify_4vc(&c.graph)));
    }

    #[test]
    fn biplane_incidence_graphs_are_distance_regular() {
        let graphs = biplane_incidence_graphs();
        assert!(graphs.len() >= 2);
        for g in &graphs {
            assert_eq!(g.n(), 32);
            let a = verify_drg(g).unwrap();
            assert_eq!(a.diameter(), 3);
        }
        let arrays: BTreeSet<_> = drg_catalog().into_iter().map(|(_, a)| a).collect();
        assert!(arrays.len() >= 2);
    }

    #[test]
    fn quadrangle_pairs_meet_four_vertex_condition() {
        let w = symplectic_quadrangle(3);
        let q = parabolic_quadrangle(3);
        let p = verify_srg(&w).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu), (40, 12, 2, 4));
        assert_eq!(verify_srg(&q), Some(p));
        assert!(verify_4vc(&w) && verify_4vc(&q));
        assert!(verify_4vc(&w.complement()));
        assert!(!is_isomorphic(&w, &q));
        let names: Vec<String> = four_vertex_catalog().into_iter().map(|c| c.name).collect();
        assert_eq!(names.len(), 8);
    }

    #[test]
    fn cyclic_31_designs_differ() {
        let graphs = cyclic_31_incidence_graphs();
        assert_eq!(graphs.len(), 4);
        assert_eq!(verify_drg(&graphs[0]).unwrap().b, vec![15, 14, 8]);
        assert_eq!(verify_drg(&graphs[2]).unwrap().b, vec![16, 15, 8]);
    }

    #[test]
    fn drg_catalog_arrays() {
        let cat = drg_catalog();
        let mut by_array: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for (_, a) in &cat {
            *by_array.entry(a.b.clone()).or_default() += 1;
        }
        assert_eq!(by_array[&vec![9, 6, 3]], 2);
        assert_eq!(by_array[&vec![12, 9, 6, 3]], 3);
        assert_eq!(by_array[&vec![6, 5, 4]], 2);
    }

    #[test]
    fn regular_graph_counts() {
        // connected or not, by (n, degree): see the standard tables
        let graphs = regular_graphs(6, 9).unwrap();
        let count = |n: usize, d: usize| graphs.iter().filter(|g| g.n() == n && g.regular_degree() == Some(d)).count();
        assert_eq!([count(6, 2), count(6, 3), count(7, 2), count(7, 4)], [2, 2, 2, 2]);
        assert_eq!([count(8, 2), count(8, 3), count(8, 4), count(8, 5)], [3, 6, 6, 3]);
        assert_eq!([count(9, 2), count(9, 4), count(9, 6)], [4, 16, 4]);
        for (i, g) in graphs.iter().enumerate() {
            for h in &graphs[i + 1..] {
                if g.n() == h.n() && g.regular_degree() == h.regular_degree() {
                    assert!(!is_isomorphic(g, h));
                }
            }
        }
    }

    #[test]
    fn apex_cycles_defeat_color_refinement() {
        for l in 3..=6 {
            let (a, b) = apex_cycle_pair(l);
            assert!(!is_isomorphic(&a, &b));
            assert!(!distinguishes(&WlConfig::wl1(), &a, &b).unwrap());
        }
    }
}
