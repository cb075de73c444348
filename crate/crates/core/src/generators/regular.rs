//! Exact membership checks for the regular-graph families.

use serde::{Deserialize, Serialize};

use crate::graph::{all_pairs_distances, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `k(k − λ − 1) = (v − k − 1)μ`.
    pub fn is_feasible(&self) -> bool {
        self.k + 1 <= self.v
            && self.lambda + 1 <= self.k.max(1)
            && self.k * (self.k - self.lambda - 1) == (self.v - self.k - 1) * self.mu
    }
}

/// `{b_0, ..., b_{d−1}; c_1, ..., c_d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl IntersectionArray {
    pub fn diameter(&self) -> usize {
        self.c.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "level", rename_all = "snake_case")]
pub enum RegularityCertificate {
    Regular { degree: usize },
    StronglyRegular { params: SrgParams },
    FourVertexCondition { params: SrgParams },
    DistanceRegular { array: IntersectionArray },
}

pub fn verify_regular(g: &Graph) -> Option<usize> {
    g.regular_degree()
}

fn common_neighbors(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Counts a per-pair quantity and requires it to depend only on adjacency.
/// Complete and edgeless graphs have no value for one of the two classes
/// and are rejected.
fn uniform_by_adjacency(g: &Graph, mut f: impl FnMut(usize, usize) -> usize) -> Option<(usize, usize)> {
    let (mut adjacent, mut apart) = (None, None);
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let slot = if g.has_edge(u, v) { &mut adjacent } else { &mut apart };
            let value = f(u, v);
            match *slot {
                None => *slot = Some(value),
                Some(seen) if seen != value => return None,
                Some(_) => {}
            }
        }
    }
    Some((adjacent?, apart?))
}

pub fn verify_srg(g: &Graph) -> Option<SrgParams> {
    let k = g.regular_degree()?;
    let (lambda, mu) = uniform_by_adjacency(g, |u, v| common_neighbors(g, u, v).len())?;
    Some(SrgParams { v: g.n(), k, lambda, mu })
}

/// Strongly regular, and the number of edges among the common neighbours of
/// a pair depends only on whether the pair is adjacent.
pub fn verify_4vc(g: &Graph) -> bool {
    verify_srg(g).is_some()
        && uniform_by_adjacency(g, |u, v| {
            let common = common_neighbors(g, u, v);
            let mut edges = 0;
            for (i, &x) in common.iter().enumerate() {
                edges += common[i + 1..].iter().filter(|&&y| g.has_edge(x, y)).count();
            }
            edges
        })
        .is_some()
}

/// Checks that `|{x : d(v,x) = j, d(w,x) = k}|` depends only on `j`, `k`
/// and `d(v,w)` for every pair, and returns the intersection array.
pub fn verify_drg(g: &Graph) -> Option<IntersectionArray> {
    let n = g.n();
    if n == 0 || g.regular_degree().is_none() {
        return None;
    }
    let dist = all_pairs_distances(g);
    if !dist.is_connected() {
        return None;
    }
    let diameter = dist.diameter();
    let width = diameter + 1;
    let mut reference: Vec<Option<Vec<usize>>> = vec![None; width];
    let mut table = vec![0usize; width * width];
    for v in 0..n {
        for w in v..n {
            let i = dist.get(v, w)?;
            table.fill(0);
            for x in 0..n {
                table[dist.get(v, x)? * width + dist.get(w, x)?] += 1;
            }
            match &reference[i] {
                None => reference[i] = Some(table.clone()),
                Some(r) if *r != table => return None,
                Some(_) => {}
            }
        }
    }
    let p = |i: usize, j: usize, k: usize| reference[i].as_ref().map_or(0, |t| t[j * width + k]);
    // b_i: neighbours of w one step further from v; c_i: one step closer
    let b = (0..diameter).map(|i| p(i, i + 1, 1)).collect();
    let c = (1..=diameter).map(|i| p(i, i - 1, 1)).collect();
    Some(IntersectionArray { b, c })
}

/// The most specific family `g` belongs to, if any.
pub fn certify(g: &Graph) -> Option<RegularityCertificate> {
    let degree = verify_regular(g)?;
    if let Some(params) = verify_srg(g) {
        if verify_4vc(g) {
            return Some(RegularityCertificate::FourVertexCondition { params });
        }
        return Some(RegularityCertificate::StronglyRegular { params });
    }
    if let Some(array) = verify_drg(g) {
        return Some(RegularityCertificate::DistanceRegular { array });
    }
    Some(RegularityCertificate::Regular { degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    #[test]
    fn shrikhande_and_rook() {
        let p = SrgParams { v: 16, k: 6, lambda: 2, mu: 2 };
        assert_eq!(verify_srg(&named::shrikhande()), Some(p));
        assert_eq!(verify_srg(&named::rook(4)), Some(p));
        assert!(p.is_feasible());
        assert!(verify_4vc(&named::rook(4)));
        assert!(!verify_4vc(&named::shrikhande()));
    }

    #[test]
    fn pentagon_and_petersen() {
        assert_eq!(verify_srg(&named::cycle(5)), Some(SrgParams { v: 5, k: 2, lambda: 0, mu: 1 }));
        assert_eq!(verify_srg(&named::petersen()), Some(SrgParams { v: 10, k: 3, lambda: 0, mu: 1 }));
        assert_eq!(verify_srg(&named::cycle(6)), None);
        assert_eq!(verify_srg(&named::complete(5)), None);
    }

    #[test]
    fn drg_arrays() {
        // hexagon: {2,1,1;1,1,2}
        assert_eq!(
            verify_drg(&named::cycle(6)),
            Some(IntersectionArray { b: vec![2, 1, 1], c: vec![1, 1, 2] })
        );
        let h = verify_drg(&named::hamming(3, 4)).unwrap();
        assert_eq!(h, IntersectionArray { b: vec![9, 6, 3], c: vec![1, 2, 3] });
        assert_eq!(verify_drg(&named::doob()), Some(h));
        assert_eq!(verify_drg(&named::path(4)), None);
    }

    #[test]
    fn hierarchy_on_known_graphs() {
        for g in [
            named::rook(4),
            named::shrikhande(),
            named::petersen(),
            named::cycle(5),
            named::paley(13),
            named::triangular(7).0,
            named::rook(4).complement(),
        ] {
            if verify_4vc(&g) {
                assert!(verify_srg(&g).is_some());
            }
            if verify_srg(&g).is_some() {
                assert_eq!(verify_drg(&g).unwrap().diameter(), 2);
            }
        }
    }

    #[test]
    fn certificates() {
        assert!(matches!(certify(&named::rook(4)), Some(RegularityCertificate::FourVertexCondition { .. })));
        assert!(matches!(certify(&named::shrikhande()), Some(RegularityCertificate::StronglyRegular { .. })));
        assert!(matches!(certify(&named::doob()), Some(RegularityCertificate::DistanceRegular { .. })));
        assert_eq!(certify(&named::cycles(&[3, 4])), Some(RegularityCertificate::Regular { degree: 2 }));
        assert_eq!(certify(&named::path(3)), None);
    }
}
