use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Circulant skip-link parameters: an `m`-cycle plus skip links of stride `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CslParams {
    pub m: usize,
    pub r: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CslError {
    #[error("skip length {r} and cycle length {m} are not coprime")]
    NotCoprime { m: usize, r: usize },
    #[error("skip length {r} must satisfy 2 <= r < m - 1 (m = {m})")]
    SkipOutOfRange { m: usize, r: usize },
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl CslParams {
    pub fn validate(&self) -> Result<(), CslError> {
        let CslParams { m, r } = *self;
        if r < 2 || r + 1 >= m {
            return Err(CslError::SkipOutOfRange { m, r });
        }
        if gcd(m, r) != 1 {
            return Err(CslError::NotCoprime { m, r });
        }
        Ok(())
    }
}

/// Cycle edges `(j, j+1 mod m)` plus skip edges `(s_i, s_{i+1})` where
/// `s_0 = 0` and `s_{i+1} = (s_i + r) mod m`. Since `gcd(m, r) = 1` the skip
/// sequence visits every node once, closing a second Hamiltonian cycle.
pub fn gen_csl(p: CslParams) -> Result<Graph, CslError> {
    p.validate()?;
    let m = p.m;
    let mut g = Graph::empty(m);
    for j in 0..m {
        g.insert_edge(j, (j + 1) % m);
    }
    let mut s = 0;
    for _ in 0..m {
        let next = (s + p.r) % m;
        g.insert_edge(s, next);
        s = next;
    }
    Ok(g)
}

/// Skip lengths of the classic 41-node CSL family.
pub const CSL41_SKIPS: [usize; 10] = [2, 3, 4, 5, 6, 9, 11, 12, 13, 16];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn four_regular_41() {
        let g = gen_csl(CslParams { m: 41, r: 2 }).unwrap();
        assert_eq!(g.n(), 41);
        assert_eq!(g.edge_count(), 82);
        assert_eq!(g.regular_degree(), Some(4));
        assert_eq!(g, gen_csl(CslParams { m: 41, r: 2 }).unwrap());
    }

    #[test]
    fn invalid_params() {
        assert_eq!(gen_csl(CslParams { m: 10, r: 4 }), Err(CslError::NotCoprime { m: 10, r: 4 }));
        assert_eq!(gen_csl(CslParams { m: 10, r: 9 }), Err(CslError::SkipOutOfRange { m: 10, r: 9 }));
        assert_eq!(gen_csl(CslParams { m: 10, r: 1 }), Err(CslError::SkipOutOfRange { m: 10, r: 1 }));
    }

    #[test]
    fn mirrored_stride_is_isomorphic() {
        // r and m - r produce the same skip cycle traversed backwards
        let a = gen_csl(CslParams { m: 11, r: 3 }).unwrap();
        let b = gen_csl(CslParams { m: 11, r: 8 }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn skip_edges_follow_the_stride() {
        let g = gen_csl(CslParams { m: 7, r: 3 }).unwrap();
        for s in 0..7 {
            assert!(g.has_edge(s, (s + 3) % 7));
        }
    }

    #[test]
    fn csl41_family_is_pairwise_distinct() {
        let graphs: Vec<Graph> = CSL41_SKIPS.iter().map(|&r| gen_csl(CslParams { m: 41, r }).unwrap()).collect();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                assert!(!is_isomorphic(&graphs[i], &graphs[j]), "r = {} vs {}", CSL41_SKIPS[i], CSL41_SKIPS[j]);
            }
        }
    }
}
