//! Bucketing a graph stream by a method's fingerprint.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::distinguisher::{DistinguishError, Distinguisher};
use crate::graph::Graph;

/// Groups of stream indices that the method cannot tell apart, each of size
/// at least two. Groups are sorted internally and by first member.
pub fn collision_classes(graphs: &[Graph], method: &Distinguisher) -> Result<Vec<Vec<usize>>, DistinguishError> {
    method.validate()?;
    let keys: Vec<u128> = graphs.par_iter().map(|g| method.fingerprint(g)).collect::<Result<_, _>>()?;
    let mut buckets: BTreeMap<u128, Vec<usize>> = BTreeMap::new();
    for (i, key) in keys.into_iter().enumerate() {
        buckets.entry(key).or_default().push(i);
    }
    let mut classes: Vec<Vec<usize>> = buckets.into_values().filter(|b| b.len() > 1).collect();
    classes.sort_unstable();
    Ok(classes)
}

/// All within-bucket index pairs `(i, j)` with `i < j`, sorted. With
/// `sample = Some((count, seed))` at most `count` pairs are kept: the full
/// sorted list is shuffled by a ChaCha8 stream seeded with `seed`, the
/// first `count` are taken and the result is sorted again.
pub fn find_collision_pairs(
    graphs: &[Graph],
    method: &Distinguisher,
    sample: Option<(usize, u64)>,
) -> Result<Vec<(usize, usize)>, DistinguishError> {
    let mut pairs = Vec::new();
    for class in collision_classes(graphs, method)? {
        for (a, &i) in class.iter().enumerate() {
            pairs.extend(class[a + 1..].iter().map(|&j| (i, j)));
        }
    }
    pairs.sort_unstable();
    if let Some((count, seed)) = sample {
        if count < pairs.len() {
            pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            pairs.truncate(count);
            pairs.sort_unstable();
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;
    use crate::graph::{canonical_form, enumerate_nonisomorphic};
    use crate::wl::{distinguishes, WlConfig};

    fn all_pairs_oracle(graphs: &[Graph], cfg: &WlConfig) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                if !distinguishes(cfg, &graphs[i], &graphs[j]).unwrap() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    #[test]
    fn matches_all_pairs_verdicts_up_to_six_nodes() {
        let wl1 = Distinguisher::Wl(WlConfig::wl1());
        for n in 1..=6 {
            let graphs = enumerate_nonisomorphic(n).unwrap();
            assert_eq!(find_collision_pairs(&graphs, &wl1, None).unwrap(), all_pairs_oracle(&graphs, &WlConfig::wl1()), "n={n}");
        }
    }

    #[test]
    fn hexagon_and_two_triangles_collide() {
        let graphs = enumerate_nonisomorphic(6).unwrap();
        let find = |g: &Graph| graphs.iter().position(|x| canonical_form(x, None) == canonical_form(g, None)).unwrap();
        let (a, b) = (find(&named::cycle(6)), find(&named::cycles(&[3, 3])));
        let pairs = find_collision_pairs(&graphs, &Distinguisher::Wl(WlConfig::wl1()), None).unwrap();
        assert!(pairs.contains(&(a.min(b), a.max(b))));
        assert_eq!(pairs.len(), 4);
    }

    #[test]
    fn repeated_graph_lands_in_one_bucket() {
        let g = named::petersen();
        for s in ["1wl", "kwl:3", "s3", "n2", "m1"] {
            let pairs = find_collision_pairs(&[g.clone(), g.clone()], &s.parse().unwrap(), None).unwrap();
            assert_eq!(pairs, vec![(0, 1)], "{s}");
        }
    }

    #[test]
    fn subsampling_is_seeded() {
        let graphs = enumerate_nonisomorphic(7).unwrap();
        let wl1 = Distinguisher::Wl(WlConfig::wl1());
        let all = find_collision_pairs(&graphs, &wl1, None).unwrap();
        let a = find_collision_pairs(&graphs, &wl1, Some((5, 7))).unwrap();
        assert_eq!(a, find_collision_pairs(&graphs, &wl1, Some((5, 7))).unwrap());
        assert_eq!(a.len(), 5);
        assert!(a.iter().all(|p| all.contains(p)));
        assert_ne!(a, find_collision_pairs(&graphs, &wl1, Some((5, 8))).unwrap());
        assert_eq!(find_collision_pairs(&graphs, &wl1, Some((1000, 1))).unwrap(), all);
    }
}
