//! Color identifiers: 128-bit digests of signature words, or exact interned
//! ids for cross-checking the hashed mode.

use std::collections::HashMap;

use rayon::prelude::*;
use xxhash_rust::xxh3::Xxh3;

use super::{ColorMode, ColorRefinementResult};

pub(crate) fn hash_words(words: &[u128]) -> u128 {
    let mut h = Xxh3::new();
    for w in words {
        h.update(&w.to_le_bytes());
    }
    h.digest128()
}

/// Digest of the sorted color multiset.
pub(crate) fn histogram_digest(colors: &[u128]) -> u128 {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    let mut h = Xxh3::new();
    h.update(&(sorted.len() as u64).to_le_bytes());
    for c in &sorted {
        h.update(&c.to_le_bytes());
    }
    h.digest128()
}

fn class_count(colors: &[u128]) -> usize {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

/// Maps signatures to colors. One palette may be shared by several runs so
/// that exact ids stay comparable between graphs.
#[derive(Debug)]
pub enum Palette {
    Hashed,
    Exact(HashMap<Vec<u128>, u128>),
}

impl Palette {
    pub fn new(mode: ColorMode) -> Self {
        match mode {
            ColorMode::Hashed => Palette::Hashed,
            ColorMode::Exact => Palette::Exact(HashMap::new()),
        }
    }

    pub(crate) fn color(&mut self, sig: &[u128]) -> u128 {
        match self {
            Palette::Hashed => hash_words(sig),
            Palette::Exact(table) => {
                let next = table.len() as u128;
                *table.entry(sig.to_vec()).or_insert(next)
            }
        }
    }

    /// Colors every element `0..count`; `sig(prev, i, buf)` appends the
    /// signature of element `i` to an empty `buf`.
    fn recolor<F>(&mut self, prev: &[u128], sig: &F) -> Vec<u128>
    where
        F: Fn(&[u128], usize, &mut Vec<u128>) + Sync,
    {
        match self {
            Palette::Hashed => (0..prev.len())
                .into_par_iter()
                .map_init(Vec::new, |buf, i| {
                    buf.clear();
                    sig(prev, i, buf);
                    hash_words(buf)
                })
                .collect(),
            Palette::Exact(_) => {
                let mut buf = Vec::new();
                (0..prev.len())
                    .map(|i| {
                        buf.clear();
                        sig(prev, i, &mut buf);
                        self.color(&buf)
                    })
                    .collect()
            }
        }
    }
}

/// Shared round driver. Stops after the first round that splits no class.
/// The colors of that last round are still recorded: each one encodes its
/// class together with the class counts around it, which is what makes the
/// final digest comparable between graphs whose partitions settle early.
pub(crate) fn run_rounds<F>(
    init: Vec<u128>,
    max_iterations: Option<usize>,
    palette: &mut Palette,
    sig: F,
) -> ColorRefinementResult
where
    F: Fn(&[u128], usize, &mut Vec<u128>) + Sync,
{
    let mut colors = init;
    let mut classes = class_count(&colors);
    let mut per_round_hashes = vec![histogram_digest(&colors)];
    let mut class_counts = vec![classes];
    let mut rounds = 0;
    while max_iterations.is_none_or(|cap| rounds < cap) {
        let next = palette.recolor(&colors, &sig);
        rounds += 1;
        let c = class_count(&next);
        class_counts.push(c);
        per_round_hashes.push(histogram_digest(&next));
        if c == classes {
            break;
        }
        colors = next;
        classes = c;
    }
    ColorRefinementResult {
        stable_histogram_hash: *per_round_hashes.last().expect("round 0 recorded"),
        iterations_used: rounds,
        per_round_hashes,
        class_counts,
    }
}
