//! Refinement over k-tuples. Tuple `(v_0, ..., v_{k-1})` is stored at index
//! `Σ v_j · n^{k-1-j}`.

use super::palette::{run_rounds, Palette};
use super::{ColorRefinementResult, WlConfig, WlError};
use crate::graph::Graph;

const TAG_TUPLE_INIT: u128 = 0x7475_706c;
const TAG_KWL: u128 = 0x6b77_6c;
const TAG_FWL: u128 = 0x6677_6c;

/// Ordered induced subgraph type: one equality bit and one adjacency bit per
/// position pair.
fn atomic_type(g: &Graph, t: &[usize]) -> u128 {
    let mut code = 0u128;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            code = (code << 2) | (u128::from(t[i] == t[j]) << 1) | u128::from(g.has_edge(t[i], t[j]));
        }
    }
    code
}

fn digits(mut idx: usize, n: usize, k: usize, out: &mut [usize]) {
    for j in (0..k).rev() {
        out[j] = idx % n;
        idx /= n;
    }
}

pub(super) fn refine_tuples(
    g: &Graph,
    k: usize,
    folklore: bool,
    cfg: &WlConfig,
    palette: &mut Palette,
) -> Result<ColorRefinementResult, WlError> {
    let n = g.n();
    let required = (n as u128).checked_pow(k as u32 + 1).map(|x| x * k as u128);
    if required.is_none_or(|r| r > u128::from(cfg.tuple_budget)) {
        return Err(WlError::BudgetExceeded {
            method: cfg.method,
            n,
            required: required.unwrap_or(u128::MAX),
            budget: cfg.tuple_budget,
        });
    }
    let count = n.pow(k as u32);
    let pow: Vec<usize> = (0..k).map(|j| n.pow((k - 1 - j) as u32)).collect();

    let mut t = vec![0; k];
    let init: Vec<u128> = (0..count)
        .map(|idx| {
            digits(idx, n, k, &mut t);
            palette.color(&[TAG_TUPLE_INIT, k as u128, atomic_type(g, &t)])
        })
        .collect();

    let result = if folklore {
        run_rounds(init, cfg.max_iterations, palette, |prev, idx, buf| {
            let mut t = vec![0; k];
            digits(idx, n, k, &mut t);
            buf.push(TAG_FWL);
            buf.push(prev[idx]);
            let mut raw = Vec::with_capacity(n * k);
            for w in 0..n {
                for j in 0..k {
                    raw.push(prev[idx - t[j] * pow[j] + w * pow[j]]);
                }
            }
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_unstable_by(|&a, &b| raw[a * k..(a + 1) * k].cmp(&raw[b * k..(b + 1) * k]));
            for w in order {
                buf.extend_from_slice(&raw[w * k..(w + 1) * k]);
            }
        })
    } else {
        run_rounds(init, cfg.max_iterations, palette, |prev, idx, buf| {
            let mut t = vec![0; k];
            digits(idx, n, k, &mut t);
            buf.push(TAG_KWL);
            buf.push(prev[idx]);
            for j in 0..k {
                let base = idx - t[j] * pow[j];
                let start = buf.len();
                buf.extend((0..n).map(|w| prev[base + w * pow[j]]));
                buf[start..].sort_unstable();
            }
        })
    };
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atomic_types() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        // pairs (0,1): adjacent; (0,0): equal; (0,2): neither
        assert_eq!(atomic_type(&g, &[0, 1]), 0b01);
        assert_eq!(atomic_type(&g, &[0, 0]), 0b10);
        assert_eq!(atomic_type(&g, &[0, 2]), 0b00);
        assert_ne!(atomic_type(&g, &[0, 1, 2]), atomic_type(&g, &[0, 2, 1]));
    }

    #[test]
    fn digit_layout() {
        let mut t = [0; 3];
        digits(2 * 16 + 3 * 4 + 1, 4, 3, &mut t);
        assert_eq!(t, [2, 3, 1]);
    }
}
