//! Node, edge and diameter histograms per category.

use std::collections::BTreeMap;

use super::GraphPair;
use crate::graph::all_pairs_distances;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatsRow {
    /// Category name, or `all`.
    pub category: String,
    /// `nodes`, `edges` or `diameter`.
    pub statistic: &'static str,
    /// Diameter of a disconnected graph is reported as `inf`.
    pub value: String,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatsReport {
    pub rows: Vec<StatsRow>,
}

#[derive(Default)]
struct Histograms {
    nodes: BTreeMap<usize, usize>,
    edges: BTreeMap<usize, usize>,
    diameter: BTreeMap<Option<usize>, usize>,
}

/// Histograms over both graphs of every pair, per category and overall.
pub fn dataset_stats(pairs: &[GraphPair]) -> StatsReport {
    let mut by_cat: BTreeMap<String, Histograms> = BTreeMap::new();
    for p in pairs {
        for g in [&p.g, &p.h] {
            let dist = all_pairs_distances(g);
            let diameter = dist.is_connected().then(|| dist.diameter());
            for key in ["all".to_string(), p.category.clone()] {
                if key.is_empty() {
                    continue;
                }
                let h = by_cat.entry(key).or_default();
                *h.nodes.entry(g.n()).or_default() += 1;
                *h.edges.entry(g.edge_count()).or_default() += 1;
                *h.diameter.entry(diameter).or_default() += 1;
            }
        }
    }
    let mut rows = Vec::new();
    let mut push = |cat: &str, statistic, value: String, count| {
        rows.push(StatsRow { category: cat.to_string(), statistic, value, count })
    };
    let all = by_cat.remove("all");
    for (cat, h) in all.iter().map(|h| ("all", h)).chain(by_cat.iter().map(|(c, h)| (c.as_str(), h))) {
        for (v, c) in &h.nodes {
            push(cat, "nodes", v.to_string(), *c);
        }
        for (v, c) in &h.edges {
            push(cat, "edges", v.to_string(), *c);
        }
        for (v, c) in &h.diameter {
            push(cat, "diameter", v.map_or("inf".to_string(), |d| d.to_string()), *c);
        }
    }
    StatsReport { rows }
}

impl StatsReport {
    pub fn histogram(&self, category: &str, statistic: &str) -> BTreeMap<String, usize> {
        self.rows
            .iter()
            .filter(|r| r.category == category && r.statistic == statistic)
            .map(|r| (r.value.clone(), r.count))
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("category,statistic,value,count\n");
        for r in &self.rows {
            s.push_str(&format!("{},{},{},{}\n", r.category, r.statistic, r.value, r.count));
        }
        s
    }

    /// One line per category and statistic: `value:count` entries.
    pub fn to_table(&self) -> String {
        let mut lines: Vec<(String, &str, Vec<String>)> = Vec::new();
        for r in &self.rows {
            match lines.last_mut() {
                Some((c, s, items)) if *c == r.category && *s == r.statistic => items.push(format!("{}:{}", r.value, r.count)),
                _ => lines.push((r.category.clone(), r.statistic, vec![format!("{}:{}", r.value, r.count)])),
            }
        }
        let width = lines.iter().map(|l| l.0.len()).max().unwrap_or(3);
        lines.iter().map(|(c, s, items)| format!("{c:<width$} {s:<8} {}\n", items.join(" "))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::Audit;
    use crate::generators::cfi::WlDifficulty;
    use crate::generators::named;

    #[test]
    fn two_ten_node_graphs() {
        let (g, h) = (named::cycle(10), named::cycles(&[5, 5]));
        let pair = GraphPair {
            pair_id: "p".into(),
            audit: Audit::run(&g, &h),
            g,
            h,
            category: "basic".into(),
            subcategory: String::new(),
            wl_difficulty: WlDifficulty::Wl1,
        };
        let rep = dataset_stats(&[pair]);
        assert_eq!(rep.histogram("all", "nodes"), BTreeMap::from([("10".to_string(), 2)]));
        assert_eq!(rep.histogram("basic", "edges"), BTreeMap::from([("10".to_string(), 2)]));
        assert_eq!(
            rep.histogram("basic", "diameter"),
            BTreeMap::from([("5".to_string(), 1), ("inf".to_string(), 1)])
        );
        assert_eq!(rep.to_csv().lines().count(), 1 + 2 * 4);
        assert_eq!(rep.to_table().lines().count(), 6);
    }
}
