//! Per-pair verdict rows and their aggregation by category.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairVerdict {
    Distinguished,
    NotDistinguished,
    /// The method ran out of budget on this pair.
    Skipped,
}

impl PairVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            PairVerdict::Distinguished => "distinguished",
            PairVerdict::NotDistinguished => "not_distinguished",
            PairVerdict::Skipped => "skipped",
        }
    }
}

impl fmt::Display for PairVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRow {
    pub pair_id: String,
    pub category: String,
    pub subcategory: String,
    pub method: String,
    pub verdict: PairVerdict,
    /// Reason for a skip; empty otherwise.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub method: String,
    /// Category, `category/subcategory`, or `total`.
    pub group: String,
    pub pairs: usize,
    pub distinguished: usize,
    pub skipped: usize,
    pub accuracy: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkReport {
    pub rows: Vec<ReportRow>,
}

const CATEGORY_ORDER: [&str; 4] = ["basic", "regular", "extension", "cfi"];

fn category_rank(c: &str) -> (usize, String) {
    (CATEGORY_ORDER.iter().position(|&x| x == c).unwrap_or(CATEGORY_ORDER.len()), c.to_string())
}

#[derive(Default)]
struct Tally {
    pairs: usize,
    distinguished: usize,
    skipped: usize,
}

impl Tally {
    fn add(&mut self, v: PairVerdict) {
        self.pairs += 1;
        match v {
            PairVerdict::Distinguished => self.distinguished += 1,
            PairVerdict::Skipped => self.skipped += 1,
            PairVerdict::NotDistinguished => {}
        }
    }

    fn row(&self, method: &str, group: String) -> ReportRow {
        let accuracy = if self.pairs == 0 { 0.0 } else { self.distinguished as f64 / self.pairs as f64 };
        ReportRow {
            method: method.to_string(),
            group,
            pairs: self.pairs,
            distinguished: self.distinguished,
            skipped: self.skipped,
            accuracy,
        }
    }
}

impl BenchmarkReport {
    /// One block per method: each category, then its subcategories, then
    /// `total`. Methods appear in order of first occurrence.
    pub fn from_verdicts(rows: &[VerdictRow]) -> Self {
        let mut methods: Vec<&str> = Vec::new();
        for r in rows {
            if !methods.contains(&r.method.as_str()) {
                methods.push(&r.method);
            }
        }
        let mut out = Vec::new();
        for method in methods {
            let mut cats: BTreeMap<(usize, String), (Tally, BTreeMap<String, Tally>)> = BTreeMap::new();
            let mut total = Tally::default();
            for r in rows.iter().filter(|r| r.method == method) {
                let (cat, subs) = cats.entry(category_rank(&r.category)).or_default();
                cat.add(r.verdict);
                if !r.subcategory.is_empty() {
                    subs.entry(r.subcategory.clone()).or_default().add(r.verdict);
                }
                total.add(r.verdict);
            }
            for ((_, name), (cat, subs)) in &cats {
                out.push(cat.row(method, name.clone()));
                for (sub, t) in subs {
                    out.push(t.row(method, format!("{name}/{sub}")));
                }
            }
            out.push(total.row(method, "total".into()));
        }
        BenchmarkReport { rows: out }
    }

    pub fn row(&self, method: &str, group: &str) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.method == method && r.group == group)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("method,group,pairs,distinguished,skipped,accuracy\n");
        for r in &self.rows {
            s.push_str(&format!(
                "{},{},{},{},{},{:.4}\n",
                r.method, r.group, r.pairs, r.distinguished, r.skipped, r.accuracy
            ));
        }
        s
    }

    pub fn to_table(&self) -> String {
        let width = self.rows.iter().map(|r| r.group.len()).max().unwrap_or(5).max(5);
        let mut s = format!("{:<8} {:<width$} {:>6} {:>6} {:>7} {:>8}\n", "method", "group", "pairs", "dist", "skipped", "accuracy");
        for r in &self.rows {
            s.push_str(&format!(
                "{:<8} {:<width$} {:>6} {:>6} {:>7} {:>7.1}%\n",
                r.method,
                r.group,
                r.pairs,
                r.distinguished,
                r.skipped,
                100.0 * r.accuracy
            ));
        }
        s
    }
}

/// CSV `pair_id,category,subcategory,method,verdict,detail`.
pub fn verdict_csv(rows: &[VerdictRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["pair_id", "category", "subcategory", "method", "verdict", "detail"]).expect("in-memory write");
    for r in rows {
        w.write_record([&r.pair_id, &r.category, &r.subcategory, &r.method, r.verdict.as_str(), &r.detail])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(id: &str, cat: &str, sub: &str, method: &str, verdict: PairVerdict) -> VerdictRow {
        VerdictRow {
            pair_id: id.into(),
            category: cat.into(),
            subcategory: sub.into(),
            method: method.into(),
            verdict,
            detail: String::new(),
        }
    }

    #[test]
    fn totals_add_up() {
        use PairVerdict::*;
        let rows = vec![
            row("a", "cfi", "1wl", "kwl:3", Distinguished),
            row("b", "regular", "srg", "kwl:3", NotDistinguished),
            row("c", "basic", "", "kwl:3", Distinguished),
            row("d", "regular", "simple", "kwl:3", Distinguished),
            row("e", "cfi", "4wl", "kwl:3", Skipped),
        ];
        let rep = BenchmarkReport::from_verdicts(&rows);
        let groups: Vec<&str> = rep.rows.iter().map(|r| r.group.as_str()).collect();
        assert_eq!(groups, ["basic", "regular", "regular/simple", "regular/srg", "cfi", "cfi/1wl", "cfi/4wl", "total"]);
        let total = rep.row("kwl:3", "total").unwrap();
        assert_eq!((total.pairs, total.distinguished, total.skipped), (5, 3, 1));
        let cat_sum: usize = rep.rows.iter().filter(|r| !r.group.contains('/') && r.group != "total").map(|r| r.distinguished).sum();
        assert_eq!(cat_sum, total.distinguished);
        assert_eq!(rep.row("kwl:3", "cfi").unwrap().accuracy, 0.5);
        assert!(rep.to_csv().starts_with("method,group,pairs"));
        assert_eq!(rep.to_table().lines().count(), 9);
    }

    #[test]
    fn csv_quotes_when_needed() {
        let mut r = row("a", "cfi", "", "s3", PairVerdict::Skipped);
        r.detail = "budget, exceeded".into();
        let text = verdict_csv(&[r]);
        assert!(text.contains("\"budget, exceeded\""));
    }
}
