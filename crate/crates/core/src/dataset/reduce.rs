//! Best-of-seeds reduction over per-seed verdict files.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::report::{BenchmarkReport, PairVerdict, VerdictRow};
use super::SidecarEntry;
use crate::rpc::{Outcome, VerdictRecord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error("no verdict files given")]
    NoRuns,
    #[error("run {run} lists pair `{pair_id}` twice")]
    DuplicatePair { run: usize, pair_id: String },
    #[error("run {run} covers a different pair set than run 0 (first difference: `{pair_id}`)")]
    PairSetMismatch { run: usize, pair_id: String },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeedReduction {
    pub verdicts: Vec<VerdictRow>,
    /// Pairs that failed the reliability check (or errored) under some run.
    pub unreliable: Vec<String>,
    pub report: BenchmarkReport,
}

impl SeedReduction {
    pub fn all_reliable(&self) -> bool {
        self.unreliable.is_empty()
    }
}

/// A pair counts as distinguished when any run distinguishes it. A pair
/// that is unreliable or errored in any run is listed in `unreliable` and
/// reported as skipped. Category labels come from `sidecar` when present.
pub fn reduce_seeds(
    runs: &[Vec<VerdictRecord>],
    sidecar: Option<&[SidecarEntry]>,
    method: &str,
) -> Result<SeedReduction, ReduceError> {
    let first = runs.first().ok_or(ReduceError::NoRuns)?;
    let mut tables: Vec<BTreeMap<&str, &VerdictRecord>> = Vec::with_capacity(runs.len());
    for (run, records) in runs.iter().enumerate() {
        let mut table = BTreeMap::new();
        for r in records {
            if table.insert(r.pair_id.as_str(), r).is_some() {
                return Err(ReduceError::DuplicatePair { run, pair_id: r.pair_id.clone() });
            }
        }
        tables.push(table);
    }
    let ids: BTreeSet<&str> = tables[0].keys().copied().collect();
    for (run, table) in tables.iter().enumerate().skip(1) {
        let other: BTreeSet<&str> = table.keys().copied().collect();
        if let Some(id) = ids.symmetric_difference(&other).next() {
            return Err(ReduceError::PairSetMismatch { run, pair_id: id.to_string() });
        }
    }
    let labels: BTreeMap<&str, &SidecarEntry> =
        sidecar.unwrap_or_default().iter().map(|e| (e.pair_id.as_str(), e)).collect();

    let mut verdicts = Vec::with_capacity(first.len());
    let mut unreliable = Vec::new();
    for r in first {
        let id = r.pair_id.as_str();
        let outcomes: Vec<Option<Outcome>> =
            tables.iter().map(|t| t[id].result.as_ref().ok().map(|v| v.outcome)).collect();
        let bad: Vec<usize> = outcomes
            .iter()
            .enumerate()
            .filter(|(_, o)| !matches!(o, Some(Outcome::Distinguished | Outcome::NotDistinguished)))
            .map(|(i, _)| i)
            .collect();
        let (verdict, detail) = if let Some(&run) = bad.first() {
            unreliable.push(id.to_string());
            let why = if outcomes[run].is_none() { "error" } else { "unreliable" };
            (PairVerdict::Skipped, format!("{why} in run {run}"))
        } else if outcomes.contains(&Some(Outcome::Distinguished)) {
            (PairVerdict::Distinguished, String::new())
        } else {
            (PairVerdict::NotDistinguished, String::new())
        };
        let (category, subcategory) = labels
            .get(id)
            .map_or(("all".to_string(), String::new()), |e| (e.category.clone(), e.subcategory.clone()));
        verdicts.push(VerdictRow { pair_id: id.to_string(), category, subcategory, method: method.to_string(), verdict, detail });
    }
    let report = BenchmarkReport::from_verdicts(&verdicts);
    Ok(SeedReduction { verdicts, unreliable, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rpc::{RpcError, RpcVerdict};

    fn rec(id: &str, o: Option<Outcome>) -> VerdictRecord {
        VerdictRecord {
            pair_id: id.into(),
            result: o
                .map(|outcome| RpcVerdict { t2_test: 1.0, t2_reliability: 0.0, threshold: 2.0, outcome })
                .ok_or(RpcError::NonFinite),
        }
    }

    #[test]
    fn any_run_distinguishing_counts() {
        let a = vec![rec("p", Some(Outcome::Distinguished)), rec("q", Some(Outcome::NotDistinguished))];
        let b = vec![rec("p", Some(Outcome::NotDistinguished)), rec("q", Some(Outcome::NotDistinguished))];
        let red = reduce_seeds(&[a, b], None, "gnn").unwrap();
        assert_eq!(red.verdicts[0].verdict, PairVerdict::Distinguished);
        assert_eq!(red.verdicts[1].verdict, PairVerdict::NotDistinguished);
        assert!(red.all_reliable());
        assert_eq!(red.report.row("gnn", "total").unwrap().distinguished, 1);
    }

    #[test]
    fn unreliable_anywhere_is_flagged() {
        let a = vec![rec("p", Some(Outcome::Distinguished)), rec("q", None)];
        let b = vec![rec("p", Some(Outcome::Unreliable)), rec("q", Some(Outcome::Distinguished))];
        let red = reduce_seeds(&[a, b], None, "gnn").unwrap();
        assert_eq!(red.unreliable, vec!["p".to_string(), "q".to_string()]);
        assert!(!red.all_reliable());
        assert_eq!(red.verdicts[0].detail, "unreliable in run 1");
        assert_eq!(red.verdicts[1].detail, "error in run 0");
    }

    #[test]
    fn pair_sets_must_agree() {
        let a = vec![rec("p", Some(Outcome::Distinguished))];
        let b = vec![rec("q", Some(Outcome::Distinguished))];
        assert!(matches!(reduce_seeds(&[a.clone(), b], None, "m"), Err(ReduceError::PairSetMismatch { run: 1, .. })));
        assert_eq!(reduce_seeds(&[], None, "m"), Err(ReduceError::NoRuns));
        let dup = vec![a[0].clone(), a[0].clone()];
        assert!(matches!(reduce_seeds(&[dup], None, "m"), Err(ReduceError::DuplicatePair { .. })));
    }
}
