//! Embedding CSV input and verdict CSV output.
//!
//! Embeddings: header `pair_id,role,group,copy,e0,...,e{d-1}`, one row per
//! (pair, role, group, copy). Verdicts:
//! `pair_id,t2_test,t2_reliability,threshold,outcome`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use super::{rapc_decide, rpc_decide, Outcome, RapcConfig, RpcConfig, RpcError, RpcVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    G,
    H,
    GPi,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Role::G => "G",
            Role::H => "H",
            Role::GPi => "G_pi",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Role::G, Role::H, Role::GPi].into_iter().find(|r| r.as_str() == s)
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One pair's vectors, copies in order. Group 0 feeds the test and the
/// reliability check; `g_groups[j]` and `h_groups[j]` hold group `j + 1`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PairEmbeddings {
    pub g: Vec<Vec<f64>>,
    pub h: Vec<Vec<f64>>,
    pub g_pi: Vec<Vec<f64>>,
    pub g_groups: Vec<Vec<Vec<f64>>>,
    pub h_groups: Vec<Vec<Vec<f64>>>,
}

impl PairEmbeddings {
    pub fn dim(&self) -> usize {
        self.g.first().map_or(0, Vec::len)
    }
}

/// Raw rows of one pair plus any row-level problems found while parsing.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PairRows {
    rows: BTreeMap<(Role, usize, usize), Vec<f64>>,
    errors: Vec<String>,
}

impl PairRows {
    fn copies(&self, role: Role, group: usize) -> Result<Vec<Vec<f64>>, RpcError> {
        let rows: Vec<(usize, &Vec<f64>)> =
            self.rows.range((role, group, 0)..=(role, group, usize::MAX)).map(|(&(_, _, c), v)| (c, v)).collect();
        if let Some(pos) = rows.iter().enumerate().position(|(i, (c, _))| *c != i) {
            return Err(RpcError::MissingCopies { role, group, expected: rows.last().map_or(0, |r| r.0 + 1), found: pos });
        }
        Ok(rows.into_iter().map(|(_, v)| v.clone()).collect())
    }

    /// Assembled vectors, or the first problem with this pair's rows.
    pub fn embeddings(&self) -> Result<PairEmbeddings, RpcError> {
        if let Some(e) = self.errors.first() {
            return Err(RpcError::MalformedRow(e.clone()));
        }
        let max_group = self.rows.keys().map(|k| k.1).max().unwrap_or(0);
        if self.rows.keys().any(|k| k.0 == Role::GPi && k.1 > 0) {
            return Err(RpcError::MalformedRow("role G_pi only belongs to group 0".into()));
        }
        let groups = |role| (1..=max_group).map(|j| self.copies(role, j)).collect::<Result<Vec<_>, _>>();
        Ok(PairEmbeddings {
            g: self.copies(Role::G, 0)?,
            h: self.copies(Role::H, 0)?,
            g_pi: self.copies(Role::GPi, 0)?,
            g_groups: groups(Role::G)?,
            h_groups: groups(Role::H)?,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct EmbeddingTable {
    pub dim: usize,
    pub pairs: BTreeMap<String, PairRows>,
}

impl EmbeddingTable {
    /// File-level problems (header, encoding) fail the whole parse;
    /// row-level ones are attached to the row's pair.
    pub fn parse(text: &str) -> Result<Self, RpcError> {
        let mut reader = csv::ReaderBuilder::new().flexible(true).from_reader(text.as_bytes());
        let header = reader.headers().map_err(|e| RpcError::Schema(e.to_string()))?.clone();
        let fixed = ["pair_id", "role", "group", "copy"];
        if header.len() < 5 || header.iter().take(4).ne(fixed) {
            return Err(RpcError::Schema("header must start with pair_id,role,group,copy,e0".into()));
        }
        let dim = header.len() - 4;
        for (j, name) in header.iter().skip(4).enumerate() {
            if name != format!("e{j}") {
                return Err(RpcError::Schema(format!("column {} should be e{j}, found `{name}`", j + 4)));
            }
        }
        let mut table = EmbeddingTable { dim, pairs: BTreeMap::new() };
        for (i, record) in reader.records().enumerate() {
            let line = i + 2;
            let record = record.map_err(|e| RpcError::Schema(format!("line {line}: {e}")))?;
            let Some(pair_id) = record.get(0).filter(|s| !s.is_empty()) else {
                return Err(RpcError::Schema(format!("line {line}: missing pair_id")));
            };
            let entry = table.pairs.entry(pair_id.to_string()).or_default();
            match parse_row(&record, dim) {
                Ok((key, v)) => {
                    if entry.rows.insert(key, v).is_some() {
                        entry.errors.push(format!("line {line}: duplicate role/group/copy"));
                    }
                }
                Err(msg) => entry.errors.push(format!("line {line}: {msg}")),
            }
        }
        Ok(table)
    }
}

fn parse_row(record: &csv::StringRecord, dim: usize) -> Result<((Role, usize, usize), Vec<f64>), String> {
    if record.len() != dim + 4 {
        return Err(format!("expected {} fields, found {}", dim + 4, record.len()));
    }
    let role = Role::parse(&record[1]).ok_or_else(|| format!("unknown role `{}`", &record[1]))?;
    let group: usize = record[2].parse().map_err(|_| format!("bad group `{}`", &record[2]))?;
    let copy: usize = record[3].parse().map_err(|_| format!("bad copy `{}`", &record[3]))?;
    let v = record
        .iter()
        .skip(4)
        .map(|s| s.trim().parse::<f64>().map_err(|_| format!("bad number `{s}`")))
        .collect::<Result<Vec<f64>, _>>()?;
    if v.iter().any(|x| !x.is_finite()) {
        return Err("NaN or infinite embedding value".into());
    }
    Ok(((role, group, copy), v))
}

#[derive(Clone, Debug, PartialEq)]
pub enum EvalMode {
    Rpc(RpcConfig),
    Rapc(RapcConfig),
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerdictRecord {
    pub pair_id: String,
    pub result: Result<RpcVerdict, RpcError>,
}

/// Every pair, in pair_id order. A bad pair only affects its own record.
pub fn evaluate_table(table: &EmbeddingTable, mode: &EvalMode) -> Vec<VerdictRecord> {
    let pairs: Vec<(&String, &PairRows)> = table.pairs.iter().collect();
    pairs
        .par_iter()
        .map(|(id, rows)| {
            let result = rows.embeddings().and_then(|emb| match mode {
                EvalMode::Rpc(cfg) => {
                    if emb.dim() != cfg.d {
                        return Err(RpcError::DimensionMismatch { expected: cfg.d, found: emb.dim() });
                    }
                    rpc_decide(&emb, cfg)
                }
                EvalMode::Rapc(cfg) => rapc_decide(&emb, cfg),
            });
            VerdictRecord { pair_id: (*id).clone(), result }
        })
        .collect()
}

/// Failed pairs get empty statistics and outcome `error`.
pub fn write_verdict_csv(records: &[VerdictRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["pair_id", "t2_test", "t2_reliability", "threshold", "outcome"]).expect("in-memory write");
    for r in records {
        let fields = match &r.result {
            Ok(v) => [
                r.pair_id.clone(),
                v.t2_test.to_string(),
                v.t2_reliability.to_string(),
                v.threshold.to_string(),
                v.outcome.as_str().to_string(),
            ],
            Err(_) => [r.pair_id.clone(), String::new(), String::new(), String::new(), "error".into()],
        };
        w.write_record(&fields).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn parse_verdict_csv(text: &str) -> Result<Vec<VerdictRecord>, RpcError> {
    let bad = |line: usize, msg: &str| RpcError::VerdictFile(format!("line {line}: {msg}"));
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| RpcError::VerdictFile(e.to_string()))?.clone();
    if header.iter().ne(["pair_id", "t2_test", "t2_reliability", "threshold", "outcome"]) {
        return Err(RpcError::VerdictFile("header must be pair_id,t2_test,t2_reliability,threshold,outcome".into()));
    }
    let mut out = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let line = i + 2;
        let rec = rec.map_err(|e| bad(line, &e.to_string()))?;
        let num = |j: usize| rec[j].parse::<f64>().map_err(|_| bad(line, &format!("bad number `{}`", &rec[j])));
        let result = if &rec[4] == "error" {
            Err(RpcError::VerdictFile("pair reported an error".into()))
        } else {
            let outcome = Outcome::parse(&rec[4]).ok_or_else(|| bad(line, &format!("unknown outcome `{}`", &rec[4])))?;
            Ok(RpcVerdict { t2_test: num(1)?, t2_reliability: num(2)?, threshold: num(3)?, outcome })
        };
        out.push(VerdictRecord { pair_id: rec[0].to_string(), result });
    }
    Ok(out)
}
