use rayon::prelude::*;
use wlpairs_core::dataset::{dataset_stats, parse_sidecar, reduce_seeds as reduce, verdict_csv, BenchmarkReport, PairVerdict, VerdictRow};
use wlpairs_core::distinguisher::Distinguisher;
use wlpairs_core::rpc::{
    evaluate_table, parse_verdict_csv, rpc_threshold, write_verdict_csv, EmbeddingTable, EvalMode, Outcome, RapcConfig,
    RpcConfig,
};

use crate::error::CliError;
use crate::io::{read, read_pairs, write, Sink};
use crate::{DistinguishArgs, ReduceArgs, RpcArgs, RpcMode, StatsArgs};

fn category_or_all(c: &str) -> String {
    if c.is_empty() {
        "all".into()
    } else {
        c.to_string()
    }
}

pub fn distinguish(args: DistinguishArgs) -> Result<(), CliError> {
    let mut method: Distinguisher = args.method.parse()?;
    if let Some(t) = args.max_iterations {
        method = method.with_max_iterations(t);
    }
    method.validate()?;
    let pairs = read_pairs(&args.pairs, args.sidecar.as_deref())?;
    let label = method.to_string();
    let mut rows = pairs
        .par_iter()
        .map(|p| {
            let (verdict, detail) = match method.distinguishes(&p.g, &p.h) {
                Ok(true) => (PairVerdict::Distinguished, String::new()),
                Ok(false) => (PairVerdict::NotDistinguished, String::new()),
                Err(e) if e.is_resource_limit() => (PairVerdict::Skipped, e.to_string()),
                Err(e) => return Err(CliError::from(e)),
            };
            Ok(VerdictRow {
                pair_id: p.pair_id.clone(),
                category: category_or_all(&p.category),
                subcategory: p.subcategory.clone(),
                method: label.clone(),
                verdict,
                detail,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    rows.sort_by(|a, b| a.pair_id.cmp(&b.pair_id));
    let report = BenchmarkReport::from_verdicts(&rows);
    if let Some(p) = &args.verdicts {
        write(p, &verdict_csv(&rows))?;
    }
    if let Some(p) = &args.report {
        write(p, &report.to_csv())?;
    }
    print!("{}", report.to_table());
    Ok(())
}

pub fn rpc(args: RpcArgs) -> Result<(), CliError> {
    let table = EmbeddingTable::parse(&read(&args.embeddings)?)?;
    let sink = Sink::new(args.out.as_deref());
    let mode = match args.mode {
        RpcMode::Rpc => {
            let mut cfg = RpcConfig::new(args.q, table.dim, args.alpha);
            if let Some(t) = args.threshold {
                cfg = cfg.with_threshold(t);
            }
            let threshold = rpc_threshold(&cfg)?;
            sink.summary(&format!("threshold: {threshold:.2} (q = {}, d = {}, alpha = {})", args.q, table.dim, args.alpha));
            EvalMode::Rpc(cfg)
        }
        RpcMode::Rapc => {
            sink.summary(&format!("threshold: adaptive per pair (p = {}, q = {})", args.p, args.q));
            EvalMode::Rapc(RapcConfig { p: args.p, q: args.q, seed: 0 })
        }
    };
    let records = evaluate_table(&table, &mode);
    sink.data(&write_verdict_csv(&records))?;
    let count = |o: Outcome| records.iter().filter(|r| matches!(&r.result, Ok(v) if v.outcome == o)).count();
    sink.summary(&format!(
        "{} pairs: {} distinguished, {} not distinguished, {} unreliable, {} errors",
        records.len(),
        count(Outcome::Distinguished),
        count(Outcome::NotDistinguished),
        count(Outcome::Unreliable),
        records.iter().filter(|r| r.result.is_err()).count()
    ));
    for r in &records {
        if let Err(e) = &r.result {
            eprintln!("{}: {e}", r.pair_id);
        }
    }
    Ok(())
}

pub fn reduce_seeds(args: ReduceArgs) -> Result<(), CliError> {
    let runs = args
        .files
        .iter()
        .map(|p| parse_verdict_csv(&read(p)?).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))))
        .collect::<Result<Vec<_>, _>>()?;
    let sidecar = args.sidecar.as_deref().map(read).transpose()?.map(|t| parse_sidecar(&t)).transpose()?;
    let red = reduce(&runs, sidecar.as_deref(), &args.method)?;
    if let Some(p) = &args.verdicts {
        write(p, &verdict_csv(&red.verdicts))?;
    }
    let sink = Sink::new(args.out.as_deref());
    sink.data(&red.report.to_csv())?;
    sink.summary(&red.report.to_table());
    if red.all_reliable() {
        sink.summary("reliable under every run: yes");
    } else {
        sink.summary(&format!("reliable under every run: no ({} pairs flagged: {})", red.unreliable.len(), red.unreliable.join(" ")));
    }
    Ok(())
}

pub fn stats(args: StatsArgs) -> Result<(), CliError> {
    let pairs = read_pairs(&args.pairs, args.sidecar.as_deref())?;
    let report = dataset_stats(&pairs);
    let sink = Sink::new(args.out.as_deref());
    sink.data(&report.to_csv())?;
    sink.summary(&report.to_table());
    Ok(())
}
