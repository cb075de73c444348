use std::collections::BTreeSet;

use proptest::prelude::*;
use wlpairs_core::dataset::{
    emit_permutations, load_pairs, reduce_seeds, write_pair_file, write_sidecar, BenchmarkReport, PairVerdict,
    VerdictRow,
};
use wlpairs_core::generators::assemble::{assemble_category, AssembleConfig, Category, Quotas};
use wlpairs_core::rpc::{evaluate_table, parse_verdict_csv, write_verdict_csv, EmbeddingTable, EvalMode, RpcConfig};

fn small_cfi() -> Vec<wlpairs_core::dataset::GraphPair> {
    let cfg = AssembleConfig {
        seed: 3,
        cfi_max_backbone: 4,
        quotas: Quotas { cfi_tw2: 3, cfi_tw3: 1, cfi_tw4: 0, ..Quotas::default() },
        ..AssembleConfig::default()
    };
    assemble_category(Category::Cfi, &cfg).unwrap().pairs
}

#[test]
fn pair_file_and_sidecar_round_trip() {
    let pairs = small_cfi();
    assert_eq!(pairs.len(), 4);
    let text = write_pair_file(&pairs);
    let back = load_pairs(&text, Some(&write_sidecar(&pairs))).unwrap();
    assert_eq!(back, pairs);
    let bare = load_pairs(&text, None).unwrap();
    assert!(bare.iter().zip(&pairs).all(|(a, b)| a.audit == b.audit && a.g == b.g && a.h == b.h));
    assert_eq!(bare[0].pair_id, "pair-0000");
}

#[test]
fn permutation_list_shape() {
    let pairs = small_cfi();
    let csv = emit_permutations(&pairs, 3, 2, 9);
    assert_eq!(csv, emit_permutations(&pairs, 3, 2, 9));
    assert_ne!(csv, emit_permutations(&pairs, 3, 2, 10));
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    // 3 roles x 3 copies in group 0, then 2 roles x 6 copies per group
    assert_eq!(rows.len(), pairs.len() * (9 + 2 * 12));
    for row in rows {
        let f: Vec<&str> = row.split(',').collect();
        let images: Vec<usize> = f[4].split(' ').map(|x| x.parse().unwrap()).collect();
        let set: BTreeSet<usize> = images.iter().copied().collect();
        assert_eq!(set, (0..images.len()).collect());
    }
}

#[test]
fn embeddings_to_reduced_report() {
    let mut text = String::from("pair_id,role,group,copy,e0\n");
    for (pair, shift) in [("x", 0.0), ("y", 50.0)] {
        for role in ["G", "H", "G_pi"] {
            for c in 0..5 {
                let v = (c as f64 * 0.37).sin() + if role == "H" { shift } else { 0.0 };
                let jitter = if role == "G" { 0.0 } else { 0.1 * (c as f64 * 1.3).cos() };
                text.push_str(&format!("{pair},{role},0,{c},{}\n", v + jitter));
            }
        }
    }
    let table = EmbeddingTable::parse(&text).unwrap();
    let records = evaluate_table(&table, &EvalMode::Rpc(RpcConfig::new(5, 1, 0.95)));
    let csv = write_verdict_csv(&records);
    let parsed = parse_verdict_csv(&csv).unwrap();
    assert_eq!(parsed, records);
    let red = reduce_seeds(&[parsed], None, "m").unwrap();
    assert_eq!(red.verdicts[0].verdict, PairVerdict::NotDistinguished);
    assert_eq!(red.verdicts[1].verdict, PairVerdict::Distinguished);
    assert!(red.all_reliable());
}

fn verdict_rows() -> impl Strategy<Value = Vec<VerdictRow>> {
    let cat = prop::sample::select(vec!["basic", "regular", "extension", "cfi"]);
    let sub = prop::sample::select(vec!["", "a", "b"]);
    let v = prop::sample::select(vec![PairVerdict::Distinguished, PairVerdict::NotDistinguished, PairVerdict::Skipped]);
    let m = prop::sample::select(vec!["1wl", "s3"]);
    prop::collection::vec((cat, sub, v, m), 0..60).prop_map(|rows| {
        rows.into_iter()
            .enumerate()
            .map(|(i, (c, s, v, m))| VerdictRow {
                pair_id: format!("p{i}"),
                category: c.into(),
                subcategory: s.into(),
                method: m.into(),
                verdict: v,
                detail: String::new(),
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn report_totals_are_sums(rows in verdict_rows()) {
        let report = BenchmarkReport::from_verdicts(&rows);
        for method in ["1wl", "s3"] {
            let mine: Vec<&VerdictRow> = rows.iter().filter(|r| r.method == method).collect();
            let Some(total) = report.row(method, "total") else {
                prop_assert!(mine.is_empty());
                continue;
            };
            let cats: Vec<_> = report.rows.iter().filter(|r| r.method == method && r.group != "total" && !r.group.contains('/')).collect();
            prop_assert_eq!(total.pairs, mine.len());
            prop_assert_eq!(cats.iter().map(|r| r.pairs).sum::<usize>(), total.pairs);
            prop_assert_eq!(cats.iter().map(|r| r.distinguished).sum::<usize>(), total.distinguished);
            for r in report.rows.iter().filter(|r| r.method == method) {
                prop_assert!(r.distinguished + r.skipped <= r.pairs);
            }
            let dist = mine.iter().filter(|r| r.verdict == PairVerdict::Distinguished).count();
            prop_assert_eq!(total.distinguished, dist);
        }
    }
}
