use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use wlpairs_core::dataset::{emit_permutations, write_pair_file, write_sidecar, Audit};
use wlpairs_core::generators::assemble::{assemble_all, assemble_category, AssembleConfig, Category};
use wlpairs_core::generators::cfi::{gen_cfi, CfiSpec};
use wlpairs_core::generators::csl::{gen_csl, CslParams};
use wlpairs_core::generators::regular::{certify, RegularityCertificate};
use wlpairs_core::graph::{enumerate_nonisomorphic, parse_graph6, write_graph6};

use crate::error::CliError;
use crate::io::{read_graphs, read_pairs, with_suffix, write, Sink};
use crate::{CategoryArgs, GenerateCmd, VerifyCmd};

pub fn run(cmd: GenerateCmd) -> Result<(), CliError> {
    match cmd {
        GenerateCmd::Csl { m, r, out } => {
            let g = gen_csl(CslParams { m, r })?;
            Sink::new(out.as_deref()).data(&format!("{}\n", write_graph6(&g)))
        }
        GenerateCmd::Cfi { backbone, twist, twist_edge, out } => {
            let backbone = parse_graph6(backbone.trim())?;
            let g = gen_cfi(&CfiSpec { backbone, twisted: twist, twist_edge })?;
            Sink::new(out.as_deref()).data(&format!("{}\n", write_graph6(&g)))
        }
        GenerateCmd::Enumerate { n, out } => {
            let sink = Sink::new(out.as_deref());
            let graphs = enumerate_nonisomorphic(n)?;
            let mut text = String::new();
            for g in &graphs {
                text.push_str(&write_graph6(g));
                text.push('\n');
            }
            sink.data(&text)?;
            sink.summary(&format!("{} graphs on {n} nodes", graphs.len()));
            Ok(())
        }
        GenerateCmd::Category(args) => category(args),
    }
}

fn category(args: CategoryArgs) -> Result<(), CliError> {
    let mut cfg = AssembleConfig {
        seed: args.seed,
        max_n: args.max_n,
        regular_max_n: args.regular_max_n,
        cfi_max_backbone: args.cfi_max_backbone,
        builtin_catalog: !args.no_builtin_catalog,
        allow_shortfall: args.allow_shortfall,
        ..AssembleConfig::default()
    };
    if let Some(p) = &args.catalog {
        cfg.catalog = read_graphs(p)?;
    }
    if let Some(p) = &args.collision_source {
        cfg.collision_graphs = Some(read_graphs(p)?);
    }
    let assembly = if args.category == "all" {
        assemble_all(&cfg)?
    } else {
        let cat: Category = args.category.parse()?;
        assemble_category(cat, &cfg)?
    };
    write(&with_suffix(&args.out, ".g6"), &write_pair_file(&assembly.pairs))?;
    write(&with_suffix(&args.out, ".json"), &write_sidecar(&assembly.pairs))?;
    if args.emit_permutations {
        let perms = emit_permutations(&assembly.pairs, args.copies, args.groups, args.seed);
        write(&with_suffix(&args.out, ".perm.csv"), &perms)?;
    }
    let mut counts: BTreeMap<(&str, &str), usize> = BTreeMap::new();
    for p in &assembly.pairs {
        *counts.entry((&p.category, &p.subcategory)).or_default() += 1;
    }
    let audited = assembly.pairs.iter().filter(|p| p.audit.passed()).count();
    println!("{} pairs, {audited} pass the audit (1-WL indistinguishable, non-isomorphic)", assembly.pairs.len());
    for ((cat, sub), n) in counts {
        if sub.is_empty() {
            println!("  {cat}: {n}");
        } else {
            println!("  {cat}/{sub}: {n}");
        }
    }
    for s in &assembly.shortfalls {
        eprintln!("shortfall: {s}");
    }
    Ok(())
}

fn certificate_label(c: Option<RegularityCertificate>) -> String {
    match c {
        None => "none".into(),
        Some(RegularityCertificate::Regular { degree }) => format!("regular k={degree}"),
        Some(RegularityCertificate::StronglyRegular { params: p }) => {
            format!("srg ({},{},{},{})", p.v, p.k, p.lambda, p.mu)
        }
        Some(RegularityCertificate::FourVertexCondition { params: p }) => {
            format!("4vc ({},{},{},{})", p.v, p.k, p.lambda, p.mu)
        }
        Some(RegularityCertificate::DistanceRegular { array }) => {
            let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            format!("drg {{{}; {}}}", join(&array.b), join(&array.c))
        }
    }
}

pub fn verify(cmd: VerifyCmd) -> Result<(), CliError> {
    match cmd {
        VerifyCmd::Graphs { file, out } => {
            let graphs = read_graphs(&file)?;
            let labels: Vec<String> = graphs.par_iter().map(|g| certificate_label(certify(g))).collect();
            let mut text = String::from("index,nodes,edges,family\n");
            for (i, (g, label)) in graphs.iter().zip(&labels).enumerate() {
                let _ = writeln!(text, "{i},{},{},{label}", g.n(), g.edge_count());
            }
            let sink = Sink::new(out.as_deref());
            sink.data(&text)?;
            sink.summary(&format!("{} graphs checked", graphs.len()));
            Ok(())
        }
        VerifyCmd::Pairs { file, sidecar, out } => {
            let pairs = read_pairs(&file, sidecar.as_deref())?;
            let audits: Vec<Audit> = pairs.par_iter().map(|p| Audit::run(&p.g, &p.h)).collect();
            let mut text = String::from("pair_id,wl1_indistinguishable,non_isomorphic,sidecar_agrees\n");
            let mut failed = 0;
            for (p, a) in pairs.iter().zip(&audits) {
                let agrees = sidecar.is_none() || p.audit == *a;
                if !a.passed() || !agrees {
                    failed += 1;
                }
                let _ = writeln!(text, "{},{},{},{agrees}", p.pair_id, a.wl1_indistinguishable, a.non_isomorphic);
            }
            let sink = Sink::new(out.as_deref());
            sink.data(&text)?;
            sink.summary(&format!("{} pairs, {failed} failing", pairs.len()));
            if failed > 0 {
                return Err(CliError::Input(format!("{failed} pairs failed the audit")));
            }
            Ok(())
        }
    }
}
