//! `forcelab classify` — structural membership in the extreme throttling
//! classes, with evidence.

use std::time::Instant;

use forcelab_core::classifier::{classify, FamilyGVerdict};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::read_graphs;
use crate::report::{ErrorRecord, MetricsJson, Report};
use crate::{ClassifyArgs, CliError, CliResult};

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ClassifyRecord {
    id: String,
    line: usize,
    #[serde(flatten)]
    metrics: MetricsJson,
    /// Classes the graph provably belongs to ("thp=1" … "thp>=n-1").
    classes: Vec<String>,
    /// Classes whose membership test only covers connected graphs and was
    /// therefore not decided for this (disconnected) input.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    not_asserted: Vec<String>,
    /// For "thp=3" via a dominating pair: the first such pair.
    #[serde(skip_serializing_if = "Option::is_none")]
    pair_witness: Option<(usize, usize)>,
    /// Membership in the family characterizing high throttling, with an
    /// independent triple or a forbidden induced subgraph as counter-evidence.
    family_g: FamilyGVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_micros: Option<u128>,
}

pub fn run(args: &ClassifyArgs) -> CliResult {
    let (graphs, parse_failures) = read_graphs(&args.input, args.format)?;

    let records: Vec<ClassifyRecord> = graphs
        .par_iter()
        .map(|ig| {
            let started = Instant::now();
            let c = classify(&ig.graph);
            ClassifyRecord {
                id: ig.id.clone(),
                line: ig.line,
                metrics: MetricsJson::for_graph(&ig.graph),
                classes: c.classes.iter().map(|x| x.to_string()).collect(),
                not_asserted: c.not_asserted.iter().map(|x| x.to_string()).collect(),
                pair_witness: c.pair_witness,
                family_g: c.family_g,
                wall_micros: args.timing.then(|| started.elapsed().as_micros()),
            }
        })
        .collect();

    let mut report = Report::new("classify");
    report.records = records;
    for f in &parse_failures {
        report.errors.push(ErrorRecord {
            id: f.id.clone(),
            line: f.line,
            error: f.error.clone(),
        });
    }

    if args.tsv {
        print_tsv(&report, args.timing);
    } else {
        report.print();
    }

    if parse_failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Input(format!(
            "{} input(s) could not be parsed",
            parse_failures.len()
        )))
    }
}

fn family_str(v: &FamilyGVerdict) -> String {
    let join = |vs: &[usize]| {
        let parts: Vec<String> = vs.iter().map(|x| x.to_string()).collect();
        parts.join(",")
    };
    match v {
        FamilyGVerdict::Member => "member".to_string(),
        FamilyGVerdict::IndependentTriple { vertices } => {
            format!("independent-triple {}", join(vertices))
        }
        FamilyGVerdict::ForbiddenInduced { pattern, vertices } => {
            format!("forbidden {} {}", pattern, join(vertices))
        }
    }
}

fn print_tsv(report: &Report<ClassifyRecord>, timing: bool) {
    let mut header = vec!["id", "line", "n", "m", "classes", "pairWitness", "familyG"];
    if timing {
        header.push("wallMicros");
    }
    println!("{}", header.join("\t"));
    for r in &report.records {
        let classes = if r.classes.is_empty() {
            "-".to_string()
        } else {
            r.classes.join(";")
        };
        let pair = r
            .pair_witness
            .map_or_else(|| "-".to_string(), |(u, v)| format!("{u},{v}"));
        let mut row = vec![
            r.id.clone(),
            r.line.to_string(),
            r.metrics.order.to_string(),
            r.metrics.size.to_string(),
            classes,
            pair,
            family_str(&r.family_g),
        ];
        if timing {
            row.push(
                r.wall_micros
                    .map_or_else(|| "-".to_string(), |v| v.to_string()),
            );
        }
        println!("{}", row.join("\t"));
    }
    for e in &report.errors {
        eprintln!("error: line {} ({}): {}", e.line, e.id, e.error);
    }
}
