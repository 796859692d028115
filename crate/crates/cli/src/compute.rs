//! `forcelab compute` — per-graph forcing invariants.

use std::time::Instant;

use forcelab_core::forcing::{
    graph_propagation_time, is_forcing_set, propagation_time, zero_forcing_number,
};
use forcelab_core::formulas::min_pt_for_size;
use forcelab_core::throttle::{throttle_exact, Objective, SearchBudget};
use forcelab_core::{Rational, Rule, SolverError, Steps};
use num::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::input::{read_graphs, InputGraph};
use crate::report::{
    parse_omega, parse_set, rational_str, steps_str, ErrorRecord, MetricsJson, Report,
};
use crate::{CliError, CliResult, ComputeArgs, WhatArg};

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ComputeRecord {
    id: String,
    line: usize,
    #[serde(flatten)]
    metrics: MetricsJson,
    rule: &'static str,
    what: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    omega: Option<String>,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    forcing_number: Option<usize>,
    /// Echo of `--set` when the record evaluates a given start set.
    #[serde(skip_serializing_if = "Option::is_none")]
    set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_pt: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    proven_optimal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    subsets_examined: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<BoundsJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_micros: Option<u128>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct BoundsJson {
    lower: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper: Option<String>,
    ok: bool,
}

/// What went wrong for one graph, and which exit code it implies.
enum FailKind {
    /// Exit 2: the input or the budget, not the mathematics.
    Input,
    /// Exit 1: a witness or bound failed its re-check — a bug, never the
    /// input's fault.
    Verification,
}

struct Failure {
    id: String,
    line: usize,
    kind: FailKind,
    error: String,
}

pub fn run(args: &ComputeArgs) -> CliResult {
    let rule = args.rule.rule();
    let omega = match &args.omega {
        None => Rational::one(),
        Some(text) => {
            if args.what != WhatArg::Throttle {
                return Err(CliError::input("--omega only applies to --what throttle"));
            }
            parse_omega(text)?
        }
    };
    if args.set.is_some() && args.what == WhatArg::Z {
        return Err(CliError::input(
            "--set applies to --what pt and --what throttle; the forcing number has no start set",
        ));
    }
    let objective = Objective::weighted(omega).map_err(|e| CliError::input(e.to_string()))?;
    let budget = SearchBudget {
        max_order: args.max_n,
        max_subsets: args.budget,
        time_limit: None,
    };

    let (graphs, parse_failures) = read_graphs(&args.input, args.format)?;
    let outcomes: Vec<Result<ComputeRecord, Failure>> = graphs
        .par_iter()
        .map(|ig| one_graph(args, rule, omega, objective, &budget, ig))
        .collect();

    let mut report = Report::new("compute");
    let mut verification_failures = 0usize;
    let mut input_failures = parse_failures.len();
    for f in parse_failures {
        report.errors.push(ErrorRecord {
            id: f.id,
            line: f.line,
            error: f.error,
        });
    }
    for outcome in outcomes {
        match outcome {
            Ok(rec) => report.records.push(rec),
            Err(f) => {
                match f.kind {
                    FailKind::Input => input_failures += 1,
                    FailKind::Verification => verification_failures += 1,
                }
                report.errors.push(ErrorRecord {
                    id: f.id,
                    line: f.line,
                    error: f.error,
                });
            }
        }
    }
    report.errors.sort_by_key(|e| e.line);

    if args.tsv {
        print_tsv(&report, args.timing);
    } else {
        report.print();
    }

    if verification_failures > 0 {
        Err(CliError::Verification(format!(
            "{verification_failures} graph(s) failed verification"
        )))
    } else if input_failures > 0 {
        Err(CliError::Input(format!(
            "{input_failures} input(s) could not be processed"
        )))
    } else {
        Ok(())
    }
}

fn one_graph(
    args: &ComputeArgs,
    rule: Rule,
    omega: Rational,
    objective: Objective,
    budget: &SearchBudget,
    ig: &InputGraph,
) -> Result<ComputeRecord, Failure> {
    let started = Instant::now();
    let g = &ig.graph;
    let n = g.order();
    let fail = |kind, error: String| Failure {
        id: ig.id.clone(),
        line: ig.line,
        kind,
        error,
    };

    let set = match &args.set {
        Some(text) => Some(parse_set(text, n).map_err(|e| fail(FailKind::Input, e))?),
        None => None,
    };
    // The forcing-number and minimum-set searches have no budget parameter,
    // so they respect the same order cap as the throttling search.
    if set.is_none() && n > args.max_n {
        return Err(fail(
            FailKind::Input,
            format!(
                "graph order {n} exceeds --max-n {}; raise it to search this graph",
                args.max_n
            ),
        ));
    }

    let metrics = MetricsJson::for_graph(g);
    let mut rec = ComputeRecord {
        id: ig.id.clone(),
        line: ig.line,
        metrics,
        rule: args.rule.name(),
        what: args.what.name(),
        omega: (args.what == WhatArg::Throttle).then(|| rational_str(omega)),
        value: String::new(),
        forcing_number: None,
        set: None,
        witness: None,
        witness_size: None,
        witness_pt: None,
        proven_optimal: None,
        subsets_examined: None,
        bounds: None,
        wall_micros: None,
    };

    match (args.what, set) {
        (WhatArg::Pt, Some(s)) => {
            rec.value = steps_str(propagation_time(rule, g, &s));
            rec.set = Some(s.to_vec());
        }
        (WhatArg::Pt, None) => {
            let r = graph_propagation_time(rule, g);
            if propagation_time(rule, g, &r.witness) != r.pt || r.witness.len() != r.forcing_number
            {
                return Err(fail(
                    FailKind::Verification,
                    "propagation-time witness failed its re-check".to_string(),
                ));
            }
            rec.value = steps_str(r.pt);
            rec.forcing_number = Some(r.forcing_number);
            rec.witness_size = Some(r.witness.len());
            rec.witness = Some(r.witness.to_vec());
        }
        (WhatArg::Z, _) => {
            let r = zero_forcing_number(rule, g);
            if !is_forcing_set(rule, g, &r.witness) || r.witness.len() != r.number {
                return Err(fail(
                    FailKind::Verification,
                    "forcing-number witness failed its re-check".to_string(),
                ));
            }
            rec.value = r.number.to_string();
            rec.forcing_number = Some(r.number);
            rec.witness_size = Some(r.witness.len());
            rec.witness = Some(r.witness.to_vec());
        }
        (WhatArg::Throttle, Some(s)) => {
            rec.set = Some(s.to_vec());
            match propagation_time(rule, g, &s) {
                Steps::Finite(p) => {
                    let value = objective.value(s.len(), p);
                    rec.value = rational_str(value);
                    rec.witness_pt = Some(p.to_string());
                    let lower = general_lower_bound(rule, n, g.max_degree(), omega);
                    rec.bounds = Some(BoundsJson {
                        lower: rational_str(lower),
                        upper: None,
                        ok: value >= lower,
                    });
                }
                Steps::Infinite => rec.value = "infinity".to_string(),
            }
        }
        (WhatArg::Throttle, None) => {
            let res = match throttle_exact(rule, g, objective, budget) {
                Ok(res) => res,
                Err(e @ SolverError::GraphTooLarge { .. }) => {
                    return Err(fail(FailKind::Input, format!("{e}; raise --max-n")));
                }
                Err(e) => {
                    return Err(fail(FailKind::Input, format!("{e}; raise --budget")));
                }
            };
            let replayed = propagation_time(rule, g, &res.witness);
            if replayed != Steps::Finite(res.pt)
                || res.witness.len() != res.size
                || objective.value(res.size, res.pt) != res.value
            {
                return Err(fail(
                    FailKind::Verification,
                    "throttling witness failed its re-check".to_string(),
                ));
            }
            let lower = general_lower_bound(rule, n, g.max_degree(), omega);
            let mut upper = omega * Rational::from_integer(n as i64);
            if rule == Rule::Psd && omega.is_one() {
                if let Some(alpha) = rec.metrics.independence_number {
                    upper = upper.min(Rational::from_integer((n - alpha + 1) as i64));
                }
            }
            let ok = lower <= res.value && res.value <= upper;
            if !ok {
                return Err(fail(
                    FailKind::Verification,
                    format!(
                        "computed value {} escapes the proven bounds [{}, {}]",
                        rational_str(res.value),
                        rational_str(lower),
                        rational_str(upper)
                    ),
                ));
            }
            rec.value = rational_str(res.value);
            rec.witness_pt = Some(res.pt.to_string());
            rec.witness_size = Some(res.size);
            rec.witness = Some(res.witness.to_vec());
            rec.proven_optimal = Some(res.proven_optimal);
            rec.subsets_examined = Some(res.subsets_examined);
            rec.bounds = Some(BoundsJson {
                lower: rational_str(lower),
                upper: Some(rational_str(upper)),
                ok,
            });
        }
    }

    if args.timing {
        rec.wall_micros = Some(started.elapsed().as_micros());
    }
    Ok(rec)
}

/// A lower bound on `ω·|S| + pt(G; S)` over all forcing sets `S`, from the
/// per-size propagation-time floors: `min_s ω·s + minpt(s)`. Sound for both
/// rules and any positive ω.
fn general_lower_bound(rule: Rule, n: usize, delta: usize, omega: Rational) -> Rational {
    let mut best: Option<Rational> = None;
    for s in 1..=n {
        let base = omega * Rational::from_integer(s as i64);
        if best.is_some_and(|b| base >= b) {
            break;
        }
        if let Some(p) = min_pt_for_size(rule, n, delta, s) {
            let v = base + Rational::from_integer(p as i64);
            best = Some(best.map_or(v, |b| b.min(v)));
        }
    }
    best.expect("the full vertex set always forces")
}

fn print_tsv(report: &Report<ComputeRecord>, timing: bool) {
    let mut header = vec![
        "id",
        "line",
        "n",
        "m",
        "maxDegree",
        "rule",
        "what",
        "omega",
        "value",
        "forcingNumber",
        "set",
        "witness",
        "witnessSize",
        "witnessPt",
        "provenOptimal",
    ];
    if timing {
        header.push("wallMicros");
    }
    println!("{}", header.join("\t"));
    let dash = || "-".to_string();
    let join = |vs: &Option<Vec<usize>>| {
        vs.as_ref().map_or_else(dash, |v| {
            let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            if parts.is_empty() {
                String::new()
            } else {
                parts.join(",")
            }
        })
    };
    for r in &report.records {
        let mut row = vec![
            r.id.clone(),
            r.line.to_string(),
            r.metrics.order.to_string(),
            r.metrics.size.to_string(),
            r.metrics.max_degree.to_string(),
            r.rule.to_string(),
            r.what.to_string(),
            r.omega.clone().unwrap_or_else(dash),
            r.value.clone(),
            r.forcing_number.map_or_else(dash, |v| v.to_string()),
            join(&r.set),
            join(&r.witness),
            r.witness_size.map_or_else(dash, |v| v.to_string()),
            r.witness_pt.clone().unwrap_or_else(dash),
            r.proven_optimal.map_or_else(dash, |v| v.to_string()),
        ];
        if timing {
            row.push(r.wall_micros.map_or_else(dash, |v| v.to_string()));
        }
        println!("{}", row.join("\t"));
    }
    for e in &report.errors {
        eprintln!("error: line {} ({}): {}", e.line, e.id, e.error);
    }
}
