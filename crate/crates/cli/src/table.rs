//! `forcelab table` — tabulate a family: closed-form value next to a
//! certified witness, optionally cross-checked by exact search.

use forcelab_core::forcing::propagation_time;
use forcelab_core::formulas::{
    tdh_order, th_std_cycle, thp_binary_tree, thp_cycle, thp_path, thp_tdh, witness_cycle,
    witness_path, witness_std_cycle,
};
use forcelab_core::graph::generate;
use forcelab_core::graph::MAX_ORDER;
use forcelab_core::throttle::{throttle_exact, Objective, SearchBudget};
use forcelab_core::{Graph, Rational, Rule, Steps, VertexSet};

use crate::report::rational_str;
use crate::{CliError, CliResult, FamilyArg, TableArgs};

/// The order of `T(delta, h)`, or an error when it exceeds the cap.
/// Saturating accumulation, so arbitrary `delta` and `h` cannot overflow.
pub(crate) fn tdh_order_capped(delta: usize, h: u32) -> Result<usize, String> {
    let mut order: u64 = 1;
    let mut level = delta as u64;
    for _ in 0..h {
        order = order.saturating_add(level);
        if order > MAX_ORDER as u64 {
            return Err(format!(
                "T({delta}, {h}) exceeds the order cap {MAX_ORDER}"
            ));
        }
        level = level.saturating_mul(delta as u64 - 1);
    }
    debug_assert_eq!(order, tdh_order(delta as u64, h));
    Ok(order as usize)
}

/// Parses `--range`: `"a..b"` (inclusive) or a single `"a"`.
fn parse_range(text: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::input(format!("--range must be \"a..b\" or \"a\", got {text:?}"));
    let text = text.trim();
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text, text),
    };
    let a: u64 = a.parse().map_err(|_| bad())?;
    let b: u64 = b.parse().map_err(|_| bad())?;
    if a > b {
        return Err(CliError::input(format!(
            "--range is empty: {a} > {b} in {text:?}"
        )));
    }
    Ok((a, b))
}

struct Row {
    param: u64,
    n: usize,
    graph: Graph,
    rule: Rule,
    formula: u64,
    witness: VertexSet,
}

fn build_row(args: &TableArgs, param: u64) -> Result<Row, String> {
    let (rule, n, formula, witness, graph) = match args.family {
        FamilyArg::Path => {
            if param < 1 {
                return Err("paths need n >= 1".to_string());
            }
            let n = param as usize;
            (
                Rule::Psd,
                n,
                thp_path(param),
                witness_path(n),
                generate::path(n),
            )
        }
        FamilyArg::Cycle => {
            if param < 3 {
                return Err("cycles need n >= 3".to_string());
            }
            let n = param as usize;
            (
                Rule::Psd,
                n,
                thp_cycle(param),
                witness_cycle(n),
                generate::cycle(n),
            )
        }
        FamilyArg::Stdcycle => {
            if param < 3 {
                return Err("cycles need n >= 3".to_string());
            }
            let n = param as usize;
            (
                Rule::Standard,
                n,
                th_std_cycle(param),
                witness_std_cycle(n),
                generate::cycle(n),
            )
        }
        FamilyArg::Binarytree => {
            if param > 12 {
                return Err("binary trees of height > 12 exceed the order cap".to_string());
            }
            let h = param as u32;
            let g = generate::full_binary_tree(h);
            let root = VertexSet::from_vertices(g.order(), [0]);
            (Rule::Psd, g.order(), thp_binary_tree(h), root, g)
        }
        FamilyArg::Tdh => {
            if args.delta < 3 {
                return Err(format!(
                    "the tdh family needs --delta >= 3, got {}",
                    args.delta
                ));
            }
            let h = u32::try_from(param).map_err(|_| "height out of range".to_string())?;
            tdh_order_capped(args.delta, h)?;
            let g = generate::cayley_tree(args.delta, h);
            let root = VertexSet::from_vertices(g.order(), [0]);
            (Rule::Psd, g.order(), thp_tdh(args.delta as u64, h), root, g)
        }
    };
    Ok(Row {
        param,
        n,
        graph,
        rule,
        formula,
        witness,
    })
}

pub fn run(args: &TableArgs) -> CliResult {
    let (lo, hi) = parse_range(&args.range)?;
    let mut domain_errors = 0usize;
    let mut value_failures = 0usize;

    println!("param\tn\tformula\twitnessSize\twitnessPt\twitnessValue\tsearch\tok");
    for param in lo..=hi {
        let row = match build_row(args, param) {
            Ok(row) => row,
            Err(msg) => {
                domain_errors += 1;
                eprintln!("error: param {param}: {msg}");
                continue;
            }
        };
        let pt = propagation_time(row.rule, &row.graph, &row.witness);
        let (pt_str, witness_value) = match pt {
            Steps::Finite(p) => (p.to_string(), Some(row.witness.len() as u64 + p as u64)),
            Steps::Infinite => ("infinity".to_string(), None),
        };
        // The witness certifies the formula from above; the search, when
        // requested, certifies it from below as well.
        let searched = if row.n <= args.check_upto {
            let budget = SearchBudget::with_max_order(row.n);
            let res = throttle_exact(row.rule, &row.graph, Objective::unweighted(), &budget)
                .expect("unbudgeted search below the order cap succeeds");
            Some(res.value)
        } else {
            None
        };
        let search_str = searched.map_or_else(|| "-".to_string(), rational_str);
        let ok = witness_value == Some(row.formula)
            && searched.is_none_or(|v| v == Rational::from_integer(row.formula as i64));
        if !ok {
            value_failures += 1;
        }
        println!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            row.param,
            row.n,
            row.formula,
            row.witness.len(),
            pt_str,
            witness_value.map_or_else(|| "infinity".to_string(), |v| v.to_string()),
            search_str,
            ok
        );
    }

    if value_failures > 0 {
        Err(CliError::Verification(format!(
            "{value_failures} row(s) failed the witness or search check"
        )))
    } else if domain_errors > 0 {
        Err(CliError::Input(format!(
            "{domain_errors} row(s) were outside the family's domain"
        )))
    } else {
        Ok(())
    }
}
