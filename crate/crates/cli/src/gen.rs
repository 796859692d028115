//! `forcelab gen` — emit graphs from the built-in generators, as graph6
//! lines (default) or edge lists.

use forcelab_core::census::{all_graphs, all_trees, connected_graphs};
use forcelab_core::graph::{edgelist, generate, graph6, MAX_ORDER};
use forcelab_core::Graph;

use crate::{CliError, CliResult, GenArgs};

fn arity_error(family: &str, expected: &str) -> CliError {
    CliError::input(format!("family {family:?} takes {expected}"))
}

/// Checks an order parameter against the construction cap before the
/// generator gets a chance to panic on it.
fn capped(n: usize) -> Result<usize, CliError> {
    if n > MAX_ORDER {
        Err(CliError::input(format!(
            "order {n} exceeds the construction cap {MAX_ORDER}"
        )))
    } else {
        Ok(n)
    }
}

pub fn run(args: &GenArgs) -> CliResult {
    let p = &args.params;
    let one = |what: &str| -> Result<usize, CliError> {
        match p[..] {
            [x] => Ok(x),
            _ => Err(arity_error(&args.family, what)),
        }
    };
    let two = |what: &str| -> Result<(usize, usize), CliError> {
        match p[..] {
            [x, y] => Ok((x, y)),
            _ => Err(arity_error(&args.family, what)),
        }
    };
    let none = |_what: &str| -> Result<(), CliError> {
        if p.is_empty() {
            Ok(())
        } else {
            Err(arity_error(&args.family, "no parameters"))
        }
    };

    let graphs: Vec<Graph> = match args.family.as_str() {
        "path" => {
            let n = capped(one("one parameter: n >= 1")?)?;
            if n < 1 {
                return Err(CliError::input("paths need n >= 1"));
            }
            vec![generate::path(n)]
        }
        "cycle" => {
            let n = capped(one("one parameter: n >= 3")?)?;
            if n < 3 {
                return Err(CliError::input("cycles need n >= 3"));
            }
            vec![generate::cycle(n)]
        }
        "complete" => {
            let n = capped(one("one parameter: n >= 1")?)?;
            if n < 1 {
                return Err(CliError::input("complete graphs need n >= 1"));
            }
            vec![generate::complete(n)]
        }
        "edgeless" => {
            let n = capped(one("one parameter: n >= 1")?)?;
            if n < 1 {
                return Err(CliError::input("edgeless graphs need n >= 1"));
            }
            vec![generate::edgeless(n)]
        }
        "star" => {
            let k = one("one parameter: the leaf count k")?;
            capped(k + 1)?;
            vec![generate::star(k)]
        }
        "complete-bipartite" => {
            let (a, b) = two("two parameters: the part sizes a and b")?;
            if capped(a + b)? < 1 {
                return Err(CliError::input("complete bipartite graphs need a + b >= 1"));
            }
            vec![generate::complete_bipartite(a, b)]
        }
        "binary-tree" => {
            let h = one("one parameter: the height h <= 12")?;
            if h > 12 {
                return Err(CliError::input(
                    "binary trees of height > 12 exceed the order cap",
                ));
            }
            vec![generate::full_binary_tree(h as u32)]
        }
        "tdh" => {
            let (delta, h) = two("two parameters: the degree and the height")?;
            if delta < 3 {
                return Err(CliError::input(
                    "regular trees need a degree of at least 3 (a degree-2 one is a path)",
                ));
            }
            let h = u32::try_from(h).map_err(|_| CliError::input("height out of range"))?;
            crate::table::tdh_order_capped(delta, h).map_err(CliError::Input)?;
            vec![generate::cayley_tree(delta, h)]
        }
        "grid" => {
            let (a, b) = two("two parameters: the side lengths a and b")?;
            if a < 1 || b < 1 {
                return Err(CliError::input("grids need both sides >= 1"));
            }
            capped(a.saturating_mul(b))?;
            vec![generate::cartesian_product(
                &generate::path(a),
                &generate::path(b),
            )]
        }
        "house" => {
            none("")?;
            vec![generate::house()]
        }
        "double-diamond" => {
            none("")?;
            vec![generate::double_diamond()]
        }
        "census-connected" | "census-all" => {
            let max = one("one parameter: the largest order (at most 8)")?;
            if !(1..=8).contains(&max) {
                return Err(CliError::input(
                    "the census covers orders 1..=8; pick a bound in that range",
                ));
            }
            let mut out = Vec::new();
            for n in 1..=max {
                if args.family == "census-connected" {
                    out.extend(connected_graphs(n));
                } else {
                    out.extend(all_graphs(n));
                }
            }
            out
        }
        "trees" => {
            let max = one("one parameter: the largest order (at most 9)")?;
            if !(1..=9).contains(&max) {
                return Err(CliError::input(
                    "the tree census covers orders 1..=9; pick a bound in that range",
                ));
            }
            let mut out = Vec::new();
            for n in 1..=max {
                out.extend(all_trees(n));
            }
            out
        }
        other => {
            return Err(CliError::input(format!(
                "unknown family {other:?}; known: path, cycle, complete, edgeless, star, \
                 complete-bipartite, binary-tree, tdh, grid, house, double-diamond, \
                 census-connected, census-all, trees"
            )));
        }
    };

    for (i, g) in graphs.iter().enumerate() {
        if args.edgelist {
            if i > 0 {
                println!();
            }
            print!("{}", edgelist::format(g));
        } else {
            println!("{}", graph6::encode(g));
        }
    }
    Ok(())
}
