use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::json;

use rainbow_order::coloring::{parse_coloring, write_coloring, ColoredComplete};
use rainbow_order::enumerate::enumerate_trees;
use rainbow_order::flip::{satisfies_flip_condition, FlipTable};
use rainbow_order::harness::{counterexample_search, tw_exhaustive_k4, tw_randomized_trials};
use rainbow_order::rainbow::RainbowSearch;
use rainbow_order::tree::{canonical_code, parse_tree, write_tree, write_trees, FamilySpec, Tree};
use rainbow_order::witness::{
    components_f1, edge_order_with_first, verify_nonle, WitnessKind, WitnessSpec,
};
use rainbow_order::Execution;

use crate::{
    BuildArgs, Cli, Command, FlipCmd, RainbowCmd, SearchCmd, Status, Thm1Cmd, TreesCmd, TwCmd,
    WitnessCmd,
};

pub fn run(cli: &Cli) -> Result<Status> {
    let exec = match cli.jobs {
        Some(1) => Execution::Sequential,
        _ => Execution::Parallel,
    };
    let out = Output { json: cli.json };
    match &cli.command {
        Command::Trees(TreesCmd::Enum { order, out: file }) => {
            trees_enum(out, *order, file.as_deref())
        }
        Command::Trees(TreesCmd::Family { spec, out: file }) => {
            trees_family(out, spec, file.as_deref())
        }
        Command::Flip(FlipCmd::Check { t1, t2 }) => flip_check(out, t1, t2),
        Command::Thm1(Thm1Cmd::Verify { order }) => thm1_verify(out, *order, exec),
        Command::Rainbow(RainbowCmd::Find {
            coloring,
            pattern,
            budget,
        }) => rainbow_find(out, coloring, pattern, *budget),
        Command::Witness(WitnessCmd::Build(args)) => witness_build(out, args),
        Command::Witness(WitnessCmd::Verify {
            coloring,
            t1,
            t2,
            colors,
        }) => witness_verify(out, coloring, t1, t2, *colors),
        Command::Tw(TwCmd::Check {
            exhaustive,
            order,
            trials,
        }) => tw_check(out, *exhaustive, *order, *trials, cli.seed, exec),
        Command::Search(SearchCmd::Counterexample {
            t1,
            t2,
            order,
            colors,
            trials,
            out: file,
        }) => search_counterexample(
            out,
            t1,
            t2,
            *order,
            *colors,
            *trials,
            cli.seed,
            file.as_deref(),
        ),
    }
}

#[derive(Clone, Copy)]
struct Output {
    json: bool,
}

impl Output {
    /// Prints `value` as JSON, or `text()` otherwise.
    fn emit<T: Serialize>(self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value)?);
        } else {
            print!("{}", text());
        }
        Ok(())
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn read_tree(path: &Path) -> Result<Tree> {
    parse_tree(&read(path)?).with_context(|| format!("parsing tree {}", path.display()))
}

fn read_coloring(path: &Path) -> Result<ColoredComplete> {
    parse_coloring(&read(path)?).with_context(|| format!("parsing coloring {}", path.display()))
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Success
    } else {
        Status::Failure
    }
}

fn trees_enum(out: Output, order: usize, file: Option<&Path>) -> Result<Status> {
    let catalog = enumerate_trees(order)?;
    let text = write_trees(catalog.representatives());
    if let Some(file) = file {
        write(file, &text)?;
    }
    let codes: Vec<&str> = catalog.codes().map(|c| c.as_str()).collect();
    out.emit(
        &json!({ "order": order, "count": catalog.len(), "codes": codes }),
        || match file {
            Some(f) => format!(
                "{} trees of order {order} written to {}\n",
                catalog.len(),
                f.display()
            ),
            None => text.clone(),
        },
    )?;
    Ok(Status::Success)
}

fn trees_family(out: Output, spec: &str, file: Option<&Path>) -> Result<Status> {
    let spec: FamilySpec = spec.parse()?;
    let tree = spec.build()?;
    let text = write_tree(&tree);
    if let Some(file) = file {
        write(file, &text)?;
    }
    let code = canonical_code(&tree);
    out.emit(
        &json!({
            "spec": spec.to_string(),
            "order": tree.order(),
            "code": code,
            "degree_sequence": tree.degree_sequence().as_slice(),
            "edges": tree.edges(),
        }),
        || match file {
            Some(_) => format!("{code}\n"),
            None => text.clone(),
        },
    )?;
    Ok(Status::Success)
}

fn flip_check(out: Output, t1: &Path, t2: &Path) -> Result<Status> {
    let report = satisfies_flip_condition(&read_tree(t1)?, &read_tree(t2)?)?;
    out.emit(&report, || {
        let mut s = format!("T1 {}\nT2 {}\n", report.t1_code, report.t2_code);
        for f in &report.per_edge {
            let (u, v) = f.edge;
            match f.witness {
                Some((a, b)) => s += &format!("edge {u} {v}: add {a} {b}\n"),
                None => s += &format!("edge {u} {v}: no flip gives T1\n"),
            }
        }
        s += &format!("satisfied: {}\n", report.satisfied);
        s
    })?;
    Ok(status(report.satisfied))
}

fn thm1_verify(out: Output, order: usize, exec: Execution) -> Result<Status> {
    let table = FlipTable::build(order, exec)?;
    let report = rainbow_order::flip::classify(&table);
    out.emit(&report, || {
        let mut s = format!("order {order}: {} pairs found\n", report.found.len());
        for p in &report.found {
            s += &format!(
                "  {} [{}] <- {} [{}]\n",
                p.t1,
                p.t1_family.join(", "),
                p.t2,
                p.t2_family.join(", ")
            );
        }
        for (label, list) in [("extra", &report.extra), ("missing", &report.missing)] {
            for p in list {
                s += &format!("  {label}: {} <- {}\n", p.t1, p.t2);
            }
        }
        s += &format!("match: {}\n", report.matches);
        s
    })?;
    Ok(status(report.matches))
}

fn rainbow_find(out: Output, coloring: &Path, pattern: &Path, budget: u64) -> Result<Status> {
    let host = read_coloring(coloring)?;
    let pattern = read_tree(pattern)?;
    let outcome = RainbowSearch::new(&host)
        .with_budget(budget)
        .find(&pattern)?;
    let edges = outcome.embedding.as_ref().map(|e| {
        e.host_edges()
            .into_iter()
            .map(|(u, v)| (u, v, host.color(u, v)))
            .collect::<Vec<_>>()
    });
    out.emit(
        &json!({
            "found": outcome.embedding.is_some(),
            "embedding": outcome.embedding.as_ref().map(|e| &e.map),
            "edges": edges,
            "nodes_searched": outcome.nodes,
        }),
        || match &edges {
            Some(edges) => {
                let mut s = String::from("rainbow copy found\n");
                for (u, v, c) in edges {
                    s += &format!("{u} {v} {c}\n");
                }
                s
            }
            None => "no rainbow copy\n".to_string(),
        },
    )?;
    Ok(status(outcome.embedding.is_some()))
}

fn parse_edge(s: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    let [u, v] = parts.as_slice() else {
        bail!("expected an edge as \"u v\", got {s:?}");
    };
    let (u, v): (usize, usize) = (u.parse()?, v.parse()?);
    Ok((u.min(v), u.max(v)))
}

fn witness_spec(args: &BuildArgs) -> Result<WitnessSpec> {
    let kind: WitnessKind = args.kind.parse()?;
    let t = args.colors;
    let need_k = || {
        args.k
            .with_context(|| format!("--kind {} needs --k", kind.name()))
    };
    Ok(match kind {
        WitnessKind::Lemma1 => {
            let path = args.t2.as_deref().context("--kind lemma1 needs --t2")?;
            let t2 = read_tree(path)?;
            let f1 = match (&args.f1, &args.f1_heuristic) {
                (Some(f1), _) => parse_edge(f1)?,
                (None, Some(_)) => components_f1(&t2),
                (None, None) => bail!("--kind lemma1 needs --f1 or --f1-heuristic"),
            };
            let edge_order = edge_order_with_first(&t2, f1)?;
            WitnessSpec::Lemma1 { t2, edge_order, t }
        }
        WitnessKind::Star => WitnessSpec::Star { t },
        WitnessKind::Fk => WitnessSpec::Fk { k: need_k()?, t },
        WitnessKind::Bstar => WitnessSpec::Bstar { k: need_k()?, t },
    })
}

fn witness_build(out: Output, args: &BuildArgs) -> Result<Status> {
    let spec = witness_spec(args)?;
    let host = spec.build()?;
    write(&args.out, &write_coloring(&host)?)?;
    let target = canonical_code(&spec.target()?);
    let excluded = spec.excluded().map(|t| canonical_code(&t));
    out.emit(
        &json!({
            "witness": spec,
            "order": host.order(),
            "colors": host.num_colors(),
            "target": target,
            "excluded": excluded,
            "out": args.out.display().to_string(),
        }),
        || {
            format!(
                "{} witness on K_{} with {} colors written to {}\n",
                spec.kind().name(),
                host.order(),
                host.num_colors(),
                args.out.display()
            )
        },
    )?;
    Ok(Status::Success)
}

fn witness_verify(out: Output, coloring: &Path, t1: &Path, t2: &Path, t: usize) -> Result<Status> {
    let host = read_coloring(coloring)?;
    let report = verify_nonle(&host, &read_tree(t1)?, &read_tree(t2)?, t)?;
    out.emit(&report, || {
        format!(
            "exactly {t} colors: {}\ncontains rainbow T2: {}\nrainbow-T1-free: {}\nnodes searched: {}\n",
            report.color_count_ok, report.contains_target, report.free_of_pattern, report.nodes_searched
        )
    })?;
    Ok(status(report.all_ok()))
}

fn tw_check(
    out: Output,
    exhaustive: bool,
    order: Option<usize>,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<Status> {
    if exhaustive {
        let r = tw_exhaustive_k4()?;
        out.emit(
            &json!({
                "mode": "exhaustive",
                "order": 4,
                "partitions_checked": r.partitions_checked,
                "counterexamples": r.counterexamples,
                "passed": r.passed(),
            }),
            || {
                format!(
                    "{} colorings of K4 checked, {} without a rainbow P4\n",
                    r.partitions_checked, r.counterexamples
                )
            },
        )?;
        return Ok(status(r.passed()));
    }
    let n = order.context("--order is required without --exhaustive")?;
    let outcomes = tw_randomized_trials(n, trials, seed, exec)?;
    let violations: Vec<_> = outcomes.iter().filter(|o| o.violation).collect();
    out.emit(
        &json!({
            "mode": "randomized",
            "order": n,
            "trials": trials,
            "seed": seed,
            "violations": violations,
            "passed": violations.is_empty(),
        }),
        || {
            let mut s = format!(
                "{trials} colorings of K_{n} checked, {} violations\n",
                violations.len()
            );
            for v in &violations {
                s += &format!("  trial {} ({} colors)\n", v.trial, v.coloring_summary.1);
            }
            s
        },
    )?;
    Ok(status(violations.is_empty()))
}

#[allow(clippy::too_many_arguments)]
fn search_counterexample(
    out: Output,
    t1: &Path,
    t2: &Path,
    n: usize,
    t: usize,
    trials: u64,
    seed: u64,
    file: Option<&Path>,
) -> Result<Status> {
    let (t1, t2) = (read_tree(t1)?, read_tree(t2)?);
    let found = counterexample_search(&t1, &t2, n, t, trials, seed)?;
    if let (Some(c), Some(file)) = (&found, file) {
        write(file, &write_coloring(&c.coloring)?)?;
    }
    out.emit(
        &json!({
            "order": n,
            "colors": t,
            "trials": trials,
            "seed": seed,
            "found": found.is_some(),
            "trial": found.as_ref().map(|c| c.trial),
            "report": found.as_ref().map(|c| &c.report),
        }),
        || match &found {
            Some(c) => format!(
                "counterexample found at trial {} with {} colors\n",
                c.trial,
                c.coloring.num_colors()
            ),
            None => format!("nothing found in {trials} trials\n"),
        },
    )?;
    Ok(status(found.is_none()))
}
