//! `rainbow-order`: trees, edge flips and rainbow witness colorings from the
//! command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails (or a search finds
//! what it was looking for, see `search counterexample --help`), 2 on usage
//! and input errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (", env!("CARGO_PKG_NAME"), ")");

#[derive(Parser, Debug)]
#[command(name = "rainbow-order", version = VERSION, about, long_about = None)]
#[command(after_help = "Exit codes: 0 success, 1 verification failure, 2 usage or input error.")]
pub struct Cli {
    /// Print a JSON report on stdout instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; results do not depend on this.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate trees and build named families.
    #[command(subcommand)]
    Trees(TreesCmd),
    /// Edge-flip condition between two trees of the same order.
    #[command(subcommand)]
    Flip(FlipCmd),
    /// Compare the flip-condition pairs of one order with the family list.
    #[command(subcommand)]
    Thm1(Thm1Cmd),
    /// Exact rainbow subgraph search.
    #[command(subcommand)]
    Rainbow(RainbowCmd),
    /// Build and verify witness colorings.
    #[command(subcommand)]
    Witness(WitnessCmd),
    /// Check that four or more colors force a rainbow P4.
    #[command(subcommand)]
    Tw(TwCmd),
    /// Randomized search for refuting colorings.
    #[command(subcommand)]
    Search(SearchCmd),
}

#[derive(Subcommand, Debug)]
pub enum TreesCmd {
    /// All trees of one order, one per block, blocks separated by a blank line.
    Enum {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One family member, e.g. `F:3`, `B_star:2,2`, `spider:1,1,3`.
    Family {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum FlipCmd {
    /// For every edge of T2, look for a flip producing T1. Exit 1 if some edge has none.
    Check {
        #[arg(long)]
        t1: PathBuf,
        #[arg(long)]
        t2: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum Thm1Cmd {
    /// Exit 1 if the found pairs differ from the expected ones.
    Verify {
        #[arg(long)]
        order: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum RainbowCmd {
    /// Exit 1 if the coloring has no rainbow copy of the pattern.
    Find {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        /// Search node budget.
        #[arg(long, default_value_t = rainbow_order::rainbow::DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum WitnessCmd {
    /// Write a witness coloring to FILE.
    Build(BuildArgs),
    /// Check that a coloring uses exactly T colors, contains a rainbow T2 and
    /// has no rainbow T1. Exit 1 if any check fails.
    Verify {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        t1: PathBuf,
        #[arg(long)]
        t2: PathBuf,
        #[arg(long)]
        colors: usize,
    },
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    /// lemma1, star, fk or bstar.
    #[arg(long)]
    pub kind: String,
    /// Planted tree (lemma1).
    #[arg(long)]
    pub t2: Option<PathBuf>,
    /// Edge of T2 colored 1, as "u v" (lemma1).
    #[arg(long, conflicts_with = "f1_heuristic")]
    pub f1: Option<String>,
    /// Choose the color-1 edge automatically (lemma1).
    #[arg(long, value_parser = ["components"])]
    pub f1_heuristic: Option<String>,
    /// Family parameter (fk, bstar).
    #[arg(long)]
    pub k: Option<usize>,
    /// Number of colors.
    #[arg(long)]
    pub colors: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum TwCmd {
    /// Exhaustive over K4, or randomized over K_n. Exit 1 on a violation.
    Check {
        /// All colorings of K4 with at least four colors.
        #[arg(long, conflicts_with_all = ["order", "trials"])]
        exhaustive: bool,
        #[arg(long, required_unless_present = "exhaustive")]
        order: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum SearchCmd {
    /// Look for a coloring of K_n with at least T colors that has a rainbow
    /// T2 but no rainbow T1.
    ///
    /// Exit code 0 means nothing was found (which proves nothing); exit code 1
    /// means a verified counterexample was found and, with --out, written.
    Counterexample {
        #[arg(long)]
        t1: PathBuf,
        #[arg(long)]
        t2: PathBuf,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    Failure,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || commands::run(&cli);
    let result = match cli.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build()
            .map_err(anyhow::Error::from)
            .and_then(|pool| pool.install(run)),
        None => run(),
    };
    match result {
        Ok(Status::Success) => ExitCode::SUCCESS,
        Ok(Status::Failure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
