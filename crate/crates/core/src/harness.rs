//! Randomized and exhaustive harnesses around the rainbow search: the
//! four-color rainbow `P4` property, implication testing for `T1 <= T2`,
//! and a local search for refuting colorings.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coloring::{num_pairs, pairs, random_coloring_from, Color, ColoredComplete};
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::rainbow::RainbowSearch;
use crate::tree::{Edge, FamilySpec, Tree};
use crate::witness::{edge_order_with_first, verify_nonle, VerificationReport};

/// Generator for trial `i` of a run seeded with `seed`. Streams are
/// independent, so results do not depend on scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Restricted growth strings of length `m`: each set partition of `0..m`
/// exactly once, as block labels in order of first appearance.
pub fn set_partitions(m: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, blocks: usize, m: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == m {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=blocks {
            prefix.push(b);
            rec(prefix, blocks.max(b + 1), m, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(m), 0, m, &mut out);
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct ExhaustiveOutcome {
    pub partitions_checked: usize,
    pub counterexamples: usize,
}

impl ExhaustiveOutcome {
    pub fn passed(&self) -> bool {
        self.counterexamples == 0
    }
}

/// Every coloring of `K_4` with at least four colors, up to color names,
/// checked for a rainbow `P4`.
pub fn tw_exhaustive_k4() -> Result<ExhaustiveOutcome> {
    let edges: Vec<Edge> = pairs(4).collect();
    let p4 = FamilySpec::path(4).build()?;
    let mut checked = 0;
    let mut bad = 0;
    for labels in set_partitions(edges.len()) {
        let blocks = labels.iter().max().map_or(0, |b| b + 1);
        if blocks < 4 {
            continue;
        }
        checked += 1;
        let host = ColoredComplete::new(
            4,
            edges
                .iter()
                .zip(&labels)
                .map(|(&e, &b)| (e, b as Color + 1)),
        )?;
        match RainbowSearch::new(&host).find(&p4)?.embedding {
            Some(e) if e.is_valid_in(&host) => {}
            _ => bad += 1,
        }
    }
    Ok(ExhaustiveOutcome {
        partitions_checked: checked,
        counterexamples: bad,
    })
}

/// One trial of an implication check: does `premise` being present force
/// `forced` to be present?
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialOutcome {
    pub seed: u64,
    pub trial: u64,
    /// `(n, number of colors)` of the trial coloring.
    pub coloring_summary: (usize, usize),
    pub premise_held: bool,
    pub conclusion_held: bool,
    pub violation: bool,
}

/// Runs `trials` implication trials on colorings produced by `generate`.
pub fn implication_trials<G>(
    forced: &Tree,
    premise: &Tree,
    trials: u64,
    seed: u64,
    exec: Execution,
    generate: G,
) -> Result<Vec<TrialOutcome>>
where
    G: Fn(u64, &mut ChaCha8Rng) -> Result<ColoredComplete> + Sync + Send,
{
    par::map_range(exec, 0..trials, |trial| {
        let mut rng = trial_rng(seed, trial);
        let host = generate(trial, &mut rng)?;
        let search = RainbowSearch::new(&host);
        let premise_held = search.find(premise)?.embedding.is_some();
        let conclusion_held = search.find(forced)?.embedding.is_some();
        Ok(TrialOutcome {
            seed,
            trial,
            coloring_summary: (host.order(), host.num_colors()),
            premise_held,
            conclusion_held,
            violation: premise_held && !conclusion_held,
        })
    })
    .into_iter()
    .collect()
}

/// Random colorings of `K_n` with exactly `t` colors; a violation is a
/// coloring with a rainbow `premise` but no rainbow `forced`.
pub fn implication_test(
    forced: &Tree,
    premise: &Tree,
    n: usize,
    t: usize,
    trials: u64,
    seed: u64,
) -> Result<Vec<TrialOutcome>> {
    implication_test_with(forced, premise, n, t, trials, seed, Execution::default())
}

pub fn implication_test_with(
    forced: &Tree,
    premise: &Tree,
    n: usize,
    t: usize,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<Vec<TrialOutcome>> {
    if premise.order() > n || forced.order() > n {
        return Err(Error::PatternTooLarge {
            pattern: premise.order().max(forced.order()),
            host: n,
        });
    }
    implication_trials(forced, premise, trials, seed, exec, |_, rng| {
        random_coloring_from(n, t, rng)
    })
}

/// Color counts drawn for a four-color trial on `K_n`: `4..=min(C(n,2), 2n)`.
fn tw_color_range(n: usize) -> std::ops::RangeInclusive<usize> {
    4..=num_pairs(n).min(2 * n)
}

/// Random colorings of `K_n` with at least four colors, each checked for a
/// rainbow `P4`.
pub fn tw_randomized_trials(
    n: usize,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<Vec<TrialOutcome>> {
    if n < 4 {
        return Err(Error::BadParam(format!("need n >= 4, got {n}")));
    }
    let p4 = FamilySpec::path(4).build()?;
    let p1 = FamilySpec::path(1).build()?;
    // The premise (a single vertex) always holds, so a violation is a
    // coloring without a rainbow P4.
    implication_trials(&p4, &p1, trials, seed, exec, |_, rng| {
        let t = rng.gen_range(tw_color_range(n));
        random_coloring_from(n, t, rng)
    })
}

pub fn tw_randomized(n: usize, trials: u64, seed: u64) -> Result<bool> {
    Ok(tw_randomized_trials(n, trials, seed, Execution::default())?
        .iter()
        .all(|o| !o.violation))
}

/// A coloring found by [`counterexample_search`], with its verification.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub coloring: ColoredComplete,
    pub report: VerificationReport,
    pub trial: u64,
}

/// Steps of local recoloring per restart.
pub const LOCAL_STEPS: usize = 200;

/// `t2` planted rainbow on vertices `0..|t2|` with `f1` colored 1, the
/// remaining colors up to `t` on matched pairs of the other vertices and then
/// on random non-tree pairs; everything else colored 1.
fn planted_start(
    t2: &Tree,
    f1: Edge,
    n: usize,
    t: usize,
    rng: &mut ChaCha8Rng,
) -> Result<ColoredComplete> {
    let order = edge_order_with_first(t2, f1)?;
    let mut host = ColoredComplete::monochromatic(n, 1)?;
    for (i, &(u, v)) in order.iter().enumerate() {
        host.set_color(u, v, i as Color + 1);
    }
    let mut next = order.len() + 1;
    let mut y = t2.order();
    while next <= t && y + 1 < n {
        host.set_color(y, y + 1, next as Color);
        next += 1;
        y += 2;
    }
    if next <= t {
        let mut free: Vec<Edge> = pairs(n)
            .filter(|&(u, v)| host.color(u, v) == 1 && !order.contains(&(u, v)))
            .collect();
        free.shuffle(rng);
        for (u, v) in free.into_iter().take(t + 1 - next) {
            host.set_color(u, v, next as Color);
            next += 1;
        }
    }
    Ok(host)
}

/// One restart of the local search; returns the final coloring if it is a
/// verified refutation.
fn local_search(
    t1: &Tree,
    t2: &Tree,
    mut host: ColoredComplete,
    t: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Option<(ColoredComplete, VerificationReport)>> {
    for _ in 0..LOCAL_STEPS {
        if host.num_colors() < t {
            return Ok(None);
        }
        let copy = RainbowSearch::new(&host).find(t1)?.embedding;
        let Some(copy) = copy else {
            let report = verify_nonle(&host, t1, t2, host.num_colors())?;
            return Ok(report.all_ok().then_some((host, report)));
        };
        // Recolor one edge of the rainbow T1 copy to the color of an adjacent
        // copy edge, keeping at least t colors and some rainbow T2.
        let edges = copy.host_edges();
        let mut moves: Vec<(Edge, Color)> = Vec::new();
        for &a in &edges {
            for &b in &edges {
                if a != b && (a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1) {
                    moves.push((a, host.color(b.0, b.1)));
                }
            }
        }
        moves.shuffle(rng);
        let mut moved = false;
        for ((u, v), c) in moves {
            let old = host.color(u, v);
            host.set_color(u, v, c);
            if host.num_colors() >= t && RainbowSearch::new(&host).find(t2)?.embedding.is_some() {
                moved = true;
                break;
            }
            host.set_color(u, v, old);
        }
        if !moved {
            return Ok(None);
        }
    }
    Ok(None)
}

/// Looks for a coloring of `K_n` with at least `t` colors that has a
/// rainbow `t2` but no rainbow `t1`. Even trials start from `t2` planted
/// (cycling through its edges as the color-1 edge), odd trials from a random
/// coloring. Anything returned has passed [`verify_nonle`]; `None` proves
/// nothing.
pub fn counterexample_search(
    t1: &Tree,
    t2: &Tree,
    n: usize,
    t: usize,
    trials: u64,
    seed: u64,
) -> Result<Option<Counterexample>> {
    if t2.order() > n || t1.order() > n {
        return Err(Error::PatternTooLarge {
            pattern: t1.order().max(t2.order()),
            host: n,
        });
    }
    if t == 0 || t > num_pairs(n) {
        return Err(Error::TooManyColors {
            colors: t,
            edges: num_pairs(n),
        });
    }
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let start = if trial % 2 == 0 && !t2.edges().is_empty() {
            let edges = t2.edges();
            let f1 = edges[(trial / 2) as usize % edges.len()];
            planted_start(t2, f1, n, t, &mut rng)?
        } else {
            random_coloring_from(n, t, &mut rng)?
        };
        if let Some((coloring, report)) = local_search(t1, t2, start, t, &mut rng)? {
            return Ok(Some(Counterexample {
                coloring,
                report,
                trial,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::lemma1_witness;

    fn build(s: &str) -> Tree {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    /// Stirling numbers of the second kind by the usual recurrence.
    fn stirling2(n: usize, k: usize) -> usize {
        let mut s = vec![vec![0usize; k + 1]; n + 1];
        s[0][0] = 1;
        for i in 1..=n {
            for j in 1..=k.min(i) {
                s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
            }
        }
        s[n][k]
    }

    #[test]
    fn partitions_match_bell_and_stirling() {
        let parts = set_partitions(6);
        assert_eq!(parts.len(), 203);
        for k in 1..=6 {
            let count = parts
                .iter()
                .filter(|p| p.iter().max().unwrap() + 1 == k)
                .count();
            assert_eq!(count, stirling2(6, k));
        }
        let mut sorted = parts.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), parts.len());
    }

    #[test]
    fn k4_exhaustive() {
        let out = tw_exhaustive_k4().unwrap();
        assert_eq!(
            out.partitions_checked,
            stirling2(6, 4) + stirling2(6, 5) + stirling2(6, 6)
        );
        assert!(out.passed());
    }

    #[test]
    fn tw_small_runs() {
        assert!(tw_randomized(4, 100, 7).unwrap());
        assert!(tw_randomized(6, 50, 1).unwrap());
        assert!(tw_randomized(3, 1, 1).is_err());
    }

    #[test]
    fn trials_are_schedule_independent() {
        let s113 = build("spider:1,1,3");
        let b = build("double_star:2,2");
        let seq = implication_test_with(&s113, &b, 9, 12, 40, 3, Execution::Sequential).unwrap();
        let par = implication_test_with(&s113, &b, 9, 12, 40, 3, Execution::Parallel).unwrap();
        assert_eq!(seq, par);
        assert!(seq
            .iter()
            .all(|o| o.violation == (o.premise_held && !o.conclusion_held)));
    }

    #[test]
    fn detector_sees_lemma1_witness() {
        let p5 = build("path:5");
        let k14 = build("star:4");
        let order = edge_order_with_first(&p5, (0, 1)).unwrap();
        let out = implication_trials(&k14, &p5, 1, 0, Execution::Sequential, |_, _| {
            lemma1_witness(&p5, &order, 6)
        })
        .unwrap();
        assert!(out[0].violation);
        assert_eq!(out[0].coloring_summary, (9, 6));
    }

    #[test]
    fn search_finds_planted_witness() {
        let found = counterexample_search(&build("star:4"), &build("path:5"), 9, 6, 1, 0)
            .unwrap()
            .expect("planted start is already a witness");
        assert!(found.report.all_ok());
        assert_eq!(found.coloring.num_colors(), 6);
    }

    #[test]
    fn search_cannot_separate_a_tree_from_itself() {
        let p3 = build("path:3");
        assert!(counterexample_search(&p3, &p3, 6, 4, 6, 9)
            .unwrap()
            .is_none());
    }
}
