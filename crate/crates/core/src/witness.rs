//! Explicit colorings that refute `T1 <= T2` at a fixed number of colors.
//!
//! All builders share one layout: the planted rainbow copy of the target
//! tree occupies host vertices `0..|X|` with the tree's own labels, followed
//! by matched pairs `y_j, z_j` (interleaved) whose edge gets the private
//! color `j`. Every other pair gets color 1 unless the construction says
//! otherwise. Raising `t` only appends matched pairs, so a witness for `t`
//! is the restriction of the witness for any larger `t`.

use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::coloring::{Color, ColoredComplete};
use crate::error::{Error, Result};
use crate::rainbow::{RainbowEmbedding, RainbowSearch};
use crate::tree::{norm, Edge, FamilySpec, Tree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Lemma1,
    Star,
    Fk,
    Bstar,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::Lemma1 => "lemma1",
            WitnessKind::Star => "star",
            WitnessKind::Fk => "fk",
            WitnessKind::Bstar => "bstar",
        }
    }
}

impl std::str::FromStr for WitnessKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemma1" => Ok(WitnessKind::Lemma1),
            "star" => Ok(WitnessKind::Star),
            "fk" => Ok(WitnessKind::Fk),
            "bstar" => Ok(WitnessKind::Bstar),
            other => Err(Error::BadParam(format!("unknown witness kind `{other}`"))),
        }
    }
}

/// A witness construction with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessSpec {
    /// Planted `t2` whose `i`-th edge in `edge_order` gets color `i`.
    Lemma1 {
        t2: Tree,
        edge_order: Vec<Edge>,
        t: usize,
    },
    /// A vertex joined to `t` others by distinct colors, all else color 1.
    Star { t: usize },
    /// Planted `F_k`, plus two color-2 chords from its center.
    Fk { k: usize, t: usize },
    /// Planted `B*_{k-1,k-1}`, plus color 2 on the non-tree pairs at `w`.
    Bstar { k: usize, t: usize },
}

impl WitnessSpec {
    pub fn kind(&self) -> WitnessKind {
        match self {
            WitnessSpec::Lemma1 { .. } => WitnessKind::Lemma1,
            WitnessSpec::Star { .. } => WitnessKind::Star,
            WitnessSpec::Fk { .. } => WitnessKind::Fk,
            WitnessSpec::Bstar { .. } => WitnessKind::Bstar,
        }
    }

    pub fn t(&self) -> usize {
        match *self {
            WitnessSpec::Lemma1 { t, .. }
            | WitnessSpec::Star { t }
            | WitnessSpec::Fk { t, .. }
            | WitnessSpec::Bstar { t, .. } => t,
        }
    }

    /// Smallest admissible color count.
    pub fn min_colors(&self) -> usize {
        match *self {
            WitnessSpec::Lemma1 { ref t2, .. } => t2.order(),
            WitnessSpec::Star { .. } => 3,
            WitnessSpec::Fk { k, .. } => 3 * k + 1,
            WitnessSpec::Bstar { k, .. } => 2 * k + 2,
        }
    }

    /// The tree planted as a rainbow copy.
    pub fn target(&self) -> Result<Tree> {
        match *self {
            WitnessSpec::Lemma1 { ref t2, .. } => Ok(t2.clone()),
            WitnessSpec::Star { t } => FamilySpec::star(t).build(),
            WitnessSpec::Fk { k, .. } => FamilySpec::new(crate::tree::Family::F, [k])?.build(),
            WitnessSpec::Bstar { k, .. } => {
                FamilySpec::new(crate::tree::Family::BStar, [k - 1, k - 1])?.build()
            }
        }
    }

    /// The tree the construction is designed to exclude, where fixed.
    pub fn excluded(&self) -> Option<Tree> {
        match *self {
            WitnessSpec::Lemma1 { .. } => None,
            WitnessSpec::Star { .. } => Some(FamilySpec::path(5).build().ok()?),
            WitnessSpec::Fk { k, .. } => Some(FamilySpec::f_prime(k).build().ok()?),
            WitnessSpec::Bstar { k, .. } => Some(FamilySpec::b_star(k, k - 2).build().ok()?),
        }
    }

    pub fn build(&self) -> Result<ColoredComplete> {
        match *self {
            WitnessSpec::Lemma1 {
                ref t2,
                ref edge_order,
                t,
            } => lemma1_witness(t2, edge_order, t),
            WitnessSpec::Star { t } => star_witness(t),
            WitnessSpec::Fk { k, t } => fk_witness(k, t),
            WitnessSpec::Bstar { k, t } => bstar_witness(k, t),
        }
    }
}

impl Serialize for WitnessSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("kind", self.kind().name())?;
        m.serialize_entry("t", &self.t())?;
        match self {
            WitnessSpec::Fk { k, .. } | WitnessSpec::Bstar { k, .. } => {
                m.serialize_entry("k", k)?
            }
            WitnessSpec::Lemma1 { edge_order, .. } => {
                m.serialize_entry("edge_order", edge_order)?
            }
            WitnessSpec::Star { .. } => {}
        }
        m.end()
    }
}

fn check_budget(t: usize, min: usize) -> Result<()> {
    if t < min {
        Err(Error::BadColorBudget { t, min })
    } else {
        Ok(())
    }
}

/// Host with `x` planted vertices and matched pairs for colors `first..=t`.
fn layout(x: usize, first: usize, t: usize, special: &[(Edge, Color)]) -> Result<ColoredComplete> {
    let pairs = (t + 1).saturating_sub(first);
    let n = x + 2 * pairs;
    let mut host = ColoredComplete::monochromatic(n, 1)?;
    for (j, c) in (first..=t).enumerate() {
        host.set_color(x + 2 * j, x + 2 * j + 1, c as Color);
    }
    for &((u, v), c) in special {
        host.set_color(u, v, c);
    }
    Ok(host)
}

/// Puts `f1` first and keeps the remaining edges of `tree` in their order.
pub fn edge_order_with_first(tree: &Tree, f1: Edge) -> Result<Vec<Edge>> {
    let f1 = norm(f1.0, f1.1);
    if !tree.has_edge(f1.0, f1.1) {
        return Err(Error::EdgeNotInTree(f1.0, f1.1));
    }
    Ok(std::iter::once(f1)
        .chain(tree.edges().iter().copied().filter(|&e| e != f1))
        .collect())
}

/// First edge whose removal leaves two components of order at least two,
/// falling back to the first edge (stars have no such edge).
pub fn components_f1(tree: &Tree) -> Edge {
    tree.edges()
        .iter()
        .copied()
        .find(|&e| {
            let side = tree.split(e).expect("own edge");
            let left = side.iter().filter(|&&s| s).count();
            left >= 2 && tree.order() - left >= 2
        })
        .unwrap_or(tree.edges()[0])
}

pub fn lemma1_witness(t2: &Tree, edge_order: &[Edge], t: usize) -> Result<ColoredComplete> {
    let n = t2.order();
    check_budget(t, n)?;
    let mut order: Vec<Edge> = edge_order.iter().map(|&(u, v)| norm(u, v)).collect();
    let given = order.clone();
    order.sort_unstable();
    order.dedup();
    let mut own: Vec<Edge> = t2.edges().to_vec();
    own.sort_unstable();
    if order != own || given.len() != own.len() {
        return Err(Error::BadEdgeOrder(
            "edge order must list every tree edge exactly once".into(),
        ));
    }
    let special: Vec<(Edge, Color)> = given
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i as Color + 1))
        .collect();
    layout(n, n, t, &special)
}

pub fn star_witness(t: usize) -> Result<ColoredComplete> {
    check_budget(t, 3)?;
    let special: Vec<(Edge, Color)> = (1..=t).map(|i| ((0, i), i as Color)).collect();
    layout(t + 1, t + 1, t, &special)
}

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        Err(Error::BadParam(format!("k must be at least 3, got {k}")))
    } else {
        Ok(())
    }
}

fn sorted_neighbors(tree: &Tree, v: usize) -> Vec<usize> {
    let mut n = tree.neighbors(v).to_vec();
    n.sort_unstable();
    n
}

/// Edge colors `1..` for `first` followed by the remaining tree edges.
fn numbered(tree: &Tree, first: &[Edge]) -> Vec<(Edge, Color)> {
    first
        .iter()
        .copied()
        .chain(tree.edges().iter().copied().filter(|e| !first.contains(e)))
        .enumerate()
        .map(|(i, e)| (e, i as Color + 1))
        .collect()
}

pub fn fk_witness(k: usize, t: usize) -> Result<ColoredComplete> {
    check_k(k)?;
    check_budget(t, 3 * k + 1)?;
    let f = FamilySpec::f(k).build()?;
    let u = 0;
    let nbrs = sorted_neighbors(&f, u);
    let (v1, v2) = (nbrs[0], nbrs[1]);
    let mut special = numbered(&f, &[norm(u, v1), norm(u, v2)]);
    for l in sorted_neighbors(&f, v1).into_iter().filter(|&l| l != u) {
        special.push((norm(u, l), 2));
    }
    layout(3 * k + 1, 3 * k + 1, t, &special)
}

pub fn bstar_witness(k: usize, t: usize) -> Result<ColoredComplete> {
    check_k(k)?;
    check_budget(t, 2 * k + 2)?;
    let b = FamilySpec::b_star(k - 1, k - 1).build()?;
    let v = 0;
    let nbrs = sorted_neighbors(&b, v);
    let (u, w) = (nbrs[0], nbrs[1]);
    let mut special = numbered(&b, &[norm(u, v), norm(v, w)]);
    let pairs = t - 2 * k;
    let n = 2 * k + 1 + 2 * pairs;
    for x in 0..n {
        if x != w && x != u && !b.has_edge(w, x) {
            special.push((norm(w, x), 2));
        }
    }
    layout(2 * k + 1, 2 * k + 1, t, &special)
}

/// Outcome of checking that a coloring refutes `T1 <= T2` at `t` colors.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub witness: Option<WitnessSpec>,
    pub t: usize,
    pub color_count_ok: bool,
    pub contains_target: bool,
    pub free_of_pattern: bool,
    /// Rainbow copy of T2, when one was found.
    pub embedding: Option<RainbowEmbedding>,
    pub elapsed: Duration,
    pub nodes_searched: u64,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.color_count_ok && self.contains_target && self.free_of_pattern
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("kind", &self.witness.as_ref().map(|w| w.kind().name()))?;
        if let Some(WitnessSpec::Fk { k, .. } | WitnessSpec::Bstar { k, .. }) = &self.witness {
            m.serialize_entry("k", k)?;
        }
        m.serialize_entry("t", &self.t)?;
        m.serialize_entry("color_count_ok", &self.color_count_ok)?;
        m.serialize_entry("contains_target", &self.contains_target)?;
        m.serialize_entry("free_of_pattern", &self.free_of_pattern)?;
        m.serialize_entry("embedding", &self.embedding.as_ref().map(|e| &e.map))?;
        m.serialize_entry("elapsed_ms", &(self.elapsed.as_secs_f64() * 1e3))?;
        m.serialize_entry("nodes_searched", &self.nodes_searched)?;
        m.end()
    }
}

/// Checks that `host` uses exactly `t` colors, contains a rainbow `t2` and
/// has no rainbow `t1`.
pub fn verify_nonle(
    host: &ColoredComplete,
    t1: &Tree,
    t2: &Tree,
    t: usize,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let search = RainbowSearch::new(host);
    let target = search.find(t2)?;
    let pattern = search.find(t1)?;
    Ok(VerificationReport {
        witness: None,
        t,
        color_count_ok: host.num_colors() == t,
        contains_target: target.embedding.is_some(),
        free_of_pattern: pattern.embedding.is_none(),
        embedding: target.embedding,
        elapsed: start.elapsed(),
        nodes_searched: target.nodes + pattern.nodes,
    })
}

/// Builds `spec` and verifies it against its own target and `excluded`.
pub fn verify_witness(spec: &WitnessSpec, excluded: &Tree) -> Result<VerificationReport> {
    let host = spec.build()?;
    let mut report = verify_nonle(&host, excluded, &spec.target()?, spec.t())?;
    report.witness = Some(spec.clone());
    Ok(report)
}
