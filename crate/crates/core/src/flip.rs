//! Edge flips `T - e + e'` and the "every edge can be flipped into T1"
//! condition, checked per pair and exhaustively per order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::enumerate::{enumerate_trees, TreeCatalog};
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::tree::{
    canonical_code, instances_of_order, norm, CanonicalCode, Edge, FamilySpec, Tree,
};

pub const MIN_THM_ORDER: usize = 5;
pub const MAX_THM_ORDER: usize = 12;

/// Reconnecting pairs for `e`: one endpoint on each side of `T - e`,
/// excluding `e` itself.
fn reconnections(tree: &Tree, e: Edge) -> Result<impl Iterator<Item = Edge>> {
    let e = norm(e.0, e.1);
    let side = tree.split(e)?;
    let (left, right): (Vec<usize>, Vec<usize>) = (0..tree.order()).partition(|&v| side[v]);
    Ok(left
        .into_iter()
        .flat_map(move |a| right.clone().into_iter().map(move |b| norm(a, b)))
        .filter(move |&p| p != e))
}

/// Canonical codes of every tree `T - e + e'`.
pub fn flip_results(tree: &Tree, e: Edge) -> Result<BTreeSet<CanonicalCode>> {
    let mut out = BTreeSet::new();
    for added in reconnections(tree, e)? {
        let flipped = tree.flip(e, added).expect("reconnecting pairs keep a tree");
        out.insert(canonical_code(&flipped));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeFlip {
    pub edge: Edge,
    /// An added edge `e'` with `T2 - edge + e'` isomorphic to T1, if any.
    pub witness: Option<Edge>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlipReport {
    pub t1_code: CanonicalCode,
    pub t2_code: CanonicalCode,
    pub per_edge: Vec<EdgeFlip>,
    pub satisfied: bool,
}

impl FlipReport {
    pub fn failing_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.per_edge
            .iter()
            .filter(|f| f.witness.is_none())
            .map(|f| f.edge)
    }

    /// Re-applies every recorded witness to `t2` and checks the result
    /// against `t1_code`.
    pub fn recheck(&self, t2: &Tree) -> bool {
        canonical_code(t2) == self.t2_code
            && self.satisfied == self.per_edge.iter().all(|f| f.witness.is_some())
            && self.per_edge.iter().all(|f| match f.witness {
                Some(added) => t2
                    .flip(f.edge, added)
                    .map(|t| canonical_code(&t) == self.t1_code)
                    .unwrap_or(false),
                None => true,
            })
    }
}

/// For every edge of `t2`, looks for a flip of that edge producing `t1`.
pub fn satisfies_flip_condition(t1: &Tree, t2: &Tree) -> Result<FlipReport> {
    if t1.order() != t2.order() {
        return Err(Error::OrderMismatch(t1.order(), t2.order()));
    }
    let t1_code = canonical_code(t1);
    let t1_ds = t1.degree_sequence();
    let mut per_edge = Vec::with_capacity(t2.edges().len());
    for &e in t2.edges() {
        let witness = reconnections(t2, e)?.find(|&added| {
            let flipped = t2.flip(e, added).expect("reconnecting pairs keep a tree");
            flipped.degree_sequence() == t1_ds && canonical_code(&flipped) == t1_code
        });
        per_edge.push(EdgeFlip { edge: e, witness });
    }
    let satisfied = per_edge.iter().all(|f| f.witness.is_some());
    Ok(FlipReport {
        t1_code,
        t2_code: canonical_code(t2),
        per_edge,
        satisfied,
    })
}

/// Ordered pair `(t1, t2)` of same-order trees; sorts by `(t2, t1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CodePair {
    pub t1: CanonicalCode,
    pub t2: CanonicalCode,
}

impl Ord for CodePair {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.t2, &self.t1).cmp(&(&other.t2, &other.t1))
    }
}

impl PartialOrd for CodePair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The ordered pairs of the characterization list that have order `n`,
/// collapsed to one entry per pair of canonical codes.
pub fn expected_pairs(n: usize) -> Vec<(FamilySpec, FamilySpec)> {
    let mut raw: Vec<(FamilySpec, FamilySpec)> = Vec::new();
    // (K_{1,k}^+, K_{1,k+1}), k >= 3: order k + 2.
    if n >= 5 {
        raw.push((FamilySpec::star_plus(n - 2), FamilySpec::star(n - 1)));
    }
    // (F'_{k-1}, F_{k-1}), k >= 3: order 3(k-1) + 1.
    if n >= 7 && (n - 1).is_multiple_of(3) {
        let m = (n - 1) / 3;
        raw.push((FamilySpec::f_prime(m), FamilySpec::f(m)));
    }
    // (B*_{k,k-2}, B*_{k-1,k-1}), k >= 3: order 2k + 1.
    if n >= 7 && n % 2 == 1 {
        let k = (n - 1) / 2;
        raw.push((
            FamilySpec::b_star(k, k - 2),
            FamilySpec::b_star(k - 1, k - 1),
        ));
    }
    match n {
        5 => raw.push((FamilySpec::star_plus(3), FamilySpec::path(5))),
        6 => raw.push((
            FamilySpec::spider(&[1, 1, 3]),
            FamilySpec::double_star(2, 2),
        )),
        7 => raw.push((FamilySpec::spider(&[1, 2, 3]), FamilySpec::path(7))),
        _ => {}
    }
    let mut seen = BTreeSet::new();
    raw.into_iter()
        .filter(|(a, b)| {
            let pair = CodePair {
                t1: canonical_code(&a.build().expect("valid family")),
                t2: canonical_code(&b.build().expect("valid family")),
            };
            seen.insert(pair)
        })
        .collect()
}

/// For every tree T2 of one order, the set of T1 codes such that each edge
/// of T2 has a flip producing T1.
#[derive(Clone, Debug)]
pub struct FlipTable {
    catalog: TreeCatalog,
    admitted: Vec<BTreeSet<CanonicalCode>>,
}

impl FlipTable {
    pub fn build(n: usize, exec: Execution) -> Result<Self> {
        check_order(n)?;
        let catalog = enumerate_trees(n)?;
        let admitted = par::map_slice(exec, catalog.entries(), |(_, t2)| {
            let mut common: Option<BTreeSet<CanonicalCode>> = None;
            for &e in t2.edges() {
                let reach = flip_results(t2, e).expect("catalog edges belong to the tree");
                common = Some(match common {
                    None => reach,
                    Some(c) => c.intersection(&reach).cloned().collect(),
                });
                if common.as_ref().is_some_and(BTreeSet::is_empty) {
                    break;
                }
            }
            common.unwrap_or_default()
        });
        Ok(FlipTable { catalog, admitted })
    }

    pub fn catalog(&self) -> &TreeCatalog {
        &self.catalog
    }

    /// All ordered pairs of distinct classes satisfying the flip condition.
    pub fn pairs(&self) -> Vec<CodePair> {
        let mut out: Vec<CodePair> = self
            .catalog
            .codes()
            .zip(&self.admitted)
            .flat_map(|(t2, admitted)| {
                admitted
                    .iter()
                    .filter(move |t1| *t1 != t2)
                    .map(move |t1| CodePair {
                        t1: t1.clone(),
                        t2: t2.clone(),
                    })
            })
            .collect();
        out.sort();
        out
    }
}

fn check_order(n: usize) -> Result<()> {
    if (MIN_THM_ORDER..=MAX_THM_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange {
            order: n,
            min: MIN_THM_ORDER,
            max: MAX_THM_ORDER,
        })
    }
}

/// A flip-condition pair with the family names it matches, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnnotatedPair {
    pub t1: CanonicalCode,
    pub t2: CanonicalCode,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub t1_family: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub t2_family: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairClassification {
    pub order: usize,
    pub found: Vec<AnnotatedPair>,
    pub expected: Vec<AnnotatedPair>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub extra: Vec<AnnotatedPair>,
    pub missing: Vec<AnnotatedPair>,
    /// Flip-condition pairs whose degree sequences coincide; reported, not classified.
    pub same_degree_sequence: Vec<AnnotatedPair>,
}

struct Annotator(BTreeMap<CanonicalCode, Vec<String>>);

impl Annotator {
    fn new(n: usize) -> Self {
        let mut names: BTreeMap<CanonicalCode, Vec<String>> = BTreeMap::new();
        for spec in instances_of_order(n) {
            let code = canonical_code(&spec.build().expect("valid family"));
            names.entry(code).or_default().push(spec.to_string());
        }
        Annotator(names)
    }

    fn annotate(&self, p: &CodePair) -> AnnotatedPair {
        let names = |c: &CanonicalCode| self.0.get(c).cloned().unwrap_or_default();
        AnnotatedPair {
            t1: p.t1.clone(),
            t2: p.t2.clone(),
            t1_family: names(&p.t1),
            t2_family: names(&p.t2),
        }
    }
}

/// Scans every ordered pair of order-`n` trees with different degree
/// sequences and compares the flip-condition pairs with [`expected_pairs`].
pub fn verify_thm1(n: usize) -> Result<PairClassification> {
    verify_thm1_with(n, Execution::default())
}

pub fn verify_thm1_with(n: usize, exec: Execution) -> Result<PairClassification> {
    let table = FlipTable::build(n, exec)?;
    Ok(classify(&table))
}

pub fn classify(table: &FlipTable) -> PairClassification {
    let n = table.catalog().order();
    let catalog = table.catalog();
    let ds = |c: &CanonicalCode| catalog.get(c).expect("catalog code").degree_sequence();
    let (found, same): (Vec<CodePair>, Vec<CodePair>) = table
        .pairs()
        .into_iter()
        .partition(|p| ds(&p.t1) != ds(&p.t2));
    let expected: BTreeSet<CodePair> = expected_pairs(n)
        .iter()
        .map(|(a, b)| CodePair {
            t1: canonical_code(&a.build().expect("valid family")),
            t2: canonical_code(&b.build().expect("valid family")),
        })
        .collect();
    let found_set: BTreeSet<CodePair> = found.iter().cloned().collect();
    let ann = Annotator::new(n);
    let list = |it: &mut dyn Iterator<Item = &CodePair>| it.map(|p| ann.annotate(p)).collect();
    PairClassification {
        order: n,
        found: list(&mut found_set.iter()),
        expected: list(&mut expected.iter()),
        matches: found_set == expected,
        extra: list(&mut found_set.difference(&expected)),
        missing: list(&mut expected.difference(&found_set)),
        same_degree_sequence: list(&mut same.iter()),
    }
}

/// True iff no pair with different degree sequences satisfies the flip
/// condition in both directions.
pub fn antisymmetry_check(n: usize) -> Result<bool> {
    let table = FlipTable::build(n, Execution::default())?;
    Ok(antisymmetric(&table))
}

pub fn antisymmetric(table: &FlipTable) -> bool {
    let catalog = table.catalog();
    let pairs: BTreeSet<CodePair> = table.pairs().into_iter().collect();
    pairs.iter().all(|p| {
        let ds1 = catalog.get(&p.t1).expect("catalog code").degree_sequence();
        let ds2 = catalog.get(&p.t2).expect("catalog code").degree_sequence();
        ds1 == ds2
            || !pairs.contains(&CodePair {
                t1: p.t2.clone(),
                t2: p.t1.clone(),
            })
    })
}
