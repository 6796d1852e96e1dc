//! One representative per isomorphism class of trees of a given order.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::tree::{canonical_code, CanonicalCode, Tree};

pub const MAX_ENUM_ORDER: usize = 16;
pub const MAX_PRUFER_ORDER: usize = 9;

/// All trees of one order up to isomorphism, sorted by canonical code.
#[derive(Clone, Debug)]
pub struct TreeCatalog {
    order: usize,
    entries: Vec<(CanonicalCode, Tree)>,
}

impl TreeCatalog {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn representatives(&self) -> impl Iterator<Item = &Tree> {
        self.entries.iter().map(|(_, t)| t)
    }

    pub fn codes(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.entries.iter().map(|(c, _)| c)
    }

    pub fn entries(&self) -> &[(CanonicalCode, Tree)] {
        &self.entries
    }

    pub fn get(&self, code: &CanonicalCode) -> Option<&Tree> {
        self.entries
            .binary_search_by(|(c, _)| c.cmp(code))
            .ok()
            .map(|i| &self.entries[i].1)
    }
}

/// Grows trees leaf by leaf, keeping one tree per new canonical code at each
/// order. Representatives are labeled center-first breadth-first.
pub fn enumerate_trees(n: usize) -> Result<TreeCatalog> {
    if !(1..=MAX_ENUM_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            order: n,
            min: 1,
            max: MAX_ENUM_ORDER,
        });
    }
    let mut level: Vec<Tree> = vec![Tree::new(1, []).expect("single vertex")];
    for order in 2..=n {
        let mut next: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
        for t in &level {
            for v in 0..t.order() {
                let grown = Tree::new(order, t.edges().iter().copied().chain([(v, order - 1)]))
                    .expect("adding a leaf keeps a tree");
                next.entry(canonical_code(&grown)).or_insert(grown);
            }
        }
        level = next.into_values().collect();
    }
    let mut entries: Vec<(CanonicalCode, Tree)> = level
        .into_iter()
        .map(|t| {
            let code = canonical_code(&t);
            let tidy = code.to_tree().bfs_from_center();
            (code, tidy)
        })
        .collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(TreeCatalog { order: n, entries })
}

/// Decodes a Prüfer sequence over `0..seq.len()+2` into its labeled tree.
pub fn prufer_decode(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::new(n, edges).expect("Prüfer sequences decode to trees")
}

/// Counts isomorphism classes by decoding all `n^(n-2)` labeled trees and
/// deduplicating their canonical codes. Shares nothing with
/// [`enumerate_trees`] beyond the code itself.
pub fn prufer_count_oracle(n: usize) -> Result<usize> {
    prufer_count_oracle_with(n, Execution::default())
}

pub fn prufer_count_oracle_with(n: usize, exec: Execution) -> Result<usize> {
    if !(2..=MAX_PRUFER_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            order: n,
            min: 2,
            max: MAX_PRUFER_ORDER,
        });
    }
    if n == 2 {
        return Ok(1);
    }
    let len = n - 2;
    // Split on the first symbol; each worker runs an odometer over the rest.
    let partial: Vec<HashSet<CanonicalCode>> = par::map_range(exec, 0..n as u64, |first| {
        let mut seen = HashSet::new();
        let mut seq = vec![0usize; len];
        seq[0] = first as usize;
        loop {
            seen.insert(canonical_code(&prufer_decode(&seq)));
            let mut i = len - 1;
            loop {
                if i == 0 {
                    return seen;
                }
                seq[i] += 1;
                if seq[i] < n {
                    break;
                }
                seq[i] = 0;
                i -= 1;
            }
        }
    });
    let mut all: HashSet<CanonicalCode> = HashSet::new();
    for part in partial {
        all.extend(part);
    }
    Ok(all.len())
}
