//! Free trees on vertex set `0..n`, with the handful of structural queries
//! the flip and witness machinery needs.

mod canon;
mod family;
mod io;

pub use canon::{canonical_code, is_isomorphic, CanonicalCode};
pub use family::{instances_of_order, Family, FamilySpec};
pub use io::{parse_tree, parse_trees, write_tree, write_trees};

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with the smaller endpoint first.
pub type Edge = (usize, usize);

#[inline]
pub(crate) fn norm(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A validated free tree.
///
/// Edges keep the order they were given in (normalized so that `u < v`);
/// several witness constructions assign colors by edge index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({}, {:?})", self.order(), self.edges)
    }
}

impl Tree {
    /// Validates `edges` as a spanning tree of `0..order`.
    pub fn new(order: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotATree("order must be at least 1".into()));
        }
        let mut adj = vec![Vec::new(); order];
        let mut norm_edges = Vec::with_capacity(order - 1);
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::NotATree(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{order}"
                )));
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at vertex {u}")));
            }
            if adj[u].contains(&v) {
                return Err(Error::NotATree(format!("duplicate edge ({u}, {v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
            norm_edges.push(norm(u, v));
        }
        if norm_edges.len() != order - 1 {
            return Err(Error::NotATree(format!(
                "{} edges on {order} vertices, expected {}",
                norm_edges.len(),
                order - 1
            )));
        }
        let tree = Tree {
            edges: norm_edges,
            adj,
        };
        if tree.bfs_order(0).len() != order {
            return Err(Error::NotATree("graph is disconnected".into()));
        }
        Ok(tree)
    }

    /// Builds a tree from a parent array (`parent[0]` is ignored, every other
    /// vertex must point to a smaller index).
    pub(crate) fn from_parents(parents: &[usize]) -> Self {
        let edges = (1..parents.len()).map(|v| {
            debug_assert!(parents[v] < v);
            (parents[v], v)
        });
        Tree::new(parents.len(), edges).expect("parent arrays always describe trees")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(&v)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        DegreeSequence(d)
    }

    pub fn leaves(&self) -> Vec<usize> {
        self.degree_class(1)
    }

    /// Vertices of degree at least three.
    pub fn branches(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.degree(v) >= 3).collect()
    }

    /// Vertices of degree exactly `i`.
    pub fn degree_class(&self, i: usize) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.degree(v) == i).collect()
    }

    /// Breadth-first order from `root`, visiting neighbors in ascending label.
    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut order = Vec::with_capacity(self.order());
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            let mut nbrs = self.adj[u].clone();
            nbrs.sort_unstable();
            for w in nbrs {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    fn distances_from(&self, root: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> usize {
        let d0 = self.distances_from(0);
        let far = argmax(&d0);
        let d1 = self.distances_from(far);
        d1[argmax(&d1)]
    }

    /// The one or two center vertices, in ascending label order.
    pub fn centers(&self) -> Vec<usize> {
        let n = self.order();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                deg[leaf] = 0;
                for &w in &self.adj[leaf] {
                    if deg[w] > 0 {
                        deg[w] -= 1;
                        if deg[w] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    /// Marks the side of `T - e` that contains `e.0`.
    pub fn split(&self, e: Edge) -> Result<Vec<bool>> {
        let (a, b) = norm(e.0, e.1);
        if !self.has_edge(a, b) {
            return Err(Error::EdgeNotInTree(a, b));
        }
        let mut side = vec![false; self.order()];
        side[a] = true;
        let mut stack = vec![a];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !side[w] && !(u == a && w == b) {
                    side[w] = true;
                    stack.push(w);
                }
            }
        }
        Ok(side)
    }

    /// `T - removed + added`. Fails unless the result is again a tree.
    pub fn flip(&self, removed: Edge, added: Edge) -> Result<Tree> {
        let removed = norm(removed.0, removed.1);
        if !self.has_edge(removed.0, removed.1) {
            return Err(Error::EdgeNotInTree(removed.0, removed.1));
        }
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e != removed)
            .chain(std::iter::once(added));
        Tree::new(self.order(), edges)
    }

    /// Applies `perm` (old label -> new label) to every vertex.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tree> {
        if perm.len() != self.order() {
            return Err(Error::BadParam(format!(
                "permutation of length {} for a tree of order {}",
                perm.len(),
                self.order()
            )));
        }
        Tree::new(
            self.order(),
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }

    /// Relabels so that the first center is 0 and the rest follow in
    /// breadth-first order (neighbors by ascending old label).
    pub fn bfs_from_center(&self) -> Tree {
        let order = self.bfs_order(self.centers()[0]);
        let mut perm = vec![0; self.order()];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let relabeled = self.relabel(&perm).expect("bijection preserves trees");
        // Sort edges by child label so that the edge list reads as a parent array.
        let mut edges = relabeled.edges.clone();
        edges.sort_unstable_by_key(|&(u, v)| (v, u));
        Tree::new(self.order(), edges).expect("same edge set")
    }
}

fn argmax(xs: &[usize]) -> usize {
    let mut best = 0;
    for (i, &x) in xs.iter().enumerate() {
        if x > xs[best] {
            best = i;
        }
    }
    best
}

/// Degrees of a tree sorted in non-decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}
