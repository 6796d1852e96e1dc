//! Exact search for rainbow copies of a tree in an edge-colored complete graph.
//!
//! The pattern is rooted at a maximum-degree vertex and laid out
//! breadth-first with larger subtrees first; each pattern vertex is placed on
//! an unused host vertex whose edge to the parent's image carries an unused
//! color. A host vertex is only tried for a pattern vertex with `d` children
//! if it still sees `d` distinct unused colors towards unused vertices.

use serde::Serialize;

use crate::coloring::ColoredComplete;
use crate::error::{Error, Result};
use crate::tree::Tree;

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// An injective map from pattern vertices into host vertices whose image
/// edges have pairwise distinct colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RainbowEmbedding {
    #[serde(skip)]
    pub pattern: Tree,
    /// `map[p]` is the host vertex of pattern vertex `p`.
    pub map: Vec<usize>,
}

impl RainbowEmbedding {
    /// Re-checks injectivity and color distinctness against `host`.
    pub fn is_valid_in(&self, host: &ColoredComplete) -> bool {
        if self.map.len() != self.pattern.order() {
            return false;
        }
        let mut used = vec![false; host.order()];
        for &h in &self.map {
            if h >= host.order() || used[h] {
                return false;
            }
            used[h] = true;
        }
        let mut colors: Vec<_> = self
            .pattern
            .edges()
            .iter()
            .map(|&(a, b)| host.color(self.map[a], self.map[b]))
            .collect();
        colors.sort_unstable();
        colors.windows(2).all(|w| w[0] != w[1])
    }

    /// Host edges of the image, in pattern edge order.
    pub fn host_edges(&self) -> Vec<(usize, usize)> {
        self.pattern
            .edges()
            .iter()
            .map(|&(a, b)| crate::tree::norm(self.map[a], self.map[b]))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub embedding: Option<RainbowEmbedding>,
    pub nodes: u64,
}

/// Placement order for the pattern.
struct Plan {
    /// Pattern vertex placed at each step.
    vertex: Vec<usize>,
    /// Step index of the parent (unused for step 0).
    parent_step: Vec<usize>,
    children: Vec<usize>,
}

impl Plan {
    fn new(pattern: &Tree) -> Self {
        let n = pattern.order();
        let root = (0..n)
            .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))
            .expect("non-empty pattern");
        // Subtree sizes for the rooting at `root`.
        let mut parent = vec![usize::MAX; n];
        let mut order = vec![root];
        parent[root] = root;
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in pattern.neighbors(u) {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
        let mut size = vec![1usize; n];
        for &u in order.iter().skip(1).rev() {
            size[parent[u]] += size[u];
        }
        let kids = |u: usize| {
            let mut k: Vec<usize> = pattern
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&w| w != root && parent[w] == u)
                .collect();
            k.sort_by_key(|&w| (std::cmp::Reverse(size[w]), w));
            k
        };
        let mut vertex = vec![root];
        let mut parent_step = vec![0];
        let mut children = Vec::with_capacity(n);
        let mut step = 0;
        while step < vertex.len() {
            let u = vertex[step];
            let k = kids(u);
            children.push(k.len());
            for w in k {
                vertex.push(w);
                parent_step.push(step);
            }
            step += 1;
        }
        Plan {
            vertex,
            parent_step,
            children,
        }
    }
}

/// Rainbow subtree search over one host coloring.
pub struct RainbowSearch<'a> {
    host: &'a ColoredComplete,
    n: usize,
    /// Dense color index per host pair, row-major.
    dense: Vec<u32>,
    palette_len: usize,
    budget: u64,
}

struct State<'p> {
    plan: &'p Plan,
    map: Vec<usize>,
    host_used: Vec<bool>,
    color_used: Vec<bool>,
    stamp: Vec<u64>,
    epoch: u64,
    nodes: u64,
}

impl<'a> RainbowSearch<'a> {
    pub fn new(host: &'a ColoredComplete) -> Self {
        let palette = host.palette();
        let n = host.order();
        let mut dense = vec![u32::MAX; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    let c = host.color(u, v);
                    dense[u * n + v] = palette.binary_search(&c).expect("palette color") as u32;
                }
            }
        }
        RainbowSearch {
            host,
            n,
            dense,
            palette_len: palette.len(),
            budget: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn find(&self, pattern: &Tree) -> Result<SearchOutcome> {
        if pattern.order() > self.n {
            return Err(Error::PatternTooLarge {
                pattern: pattern.order(),
                host: self.n,
            });
        }
        let plan = Plan::new(pattern);
        let mut st = State {
            plan: &plan,
            map: vec![usize::MAX; pattern.order()],
            host_used: vec![false; self.n],
            color_used: vec![false; self.palette_len],
            stamp: vec![0; self.palette_len],
            epoch: 0,
            nodes: 0,
        };
        let found = self.extend(&mut st, 0)?;
        let embedding = found.then(|| {
            let mut map = vec![0; pattern.order()];
            for (step, &p) in plan.vertex.iter().enumerate() {
                map[p] = st.map[step];
            }
            let e = RainbowEmbedding {
                pattern: pattern.clone(),
                map,
            };
            assert!(
                e.is_valid_in(self.host),
                "search produced an invalid embedding"
            );
            e
        });
        Ok(SearchOutcome {
            embedding,
            nodes: st.nodes,
        })
    }

    #[inline]
    fn dense(&self, u: usize, v: usize) -> usize {
        self.dense[u * self.n + v] as usize
    }

    /// Whether `v` still sees `need` distinct unused colors towards unused vertices.
    fn has_room(&self, st: &mut State<'_>, v: usize, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        st.epoch += 1;
        let mut seen = 0;
        for w in 0..self.n {
            if w == v || st.host_used[w] {
                continue;
            }
            let c = self.dense(v, w);
            if !st.color_used[c] && st.stamp[c] != st.epoch {
                st.stamp[c] = st.epoch;
                seen += 1;
                if seen >= need {
                    return true;
                }
            }
        }
        false
    }

    fn extend(&self, st: &mut State<'_>, step: usize) -> Result<bool> {
        if step == st.plan.vertex.len() {
            return Ok(true);
        }
        let need = st.plan.children[step];
        for v in 0..self.n {
            if st.host_used[v] {
                continue;
            }
            let color = if step == 0 {
                None
            } else {
                let c = self.dense(st.map[st.plan.parent_step[step]], v);
                if st.color_used[c] {
                    continue;
                }
                Some(c)
            };
            st.nodes += 1;
            if st.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            st.host_used[v] = true;
            if let Some(c) = color {
                st.color_used[c] = true;
            }
            if self.has_room(st, v, need) {
                st.map[step] = v;
                if self.extend(st, step + 1)? {
                    return Ok(true);
                }
            }
            st.host_used[v] = false;
            if let Some(c) = color {
                st.color_used[c] = false;
            }
        }
        Ok(false)
    }
}

pub fn find_rainbow(host: &ColoredComplete, pattern: &Tree) -> Result<Option<RainbowEmbedding>> {
    Ok(RainbowSearch::new(host).find(pattern)?.embedding)
}

pub fn is_rainbow_free(host: &ColoredComplete, pattern: &Tree) -> Result<bool> {
    Ok(find_rainbow(host, pattern)?.is_none())
}
