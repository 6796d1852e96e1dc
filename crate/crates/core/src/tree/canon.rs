//! Center-rooted AHU encoding of free trees.
//!
//! Each rooted subtree is written as `(` followed by its children's codes in
//! sorted order and `)`. A free tree is rooted at its center; with two centers
//! the smaller of the two rooted codes is taken.

use std::fmt;

use serde::{Serialize, Serializer};

use super::Tree;

/// Relabeling-invariant code of a tree: equal codes iff isomorphic trees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Box<[u8]>);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("codes are ASCII parentheses")
    }

    /// Number of vertices of the encoded tree.
    pub fn order(&self) -> usize {
        self.0.len() / 2
    }

    /// Rebuilds a tree (labeled in preorder) from a code.
    pub fn to_tree(&self) -> Tree {
        let mut parents = Vec::with_capacity(self.order());
        let mut stack: Vec<usize> = Vec::new();
        for &b in self.0.iter() {
            if b == b'(' {
                let id = parents.len();
                parents.push(stack.last().copied().unwrap_or(0));
                stack.push(id);
            } else {
                stack.pop();
            }
        }
        Tree::from_parents(&parents)
    }

    pub fn parse(s: &str) -> Option<Self> {
        let mut depth = 0i64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => return None,
            }
            if depth < 0 || (depth == 0 && i + 1 != s.len()) {
                return None;
            }
        }
        if depth != 0 || s.is_empty() {
            return None;
        }
        let code = CanonicalCode(s.as_bytes().into());
        // Only accept strings that are already in canonical form.
        (canonical_code(&code.to_tree()) == code).then_some(code)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code({})", self.as_str())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

fn rooted_code(tree: &Tree, root: usize) -> Vec<u8> {
    let n = tree.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
    }
    let mut child_codes: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    let mut finished: Vec<u8> = Vec::new();
    for &u in order.iter().rev() {
        let mut kids = std::mem::take(&mut child_codes[u]);
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(b')');
        if u == root {
            finished = code;
        } else {
            child_codes[parent[u]].push(code);
        }
    }
    finished
}

pub fn canonical_code(tree: &Tree) -> CanonicalCode {
    let centers = tree.centers();
    let code = centers
        .iter()
        .map(|&c| rooted_code(tree, c))
        .min()
        .expect("every tree has a center");
    CanonicalCode(code.into_boxed_slice())
}

pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.order() == b.order()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_code(a) == canonical_code(b)
}
