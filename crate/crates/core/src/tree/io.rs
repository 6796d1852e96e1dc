//! Plain-text tree format: the order on the first line, then one `u v` line
//! per edge with `u < v`.

use super::Tree;
use crate::error::{Error, Result};

pub fn write_tree(tree: &Tree) -> String {
    let mut out = format!("{}\n", tree.order());
    for &(u, v) in tree.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Blocks separated by a single blank line.
pub fn write_trees<'a>(trees: impl IntoIterator<Item = &'a Tree>) -> String {
    trees
        .into_iter()
        .map(write_tree)
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_block(lines: &[(usize, &str)]) -> Result<Tree> {
    let (first_no, first) = lines[0];
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| parse_err(first_no, format!("expected vertex count, got `{first}`")))?;
    let mut edges = Vec::with_capacity(lines.len() - 1);
    for &(no, line) in &lines[1..] {
        let mut parts = line.split_whitespace();
        let mut next = || -> Result<usize> {
            parts
                .next()
                .ok_or_else(|| parse_err(no, "expected `u v`"))?
                .parse()
                .map_err(|_| parse_err(no, format!("bad vertex in `{line}`")))
        };
        let (u, v) = (next()?, next()?);
        if parts.next().is_some() {
            return Err(parse_err(no, "trailing tokens"));
        }
        if u >= v {
            if u == v {
                return Err(Error::NotATree(format!("self-loop at vertex {u}")));
            }
            return Err(parse_err(no, format!("edge `{line}` must satisfy u < v")));
        }
        edges.push((u, v));
    }
    Tree::new(n, edges)
}

fn blocks(text: &str) -> Vec<Vec<(usize, &str)>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push((i + 1, line));
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut bs = blocks(text);
    match bs.len() {
        1 => parse_block(&bs.remove(0)),
        0 => Err(parse_err(1, "empty input")),
        _ => Err(parse_err(bs[1][0].0, "expected a single tree")),
    }
}

pub fn parse_trees(text: &str) -> Result<Vec<Tree>> {
    blocks(text).iter().map(|b| parse_block(b)).collect()
}
