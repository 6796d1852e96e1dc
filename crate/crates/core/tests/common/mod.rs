#![allow(dead_code)]

use rainbow_order::coloring::ColoredComplete;
use rainbow_order::tree::{FamilySpec, Tree};

pub fn family(s: &str) -> Tree {
    s.parse::<FamilySpec>().unwrap().build().unwrap()
}

/// Every injective map of `pattern` into `host`, checked for distinct colors.
pub fn rainbow_by_enumeration(host: &ColoredComplete, pattern: &Tree) -> bool {
    fn rec(
        host: &ColoredComplete,
        pattern: &Tree,
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        if map.len() == pattern.order() {
            let mut colors: Vec<u32> = pattern
                .edges()
                .iter()
                .map(|&(a, b)| host.color(map[a], map[b]))
                .collect();
            colors.sort_unstable();
            return colors.windows(2).all(|w| w[0] != w[1]);
        }
        for h in 0..host.order() {
            if !used[h] {
                used[h] = true;
                map.push(h);
                let hit = rec(host, pattern, map, used);
                map.pop();
                used[h] = false;
                if hit {
                    return true;
                }
            }
        }
        false
    }
    rec(
        host,
        pattern,
        &mut Vec::new(),
        &mut vec![false; host.order()],
    )
}

/// Plain backtracking in label order: vertex `p` is placed next to an already
/// placed neighbor, with only the color-distinctness check.
pub fn rainbow_by_plain_backtracking(host: &ColoredComplete, pattern: &Tree) -> bool {
    let order = pattern.bfs_order(0);
    let mut anchor = vec![usize::MAX; pattern.order()];
    for (i, &p) in order.iter().enumerate() {
        anchor[p] = order[..i]
            .iter()
            .copied()
            .find(|&q| pattern.has_edge(p, q))
            .unwrap_or(usize::MAX);
    }
    fn rec(
        host: &ColoredComplete,
        order: &[usize],
        anchor: &[usize],
        i: usize,
        map: &mut [usize],
        used: &mut [bool],
        colors: &mut Vec<u32>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let p = order[i];
        for h in 0..host.order() {
            if used[h] {
                continue;
            }
            let c = (i > 0).then(|| host.color(map[anchor[p]], h));
            if let Some(c) = c {
                if colors.contains(&c) {
                    continue;
                }
                colors.push(c);
            }
            used[h] = true;
            map[p] = h;
            if rec(host, order, anchor, i + 1, map, used, colors) {
                return true;
            }
            used[h] = false;
            if c.is_some() {
                colors.pop();
            }
        }
        false
    }
    let mut map = vec![0; pattern.order()];
    rec(
        host,
        &order,
        &anchor,
        0,
        &mut map,
        &mut vec![false; host.order()],
        &mut Vec::new(),
    )
}
