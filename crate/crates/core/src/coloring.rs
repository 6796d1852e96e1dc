//! Complete graphs with a total edge coloring.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::tree::{norm, Edge};

pub type Color = u32;

/// `K_n` with every unordered pair colored by a positive integer.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredComplete {
    n: usize,
    /// Row-major `n x n`, symmetric, zero on the diagonal.
    colors: Vec<Color>,
}

impl std::fmt::Debug for ColoredComplete {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ColoredComplete(n = {}, colors = {})",
            self.n,
            self.num_colors()
        )
    }
}

pub fn num_pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl ColoredComplete {
    /// Validates that `assignment` colors every pair exactly once.
    pub fn new(n: usize, assignment: impl IntoIterator<Item = (Edge, Color)>) -> Result<Self> {
        let mut colors = vec![0; n * n];
        let mut assigned = 0usize;
        for ((u, v), c) in assignment {
            if u >= n || v >= n || u == v {
                return Err(Error::IncompleteAssignment(format!(
                    "({u}, {v}) is not a pair of distinct vertices below {n}"
                )));
            }
            if c == 0 {
                return Err(Error::BadColor(format!("pair ({u}, {v}) has color 0")));
            }
            if colors[u * n + v] != 0 {
                return Err(Error::IncompleteAssignment(format!(
                    "pair ({u}, {v}) colored twice"
                )));
            }
            colors[u * n + v] = c;
            colors[v * n + u] = c;
            assigned += 1;
        }
        if assigned != num_pairs(n) {
            return Err(Error::IncompleteAssignment(format!(
                "{assigned} of {} pairs colored",
                num_pairs(n)
            )));
        }
        Ok(ColoredComplete { n, colors })
    }

    /// Every pair colored `c`.
    pub fn monochromatic(n: usize, c: Color) -> Result<Self> {
        Self::new(n, pairs(n).map(|p| (p, c)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        self.colors[u * self.n + v]
    }

    pub(crate) fn set_color(&mut self, u: usize, v: usize, c: Color) {
        debug_assert!(u != v && c > 0);
        self.colors[u * self.n + v] = c;
        self.colors[v * self.n + u] = c;
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        pairs(self.n).map(|(u, v)| ((u, v), self.color(u, v)))
    }

    /// Sorted set of colors in use.
    pub fn palette(&self) -> Vec<Color> {
        let set: BTreeSet<Color> = self.pairs().map(|(_, c)| c).collect();
        set.into_iter().collect()
    }

    pub fn num_colors(&self) -> usize {
        self.palette().len()
    }

    /// Distinct colors on the edges at `v`.
    pub fn color_degree(&self, v: usize) -> usize {
        let set: BTreeSet<Color> = (0..self.n)
            .filter(|&w| w != v)
            .map(|w| self.color(v, w))
            .collect();
        set.len()
    }

    /// Renames colors through `f`; `f` should be injective on the palette.
    pub fn map_colors(&self, mut f: impl FnMut(Color) -> Color) -> Result<Self> {
        Self::new(
            self.n,
            self.pairs().map(|(p, c)| (p, f(c))).collect::<Vec<_>>(),
        )
    }

    /// Moves vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::BadParam(
                "permutation length differs from order".into(),
            ));
        }
        Self::new(
            self.n,
            self.pairs()
                .map(|((u, v), c)| (norm(perm[u], perm[v]), c))
                .collect::<Vec<_>>(),
        )
    }

    /// Relabels colors to `1..=num_colors` preserving their order.
    pub fn compact_colors(&self) -> Self {
        let palette = self.palette();
        let rank: HashMap<Color, Color> = palette
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as Color + 1))
            .collect();
        self.map_colors(|c| rank[&c]).expect("ranking is injective")
    }

    /// The first `m` vertices with their induced coloring.
    pub fn restrict(&self, m: usize) -> Result<Self> {
        if m > self.n {
            return Err(Error::BadParam(format!(
                "cannot restrict order {} to {m}",
                self.n
            )));
        }
        Self::new(m, pairs(m).map(|(u, v)| ((u, v), self.color(u, v))))
    }
}

pub fn pairs(n: usize) -> impl Iterator<Item = Edge> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// A seeded coloring of `K_n` using exactly colors `1..=t`: a shuffled pair
/// order gives the first `t` pairs one color each, the rest are uniform.
pub fn random_coloring(n: usize, t: usize, seed: u64) -> Result<ColoredComplete> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_coloring_from(n, t, &mut rng)
}

pub fn random_coloring_from<R: Rng>(n: usize, t: usize, rng: &mut R) -> Result<ColoredComplete> {
    let m = num_pairs(n);
    if t == 0 || t > m {
        return Err(Error::TooManyColors {
            colors: t,
            edges: m,
        });
    }
    let mut all: Vec<Edge> = pairs(n).collect();
    all.shuffle(rng);
    let assignment: Vec<(Edge, Color)> = all
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let c = if i < t { i + 1 } else { rng.gen_range(1..=t) };
            (p, c as Color)
        })
        .collect();
    ColoredComplete::new(n, assignment)
}

/// Writes `n t` followed by every pair `u v c`. Colors must be exactly `1..=t`.
pub fn write_coloring(k: &ColoredComplete) -> Result<String> {
    let palette = k.palette();
    let t = palette.len();
    if palette
        .iter()
        .enumerate()
        .any(|(i, &c)| c as usize != i + 1)
    {
        return Err(Error::BadColor(
            "colors must be exactly 1..=t to be written; compact them first".into(),
        ));
    }
    let mut out = format!("{} {t}\n", k.order());
    for ((u, v), c) in k.pairs() {
        out.push_str(&format!("{u} {v} {c}\n"));
    }
    Ok(out)
}

pub fn parse_coloring(text: &str) -> Result<ColoredComplete> {
    let perr = |line: usize, msg: String| Error::Parse { line, msg };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let (hno, header) = lines.next().ok_or_else(|| perr(1, "empty input".into()))?;
    let nums = |no: usize, line: &str, k: usize| -> Result<Vec<usize>> {
        let v: Vec<usize> = line
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| perr(no, format!("bad number `{x}`"))))
            .collect::<Result<_>>()?;
        if v.len() != k {
            return Err(perr(no, format!("expected {k} numbers, got {}", v.len())));
        }
        Ok(v)
    };
    let h = nums(hno, header, 2)?;
    let (n, t) = (h[0], h[1]);
    let mut assignment = Vec::with_capacity(num_pairs(n));
    for (no, line) in lines {
        let v = nums(no, line, 3)?;
        let (a, b, c) = (v[0], v[1], v[2]);
        if a >= b {
            return Err(perr(no, format!("pair `{a} {b}` must satisfy u < v")));
        }
        if c == 0 || c > t {
            return Err(Error::BadColor(format!(
                "line {no}: color {c} outside 1..={t}"
            )));
        }
        assignment.push(((a, b), c as Color));
    }
    let k = ColoredComplete::new(n, assignment)?;
    if k.num_colors() != t {
        return Err(Error::BadColor(format!(
            "header declares {t} colors but {} are used",
            k.num_colors()
        )));
    }
    Ok(k)
}
