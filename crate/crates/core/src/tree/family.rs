//! Named tree families.
//!
//! Every constructor returns its tree relabeled by [`Tree::bfs_from_center`],
//! so vertex 0 is a center and labels grow breadth-first.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::Tree;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `path:n`, the path on n vertices.
    Path,
    /// `star:k`, K_{1,k}.
    Star,
    /// `star_plus:k`, K_{1,k} with one leaf extended by a pendant vertex.
    StarPlus,
    /// `spider:a,b,c,...`, one branch vertex with legs of the given lengths.
    Spider,
    /// `F:m`, a center joined to m vertices that each carry two leaves.
    F,
    /// `F_prime:m`, F_m with one leaf moved onto its sibling leaf.
    FPrime,
    /// `B_star:s,t`, a path u-v-w with s leaves at u and t leaves at w.
    BStar,
    /// `double_star:a,b`, two adjacent centers carrying a and b leaves.
    DoubleStar,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Path,
        Family::Star,
        Family::StarPlus,
        Family::Spider,
        Family::F,
        Family::FPrime,
        Family::BStar,
        Family::DoubleStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Star => "star",
            Family::StarPlus => "star_plus",
            Family::Spider => "spider",
            Family::F => "F",
            Family::FPrime => "F_prime",
            Family::BStar => "B_star",
            Family::DoubleStar => "double_star",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidFamilyParams {
                family: s.to_string(),
                reason: "unknown family".into(),
            })
    }
}

/// A family name with its integer parameters, e.g. `B_star:2,2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: impl Into<Vec<usize>>) -> Result<Self> {
        let spec = FamilySpec {
            family,
            params: params.into(),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn path(n: usize) -> Self {
        Self::new(Family::Path, [n]).expect("path:n is valid for n >= 1")
    }

    pub fn star(k: usize) -> Self {
        Self::new(Family::Star, [k]).expect("star:k is valid for k >= 1")
    }

    pub fn star_plus(k: usize) -> Self {
        Self::new(Family::StarPlus, [k]).expect("star_plus:k is valid for k >= 1")
    }

    pub fn spider(legs: &[usize]) -> Self {
        Self::new(Family::Spider, legs).expect("valid spider legs")
    }

    pub fn f(m: usize) -> Self {
        Self::new(Family::F, [m]).expect("F:m is valid for m >= 2")
    }

    pub fn f_prime(m: usize) -> Self {
        Self::new(Family::FPrime, [m]).expect("F_prime:m is valid for m >= 2")
    }

    pub fn b_star(s: usize, t: usize) -> Self {
        Self::new(Family::BStar, [s, t]).expect("B_star:s,t is valid for s,t >= 1")
    }

    pub fn double_star(a: usize, b: usize) -> Self {
        Self::new(Family::DoubleStar, [a, b]).expect("double_star:a,b is valid for a,b >= 1")
    }

    fn invalid(&self, reason: impl Into<String>) -> Error {
        Error::InvalidFamilyParams {
            family: self.to_string(),
            reason: reason.into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let p = &self.params;
        let arity = |k: usize| {
            if p.len() == k {
                Ok(())
            } else {
                Err(self.invalid(format!("expected {k} parameter(s), got {}", p.len())))
            }
        };
        let at_least = |idx: usize, min: usize| {
            if p[idx] >= min {
                Ok(())
            } else {
                Err(self.invalid(format!("parameter {} must be at least {min}", idx + 1)))
            }
        };
        match self.family {
            Family::Path => {
                arity(1)?;
                at_least(0, 1)
            }
            Family::Star | Family::StarPlus => {
                arity(1)?;
                at_least(0, 1)
            }
            Family::F | Family::FPrime => {
                arity(1)?;
                at_least(0, 2)
            }
            Family::BStar | Family::DoubleStar => {
                arity(2)?;
                at_least(0, 1)?;
                at_least(1, 1)
            }
            Family::Spider => {
                if p.len() < 3 {
                    return Err(self.invalid("a spider needs at least 3 legs"));
                }
                (0..p.len()).try_for_each(|i| at_least(i, 1))
            }
        }
    }

    /// Number of vertices of the tree this spec describes.
    pub fn order(&self) -> usize {
        let p = &self.params;
        match self.family {
            Family::Path => p[0],
            Family::Star => p[0] + 1,
            Family::StarPlus => p[0] + 2,
            Family::Spider => 1 + p.iter().sum::<usize>(),
            Family::F | Family::FPrime => 3 * p[0] + 1,
            Family::BStar => p[0] + p[1] + 3,
            Family::DoubleStar => p[0] + p[1] + 2,
        }
    }

    pub fn build(&self) -> Result<Tree> {
        self.validate()?;
        let p = &self.params;
        // Parent arrays in construction order; vertex 0 is the root.
        let mut parents: Vec<usize> = vec![0];
        let mut add = |parent: usize| {
            parents.push(parent);
            parents.len() - 1
        };
        match self.family {
            Family::Path => {
                for v in 1..p[0] {
                    add(v - 1);
                }
            }
            Family::Star => {
                for _ in 0..p[0] {
                    add(0);
                }
            }
            Family::StarPlus => {
                let first = add(0);
                for _ in 1..p[0] {
                    add(0);
                }
                add(first);
            }
            Family::Spider => {
                for &len in p {
                    let mut prev = 0;
                    for _ in 0..len {
                        prev = add(prev);
                    }
                }
            }
            Family::F | Family::FPrime => {
                for i in 0..p[0] {
                    let v = add(0);
                    let l1 = add(v);
                    if self.family == Family::FPrime && i == 0 {
                        // Edge l1-l2 added, v-l2 removed.
                        add(l1);
                    } else {
                        add(v);
                    }
                }
            }
            Family::BStar => {
                let v = 0;
                let u = add(v);
                let w = add(v);
                for _ in 0..p[0] {
                    add(u);
                }
                for _ in 0..p[1] {
                    add(w);
                }
            }
            Family::DoubleStar => {
                let other = add(0);
                for _ in 0..p[0] {
                    add(0);
                }
                for _ in 0..p[1] {
                    add(other);
                }
            }
        }
        Ok(Tree::from_parents(&parents).bfs_from_center())
    }
}

/// Every named family instance with exactly `n` vertices (three-legged
/// spiders only, legs in non-decreasing order; symmetric two-parameter
/// families with the larger parameter first).
pub fn instances_of_order(n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    if n >= 1 {
        out.push(FamilySpec::path(n));
    }
    if n >= 2 {
        out.push(FamilySpec::star(n - 1));
    }
    if n >= 3 {
        out.push(FamilySpec::star_plus(n - 2));
    }
    for a in 1..n {
        for b in a..n {
            if a + b + 1 < n {
                let c = n - 1 - a - b;
                if c >= b {
                    out.push(FamilySpec::spider(&[a, b, c]));
                }
            }
        }
    }
    if n >= 7 && (n - 1).is_multiple_of(3) {
        out.push(FamilySpec::f((n - 1) / 3));
        out.push(FamilySpec::f_prime((n - 1) / 3));
    }
    for t in 1..n {
        if n >= t + t + 3 {
            out.push(FamilySpec::b_star(n - 3 - t, t));
        }
        if n >= t + t + 2 {
            out.push(FamilySpec::double_star(n - 2 - t, t));
        }
    }
    out
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family.name())?;
        for (i, k) in self.params.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidFamilyParams {
                family: s.to_string(),
                reason: "expected `name:k1[,k2,...]`".into(),
            })?;
        let family: Family = name.trim().parse()?;
        let params = rest
            .split(',')
            .map(|k| {
                k.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidFamilyParams {
                        family: s.to_string(),
                        reason: format!("`{k}` is not a non-negative integer"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        FamilySpec::new(family, params)
    }
}
