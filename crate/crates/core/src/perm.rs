//! Permutations of `{1..n}` with one-line and cycle codecs.
//!
//! Storage is 0-based; every public accessor and codec speaks 1-based symbols.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The order-reversing involution `j -> n + 1 - j`.
    pub fn kappa(n: usize) -> Self {
        Permutation {
            images: (0..n).rev().collect(),
        }
    }

    /// Builds from 1-based one-line images.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n {
                return Err(Error::Parse(format!("symbol {v} out of range 1..={n}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::Parse(format!("duplicate symbol {v}")));
            }
            out.push(v - 1);
        }
        Ok(Permutation { images: out })
    }

    /// Builds from disjoint 1-based cycles on `n` symbols; omitted symbols are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n {
                    return Err(Error::Parse(format!("symbol {a} out of range 1..={n}")));
                }
                if std::mem::replace(&mut seen[a - 1], true) {
                    return Err(Error::Parse(format!("duplicate symbol {a}")));
                }
                let b = cycle[(k + 1) % cycle.len()];
                images[a - 1] = b - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses one-line notation (`"1 4 3 2 5"`) or cycle notation (`"(2 4)"`).
    ///
    /// Cycle notation needs `n`; it may be passed here or given as an `n=` header.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let mut n = n;
        let mut body = String::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if let Some(rest) = line.strip_prefix("n=").or_else(|| line.strip_prefix("n =")) {
                let v = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad n header: {e}")))?;
                n = Some(v);
            } else {
                body.push_str(line);
                body.push(' ');
            }
        }
        let body = body.trim();
        if body.contains('(') || body.contains(')') {
            let n = n.ok_or_else(|| Error::Parse("cycle notation needs an explicit n".into()))?;
            Self::from_cycles(n, &parse_cycles(body)?)
        } else {
            let images = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad symbol {s:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if let Some(n) = n {
                if n != images.len() {
                    return Err(Error::Parse(format!(
                        "n={n} but {} images given",
                        images.len()
                    )));
                }
            }
            Self::from_one_line(&images)
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of the 1-based symbol `k`.
    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] + 1
    }

    /// 1-based one-line images.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    /// 0-based images, for hot loops.
    pub fn raw(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v] = k;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `k -> self(other(k))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch(self.len(), other.len()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// The u-flip conjugate `κσκ`.
    pub fn kappa_conjugate(&self) -> Self {
        let n = self.len();
        let mut out = vec![0; n];
        for (k, &v) in self.images.iter().enumerate() {
            out[n - 1 - k] = n - 1 - v;
        }
        Permutation { images: out }
    }

    /// Disjoint cycles of length at least two, each starting at its smallest symbol.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k + 1);
                k = self.images[k];
            }
            out.push(cycle);
        }
        out
    }

    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                format!(
                    "({})",
                    c.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                )
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| (v + 1).to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line()
    }
}

fn parse_cycles(body: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut token = String::new();
    let flush = |token: &mut String, current: &mut Option<Vec<usize>>| -> Result<()> {
        if token.is_empty() {
            return Ok(());
        }
        let cycle = current
            .as_mut()
            .ok_or_else(|| Error::Parse(format!("symbol {token:?} outside parentheses")))?;
        cycle.push(
            token
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad symbol {token:?}: {e}")))?,
        );
        token.clear();
        Ok(())
    };
    for c in body.chars() {
        match c {
            '(' => {
                if current.is_some() {
                    return Err(Error::Parse("nested '('".into()));
                }
                current = Some(Vec::new());
            }
            ')' => {
                flush(&mut token, &mut current)?;
                let cycle = current
                    .take()
                    .ok_or_else(|| Error::Parse("unmatched ')'".into()))?;
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
            }
            c if c.is_whitespace() || c == ',' => flush(&mut token, &mut current)?,
            c => token.push(c),
        }
    }
    if current.is_some() {
        return Err(Error::Parse("unclosed '('".into()));
    }
    if !token.is_empty() {
        return Err(Error::Parse(format!(
            "symbol {token:?} outside parentheses"
        )));
    }
    Ok(cycles)
}

/// The Klein four-group orbit `{σ, κσκ, σ⁻¹, κσ⁻¹κ}` with duplicates collapsed.
pub fn trivial_equivalence_orbit(sigma: &Permutation) -> BTreeSet<Permutation> {
    let inv = sigma.inverse();
    [
        sigma.kappa_conjugate(),
        inv.kappa_conjugate(),
        inv,
        sigma.clone(),
    ]
    .into_iter()
    .collect()
}

/// Smallest member of the trivial-equivalence orbit; a canonical orbit key.
pub fn orbit_key(sigma: &Permutation) -> Permutation {
    trivial_equivalence_orbit(sigma)
        .into_iter()
        .next()
        .expect("orbit is never empty")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_and_one_line_agree() {
        let a = Permutation::parse("(2 12)(5 11)(8 10)", Some(13)).unwrap();
        assert_eq!(
            a.one_line(),
            vec![1, 12, 3, 4, 11, 6, 7, 10, 9, 8, 5, 2, 13]
        );
        let b = Permutation::parse("n=13\n(2 12) (5 11) (8 10)", None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_cycle_string(), "(2 12)(5 11)(8 10)");
    }

    #[test]
    fn parse_errors() {
        assert!(Permutation::parse("1 1 3", None).is_err());
        assert!(Permutation::parse("1 4 3", None).is_err());
        assert!(Permutation::parse("(1 2", Some(3)).is_err());
        assert!(Permutation::parse("(1 2))", Some(3)).is_err());
        assert!(Permutation::parse("((1 2)", Some(3)).is_err());
        assert!(Permutation::parse("(1 2)", None).is_err());
        assert!(Permutation::parse("(1 2)(2 3)", Some(3)).is_err());
        assert!(Permutation::parse("(1 5)", Some(3)).is_err());
    }

    #[test]
    fn identity_and_kappa() {
        let id = Permutation::parse("1 2 3", None).unwrap();
        assert!(id.is_identity());
        assert_eq!(id.inverse(), id);
        assert_eq!(Permutation::kappa(3).one_line(), vec![3, 2, 1]);
        assert_eq!(trivial_equivalence_orbit(&id).len(), 1);
    }

    #[test]
    fn compose_size_mismatch() {
        assert!(Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .is_err());
    }
}
