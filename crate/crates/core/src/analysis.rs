//! Signed zero numbers, adjacency, the connection criterion and the signed
//! hemisphere template of a Sturm permutation.
//!
//! Equilibria are the meander crossings in curve order, which is the order of
//! their values at the left boundary. For `j < k` in that order,
//!
//! ```text
//! z(v_k - v_j) = i_j + ((-1)^k s_k - 1) / 2 + sum_{j<l<k} (-1)^l s_l,   s_l = sign(p_l - p_j)
//! ```
//!
//! with `p` the axis position. The sign index of `z(v - w)` is `+` exactly when
//! `v` comes after `w` in curve order.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::meander::{Meander, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedZero {
    pub j: usize,
    pub sign: Sign,
}

impl std::fmt::Display for SignedZero {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self.sign {
            Sign::Minus => '-',
            Sign::Plus => '+',
        };
        write!(f, "{}{}", self.j, s)
    }
}

/// Signed zero numbers of all ordered pairs, Morse indices on the diagonal.
#[derive(Clone, Debug)]
pub struct ZeroMatrix {
    meander: Meander,
    morse: Vec<usize>,
    /// `count[a][b]` = zero count of `v_a - v_b`, curve indices, diagonal unused.
    count: Vec<Vec<usize>>,
}

impl ZeroMatrix {
    pub fn new(meander: &Meander) -> Result<ZeroMatrix> {
        if !meander.is_sturm() {
            return Err(Error::NotSturm(meander.sigma().to_string()));
        }
        let n = meander.len();
        let morse: Vec<usize> = meander.morse_raw().iter().map(|&i| i as usize).collect();
        let pos: Vec<usize> = (0..n)
            .map(|k| meander.h_inv(1, meander.labels()[k]).unwrap())
            .collect();
        let mut count = vec![vec![0usize; n]; n];
        for j in 0..n {
            // twice the running sum, 1-based parities: index k0 is symbol k0 + 1
            let mut partial = 0i64;
            for k in j + 1..n {
                let s = (pos[k] as i64 - pos[j] as i64).signum();
                let par = if (k + 1) % 2 == 0 { 1 } else { -1 };
                let twice = 2 * morse[j] as i64 + par * s - 1 + 2 * partial;
                debug_assert!(
                    twice >= 0 && twice % 2 == 0,
                    "zero count {twice}/2 for ({j},{k})"
                );
                let z = (twice / 2) as usize;
                count[k][j] = z;
                count[j][k] = z;
                partial += par * s;
            }
        }
        Ok(ZeroMatrix {
            meander: meander.clone(),
            morse,
            count,
        })
    }

    pub fn from_sigma(sigma: &crate::perm::Permutation) -> Result<ZeroMatrix> {
        Self::new(&Meander::build(sigma))
    }

    pub fn meander(&self) -> &Meander {
        &self.meander
    }

    pub fn len(&self) -> usize {
        self.morse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morse.is_empty()
    }

    pub fn labels(&self) -> &[u32] {
        self.meander.labels()
    }

    fn idx(&self, label: u32) -> Result<usize> {
        Ok(self.meander.h_inv(0, label)? - 1)
    }

    pub fn morse(&self, v: u32) -> Result<usize> {
        Ok(self.morse[self.idx(v)?])
    }

    /// `z(v - w)` for distinct labels.
    pub fn z(&self, v: u32, w: u32) -> Result<SignedZero> {
        let (a, b) = (self.idx(v)?, self.idx(w)?);
        if a == b {
            return Err(Error::Degenerate(format!("z({v} - {v}) is undefined")));
        }
        Ok(self.z_idx(a, b))
    }

    #[inline]
    fn z_idx(&self, a: usize, b: usize) -> SignedZero {
        SignedZero {
            j: self.count[a][b],
            sign: if a > b { Sign::Plus } else { Sign::Minus },
        }
    }

    /// Whether `w` blocks a connection `v_minus ⤳ v_plus`: either `w` lies strictly
    /// between them at the left boundary with `z(v_± - w) = z(v_+ - v_-)` of opposite
    /// signs, or `z(v_+ - w) > z(v_- - w)`.
    pub fn blocks(&self, v_minus: u32, v_plus: u32, w: u32) -> Result<bool> {
        let (a, b, c) = (self.idx(v_minus)?, self.idx(v_plus)?, self.idx(w)?);
        if c == a || c == b || a == b {
            return Ok(false);
        }
        let k = self.count[b][a];
        Ok(self.blocks_between(a, b, c, k) || self.count[b][c] > self.count[a][c])
    }

    fn blocks_between(&self, a: usize, b: usize, c: usize, k: usize) -> bool {
        let (lo, hi) = (a.min(b), a.max(b));
        lo < c
            && c < hi
            && self.count[a][c] == k
            && self.count[b][c] == k
            && self.z_idx(a, c).sign != self.z_idx(b, c).sign
    }

    /// No equilibrium strictly between `v_minus`, `v_plus` has `z = k` to both with opposite signs.
    pub fn k_adjacent(&self, v_minus: u32, v_plus: u32, k: usize) -> Result<bool> {
        let (a, b) = (self.idx(v_minus)?, self.idx(v_plus)?);
        Ok(self.k_adjacent_idx(a, b, k))
    }

    fn k_adjacent_idx(&self, a: usize, b: usize, k: usize) -> bool {
        let (lo, hi) = (a.min(b), a.max(b));
        !(lo + 1..hi).any(|c| self.blocks_between(a, b, c, k))
    }

    fn connects_idx(&self, a: usize, b: usize) -> bool {
        a != b && self.morse[a] > self.morse[b] && self.k_adjacent_idx(a, b, self.count[b][a])
    }

    /// Heteroclinic connection `v_minus ⤳ v_plus` by the Morse drop plus adjacency criterion.
    pub fn connects(&self, v_minus: u32, v_plus: u32) -> Result<bool> {
        Ok(self.connects_idx(self.idx(v_minus)?, self.idx(v_plus)?))
    }

    /// All connections as label pairs.
    pub fn connections(&self) -> BTreeSet<(u32, u32)> {
        let l = self.labels();
        let n = self.len();
        let mut out = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                if self.connects_idx(a, b) {
                    out.insert((l[a], l[b]));
                }
            }
        }
        out
    }

    /// Connections between adjacent Morse indices.
    pub fn connection_graph(&self) -> BTreeSet<(u32, u32)> {
        self.connections()
            .into_iter()
            .filter(|&(a, b)| self.morse(a).unwrap() == self.morse(b).unwrap() + 1)
            .collect()
    }

    /// Sorts every connection target of `v` by its signed zero number.
    pub fn hemisphere_template(&self) -> Result<HemisphereTemplate> {
        let l = self.labels();
        let n = self.len();
        let mut sets = BTreeMap::new();
        for a in 0..n {
            let mut parts: BTreeMap<(usize, Sign), BTreeSet<u32>> = BTreeMap::new();
            for j in 0..self.morse[a] {
                parts.insert((j, Sign::Minus), BTreeSet::new());
                parts.insert((j, Sign::Plus), BTreeSet::new());
            }
            for b in 0..n {
                if !self.connects_idx(a, b) {
                    continue;
                }
                let z = self.z_idx(b, a);
                match parts.get_mut(&(z.j, z.sign)) {
                    Some(set) => {
                        set.insert(l[b]);
                    }
                    None => {
                        return Err(Error::InvalidTemplate(format!(
                            "{} connects to {} with z = {z} at morse index {}",
                            l[a], l[b], self.morse[a]
                        )))
                    }
                }
            }
            sets.insert(l[a], parts);
        }
        Ok(HemisphereTemplate {
            morse: l.iter().zip(&self.morse).map(|(&a, &i)| (a, i)).collect(),
            sets,
        })
    }
}

impl ZeroMatrix {
    /// Checks, for every crossing `v` and each level `j < i(v)` of its template:
    /// members of levels `<= j` have Morse index `<= j` and `z(w - v) <= j`;
    /// members of `E_±^j(v)` have `z(w - v) = j_±`; any two members of
    /// `E_δ^j(v)` together with all lower levels have `z <= j - 1`.
    pub fn hemisphere_report(&self, t: &HemisphereTemplate) -> Result<Report> {
        let mut bad = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];
        for (&v, &n) in &t.morse {
            for j in 0..n {
                let mut lower: BTreeSet<u32> = BTreeSet::new();
                for k in 0..=j {
                    lower.extend(t.get(v, k, Sign::Minus));
                    lower.extend(t.get(v, k, Sign::Plus));
                }
                for &w in &lower {
                    if self.morse(w)? > j {
                        bad[0].push(format!("{w} in level {j} of {v}"));
                    }
                    if self.z(w, v)?.j > j {
                        bad[1].push(format!("z({w} - {v}) > {j}"));
                    }
                }
                for sign in [Sign::Minus, Sign::Plus] {
                    let level = t.get(v, j, sign);
                    for &w in &level {
                        let z = self.z(w, v)?;
                        if z != (SignedZero { j, sign }) {
                            bad[2].push(format!("z({w} - {v}) = {z}"));
                        }
                    }
                    if j == 0 {
                        continue;
                    }
                    let mut closed: Vec<u32> = level.into_iter().collect();
                    for k in 0..j {
                        closed.extend(t.get(v, k, Sign::Minus));
                        closed.extend(t.get(v, k, Sign::Plus));
                    }
                    for (a, &w1) in closed.iter().enumerate() {
                        for &w2 in &closed[a + 1..] {
                            if self.z(w1, w2)?.j + 1 > j {
                                bad[3].push(format!(
                                    "z({w1} - {w2}) >= {j} in closed level {j} of {v}"
                                ));
                            }
                        }
                    }
                }
            }
        }
        let names = [
            "hemisphere members have index at most their level",
            "hemisphere members have zero number at most their level",
            "hemisphere members have signed zero number equal to their level",
            "closed hemispheres have pairwise zero number below their level",
        ];
        let mut rep = Report::default();
        for (name, b) in names.into_iter().zip(bad) {
            let detail = b.iter().take(3).cloned().collect::<Vec<_>>().join("; ");
            rep.push(name, b.is_empty(), detail);
        }
        Ok(rep)
    }
}

/// `E_±^j(v)` for every crossing `v` and `0 <= j < i(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HemisphereTemplate {
    pub morse: BTreeMap<u32, usize>,
    pub sets: BTreeMap<u32, BTreeMap<(usize, Sign), BTreeSet<u32>>>,
}

impl HemisphereTemplate {
    pub fn get(&self, v: u32, j: usize, sign: Sign) -> BTreeSet<u32> {
        self.sets
            .get(&v)
            .and_then(|p| p.get(&(j, sign)))
            .cloned()
            .unwrap_or_default()
    }

    /// Union of all parts of `v`.
    pub fn targets(&self, v: u32) -> BTreeSet<u32> {
        self.sets
            .get(&v)
            .map(|p| p.values().flatten().copied().collect())
            .unwrap_or_default()
    }

    /// Labels with a given Morse index.
    pub fn of_index(&self, i: usize) -> Vec<u32> {
        self.morse
            .iter()
            .filter(|(_, &m)| m == i)
            .map(|(&v, _)| v)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn zm(s: &str) -> ZeroMatrix {
        ZeroMatrix::from_sigma(&Permutation::parse(s, None).unwrap()).unwrap()
    }

    #[test]
    fn identity_three() {
        let z = zm("1 2 3");
        assert_eq!(
            z.z(1, 2).unwrap(),
            SignedZero {
                j: 0,
                sign: Sign::Minus
            }
        );
        assert_eq!(
            z.z(3, 2).unwrap(),
            SignedZero {
                j: 0,
                sign: Sign::Plus
            }
        );
        assert_eq!(z.z(1, 3).unwrap().j, 0);
        assert_eq!(z.connection_graph(), [(2, 1), (2, 3)].into_iter().collect());
        assert!(!z.connects(2, 2).unwrap());
    }

    #[test]
    fn chafee_infante_two() {
        let z = zm("1 4 3 2 5");
        assert_eq!(
            z.z(3, 1).unwrap(),
            SignedZero {
                j: 0,
                sign: Sign::Plus
            }
        );
        assert_eq!(z.z(4, 2).unwrap().j, 1);
        let g = z.connection_graph();
        let want: BTreeSet<(u32, u32)> = [(3, 2), (3, 4), (2, 1), (2, 5), (4, 1), (4, 5)]
            .into_iter()
            .collect();
        assert_eq!(g, want);
        assert_eq!(z.connections().len(), 8);
    }

    #[test]
    fn not_sturm_rejected() {
        assert!(ZeroMatrix::from_sigma(&Permutation::parse("1 3 2 4 5", None).unwrap()).is_err());
    }
}
