//! Arch diagrams of permutations.
//!
//! A meander is stored in curve coordinates: crossing `k` (1-based) is the
//! `k`-th crossing along the curve, which is `h₀ = id`. Its axis position is
//! `σ⁻¹(k)`, so reading the axis left to right gives `h₁ = σ`. Crossings carry
//! display labels (cell ids); a bare permutation labels crossing `k` by `k`.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pole {
    North,
    South,
}

impl Pole {
    pub fn opposite(self) -> Pole {
        match self {
            Pole::North => Pole::South,
            Pole::South => Pole::North,
        }
    }
}

/// Maximal run of Morse numbers in `{0, 1}` at a pole, in `h_iota` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Serpent {
    pub iota: usize,
    pub pole: Pole,
    /// 1-based inclusive range of `m` with members `h_iota(m)`.
    pub range: (usize, usize),
    /// Member labels in increasing `m`.
    pub members: Vec<u32>,
}

impl Serpent {
    pub fn contains(&self, label: u32) -> bool {
        self.members.contains(&label)
    }
}

/// One checked condition of a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// An ordered list of checks; passes when every check passes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check::new(name, pass, detail));
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{}: {verdict}", c.name)?;
            } else {
                writeln!(f, "{}: {verdict} ({})", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Meander {
    sigma: Permutation,
    /// Axis position (0-based) of curve index `k` (0-based): `σ⁻¹`.
    pos: Vec<usize>,
    labels: Vec<u32>,
    index: HashMap<u32, usize>,
    /// Morse numbers from the curve recursion, by curve index.
    morse: Vec<i64>,
}

#[inline]
fn sign(a: usize, b: usize) -> i64 {
    (a as i64 - b as i64).signum()
}

#[inline]
fn alt(k0: usize) -> i64 {
    // (-1)^(m+1) for the 1-based step m = k0 + 1
    if k0.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Curve-order Morse recursion: `i_{k+1} = i_k + (-1)^{k+1} sign(p_{k+1} - p_k)`, `i_1 = 0`.
pub fn morse_along_curve(pos: &[usize]) -> Vec<i64> {
    let mut out = Vec::with_capacity(pos.len());
    let mut i = 0i64;
    for k in 0..pos.len() {
        if k > 0 {
            i += alt(k - 1) * sign(pos[k], pos[k - 1]);
        }
        out.push(i);
    }
    out
}

/// Axis-order Morse recursion, indexed by curve position. `axis[m]` is the
/// curve index of the `m`-th axis crossing; starts from 0 at `axis[0]`.
pub fn morse_along_axis(axis: &[usize]) -> Vec<i64> {
    let mut out = vec![0i64; axis.len()];
    let mut i = 0i64;
    for m in 0..axis.len() {
        if m > 0 {
            i += alt(m - 1) * sign(axis[m], axis[m - 1]);
        }
        out[axis[m]] = i;
    }
    out
}

impl Meander {
    /// The arch diagram of `sigma` with crossing labels `1..=n`.
    pub fn build(sigma: &Permutation) -> Meander {
        let labels = (1..=sigma.len() as u32).collect::<Vec<_>>();
        Self::with_labels(sigma, labels).expect("identity labels are distinct")
    }

    /// The arch diagram of `sigma`, crossing `k` labelled `labels[k-1]`.
    pub fn with_labels(sigma: &Permutation, labels: Vec<u32>) -> Result<Meander> {
        if labels.len() != sigma.len() {
            return Err(Error::SizeMismatch(labels.len(), sigma.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (k, &l) in labels.iter().enumerate() {
            if index.insert(l, k).is_some() {
                return Err(Error::Parse(format!("duplicate label {l}")));
            }
        }
        let pos = sigma.inverse().raw().to_vec();
        let morse = morse_along_curve(&pos);
        Ok(Meander {
            sigma: sigma.clone(),
            pos,
            labels,
            index,
            morse,
        })
    }

    /// The meander of a pair of boundary orders given as label sequences.
    pub fn from_orders(h0: &[u32], h1: &[u32]) -> Result<Meander> {
        if h0.len() != h1.len() {
            return Err(Error::SizeMismatch(h0.len(), h1.len()));
        }
        let at: HashMap<u32, usize> = h0.iter().enumerate().map(|(k, &l)| (l, k + 1)).collect();
        if at.len() != h0.len() {
            return Err(Error::Parse("h0 repeats a label".into()));
        }
        let images = h1
            .iter()
            .map(|l| at.get(l).copied().ok_or(Error::UnknownId(*l)))
            .collect::<Result<Vec<_>>>()?;
        let sigma = Permutation::from_one_line(&images)?;
        Self::with_labels(&sigma, h0.to_vec())
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn len(&self) -> usize {
        self.pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pos.is_empty()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Label of the crossing at 1-based position `m` of `h_iota`.
    pub fn h(&self, iota: usize, m: usize) -> u32 {
        if iota == 0 {
            self.labels[m - 1]
        } else {
            self.labels[self.sigma.apply(m) - 1]
        }
    }

    /// 1-based position of `label` in `h_iota`.
    pub fn h_inv(&self, iota: usize, label: u32) -> Result<usize> {
        let k = self.curve_index(label)?;
        Ok(if iota == 0 { k + 1 } else { self.pos[k] + 1 })
    }

    /// All labels in `h_iota` order.
    pub fn order(&self, iota: usize) -> Vec<u32> {
        (1..=self.len()).map(|m| self.h(iota, m)).collect()
    }

    fn curve_index(&self, label: u32) -> Result<usize> {
        self.index
            .get(&label)
            .copied()
            .ok_or(Error::UnknownId(label))
    }

    /// Axis intervals (1-based, sorted) of the arcs joining curve crossings `k`, `k+1`
    /// for odd `k` (upper) or even `k` (lower).
    fn arcs(&self, upper: bool) -> Vec<(usize, usize)> {
        (0..self.len().saturating_sub(1))
            .filter(|k| (k % 2 == 0) == upper)
            .map(|k| {
                let (a, b) = (self.pos[k] + 1, self.pos[k + 1] + 1);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    pub fn upper_arcs(&self) -> Vec<(usize, usize)> {
        self.arcs(true)
    }

    pub fn lower_arcs(&self) -> Vec<(usize, usize)> {
        self.arcs(false)
    }

    /// Morse numbers by curve index, from the curve recursion alone.
    pub fn morse_raw(&self) -> &[i64] {
        &self.morse
    }

    /// Morse numbers by curve index after checking that the axis recursion agrees
    /// and that the last crossing is normalized to 0.
    pub fn morse_numbers(&self) -> Result<Vec<i64>> {
        let n = self.len();
        if n == 0 {
            return Ok(Vec::new());
        }
        if self.morse[n - 1] != 0 {
            return Err(Error::MorseInconsistent(format!(
                "last crossing has morse number {}",
                self.morse[n - 1]
            )));
        }
        let axis: Vec<usize> = self.sigma.raw().to_vec();
        let other = morse_along_axis(&axis);
        if other != self.morse {
            return Err(Error::MorseInconsistent(format!(
                "curve {:?} vs axis {:?}",
                self.morse, other
            )));
        }
        Ok(self.morse.clone())
    }

    pub fn morse_of(&self, label: u32) -> Result<i64> {
        Ok(self.morse[self.curve_index(label)?])
    }

    pub fn is_dissipative(&self) -> bool {
        let n = self.len();
        n > 0 && self.sigma.apply(1) == 1 && self.sigma.apply(n) == n
    }

    pub fn is_morse(&self) -> bool {
        matches!(self.morse_numbers(), Ok(m) if m.iter().all(|&i| i >= 0))
    }

    pub fn is_meander(&self) -> bool {
        noncrossing(&self.upper_arcs()) && noncrossing(&self.lower_arcs())
    }

    pub fn is_sturm(&self) -> bool {
        self.len() % 2 == 1 && self.is_dissipative() && self.is_meander() && self.is_morse()
    }

    pub fn polar_serpent(&self, iota: usize, pole: Pole) -> Result<Serpent> {
        let n = self.len();
        if n < 2 {
            return Err(Error::Degenerate(
                "serpents need at least two crossings".into(),
            ));
        }
        let in_band = |m: usize| {
            matches!(
                self.morse[self.curve_index(self.h(iota, m)).unwrap()],
                0 | 1
            )
        };
        let range = match pole {
            Pole::North => {
                let mut end = 1;
                while end < n && in_band(end + 1) {
                    end += 1;
                }
                (1, end)
            }
            Pole::South => {
                let mut start = n;
                while start > 1 && in_band(start - 1) {
                    start -= 1;
                }
                (start, n)
            }
        };
        let members = (range.0..=range.1).map(|m| self.h(iota, m)).collect();
        Ok(Serpent {
            iota,
            pole,
            range,
            members,
        })
    }

    /// A polar serpent is full when it reaches the saddle that is
    /// `h_{1-iota}`-adjacent to the opposite pole.
    pub fn is_full(&self, s: &Serpent) -> bool {
        let n = self.len();
        let target = match s.pole {
            Pole::North => self.h(1 - s.iota, n - 1),
            Pole::South => self.h(1 - s.iota, 2),
        };
        s.contains(target)
    }

    /// Labels shared by two serpents.
    pub fn overlap(s1: &Serpent, s2: &Serpent) -> BTreeSet<u32> {
        let a: BTreeSet<u32> = s1.members.iter().copied().collect();
        s2.members
            .iter()
            .copied()
            .filter(|l| a.contains(l))
            .collect()
    }

    /// The unique crossing of Morse number 3.
    pub fn o_crossing(&self) -> Result<u32> {
        let tops: Vec<usize> = (0..self.len()).filter(|&k| self.morse[k] == 3).collect();
        match tops.as_slice() {
            [k] => Ok(self.labels[*k]),
            _ => Err(Error::NoUniqueTop(tops.len())),
        }
    }

    /// `h_iota`-predecessor and successor of the top crossing.
    pub fn neighbors(&self, iota: usize) -> Result<(u32, u32)> {
        let o = self.o_crossing()?;
        let m = self.h_inv(iota, o)?;
        if m == 1 || m == self.len() {
            return Err(Error::Degenerate("top crossing sits at a pole".into()));
        }
        Ok((self.h(iota, m - 1), self.h(iota, m + 1)))
    }

    /// First and last Morse-2 crossings in `h_iota` order.
    pub fn extreme_sources(&self, iota: usize) -> Option<(u32, u32)> {
        let sources: Vec<u32> = self
            .order(iota)
            .into_iter()
            .filter(|&l| self.morse_of(l).ok() == Some(2))
            .collect();
        Some((*sources.first()?, *sources.last()?))
    }

    /// Per-condition check of the 3-meander template conditions (i)–(iv).
    pub fn three_meander_report(&self) -> Result<Report> {
        if !self.is_sturm() {
            return Err(Error::NotSturm(self.sigma.to_string()));
        }
        let n = self.len();
        let mut rep = Report::default();

        let tops = self.morse.iter().filter(|&&i| i == 3).count();
        let max_other = self
            .morse
            .iter()
            .copied()
            .filter(|&i| i != 3)
            .max()
            .unwrap_or(0);
        rep.push(
            "template (i) unique index-3 crossing",
            tops == 1 && max_other <= 2,
            format!("{tops} crossings of index 3, max other {max_other}"),
        );

        let serpents = [
            [
                self.polar_serpent(0, Pole::North)?,
                self.polar_serpent(0, Pole::South)?,
            ],
            [
                self.polar_serpent(1, Pole::North)?,
                self.polar_serpent(1, Pole::South)?,
            ],
        ];
        let mut overlaps = Vec::new();
        let mut ok = true;
        for iota in 0..2 {
            for (p, pole) in [Pole::North, Pole::South].into_iter().enumerate() {
                let anti = &serpents[1 - iota][1 - p];
                let shared = Self::overlap(&serpents[iota][p], anti);
                ok &= !shared.is_empty();
                overlaps.push(format!("h{iota}-{pole:?}:{shared:?}"));
            }
        }
        rep.push(
            "template (ii) anti-polar serpent overlap",
            ok,
            overlaps.join(" "),
        );

        let o = self.o_crossing().ok();
        let (pass3, detail3) = match o {
            None => (false, "no top crossing".to_string()),
            Some(o) => {
                let mut ok = true;
                let mut detail = Vec::new();
                for iota in 0..2 {
                    for pole in [Pole::North, Pole::South] {
                        let (a, b) = match pole {
                            Pole::North => (self.h(iota, 1), self.h(iota, 2)),
                            Pole::South => (self.h(iota, n - 1), self.h(iota, n)),
                        };
                        let (pa, pb, po) = (
                            self.h_inv(1 - iota, a)?,
                            self.h_inv(1 - iota, b)?,
                            self.h_inv(1 - iota, o)?,
                        );
                        let inside = pa.min(pb) < po && po < pa.max(pb);
                        ok &= inside;
                        if !inside {
                            detail.push(format!("h{iota}-{pole:?} arc {a}-{b} misses {o}"));
                        }
                    }
                }
                (ok, detail.join("; "))
            }
        };
        rep.push(
            "template (iii) polar arcs overarch the top crossing",
            pass3,
            detail3,
        );

        let (pass4, detail4) = match o {
            None => (false, "no top crossing".to_string()),
            Some(_) => {
                let mut ok = true;
                let mut detail = Vec::new();
                for iota in 0..2 {
                    let nb = self.neighbors(iota).ok();
                    let ex = self.extreme_sources(1 - iota);
                    ok &= nb.is_some() && nb == ex;
                    detail.push(format!("w^{iota}={nb:?} extreme h{}={ex:?}", 1 - iota));
                }
                (ok, detail.join("; "))
            }
        };
        rep.push(
            "template (iv) neighbors are extreme sources",
            pass4,
            detail4,
        );
        Ok(rep)
    }

    pub fn is_three_meander_template(&self) -> bool {
        matches!(self.three_meander_report(), Ok(r) if r.pass())
    }

    /// The meander obtained by keeping only `keep`, in the inherited `h₀` and `h₁` orders.
    pub fn restrict(&self, keep: &BTreeSet<u32>) -> Result<Meander> {
        let h0: Vec<u32> = self
            .order(0)
            .into_iter()
            .filter(|l| keep.contains(l))
            .collect();
        let h1: Vec<u32> = self
            .order(1)
            .into_iter()
            .filter(|l| keep.contains(l))
            .collect();
        Self::from_orders(&h0, &h1)
    }
}

/// True when no two intervals interleave (each pair nested or disjoint).
pub fn noncrossing(arcs: &[(usize, usize)]) -> bool {
    for (i, &(a, b)) in arcs.iter().enumerate() {
        for &(c, d) in &arcs[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Meander {
        Meander::build(&Permutation::parse(s, None).unwrap())
    }

    #[test]
    fn identity_three() {
        let me = m("1 2 3");
        assert_eq!(me.upper_arcs(), vec![(1, 2)]);
        assert_eq!(me.lower_arcs(), vec![(2, 3)]);
        assert_eq!(me.morse_numbers().unwrap(), vec![0, 1, 0]);
        assert!(me.is_sturm());
        let n = me.polar_serpent(0, Pole::North).unwrap();
        let s = me.polar_serpent(0, Pole::South).unwrap();
        assert_eq!(n.members, vec![1, 2, 3]);
        assert_eq!(Meander::overlap(&n, &s).len(), 3);
    }

    #[test]
    fn chafee_infante_two() {
        let me = m("1 4 3 2 5");
        assert_eq!(me.upper_arcs(), vec![(1, 4), (2, 3)]);
        assert_eq!(me.morse_numbers().unwrap(), vec![0, 1, 2, 1, 0]);
        assert!(me.is_sturm());
        assert!(!me.is_three_meander_template());
        assert!(matches!(me.o_crossing(), Err(Error::NoUniqueTop(0))));
    }

    #[test]
    fn non_examples() {
        assert!(!m("2 1 3").is_dissipative());
        let me = m("1 3 2 4 5");
        assert!(!me.is_meander());
        assert!(!me.is_sturm());
        assert!(m("1").polar_serpent(0, Pole::North).is_err());
    }

    #[test]
    fn noncrossing_intervals() {
        assert!(noncrossing(&[(1, 4), (2, 3), (5, 6)]));
        assert!(!noncrossing(&[(1, 3), (2, 4)]));
    }
}
