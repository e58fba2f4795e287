//! Hamiltonian path pairs on disks and 3-cell templates, the permutation
//! `σ = h₀⁻¹ ∘ h₁` they define, and the scoop surgery on 3-meander templates.
//!
//! A path `h_ι` walks the barycenters of all cells from the north pole to the
//! south pole. Along the 1-skeleton it follows the edge orientation. It enters
//! a face only through one corner edge and leaves it only through another;
//! which corners depends on the style and on `ι`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::complex::{CellId, Complex, FaceCorners, Template};
use crate::error::{Error, Result};
use crate::meander::{Meander, Pole, Report};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Style {
    ZS,
    SZ,
    SZS,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathPair {
    pub h0: Vec<CellId>,
    pub h1: Vec<CellId>,
    pub style: Style,
}

impl PathPair {
    pub fn order(&self, iota: usize) -> &[CellId] {
        if iota == 0 {
            &self.h0
        } else {
            &self.h1
        }
    }

    /// The labelled meander of the pair.
    pub fn meander(&self) -> Result<Meander> {
        Meander::from_orders(&self.h0, &self.h1)
    }

    /// Both orders restricted to `keep`.
    pub fn restrict(&self, keep: &BTreeSet<CellId>) -> PathPair {
        let f = |h: &[CellId]| h.iter().copied().filter(|c| keep.contains(c)).collect();
        PathPair {
            h0: f(&self.h0),
            h1: f(&self.h1),
            style: self.style,
        }
    }
}

/// `(entry, exit)` corner of a face for path `iota`: Z-faces use the
/// `w^0` corners for `h₀`, S-faces use the `w^1` corners.
fn corner(fc: &FaceCorners, iota: usize, zs: bool) -> (CellId, CellId) {
    if (iota == 0) == zs {
        (fc.w_minus_0, fc.w_plus_0)
    } else {
        (fc.w_minus_1, fc.w_plus_1)
    }
}

/// Directed successor lists for `h_iota`. `zs(face)` selects the face style;
/// `ball` is `(O, entry face, exit face)`.
fn transitions(
    c: &Complex,
    iota: usize,
    zs: &dyn Fn(CellId) -> bool,
    ball: Option<(CellId, CellId, CellId)>,
) -> Result<BTreeMap<CellId, Vec<CellId>>> {
    let mut succ: BTreeMap<CellId, Vec<CellId>> =
        c.cells().map(|(id, _)| (id, Vec::new())).collect();
    for (e, (t, h)) in c.edges() {
        succ.get_mut(&t).unwrap().push(e);
        succ.get_mut(&e).unwrap().push(h);
    }
    for f in c.cells_of_dim(2) {
        let (entry, exit) = corner(&c.face_corners(f)?, iota, zs(f));
        succ.get_mut(&entry).unwrap().push(f);
        succ.get_mut(&f).unwrap().push(exit);
    }
    if let Some((o, into, out)) = ball {
        succ.get_mut(&into).unwrap().push(o);
        succ.get_mut(&o).unwrap().push(out);
    }
    for v in succ.values_mut() {
        v.sort_unstable();
    }
    Ok(succ)
}

/// Hamiltonian paths `start → end` of a digraph, stopping after `limit` hits.
pub(crate) fn hamiltonian_search(
    succ: &BTreeMap<CellId, Vec<CellId>>,
    start: CellId,
    end: CellId,
    limit: usize,
) -> Vec<Vec<CellId>> {
    let ids: Vec<CellId> = succ.keys().copied().collect();
    let idx: BTreeMap<CellId, usize> = ids.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let adj: Vec<Vec<usize>> = ids
        .iter()
        .map(|c| succ[c].iter().map(|d| idx[d]).collect())
        .collect();
    let n = ids.len();
    let (s, t) = (idx[&start], idx[&end]);
    let mut found = Vec::new();
    let mut seen = vec![false; n];
    let mut path = vec![s];
    seen[s] = true;

    fn go(
        adj: &[Vec<usize>],
        t: usize,
        seen: &mut [bool],
        path: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if found.len() >= limit {
            return;
        }
        let at = *path.last().unwrap();
        if at == t {
            if path.len() == seen.len() {
                found.push(path.clone());
            }
            return;
        }
        for &nx in &adj[at] {
            if seen[nx] {
                continue;
            }
            seen[nx] = true;
            path.push(nx);
            go(adj, t, seen, path, found, limit);
            path.pop();
            seen[nx] = false;
        }
    }

    let mut raw = Vec::new();
    go(&adj, t, &mut seen, &mut path, &mut raw, limit);
    for p in raw {
        found.push(p.into_iter().map(|k| ids[k]).collect());
    }
    found
}

fn unique_path(
    succ: &BTreeMap<CellId, Vec<CellId>>,
    start: CellId,
    end: CellId,
    what: String,
) -> Result<Vec<CellId>> {
    let mut found = hamiltonian_search(succ, start, end, 2);
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        k => Err(Error::PathSearch {
            path: what,
            found: k,
        }),
    }
}

fn disk_pair(c: &Complex, zs: bool) -> Result<PathPair> {
    if c.ball().is_some() {
        return Err(Error::InvalidComplex(
            "path pairs on disks need a planar complex".into(),
        ));
    }
    let (n, s) = c.poles()?;
    let style = if zs { Style::ZS } else { Style::SZ };
    let mut hs = Vec::new();
    for iota in 0..2 {
        let succ = transitions(c, iota, &|_| zs, None)?;
        hs.push(unique_path(&succ, n, s, format!("{style:?} h{iota}"))?);
    }
    let h1 = hs.pop().unwrap();
    let h0 = hs.pop().unwrap();
    Ok(PathPair { h0, h1, style })
}

/// The ZS-pair of a bipolar disk: `h₀` crosses faces in a Z, `h₁` in an S.
pub fn zs_pair(disk: &Complex) -> Result<PathPair> {
    disk_pair(disk, true)
}

/// The SZ-pair: corner roles of `h₀` and `h₁` swapped.
pub fn sz_pair(disk: &Complex) -> Result<PathPair> {
    disk_pair(disk, false)
}

/// Whether eastern faces run along `EW` from north to south.
pub fn has_standard_handedness(t: &Template) -> Result<bool> {
    let c = &t.complex;
    let e = *t
        .decoration
        .meridian_ew
        .first()
        .ok_or_else(|| Error::InvalidTemplate("empty meridian EW".into()))?;
    let Some(face) = c
        .faces_of_edge(e)
        .into_iter()
        .find(|f| t.decoration.east.contains(f))
    else {
        return Err(Error::InvalidTemplate(format!(
            "no eastern face on meridian edge {e}"
        )));
    };
    let circ = c.circuit(face)?;
    let k = circ.iter().position(|&x| x == e).unwrap();
    Ok(circ[k - 1] == c.ends(e)?.0)
}

/// The template with every circuit flipped if needed to make it standard-handed.
pub fn standard_handed(t: &Template) -> Result<Template> {
    if has_standard_handedness(t)? {
        Ok(t.clone())
    } else {
        Ok(Template::new(
            t.complex.flipped_circuits(),
            t.decoration.clone(),
        ))
    }
}

/// Corner faces `(w_-^0, w_-^1, w_+^0, w_+^1)` around the 3-cell.
pub fn ball_neighbors(t: &Template) -> Result<[CellId; 4]> {
    let (ne, nw, se, sw) = t.corner_faces()?;
    Ok([ne, nw, se, sw])
}

/// The SZS-pair of a 3-cell template.
///
/// Built by splicing the SZ-pair of the closed western disk, the 3-cell, and
/// the ZS-pair of the closed eastern disk, then checked against a direct
/// search over the whole template.
pub fn szs_pair(t: &Template) -> Result<PathPair> {
    let rep = t.validate();
    if !rep.pass() {
        return Err(Error::InvalidTemplate(
            rep.to_string().trim_end().replace('\n', "; "),
        ));
    }
    if !has_standard_handedness(t)? {
        return Err(Error::InvalidTemplate(
            "eastern faces must traverse EW from north to south".into(),
        ));
    }
    let d = &t.decoration;
    let o = t.ball()?;
    let west = sz_pair(&t.closed_west()?)?;
    let east = zs_pair(&t.closed_east()?)?;
    let ew = t.ew_cells()?;
    let we = t.we_cells()?;

    let [wm0, wm1, wp0, wp1] = ball_neighbors(t)?;
    let spliced: Vec<Vec<CellId>> = (0..2)
        .map(|iota| {
            let (before, after) = if iota == 0 { (&ew, &we) } else { (&we, &ew) };
            let mut h: Vec<CellId> = west
                .order(iota)
                .iter()
                .copied()
                .filter(|&x| x == d.north || before.contains(&x) || d.west.contains(&x))
                .collect();
            h.push(o);
            h.extend(
                east.order(iota)
                    .iter()
                    .copied()
                    .filter(|&x| x == d.south || after.contains(&x) || d.east.contains(&x)),
            );
            h
        })
        .collect();

    let zs = |f: CellId| d.east.contains(&f);
    for (iota, (into, out)) in [(wm0, wp0), (wm1, wp1)].into_iter().enumerate() {
        let succ = transitions(&t.complex, iota, &zs, Some((o, into, out)))?;
        let search = unique_path(&succ, d.north, d.south, format!("SZS h{iota}"))?;
        if search != spliced[iota] {
            return Err(Error::SpliceMismatch {
                iota,
                splice: spliced[iota].clone(),
                search,
            });
        }
    }
    let mut it = spliced.into_iter();
    Ok(PathPair {
        h0: it.next().unwrap(),
        h1: it.next().unwrap(),
        style: Style::SZS,
    })
}

/// Postcondition report for the meander of a pair. With a complex, Morse
/// numbers must equal cell dimensions. SZS pairs must also give a 3-meander
/// template.
pub fn pair_report(p: &PathPair, complex: Option<&Complex>) -> Result<Report> {
    let m = p.meander()?;
    let mut rep = Report::default();
    rep.push("dissipative", m.is_dissipative(), "");
    let morse = m.morse_numbers();
    rep.push(
        "morse recursions agree and stay nonnegative",
        m.is_morse(),
        morse
            .as_ref()
            .err()
            .map(|e| e.to_string())
            .unwrap_or_default(),
    );
    rep.push("meander arcs noncrossing", m.is_meander(), "");
    if let Some(c) = complex {
        let bad: Vec<String> = m
            .labels()
            .iter()
            .filter_map(|&l| {
                let i = m.morse_of(l).ok()?;
                let d = c.dim(l).ok()? as i64;
                (i != d).then(|| format!("{l}: morse {i}, dim {d}"))
            })
            .collect();
        rep.push(
            "morse numbers equal cell dimensions",
            bad.is_empty(),
            bad.join("; "),
        );
    }
    if p.style == Style::SZS {
        if let Some(o) = complex.and_then(|c| c.ball()) {
            let io = m.morse_of(o)?;
            rep.push(
                "top cell has morse number 3",
                io == 3,
                format!("i({o}) = {io}"),
            );
        }
        match m.three_meander_report() {
            Ok(r) => rep.extend(r),
            Err(e) => rep.push("3-meander template", false, e.to_string()),
        }
    }
    Ok(rep)
}

/// `σ = h₀⁻¹ ∘ h₁`, checked to be Sturm and, for SZS input, a 3-meander template.
pub fn sigma_from_pair(p: &PathPair) -> Result<Permutation> {
    let rep = pair_report(p, None)?;
    if !rep.pass() {
        return Err(Error::Postcondition(
            rep.to_string().trim_end().replace('\n', "; "),
        ));
    }
    let m = p.meander()?;
    if m.len() % 2 == 0 {
        return Err(Error::Postcondition(format!(
            "even number {} of cells",
            m.len()
        )));
    }
    Ok(m.sigma().clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    East,
    West,
}

/// Crossings removed by a scoop: the top crossing and the open hemisphere
/// enclosed by its neighbors in both orders.
pub fn scoop_set(m: &Meander, side: Side) -> Result<BTreeSet<u32>> {
    let o = m.o_crossing()?;
    let (wm0, wp0) = m.neighbors(0)?;
    let (wm1, wp1) = m.neighbors(1)?;
    let (a0, b0, a1, b1) = match side {
        Side::East => (wp0, wp1, wp1, wp0),
        Side::West => (wm1, wm0, wm0, wm1),
    };
    let span = |iota: usize, a: u32, b: u32| -> Result<BTreeSet<u32>> {
        let (pa, pb) = (m.h_inv(iota, a)?, m.h_inv(iota, b)?);
        if pa > pb {
            return Err(Error::Degenerate(format!("h{iota}: {a} comes after {b}")));
        }
        Ok((pa..=pb).map(|k| m.h(iota, k)).collect())
    };
    let mut out: BTreeSet<u32> = span(0, a0, b0)?
        .intersection(&span(1, a1, b1)?)
        .copied()
        .collect();
    out.insert(o);
    Ok(out)
}

/// Removes the top crossing and one hemisphere, keeping the inherited orders.
pub fn scoop(m: &Meander, side: Side) -> Result<Meander> {
    if !m.is_three_meander_template() {
        return Err(Error::InvalidTemplate(
            "scoop needs a 3-meander template".into(),
        ));
    }
    let gone = scoop_set(m, side)?;
    let keep: BTreeSet<u32> = m
        .labels()
        .iter()
        .copied()
        .filter(|l| !gone.contains(l))
        .collect();
    m.restrict(&keep)
}

/// Whether the polar `h_iota`-serpent at `pole` is full.
pub fn serpent_is_full(m: &Meander, iota: usize, pole: Pole) -> Result<bool> {
    Ok(m.is_full(&m.polar_serpent(iota, pole)?))
}
