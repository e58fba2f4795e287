//! Octahedron laboratory: Hamiltonian path counts on barycenter graphs,
//! enumeration of octahedral 3-cell templates, and the brute-force scan for
//! pole-to-pole path pairs with Sturm permutations.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use crate::analysis::ZeroMatrix;
use crate::complex::{hemispheres, solid_octahedron, CellId, Complex, Decoration, Template};
use crate::error::{Error, Result};
use crate::meander::Meander;
use crate::pairs::szs_pair;
use crate::perm::{orbit_key, Permutation};

/// Undirected graph on cell barycenters; `v ~ w` when one is a codimension-one
/// boundary cell of the other. Limited to 64 cells.
#[derive(Clone, Debug)]
pub struct BarycenterGraph {
    nodes: Vec<CellId>,
    index: HashMap<CellId, usize>,
    adj: Vec<u64>,
    dims: Vec<u8>,
    cover: BTreeSet<(CellId, CellId)>,
}

impl BarycenterGraph {
    pub fn new(c: &Complex) -> Result<BarycenterGraph> {
        let nodes: Vec<CellId> = c.cells().map(|(id, _)| id).collect();
        if nodes.len() > 64 {
            return Err(Error::InvalidComplex(format!(
                "{} cells; barycenter graphs hold at most 64",
                nodes.len()
            )));
        }
        let index: HashMap<CellId, usize> =
            nodes.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut adj = vec![0u64; nodes.len()];
        for (hi, lo) in c.cover_relation() {
            let (a, b) = (index[&hi], index[&lo]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let dims = nodes.iter().map(|&v| c.dim(v).unwrap()).collect();
        Ok(BarycenterGraph {
            nodes,
            index,
            adj,
            dims,
            cover: c.cover_relation(),
        })
    }

    /// A graph from explicit undirected edges; every node gets dimension 0 and
    /// no incidence relation.
    pub fn from_edges(nodes: &[CellId], edges: &[(CellId, CellId)]) -> Result<BarycenterGraph> {
        if nodes.len() > 64 {
            return Err(Error::InvalidComplex(format!(
                "{} nodes; at most 64 supported",
                nodes.len()
            )));
        }
        let index: HashMap<CellId, usize> =
            nodes.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut adj = vec![0u64; nodes.len()];
        for &(a, b) in edges {
            let (a, b) = (
                *index.get(&a).ok_or(Error::UnknownId(a))?,
                *index.get(&b).ok_or(Error::UnknownId(b))?,
            );
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(BarycenterGraph {
            nodes: nodes.to_vec(),
            index,
            adj,
            dims: vec![0; nodes.len()],
            cover: BTreeSet::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[CellId] {
        &self.nodes
    }

    pub fn adjacent(&self, a: CellId, b: CellId) -> bool {
        match (self.index.get(&a), self.index.get(&b)) {
            (Some(&x), Some(&y)) => self.adj[x] >> y & 1 == 1,
            _ => false,
        }
    }

    /// Neighbors in increasing id order.
    pub fn neighbors(&self, v: CellId) -> Vec<CellId> {
        let Some(&k) = self.index.get(&v) else {
            return Vec::new();
        };
        self.bits(self.adj[k])
            .map(|j| self.nodes[j])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    fn bits(&self, mut m: u64) -> impl Iterator<Item = usize> {
        std::iter::from_fn(move || {
            (m != 0).then(|| {
                let j = m.trailing_zeros() as usize;
                m &= m - 1;
                j
            })
        })
    }

    fn full(&self) -> u64 {
        if self.nodes.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.nodes.len()) - 1
        }
    }

    fn ends(&self, start: CellId, end: CellId) -> Result<(usize, usize)> {
        let s = *self.index.get(&start).ok_or(Error::UnknownId(start))?;
        let t = *self.index.get(&end).ok_or(Error::UnknownId(end))?;
        if s == t {
            return Err(Error::Degenerate("path ends must differ".into()));
        }
        Ok((s, t))
    }

    /// Neighbor indices of `k` sorted by cell id.
    fn sorted_adj(&self, k: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.bits(self.adj[k]).collect();
        v.sort_by_key(|&j| self.nodes[j]);
        v
    }

    /// Prefixes of length up to `depth` (or complete paths) for splitting the search.
    fn frontier(&self, s: usize, t: usize, depth: usize) -> Vec<(Vec<usize>, u64)> {
        let mut level = vec![(vec![s], 1u64 << s)];
        for _ in 1..depth {
            let mut next = Vec::new();
            for (p, seen) in level {
                let at = *p.last().unwrap();
                if at == t {
                    next.push((p, seen));
                    continue;
                }
                for j in self.sorted_adj(at) {
                    if seen >> j & 1 == 0 {
                        let mut q = p.clone();
                        q.push(j);
                        next.push((q, seen | 1 << j));
                    }
                }
            }
            level = next;
        }
        level
    }

    fn count_from(&self, at: usize, seen: u64, t: usize, full: u64) -> u64 {
        if at == t {
            return (seen == full) as u64;
        }
        let mut total = 0;
        let mut m = self.adj[at] & !seen;
        // the end node may only close a complete path
        if seen | 1 << t != full {
            m &= !(1 << t);
        }
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            total += self.count_from(j, seen | 1 << j, t, full);
        }
        total
    }

    fn list_from(
        &self,
        path: &mut Vec<usize>,
        seen: u64,
        t: usize,
        full: u64,
        out: &mut Vec<Vec<CellId>>,
    ) {
        let at = *path.last().unwrap();
        if at == t {
            if seen == full {
                out.push(path.iter().map(|&k| self.nodes[k]).collect());
            }
            return;
        }
        for j in self.sorted_adj(at) {
            if seen >> j & 1 == 1 || (j == t && seen | 1 << t != full) {
                continue;
            }
            path.push(j);
            self.list_from(path, seen | 1 << j, t, full, out);
            path.pop();
        }
    }

    /// Number of Hamiltonian paths from `start` to `end`.
    pub fn count_hamiltonian_paths(&self, start: CellId, end: CellId) -> Result<u64> {
        let (s, t) = self.ends(start, end)?;
        let full = self.full();
        Ok(self
            .frontier(s, t, 4)
            .into_par_iter()
            .map(|(p, seen)| self.count_from(*p.last().unwrap(), seen, t, full))
            .sum())
    }

    /// All Hamiltonian paths from `start` to `end`, lexicographic by node id.
    pub fn hamiltonian_paths(&self, start: CellId, end: CellId) -> Result<Vec<Vec<CellId>>> {
        let (s, t) = self.ends(start, end)?;
        let full = self.full();
        let chunks: Vec<Vec<Vec<CellId>>> = self
            .frontier(s, t, 4)
            .into_par_iter()
            .map(|(mut p, seen)| {
                let mut out = Vec::new();
                self.list_from(&mut p, seen, t, full, &mut out);
                out
            })
            .collect();
        Ok(chunks.into_iter().flatten().collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PoleChoice {
    Adjacent,
    Antipodal,
}

impl PoleChoice {
    /// The representative pole pair on the solid octahedron.
    pub fn poles(self) -> (CellId, CellId) {
        match self {
            PoleChoice::Adjacent => (1, 2),
            PoleChoice::Antipodal => (1, 6),
        }
    }
}

/// A valid decorated octahedron with its SZS permutation.
#[derive(Clone, Debug)]
pub struct Survivor {
    pub template: Template,
    pub sigma: Permutation,
    pub west_faces: usize,
    pub east_faces: usize,
}

impl Survivor {
    /// Face counts `(smaller, larger)` of the two hemispheres.
    pub fn split(&self) -> (usize, usize) {
        (
            self.west_faces.min(self.east_faces),
            self.west_faces.max(self.east_faces),
        )
    }

    pub fn meridian_lengths(&self) -> (usize, usize) {
        (
            self.template.decoration.meridian_ew.len(),
            self.template.decoration.meridian_we.len(),
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct TemplateCensus {
    pub orientations: usize,
    pub candidates: usize,
    pub survivors: Vec<Survivor>,
    /// Survivor indices keyed by the canonical member of their trivial-equivalence orbit.
    pub orbits: BTreeMap<Permutation, Vec<usize>>,
}

impl TemplateCensus {
    /// Orbits whose survivors all have the given face split.
    pub fn orbits_with_split(&self, split: (usize, usize)) -> Vec<&Permutation> {
        self.orbits
            .iter()
            .filter(|(_, ids)| ids.iter().all(|&k| self.survivors[k].split() == split))
            .map(|(k, _)| k)
            .collect()
    }
}

fn directed_paths(c: &Complex, from: CellId, to: CellId) -> Vec<Vec<CellId>> {
    let mut out_edges: BTreeMap<CellId, Vec<(CellId, CellId)>> = BTreeMap::new();
    for (e, (t, h)) in c.edges() {
        out_edges.entry(t).or_default().push((e, h));
    }
    let mut found = Vec::new();
    let mut stack = vec![(from, Vec::new(), BTreeSet::from([from]))];
    while let Some((at, path, seen)) = stack.pop() {
        if at == to {
            found.push(path);
            continue;
        }
        for &(e, h) in out_edges.get(&at).map(|v| v.as_slice()).unwrap_or(&[]) {
            if !seen.contains(&h) {
                let mut p = path.clone();
                p.push(e);
                let mut s = seen.clone();
                s.insert(h);
                stack.push((h, p, s));
            }
        }
    }
    found.sort();
    found
}

fn decorations(c: &Complex, north: CellId, south: CellId) -> Vec<Template> {
    let paths = directed_paths(c, north, south);
    let mut out = Vec::new();
    for ew in &paths {
        let ew_inner: BTreeSet<CellId> = Decoration::meridian_vertices(c, ew)
            .unwrap()
            .into_iter()
            .collect();
        for we in &paths {
            if we == ew
                || Decoration::meridian_vertices(c, we)
                    .unwrap()
                    .iter()
                    .any(|v| ew_inner.contains(v))
            {
                continue;
            }
            for flip in [false, true] {
                let base = if flip {
                    c.flipped_circuits()
                } else {
                    c.clone()
                };
                let Ok((west, east)) = hemispheres(&base, north, ew, we) else {
                    continue;
                };
                let d = Decoration {
                    north,
                    south,
                    meridian_ew: ew.clone(),
                    meridian_we: we.clone(),
                    west,
                    east,
                };
                out.push(Template::new(base, d));
            }
        }
    }
    out
}

/// All edge orientations, meridian pairs and hemisphere sides of the solid
/// octahedron with the given pole type that pass template validation.
pub fn enumerate_octahedron_templates(choice: PoleChoice) -> Result<TemplateCensus> {
    let base = solid_octahedron();
    let (north, south) = choice.poles();
    let edges: Vec<(CellId, (CellId, CellId))> = base.edges().collect();
    let oriented: Vec<Complex> = (0u32..1 << edges.len())
        .into_par_iter()
        .filter_map(|mask| {
            let mut c = base.clone();
            for (k, &(e, (a, b))) in edges.iter().enumerate() {
                let (t, h) = if mask >> k & 1 == 0 { (a, b) } else { (b, a) };
                c.set_edge_ends(e, t, h).ok()?;
            }
            (c.is_acyclic() && c.poles().ok() == Some((north, south))).then_some(c)
        })
        .collect();
    let per: Vec<(usize, Vec<Template>)> = oriented
        .par_iter()
        .map(|c| {
            let cands = decorations(c, north, south);
            let n = cands.len();
            (
                n,
                cands.into_iter().filter(|t| t.validate().pass()).collect(),
            )
        })
        .collect();
    let mut census = TemplateCensus {
        orientations: oriented.len(),
        ..Default::default()
    };
    for (n, ts) in per {
        census.candidates += n;
        for t in ts {
            let sigma = szs_pair(&t)?.meander()?.sigma().clone();
            let count = |side: &BTreeSet<CellId>| {
                side.iter()
                    .filter(|&&x| t.complex.dim(x).ok() == Some(2))
                    .count()
            };
            let (west_faces, east_faces) = (count(&t.decoration.west), count(&t.decoration.east));
            census
                .orbits
                .entry(orbit_key(&sigma))
                .or_default()
                .push(census.survivors.len());
            census.survivors.push(Survivor {
                template: t,
                sigma,
                west_faces,
                east_faces,
            });
        }
    }
    Ok(census)
}

/// What a pair scan accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScanMode {
    /// Every Sturm permutation is counted; realizations are filtered afterwards.
    AllSturm,
    /// Only Sturm permutations whose Morse numbers equal the cell dimensions,
    /// pruned from the start. Much faster.
    Realizations,
}

/// Result of scanning path pairs for Sturm permutations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanStats {
    /// Number of `h₀` paths scanned.
    pub paths: usize,
    /// Pairs with a Sturm permutation (all of them in `AllSturm` mode, only
    /// realizations otherwise).
    pub sturm: u64,
    /// Sturm pairs whose Morse numbers equal the cell dimensions.
    pub realizations: u64,
    /// Realizations whose connection graph is the cell incidence of the
    /// complex: genuine Sturm realizations of it.
    pub consistent: Vec<(Vec<CellId>, Vec<CellId>)>,
}

struct PairScan<'a> {
    g: &'a BarycenterGraph,
    n: usize,
    t: usize,
    /// Curve index of each node, from `h₀`.
    curve: Vec<usize>,
}

const UNSET: i64 = i64::MIN;

/// Mutable search state: `axis[m]` is the curve index at axis position `m`,
/// `pos[k]` the axis position of curve index `k`, `forced[k]` the Morse number
/// that placed curve neighbors impose on `k`.
struct ScanState {
    axis: Vec<usize>,
    pos: Vec<usize>,
    forced: Vec<i64>,
    hits: Vec<Vec<usize>>,
}

impl PairScan<'_> {
    fn go(&self, at: usize, seen: u64, morse: i64, st: &mut ScanState) {
        let m = st.axis.len() - 1;
        if at == self.t {
            if st.axis.len() == self.n {
                st.hits.push(st.axis.clone());
            }
            return;
        }
        let mut cand = self.g.adj[at] & !seen;
        if st.axis.len() + 1 < self.n {
            cand &= !(1 << self.t);
        }
        let x = m + 1;
        while cand != 0 {
            let j = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let k = self.curve[j];
            // axis recursion: step x (1-based) has sign (-1)^(x+1)
            let step = if x % 2 == 1 { 1 } else { -1 } * (k as i64 - st.axis[m] as i64).signum();
            let i = morse + step;
            if i < 0 || i as usize > self.n - 1 - x || (st.forced[k] != UNSET && st.forced[k] != i)
            {
                continue;
            }
            st.pos[k] = x;
            let mut set = [usize::MAX; 2];
            let mut ok = self.arcs_ok(k, &st.pos);
            // curve recursion: an unplaced curve neighbor lies to the right
            for (slot, nb) in [k.wrapping_sub(1), k + 1].into_iter().enumerate() {
                if !ok || nb >= self.n || st.pos[nb] != usize::MAX {
                    continue;
                }
                let want = i + if k.min(nb) % 2 == 0 { 1 } else { -1 };
                if want < 0 || (st.forced[nb] != UNSET && st.forced[nb] != want) {
                    ok = false;
                } else if st.forced[nb] == UNSET {
                    st.forced[nb] = want;
                    set[slot] = nb;
                }
            }
            if ok {
                st.axis.push(k);
                self.go(j, seen | 1 << j, i, st);
                st.axis.pop();
            }
            for nb in set {
                if nb != usize::MAX {
                    st.forced[nb] = UNSET;
                }
            }
            st.pos[k] = usize::MAX;
        }
    }

    /// Arcs completed by placing curve index `k`, now the rightmost on the
    /// axis, must not cross arcs of the same side that have at
    /// least one endpoint placed.
    fn arcs_ok(&self, k: usize, pos: &[usize]) -> bool {
        const NONE: usize = usize::MAX;
        for nb in [k.wrapping_sub(1), k + 1] {
            if nb >= self.n || pos[nb] == NONE {
                continue;
            }
            let a = k.min(nb);
            let lo = pos[nb];
            for c in (a % 2..self.n - 1).step_by(2) {
                if c == a {
                    continue;
                }
                let crosses = match (pos[c], pos[c + 1]) {
                    (NONE, NONE) => false,
                    (y, NONE) | (NONE, y) => lo < y,
                    (p, q) => {
                        let (u, v) = (p.min(q), p.max(q));
                        u < lo && lo < v
                    }
                };
                if crosses {
                    return false;
                }
            }
        }
        true
    }
}

/// Checks every `h₁` against one fixed `h₀`, pruning on Morse numbers that
/// go negative or disagree between the two recursions, and on crossing arcs.
pub fn scan_with_h0(g: &BarycenterGraph, h0: &[CellId], mode: ScanMode) -> Result<ScanStats> {
    let n = g.len();
    if h0.len() != n {
        return Err(Error::SizeMismatch(h0.len(), n));
    }
    let mut curve = vec![usize::MAX; n];
    for (k, v) in h0.iter().enumerate() {
        curve[*g.index.get(v).ok_or(Error::UnknownId(*v))?] = k;
    }
    let dims: Vec<i64> = h0.iter().map(|v| g.dims[g.index[v]] as i64).collect();
    let (s, t) = g.ends(h0[0], h0[n - 1])?;
    let scan = PairScan { g, n, t, curve };
    let mut st = ScanState {
        axis: vec![0],
        pos: vec![usize::MAX; n],
        forced: vec![UNSET; n],
        hits: Vec::new(),
    };
    match mode {
        ScanMode::Realizations => {
            if dims[0] != 0 {
                return Ok(ScanStats {
                    paths: 1,
                    ..Default::default()
                });
            }
            st.forced.clone_from(&dims);
        }
        ScanMode::AllSturm => st.forced[n - 1] = 0,
    }
    if n > 1 && st.forced[1] != UNSET && st.forced[1] != 1 {
        return Ok(ScanStats {
            paths: 1,
            ..Default::default()
        });
    }
    if n > 1 {
        st.forced[1] = 1;
    }
    st.pos[0] = 0;
    scan.go(s, 1 << s, 0, &mut st);
    let mut out = ScanStats {
        paths: 1,
        ..Default::default()
    };
    for axis in st.hits {
        let h1: Vec<CellId> = axis.iter().map(|&k| h0[k]).collect();
        let m = Meander::from_orders(h0, &h1)?;
        if !m.is_sturm() {
            continue;
        }
        out.sturm += 1;
        if m.morse_raw() != dims.as_slice() {
            continue;
        }
        out.realizations += 1;
        if ZeroMatrix::new(&m)?.connection_graph() == g.cover {
            out.consistent.push((h0.to_vec(), h1));
        }
    }
    Ok(out)
}

/// Scans all ordered pairs of Hamiltonian paths between the poles for Sturm
/// permutations. Long-running on the solid octahedron.
pub fn scan_sturm_pairs(
    g: &BarycenterGraph,
    north: CellId,
    south: CellId,
    mode: ScanMode,
) -> Result<ScanStats> {
    let paths = g.hamiltonian_paths(north, south)?;
    let parts: Vec<ScanStats> = paths
        .par_iter()
        .map(|h0| scan_with_h0(g, h0, mode))
        .collect::<Result<_>>()?;
    let mut out = ScanStats {
        paths: paths.len(),
        ..Default::default()
    };
    for p in parts {
        out.sturm += p.sturm;
        out.realizations += p.realizations;
        out.consistent.extend(p.consistent);
    }
    Ok(out)
}
