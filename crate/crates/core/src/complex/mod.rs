//! Regular cell complexes of dimension at most three.
//!
//! Edges store their orientation as `(tail, head)`. Faces store a boundary
//! circuit `[v, e, v, e, ...]` in their embedding orientation; that orientation
//! decides which side of a face counts as left or right.

mod build;
mod io;
mod reconstruct;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::meander::Report;

pub use build::{
    chafee_infante_ball, disk, hemispheres, mirror_ball, octahedron, octahedron_template,
    solid_octahedron, weld, DiskSides,
};
pub use io::{ComplexFile, DecorationFile};
pub use reconstruct::complex_from_signed_template;

pub type CellId = u32;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Complex {
    cells: BTreeMap<CellId, u8>,
    edges: BTreeMap<CellId, (CellId, CellId)>,
    faces: BTreeMap<CellId, Vec<CellId>>,
    ball: Option<CellId>,
}

/// Poles, directed meridians and open hemispheres of a 3-cell template.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decoration {
    pub north: CellId,
    pub south: CellId,
    pub meridian_ew: Vec<CellId>,
    pub meridian_we: Vec<CellId>,
    pub west: BTreeSet<CellId>,
    pub east: BTreeSet<CellId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    pub complex: Complex,
    pub decoration: Decoration,
}

/// Bipolar extrema of a face and its four corner edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCorners {
    pub face: CellId,
    pub min_vertex: CellId,
    pub max_vertex: CellId,
    /// Edges from min to max along the circuit direction.
    pub path_a: Vec<CellId>,
    /// Edges from min to max against the circuit direction.
    pub path_b: Vec<CellId>,
    pub w_minus_0: CellId,
    pub w_plus_0: CellId,
    pub w_minus_1: CellId,
    pub w_plus_1: CellId,
}

impl Complex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: CellId) -> &mut Self {
        self.cells.insert(id, 0);
        self
    }

    pub fn add_edge(&mut self, id: CellId, tail: CellId, head: CellId) -> &mut Self {
        self.cells.insert(id, 1);
        self.edges.insert(id, (tail, head));
        self
    }

    /// Adds a face from its circuit `[v, e, v, e, ...]`.
    pub fn add_face(&mut self, id: CellId, circuit: Vec<CellId>) -> &mut Self {
        self.cells.insert(id, 2);
        self.faces.insert(id, circuit);
        self
    }

    /// Adds a face from its edges listed in circuit order, starting at `start`.
    pub fn add_face_edges(
        &mut self,
        id: CellId,
        start: CellId,
        edges: &[CellId],
    ) -> Result<&mut Self> {
        let mut circuit = Vec::with_capacity(2 * edges.len());
        let mut at = start;
        for &e in edges {
            let (t, h) = self.ends(e)?;
            let next = if t == at {
                h
            } else if h == at {
                t
            } else {
                return Err(Error::InvalidComplex(format!(
                    "edge {e} does not touch {at} in face {id}"
                )));
            };
            circuit.push(at);
            circuit.push(e);
            at = next;
        }
        if at != start {
            return Err(Error::InvalidComplex(format!(
                "face {id} circuit does not close"
            )));
        }
        Ok(self.add_face(id, circuit))
    }

    /// Reorients an existing edge.
    pub fn set_edge_ends(&mut self, id: CellId, tail: CellId, head: CellId) -> Result<()> {
        match self.edges.get_mut(&id) {
            Some(ends) => {
                *ends = (tail, head);
                Ok(())
            }
            None => Err(Error::UnknownId(id)),
        }
    }

    pub fn set_ball(&mut self, id: CellId) -> &mut Self {
        self.cells.insert(id, 3);
        self.ball = Some(id);
        self
    }

    pub fn ball(&self) -> Option<CellId> {
        self.ball
    }

    pub fn dim(&self, id: CellId) -> Result<u8> {
        self.cells.get(&id).copied().ok_or(Error::UnknownId(id))
    }

    pub fn contains(&self, id: CellId) -> bool {
        self.cells.contains_key(&id)
    }

    pub fn cells(&self) -> impl Iterator<Item = (CellId, u8)> + '_ {
        self.cells.iter().map(|(&c, &d)| (c, d))
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells_of_dim(&self, dim: u8) -> Vec<CellId> {
        self.cells
            .iter()
            .filter(|(_, &d)| d == dim)
            .map(|(&c, _)| c)
            .collect()
    }

    pub fn ends(&self, edge: CellId) -> Result<(CellId, CellId)> {
        self.edges.get(&edge).copied().ok_or(Error::UnknownId(edge))
    }

    pub fn edges(&self) -> impl Iterator<Item = (CellId, (CellId, CellId))> + '_ {
        self.edges.iter().map(|(&e, &ends)| (e, ends))
    }

    pub fn circuit(&self, face: CellId) -> Result<&[CellId]> {
        self.faces
            .get(&face)
            .map(|c| c.as_slice())
            .ok_or(Error::UnknownId(face))
    }

    pub fn faces(&self) -> impl Iterator<Item = (CellId, &[CellId])> + '_ {
        self.faces.iter().map(|(&f, c)| (f, c.as_slice()))
    }

    pub fn face_edges(&self, face: CellId) -> Result<Vec<CellId>> {
        Ok(self
            .circuit(face)?
            .iter()
            .skip(1)
            .step_by(2)
            .copied()
            .collect())
    }

    pub fn face_vertices(&self, face: CellId) -> Result<Vec<CellId>> {
        Ok(self.circuit(face)?.iter().step_by(2).copied().collect())
    }

    /// Codimension-one boundary cells.
    pub fn boundary(&self, id: CellId) -> Result<Vec<CellId>> {
        match self.dim(id)? {
            0 => Ok(Vec::new()),
            1 => {
                let (t, h) = self.ends(id)?;
                Ok(vec![t, h])
            }
            2 => self.face_edges(id),
            _ => Ok(self.faces.keys().copied().collect()),
        }
    }

    /// All cells in the closure of `id`, including `id`.
    pub fn closure(&self, id: CellId) -> Result<BTreeSet<CellId>> {
        let mut out = BTreeSet::new();
        let mut stack = vec![id];
        while let Some(c) = stack.pop() {
            if out.insert(c) {
                stack.extend(self.boundary(c)?);
            }
        }
        Ok(out)
    }

    /// Pairs `(c, d)` with `d` a proper boundary cell of `c`.
    pub fn incidence(&self) -> BTreeSet<(CellId, CellId)> {
        let mut out = BTreeSet::new();
        for &c in self.cells.keys() {
            for d in self.closure(c).unwrap_or_default() {
                if d != c {
                    out.insert((c, d));
                }
            }
        }
        out
    }

    /// Pairs `(c, d)` with `d` a codimension-one boundary cell of `c`.
    pub fn cover_relation(&self) -> BTreeSet<(CellId, CellId)> {
        let mut out = BTreeSet::new();
        for &c in self.cells.keys() {
            for d in self.boundary(c).unwrap_or_default() {
                out.insert((c, d));
            }
        }
        out
    }

    /// Faces containing `edge`.
    pub fn faces_of_edge(&self, edge: CellId) -> Vec<CellId> {
        self.faces
            .iter()
            .filter(|(_, c)| c.iter().skip(1).step_by(2).any(|&e| e == edge))
            .map(|(&f, _)| f)
            .collect()
    }

    /// The subcomplex on `keep`; faces and edges outside `keep` are dropped.
    pub fn subcomplex(&self, keep: &BTreeSet<CellId>) -> Complex {
        Complex {
            cells: self
                .cells
                .iter()
                .filter(|(c, _)| keep.contains(c))
                .map(|(&c, &d)| (c, d))
                .collect(),
            edges: self
                .edges
                .iter()
                .filter(|(c, _)| keep.contains(c))
                .map(|(&c, &e)| (c, e))
                .collect(),
            faces: self
                .faces
                .iter()
                .filter(|(c, _)| keep.contains(c))
                .map(|(&c, v)| (c, v.clone()))
                .collect(),
            ball: self.ball.filter(|b| keep.contains(b)),
        }
    }

    /// Every edge reversed.
    pub fn reversed_edges(&self) -> Complex {
        let mut out = self.clone();
        for ends in out.edges.values_mut() {
            *ends = (ends.1, ends.0);
        }
        out
    }

    /// Every face circuit traversed in the opposite direction.
    pub fn flipped_circuits(&self) -> Complex {
        let mut out = self.clone();
        for c in out.faces.values_mut() {
            *c = reverse_circuit(c);
        }
        out
    }

    /// Circuits rotated to start at their smallest vertex, for comparisons.
    pub fn canonical(&self) -> Complex {
        let mut out = self.clone();
        for c in out.faces.values_mut() {
            let len = c.len();
            if len == 0 {
                continue;
            }
            let start = (0..len).step_by(2).min_by_key(|&k| c[k]).unwrap();
            c.rotate_left(start);
        }
        out
    }

    /// Equality up to rotation of face circuits.
    pub fn same_as(&self, other: &Complex) -> bool {
        self.canonical() == other.canonical()
    }

    /// Orientation sources and sinks of the 1-skeleton.
    pub fn sources_and_sinks(&self) -> (Vec<CellId>, Vec<CellId>) {
        let mut indeg: BTreeMap<CellId, usize> =
            self.cells_of_dim(0).into_iter().map(|v| (v, 0)).collect();
        let mut outdeg = indeg.clone();
        for &(t, h) in self.edges.values() {
            *outdeg.entry(t).or_default() += 1;
            *indeg.entry(h).or_default() += 1;
        }
        let sources = indeg
            .iter()
            .filter(|(_, &d)| d == 0)
            .map(|(&v, _)| v)
            .collect();
        let sinks = outdeg
            .iter()
            .filter(|(_, &d)| d == 0)
            .map(|(&v, _)| v)
            .collect();
        (sources, sinks)
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg: HashMap<CellId, usize> =
            self.cells_of_dim(0).into_iter().map(|v| (v, 0)).collect();
        let mut out: HashMap<CellId, Vec<CellId>> = HashMap::new();
        for &(t, h) in self.edges.values() {
            *indeg.entry(h).or_default() += 1;
            out.entry(t).or_default().push(h);
        }
        let mut ready: Vec<CellId> = indeg
            .iter()
            .filter(|(_, &d)| d == 0)
            .map(|(&v, _)| v)
            .collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for &w in out.get(&v).map(|v| v.as_slice()).unwrap_or(&[]) {
                let d = indeg.get_mut(&w).unwrap();
                *d -= 1;
                if *d == 0 {
                    ready.push(w);
                }
            }
        }
        seen == indeg.len()
    }

    /// Boundary cycle of a disk as `(vertices, edges)` in cyclic order, or `None`
    /// when the edges lying in exactly one face do not form one simple cycle.
    pub fn disk_boundary(&self) -> Option<(Vec<CellId>, Vec<CellId>)> {
        let mut uses: BTreeMap<CellId, usize> = self.edges.keys().map(|&e| (e, 0)).collect();
        for c in self.faces.values() {
            for e in c.iter().skip(1).step_by(2) {
                *uses.get_mut(e)? += 1;
            }
        }
        let bnd: Vec<CellId> = uses
            .iter()
            .filter(|(_, &u)| u == 1)
            .map(|(&e, _)| e)
            .collect();
        if bnd.is_empty() {
            return None;
        }
        let mut verts = Vec::new();
        let mut edges = Vec::new();
        let (start, mut at) = self.edges[&bnd[0]];
        verts.push(start);
        edges.push(bnd[0]);
        while at != start {
            verts.push(at);
            let next: Vec<CellId> = bnd
                .iter()
                .copied()
                .filter(|e| !edges.contains(e))
                .filter(|e| {
                    let (t, h) = self.edges[e];
                    t == at || h == at
                })
                .collect();
            if next.len() != 1 {
                return None;
            }
            let (t, h) = self.edges[&next[0]];
            at = if t == at { h } else { t };
            edges.push(next[0]);
        }
        let distinct: BTreeSet<_> = verts.iter().collect();
        (edges.len() == bnd.len() && distinct.len() == verts.len()).then_some((verts, edges))
    }

    /// Structural and regularity checks.
    pub fn validate_regular(&self) -> Report {
        let mut rep = Report::default();
        let mut problems = Vec::new();
        for (&e, &(t, h)) in &self.edges {
            if self.cells.get(&e) != Some(&1) {
                problems.push(format!("edge {e} is not a 1-cell"));
            }
            if t == h {
                problems.push(format!("edge {e} has coincident endpoints"));
            }
            for v in [t, h] {
                if self.cells.get(&v) != Some(&0) {
                    problems.push(format!("edge {e} endpoint {v} is not a vertex"));
                }
            }
        }
        for (&c, &d) in &self.cells {
            let listed = match d {
                1 => self.edges.contains_key(&c),
                2 => self.faces.contains_key(&c),
                3 => self.ball == Some(c),
                _ => true,
            };
            if !listed {
                problems.push(format!("cell {c} of dimension {d} has no boundary data"));
            }
        }
        for (&f, circuit) in &self.faces {
            if let Err(e) = self.check_circuit(f, circuit) {
                problems.push(e);
            }
        }
        rep.push(
            "cells and circuits well formed",
            problems.is_empty(),
            problems.join("; "),
        );
        if !problems.is_empty() {
            return rep;
        }

        let (v, e, f) = (
            self.cells_of_dim(0).len() as i64,
            self.edges.len() as i64,
            self.faces.len() as i64,
        );
        if self.ball.is_some() {
            let balls = self.cells_of_dim(3).len();
            let mut issues = Vec::new();
            if balls != 1 {
                issues.push(format!("{balls} three-cells"));
            }
            for &edge in self.edges.keys() {
                let k = self.faces_of_edge(edge).len();
                if k != 2 {
                    issues.push(format!("edge {edge} lies in {k} faces"));
                }
            }
            for vert in self.cells_of_dim(0) {
                if !self.link_is_cycle(vert) {
                    issues.push(format!("link of vertex {vert} is not a single cycle"));
                }
            }
            if !self.is_connected() {
                issues.push("boundary not connected".into());
            }
            rep.push(
                "boundary is a 2-sphere",
                issues.is_empty(),
                issues.join("; "),
            );
            rep.push(
                "euler characteristic 2",
                v - e + f == 2,
                format!("V={v} E={e} F={f}"),
            );
        } else if f > 0 {
            let mut issues = Vec::new();
            for &edge in self.edges.keys() {
                let k = self.faces_of_edge(edge).len();
                if k == 0 || k > 2 {
                    issues.push(format!("edge {edge} lies in {k} faces"));
                }
            }
            if self.disk_boundary().is_none() {
                issues.push("boundary is not one simple cycle".into());
            }
            if !self.is_connected() {
                issues.push("not connected".into());
            }
            rep.push(
                "complex is a closed disk",
                issues.is_empty(),
                issues.join("; "),
            );
            rep.push(
                "euler characteristic 1",
                v - e + f == 1,
                format!("V={v} E={e} F={f}"),
            );
        }
        rep
    }

    fn check_circuit(&self, f: CellId, c: &[CellId]) -> std::result::Result<(), String> {
        if self.cells.get(&f) != Some(&2) {
            return Err(format!("face {f} is not a 2-cell"));
        }
        if c.len() < 4 || !c.len().is_multiple_of(2) {
            return Err(format!("face {f} circuit has bad length {}", c.len()));
        }
        let mut verts = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for k in (0..c.len()).step_by(2) {
            let (v, e, w) = (c[k], c[k + 1], c[(k + 2) % c.len()]);
            let ends = self
                .edges
                .get(&e)
                .ok_or_else(|| format!("face {f}: {e} is not an edge"))?;
            if !(*ends == (v, w) || *ends == (w, v)) {
                return Err(format!("face {f}: edge {e} does not join {v} and {w}"));
            }
            if !verts.insert(v) || !edges.insert(e) {
                return Err(format!("face {f} circuit is not simple"));
            }
        }
        Ok(())
    }

    fn link_is_cycle(&self, v: CellId) -> bool {
        let mut adj: BTreeMap<CellId, Vec<CellId>> = BTreeMap::new();
        for c in self.faces.values() {
            let len = c.len();
            if let Some(k) = (0..len).step_by(2).find(|&k| c[k] == v) {
                let (a, b) = (c[(k + len - 1) % len], c[k + 1]);
                adj.entry(a).or_default().push(b);
                adj.entry(b).or_default().push(a);
            }
        }
        if adj.is_empty() || adj.values().any(|n| n.len() != 2) {
            return false;
        }
        let start = *adj.keys().next().unwrap();
        let (mut prev, mut at) = (start, adj[&start][0]);
        let mut steps = 1;
        while at != start {
            let n = &adj[&at];
            let next = if n[0] == prev { n[1] } else { n[0] };
            prev = at;
            at = next;
            steps += 1;
            if steps > adj.len() {
                return false;
            }
        }
        steps == adj.len()
    }

    fn is_connected(&self) -> bool {
        let cells: Vec<CellId> = self
            .cells
            .keys()
            .copied()
            .filter(|c| Some(*c) != self.ball)
            .collect();
        let Some(&start) = cells.first() else {
            return true;
        };
        let mut nbrs: HashMap<CellId, Vec<CellId>> = HashMap::new();
        for (c, d) in self.cover_relation() {
            if Some(c) == self.ball {
                continue;
            }
            nbrs.entry(c).or_default().push(d);
            nbrs.entry(d).or_default().push(c);
        }
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for &d in nbrs.get(&c).map(|v| v.as_slice()).unwrap_or(&[]) {
                if seen.insert(d) {
                    stack.push(d);
                }
            }
        }
        seen.len() == cells.len()
    }

    /// Bipolarity of the 1-skeleton: acyclic, one source, one sink, both on the boundary.
    pub fn validate_bipolar(&self) -> Report {
        let mut rep = Report::default();
        rep.push("edge orientation acyclic", self.is_acyclic(), "");
        let (sources, sinks) = self.sources_and_sinks();
        rep.push(
            "single orientation source",
            sources.len() == 1,
            format!("sources {sources:?}"),
        );
        rep.push(
            "single orientation sink",
            sinks.len() == 1,
            format!("sinks {sinks:?}"),
        );
        if let ([n], [s]) = (sources.as_slice(), sinks.as_slice()) {
            rep.push("poles distinct", n != s, format!("N={n} S={s}"));
            if self.ball.is_none() && !self.faces.is_empty() {
                let on = self
                    .disk_boundary()
                    .map(|(v, _)| v.contains(n) && v.contains(s))
                    .unwrap_or(false);
                rep.push("poles on the boundary", on, "");
            }
        }
        rep
    }

    /// The unique orientation source and sink.
    pub fn poles(&self) -> Result<(CellId, CellId)> {
        match self.sources_and_sinks() {
            (so, si) if so.len() == 1 && si.len() == 1 && so[0] != si[0] => Ok((so[0], si[0])),
            (so, si) => Err(Error::InvalidComplex(format!(
                "not bipolar: sources {so:?}, sinks {si:?}"
            ))),
        }
    }

    /// Splits the face boundary at its bipolar extrema.
    ///
    /// Along each side the orientation runs from min to max. Corners:
    /// `w_minus_0` ends side A, `w_plus_1` starts it; `w_minus_1` ends side B,
    /// `w_plus_0` starts it.
    pub fn face_corners(&self, face: CellId) -> Result<FaceCorners> {
        let c = self.circuit(face)?;
        let len = c.len();
        let forward = |k: usize| -> bool {
            // edge at c[k+1] traversed from c[k] to c[k+2]
            self.edges[&c[k + 1]].0 == c[k]
        };
        let mut mins = Vec::new();
        let mut maxs = Vec::new();
        for k in (0..len).step_by(2) {
            let out_fwd = forward(k);
            let prev = (k + len - 2) % len;
            let in_fwd = forward(prev);
            if out_fwd && !in_fwd {
                mins.push(k);
            }
            if !out_fwd && in_fwd {
                maxs.push(k);
            }
        }
        if mins.len() != 1 || maxs.len() != 1 {
            return Err(Error::InvalidComplex(format!(
                "face {face} has {} local minima and {} local maxima on its boundary",
                mins.len(),
                maxs.len()
            )));
        }
        let (kmin, kmax) = (mins[0], maxs[0]);
        let mut path_a = Vec::new();
        let mut k = kmin;
        while k != kmax {
            path_a.push(c[k + 1]);
            k = (k + 2) % len;
        }
        let mut path_b = Vec::new();
        let mut k = kmin;
        while k != kmax {
            let prev = (k + len - 2) % len;
            path_b.push(c[prev + 1]);
            k = prev;
        }
        Ok(FaceCorners {
            face,
            min_vertex: c[kmin],
            max_vertex: c[kmax],
            w_minus_0: *path_a.last().unwrap(),
            w_plus_1: path_a[0],
            w_minus_1: *path_b.last().unwrap(),
            w_plus_0: path_b[0],
            path_a,
            path_b,
        })
    }

    /// Western disk: every interior edge with an endpoint on the boundary other
    /// than `north` points toward that endpoint.
    pub fn validate_western_disk(&self, north: CellId, south: CellId) -> Result<bool> {
        self.disk_edge_rule(north, south, true)
    }

    /// Eastern disk: every interior edge with an endpoint on the boundary other
    /// than `south` points away from that endpoint.
    pub fn validate_eastern_disk(&self, north: CellId, south: CellId) -> Result<bool> {
        self.disk_edge_rule(north, south, false)
    }

    fn disk_edge_rule(&self, north: CellId, south: CellId, western: bool) -> Result<bool> {
        if self.ball.is_some() {
            return Err(Error::InvalidComplex("a disk has no 3-cell".into()));
        }
        let (bv, be) = self
            .disk_boundary()
            .ok_or_else(|| Error::InvalidComplex("not a disk".into()))?;
        if self.poles()? != (north, south) {
            return Ok(false);
        }
        let exempt = if western { north } else { south };
        for (&e, &(t, h)) in &self.edges {
            if be.contains(&e) {
                continue;
            }
            for v in [t, h] {
                if v == exempt || !bv.contains(&v) {
                    continue;
                }
                let ok = if western { h == v } else { t == v };
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub(crate) fn reverse_circuit(c: &[CellId]) -> Vec<CellId> {
    // [v0, e0, v1, e1, ...] -> [v0, e_last, v_last, ...]
    let len = c.len();
    let mut out = Vec::with_capacity(len);
    out.push(c[0]);
    for k in (1..len).rev() {
        out.push(c[k]);
    }
    out
}

impl Decoration {
    /// Interior vertices of a meridian edge path, in order.
    pub fn meridian_vertices(c: &Complex, path: &[CellId]) -> Result<Vec<CellId>> {
        let mut out = Vec::new();
        for w in path.windows(2) {
            let (_, h) = c.ends(w[0])?;
            out.push(h);
        }
        Ok(out)
    }

    /// Cells of the meridian `EW` or `WE` without the poles.
    pub fn meridian_cells(c: &Complex, path: &[CellId]) -> Result<BTreeSet<CellId>> {
        let mut out: BTreeSet<CellId> = path.iter().copied().collect();
        out.extend(Self::meridian_vertices(c, path)?);
        Ok(out)
    }
}

impl Template {
    pub fn new(complex: Complex, decoration: Decoration) -> Self {
        Template {
            complex,
            decoration,
        }
    }

    pub fn ball(&self) -> Result<CellId> {
        self.complex
            .ball
            .ok_or_else(|| Error::InvalidTemplate("no 3-cell".into()))
    }

    pub fn ew_cells(&self) -> Result<BTreeSet<CellId>> {
        Decoration::meridian_cells(&self.complex, &self.decoration.meridian_ew)
    }

    pub fn we_cells(&self) -> Result<BTreeSet<CellId>> {
        Decoration::meridian_cells(&self.complex, &self.decoration.meridian_we)
    }

    /// Closed western hemisphere as a disk complex.
    pub fn closed_west(&self) -> Result<Complex> {
        let mut keep = self.decoration.west.clone();
        keep.extend(self.ew_cells()?);
        keep.extend(self.we_cells()?);
        keep.insert(self.decoration.north);
        keep.insert(self.decoration.south);
        Ok(self.complex.subcomplex(&keep))
    }

    /// Closed eastern hemisphere as a disk complex.
    pub fn closed_east(&self) -> Result<Complex> {
        let mut keep = self.decoration.east.clone();
        keep.extend(self.ew_cells()?);
        keep.extend(self.we_cells()?);
        keep.insert(self.decoration.north);
        keep.insert(self.decoration.south);
        Ok(self.complex.subcomplex(&keep))
    }

    fn hemisphere_face(&self, west: bool, edge: CellId) -> Result<CellId> {
        let side = if west {
            &self.decoration.west
        } else {
            &self.decoration.east
        };
        let found: Vec<CellId> = self
            .complex
            .faces_of_edge(edge)
            .into_iter()
            .filter(|f| side.contains(f))
            .collect();
        match found.as_slice() {
            [f] => Ok(*f),
            _ => Err(Error::InvalidTemplate(format!(
                "edge {edge} borders {} faces of one hemisphere",
                found.len()
            ))),
        }
    }

    /// The corner faces `(NE, NW, SE, SW)`.
    pub fn corner_faces(&self) -> Result<(CellId, CellId, CellId, CellId)> {
        let d = &self.decoration;
        let (we_first, we_last) = (first(&d.meridian_we)?, last(&d.meridian_we)?);
        let (ew_first, ew_last) = (first(&d.meridian_ew)?, last(&d.meridian_ew)?);
        Ok((
            self.hemisphere_face(true, we_first)?,
            self.hemisphere_face(true, ew_first)?,
            self.hemisphere_face(false, ew_last)?,
            self.hemisphere_face(false, we_last)?,
        ))
    }

    /// The 3-cell template conditions (i)–(iv).
    pub fn validate(&self) -> Report {
        let mut rep = Report::default();
        let c = &self.complex;
        let d = &self.decoration;

        let regular = c.validate_regular();
        let closure_ok = c.ball.is_some() && regular.pass();
        let detail = regular
            .failures()
            .iter()
            .map(|f| format!("{}: {}", f.name, f.detail))
            .collect::<Vec<_>>()
            .join("; ");
        rep.push(
            "3-cell template (i) closure of one 3-cell",
            closure_ok,
            if c.ball.is_none() {
                "no 3-cell".to_string()
            } else {
                detail
            },
        );
        if !closure_ok {
            return rep;
        }

        let (ok2, detail2) = match self.check_bipolar_meridians() {
            Ok(()) => (true, String::new()),
            Err(e) => (false, e),
        };
        rep.push(
            "3-cell template (ii) bipolar with two meridians",
            ok2,
            detail2,
        );
        if !ok2 {
            return rep;
        }

        let mut bad = Vec::new();
        let merid: BTreeSet<CellId> = self
            .ew_cells()
            .unwrap()
            .union(&self.we_cells().unwrap())
            .copied()
            .collect();
        for (e, (t, h)) in c.edges() {
            if merid.contains(&e) {
                continue;
            }
            let west = d.west.contains(&e);
            for v in [t, h] {
                if !merid.contains(&v) {
                    continue;
                }
                let ok = if west { h == v } else { t == v };
                if !ok {
                    bad.push(format!("edge {e} at meridian vertex {v}"));
                }
            }
        }
        rep.push(
            "3-cell template (iii) edge orientation at the meridians",
            bad.is_empty(),
            bad.join("; "),
        );

        let (ok4, detail4) = match self.corner_faces() {
            Err(e) => (false, e.to_string()),
            Ok((ne, nw, se, sw)) => {
                let share = |a: CellId, b: CellId, path: &[CellId]| -> Vec<CellId> {
                    let ea = c.face_edges(a).unwrap_or_default();
                    let eb = c.face_edges(b).unwrap_or_default();
                    path.iter()
                        .copied()
                        .filter(|e| ea.contains(e) && eb.contains(e))
                        .collect()
                };
                let s_we = share(ne, sw, &d.meridian_we);
                let s_ew = share(nw, se, &d.meridian_ew);
                (
                    !s_we.is_empty() && !s_ew.is_empty(),
                    format!("NE={ne} SW={sw} share {s_we:?} on WE; NW={nw} SE={se} share {s_ew:?} on EW"),
                )
            }
        };
        rep.push(
            "3-cell template (iv) corner faces overlap on the meridians",
            ok4,
            detail4,
        );
        rep
    }

    fn check_bipolar_meridians(&self) -> std::result::Result<(), String> {
        let c = &self.complex;
        let d = &self.decoration;
        if !c.validate_bipolar().pass() {
            return Err(format!("orientation not bipolar: {}", c.validate_bipolar()));
        }
        let (n, s) = c.poles().map_err(|e| e.to_string())?;
        if (n, s) != (d.north, d.south) {
            return Err(format!(
                "poles are {n},{s} but decoration says {},{}",
                d.north, d.south
            ));
        }
        let mut interior = Vec::new();
        for (name, path) in [("EW", &d.meridian_ew), ("WE", &d.meridian_we)] {
            if path.is_empty() {
                return Err(format!("meridian {name} is empty"));
            }
            let mut at = n;
            for &e in path.iter() {
                let (t, h) = c.ends(e).map_err(|e| e.to_string())?;
                if t != at {
                    return Err(format!(
                        "meridian {name} is not a directed path at edge {e}"
                    ));
                }
                at = h;
            }
            if at != s {
                return Err(format!("meridian {name} does not end at S"));
            }
            interior.extend(Decoration::meridian_vertices(c, path).unwrap());
        }
        let distinct: BTreeSet<_> = interior.iter().collect();
        if distinct.len() != interior.len()
            || d.meridian_ew.iter().any(|e| d.meridian_we.contains(e))
        {
            return Err("meridians are not disjoint".into());
        }
        // partition of the boundary cells
        let ball = c.ball.unwrap();
        let ew = Decoration::meridian_cells(c, &d.meridian_ew).unwrap();
        let we = Decoration::meridian_cells(c, &d.meridian_we).unwrap();
        for (cell, _) in c.cells() {
            if cell == ball {
                continue;
            }
            let hits = [
                cell == n,
                cell == s,
                ew.contains(&cell),
                we.contains(&cell),
                d.west.contains(&cell),
                d.east.contains(&cell),
            ]
            .iter()
            .filter(|&&b| b)
            .count();
            if hits != 1 {
                return Err(format!(
                    "cell {cell} lies in {hits} parts of the boundary decomposition"
                ));
            }
        }
        for id in d.west.iter().chain(&d.east) {
            if !c.contains(*id) {
                return Err(format!("unknown hemisphere cell {id}"));
            }
        }
        // each open hemisphere is a union of open cells on one side of the meridian circle
        for (name, side) in [("W", &d.west), ("E", &d.east)] {
            for &cell in side {
                let dim = c.dim(cell).unwrap();
                if dim == 2 {
                    for b in c.face_edges(cell).unwrap() {
                        if !(side.contains(&b) || ew.contains(&b) || we.contains(&b)) {
                            return Err(format!(
                                "face {cell} of {name} borders edge {b} outside {name}"
                            ));
                        }
                    }
                } else {
                    let star: Vec<CellId> = if dim == 1 {
                        c.faces_of_edge(cell)
                    } else {
                        c.faces()
                            .filter(|(_, circ)| circ.iter().step_by(2).any(|&v| v == cell))
                            .map(|(f, _)| f)
                            .collect()
                    };
                    if star.iter().any(|f| !side.contains(f)) {
                        return Err(format!(
                            "cell {cell} of {name} touches a face outside {name}"
                        ));
                    }
                }
            }
            if !side.iter().any(|&x| c.dim(x).unwrap() == 2) {
                return Err(format!("hemisphere {name} has no face"));
            }
        }
        Ok(())
    }
}

fn first(path: &[CellId]) -> Result<CellId> {
    path.first()
        .copied()
        .ok_or_else(|| Error::InvalidTemplate("empty meridian".into()))
}

fn last(path: &[CellId]) -> Result<CellId> {
    path.last()
        .copied()
        .ok_or_else(|| Error::InvalidTemplate("empty meridian".into()))
}
