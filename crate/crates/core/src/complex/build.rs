use std::collections::{BTreeMap, BTreeSet};

use super::{CellId, Complex, Decoration, Template};
use crate::error::{Error, Result};

/// Boundary of a bipolar disk split into its two directed pole-to-pole paths.
///
/// `forward` is the side whose edges the adjacent faces traverse from north to
/// south in their circuit direction; `backward` is the other side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskSides {
    pub north: CellId,
    pub south: CellId,
    pub forward: Vec<CellId>,
    pub backward: Vec<CellId>,
}

impl DiskSides {
    pub fn of(c: &Complex) -> Result<DiskSides> {
        let (north, south) = c.poles()?;
        let (verts, edges) = c
            .disk_boundary()
            .ok_or_else(|| Error::InvalidComplex("not a disk".into()))?;
        let len = verts.len();
        let kn = verts
            .iter()
            .position(|&v| v == north)
            .ok_or_else(|| Error::InvalidComplex("north not on boundary".into()))?;
        // walk both ways from north to south; verts[k] --edges[k]--> verts[k+1]
        let mut up = Vec::new();
        let mut k = kn;
        while verts[k] != south {
            up.push(edges[k]);
            k = (k + 1) % len;
        }
        let mut down = Vec::new();
        let mut k = kn;
        while verts[k] != south {
            k = (k + len - 1) % len;
            down.push(edges[k]);
        }
        for path in [&up, &down] {
            let mut at = north;
            for &e in path.iter() {
                let (t, h) = c.ends(e)?;
                if t != at {
                    return Err(Error::InvalidComplex(format!(
                        "boundary edge {e} is not directed from north to south"
                    )));
                }
                at = h;
            }
        }
        let e0 = up[0];
        let face = c.faces_of_edge(e0)[0];
        let circ = c.circuit(face)?;
        let pos = circ.iter().position(|&x| x == e0).unwrap();
        let along = circ[pos - 1] == c.ends(e0)?.0;
        let (forward, backward) = if along { (up, down) } else { (down, up) };
        Ok(DiskSides {
            north,
            south,
            forward,
            backward,
        })
    }
}

/// Planar disk with one 2-cell whose boundary has `m` edges on the forward
/// side and `n` on the backward side.
///
/// Ids: vertices `1..=m+n` with north 1 and south 2, then forward edges,
/// backward edges, and the face last.
pub fn disk(m: usize, n: usize) -> Result<(Complex, DiskSides)> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidComplex(
            "disk sides need at least one edge".into(),
        ));
    }
    let (north, south) = (1, 2);
    let mut c = Complex::new();
    let nv = (m + n) as CellId;
    for v in 1..=nv {
        c.add_vertex(v);
    }
    let side_vertices = |count: usize, first: CellId| -> Vec<CellId> {
        let mut vs = vec![north];
        vs.extend(first..first + count as CellId - 1);
        vs.push(south);
        vs
    };
    let a_verts = side_vertices(m, 3);
    let b_verts = side_vertices(n, 3 + m as CellId - 1);
    let mut next = nv + 1;
    let mut a_edges = Vec::new();
    for w in a_verts.windows(2) {
        c.add_edge(next, w[0], w[1]);
        a_edges.push(next);
        next += 1;
    }
    let mut b_edges = Vec::new();
    for w in b_verts.windows(2) {
        c.add_edge(next, w[0], w[1]);
        b_edges.push(next);
        next += 1;
    }
    let mut circuit_edges = a_edges.clone();
    circuit_edges.extend(b_edges.iter().rev());
    c.add_face_edges(next, north, &circuit_edges)?;
    Ok((
        c,
        DiskSides {
            north,
            south,
            forward: a_edges,
            backward: b_edges,
        },
    ))
}

/// Chafee–Infante attractor with `2m+1` equilibria for `m <= 3`.
///
/// `m = 3` yields the decorated ball: N=1, S=2, meridian edges EW=3 and WE=4,
/// faces W=5 and E=6, ball 7.
pub fn chafee_infante_ball(m: usize) -> Result<(Complex, Option<Decoration>)> {
    let mut c = Complex::new();
    match m {
        1 => {
            c.add_vertex(1).add_vertex(2).add_edge(3, 1, 2);
            Ok((c, None))
        }
        2 => Ok((disk(1, 1)?.0, None)),
        3 => {
            c.add_vertex(1)
                .add_vertex(2)
                .add_edge(3, 1, 2)
                .add_edge(4, 1, 2);
            c.add_face(5, vec![1, 4, 2, 3])
                .add_face(6, vec![1, 3, 2, 4])
                .set_ball(7);
            let d = Decoration {
                north: 1,
                south: 2,
                meridian_ew: vec![3],
                meridian_we: vec![4],
                west: BTreeSet::from([5]),
                east: BTreeSet::from([6]),
            };
            Ok((c, Some(d)))
        }
        _ => Err(Error::InvalidComplex(format!(
            "chafee-infante ball needs m <= 3, got {m}"
        ))),
    }
}

const OCTA_EDGES: [(CellId, CellId, CellId); 12] = [
    (7, 1, 2),
    (8, 1, 3),
    (9, 1, 4),
    (10, 1, 5),
    (11, 3, 2),
    (12, 4, 3),
    (13, 4, 5),
    (14, 5, 2),
    (15, 6, 2),
    (16, 6, 3),
    (17, 4, 6),
    (18, 6, 5),
];

// coherently oriented triangles, as [v, e, v, e, v, e]
const OCTA_FACES: [(CellId, [CellId; 6]); 8] = [
    (19, [1, 8, 3, 12, 4, 9]),
    (20, [1, 9, 4, 13, 5, 10]),
    (21, [1, 10, 5, 14, 2, 7]),
    (22, [6, 16, 3, 11, 2, 15]),
    (23, [4, 12, 3, 16, 6, 17]),
    (24, [4, 17, 6, 18, 5, 13]),
    (25, [6, 15, 2, 14, 5, 18]),
    (26, [1, 7, 2, 11, 3, 8]),
];

/// The solid octahedron: vertices 1–6 (antipodal pairs 1–6, 2–4, 3–5), edges
/// 7–18, faces 19–26, ball 27, with the 2+6 template's edge orientation.
pub fn solid_octahedron() -> Complex {
    let mut c = Complex::new();
    for v in 1..=6 {
        c.add_vertex(v);
    }
    for (e, t, h) in OCTA_EDGES {
        c.add_edge(e, t, h);
    }
    for (f, circ) in OCTA_FACES {
        c.add_face(f, circ.to_vec());
    }
    c.set_ball(27);
    c
}

/// The octahedral template with a two-face eastern hemisphere.
pub fn octahedron_template() -> Template {
    octahedron((1, 2), &[8, 11], &[10, 14]).expect("the reference octahedron is a valid template")
}

/// Splits the boundary sphere along the meridian circle. The eastern side is
/// the one whose faces run along `EW` from north to south in circuit direction.
pub fn hemispheres(
    c: &Complex,
    north: CellId,
    ew: &[CellId],
    we: &[CellId],
) -> Result<(BTreeSet<CellId>, BTreeSet<CellId>)> {
    let ew_cells = Decoration::meridian_cells(c, ew)?;
    let we_cells = Decoration::meridian_cells(c, we)?;
    let on_merid = |x: CellId| ew_cells.contains(&x) || we_cells.contains(&x);
    let e0 = *ew
        .first()
        .ok_or_else(|| Error::InvalidTemplate("empty meridian".into()))?;
    let south = c.ends(*ew.last().unwrap())?.1;
    // EW leaves north through e0; circuit runs along it if it visits north right before e0
    let seed = c
        .faces_of_edge(e0)
        .into_iter()
        .find(|&f| {
            let circ = c.circuit(f).unwrap();
            let k = circ.iter().position(|&x| x == e0).unwrap();
            circ[k - 1] == north
        })
        .ok_or_else(|| Error::InvalidTemplate(format!("no face runs along meridian edge {e0}")))?;
    let mut east_faces = BTreeSet::from([seed]);
    let mut stack = vec![seed];
    while let Some(f) = stack.pop() {
        for e in c.face_edges(f)? {
            if on_merid(e) {
                continue;
            }
            for g in c.faces_of_edge(e) {
                if east_faces.insert(g) {
                    stack.push(g);
                }
            }
        }
    }
    let mut west = BTreeSet::new();
    let mut east = BTreeSet::new();
    for (cell, dim) in c.cells() {
        if dim == 3 || on_merid(cell) || cell == north || cell == south {
            continue;
        }
        let star: Vec<CellId> = match dim {
            2 => vec![cell],
            1 => c.faces_of_edge(cell),
            _ => c
                .faces()
                .filter(|(_, circ)| circ.iter().step_by(2).any(|&v| v == cell))
                .map(|(f, _)| f)
                .collect(),
        };
        if star.is_empty() {
            continue;
        }
        if star.iter().all(|f| east_faces.contains(f)) {
            east.insert(cell);
        } else if star.iter().all(|f| !east_faces.contains(f)) {
            west.insert(cell);
        }
    }
    Ok((west, east))
}

/// Decorated solid octahedron for the given poles and meridians; the edge
/// orientation is the unique one that makes a valid template.
pub fn octahedron(poles: (CellId, CellId), we: &[CellId], ew: &[CellId]) -> Result<Template> {
    let base = solid_octahedron();
    let undirected: Vec<(CellId, CellId, CellId)> = OCTA_EDGES.to_vec();
    let mut found = Vec::new();
    for mask in 0u32..(1 << undirected.len()) {
        let mut c = base.clone();
        for (k, &(e, a, b)) in undirected.iter().enumerate() {
            let (t, h) = if mask >> k & 1 == 0 { (a, b) } else { (b, a) };
            c.edges.insert(e, (t, h));
        }
        if c.poles().ok() != Some(poles) {
            continue;
        }
        let Ok((west, east)) = hemispheres(&c, poles.0, ew, we) else {
            continue;
        };
        let t = Template::new(
            c,
            Decoration {
                north: poles.0,
                south: poles.1,
                meridian_ew: ew.to_vec(),
                meridian_we: we.to_vec(),
                west,
                east,
            },
        );
        if t.validate().pass() {
            found.push(t);
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        k => Err(Error::InvalidTemplate(format!(
            "{k} edge orientations fit poles {poles:?}, WE {we:?}, EW {ew:?}"
        ))),
    }
}

/// Glues a western and an eastern closed disk along their boundary circles.
///
/// In the western disk the backward side becomes `EW` and the forward side
/// `WE`; in the eastern disk the forward side is `EW`. Eastern interior cells
/// are renumbered after the western ids; the ball gets the next id.
pub fn weld(west: &Complex, east: &Complex) -> Result<Template> {
    let ws = DiskSides::of(west)?;
    let es = DiskSides::of(east)?;
    if ws.backward.len() != es.forward.len() || ws.forward.len() != es.backward.len() {
        return Err(Error::InvalidComplex(format!(
            "meridian lengths differ: west EW {} WE {}, east EW {} WE {}",
            ws.backward.len(),
            ws.forward.len(),
            es.forward.len(),
            es.backward.len()
        )));
    }
    let mut map: BTreeMap<CellId, CellId> = BTreeMap::new();
    map.insert(es.north, ws.north);
    map.insert(es.south, ws.south);
    for (wpath, epath) in [(&ws.backward, &es.forward), (&ws.forward, &es.backward)] {
        for (&we, &ee) in wpath.iter().zip(epath.iter()) {
            map.insert(ee, we);
            let (wt, wh) = west.ends(we)?;
            let (et, eh) = east.ends(ee)?;
            map.insert(et, wt);
            map.insert(eh, wh);
        }
    }
    let mut next = west.cells().map(|(c, _)| c).max().unwrap_or(0) + 1;
    for (cell, _) in east.cells() {
        map.entry(cell).or_insert_with(|| {
            next += 1;
            next - 1
        });
    }
    let mut c = west.clone();
    let mut east_cells = BTreeSet::new();
    for (cell, dim) in east.cells() {
        let id = map[&cell];
        if !west.contains(id) {
            east_cells.insert(id);
            match dim {
                0 => {
                    c.add_vertex(id);
                }
                1 => {
                    let (t, h) = east.ends(cell)?;
                    c.add_edge(id, map[&t], map[&h]);
                }
                _ => {}
            }
        }
    }
    for (f, circ) in east.faces() {
        c.add_face(map[&f], circ.iter().map(|x| map[x]).collect());
    }
    c.set_ball(next);
    let boundary: BTreeSet<CellId> = [ws.north, ws.south]
        .into_iter()
        .chain(Decoration::meridian_cells(west, &ws.backward)?)
        .chain(Decoration::meridian_cells(west, &ws.forward)?)
        .collect();
    let west_cells = west
        .cells()
        .map(|(x, _)| x)
        .filter(|x| !boundary.contains(x))
        .collect();
    let d = Decoration {
        north: ws.north,
        south: ws.south,
        meridian_ew: ws.backward.clone(),
        meridian_we: ws.forward.clone(),
        west: west_cells,
        east: east_cells,
    };
    Ok(Template::new(c, d))
}

/// One of two mirror-image balls on 13 cells with one-edge meridians
/// `EW = 2`, `WE = 12`, poles 1 and 13, and 3-cell `4` (`plus`) or `10`.
///
/// In the `plus` ball the west is the single bigon 3 and the east holds faces
/// 5, 9, 11 around the inner vertex 7; the other ball swaps the roles.
pub fn mirror_ball(plus: bool) -> Template {
    let mut c = Complex::new();
    c.add_vertex(1)
        .add_vertex(13)
        .add_edge(2, 1, 13)
        .add_edge(12, 1, 13);
    let d = if plus {
        c.add_vertex(7)
            .add_edge(6, 1, 7)
            .add_edge(8, 7, 13)
            .add_edge(10, 7, 13);
        c.add_face(3, vec![1, 12, 13, 2])
            .add_face(5, vec![1, 2, 13, 8, 7, 6])
            .add_face(9, vec![7, 8, 13, 10])
            .add_face(11, vec![1, 6, 7, 10, 13, 12])
            .set_ball(4);
        (BTreeSet::from([3]), BTreeSet::from([5, 6, 7, 8, 9, 10, 11]))
    } else {
        c.add_vertex(5)
            .add_edge(4, 1, 5)
            .add_edge(6, 5, 13)
            .add_edge(8, 5, 13);
        c.add_face(3, vec![1, 4, 5, 6, 13, 2])
            .add_face(7, vec![5, 8, 13, 6])
            .add_face(9, vec![1, 12, 13, 8, 5, 4])
            .add_face(11, vec![1, 2, 13, 12])
            .set_ball(10);
        (BTreeSet::from([3, 4, 5, 6, 7, 8, 9]), BTreeSet::from([11]))
    };
    let decoration = Decoration {
        north: 1,
        south: 13,
        meridian_ew: vec![2],
        meridian_we: vec![12],
        west: d.0,
        east: d.1,
    };
    Template::new(c, decoration)
}
