use std::collections::BTreeSet;

use super::{CellId, Complex, Decoration};
use crate::analysis::{HemisphereTemplate, Sign};
use crate::error::{Error, Result};

fn single(set: &BTreeSet<CellId>, what: &str, v: CellId) -> Result<CellId> {
    match set.iter().collect::<Vec<_>>().as_slice() {
        [x] => Ok(**x),
        _ => Err(Error::InvalidTemplate(format!(
            "{what} of {v} has {} members",
            set.len()
        ))),
    }
}

/// Chains the edges of `cells` into a directed path from `from` to `to`; the
/// vertices in `cells` must be exactly the interior vertices of that path.
fn chain(
    c: &Complex,
    cells: &BTreeSet<CellId>,
    from: CellId,
    to: CellId,
    what: &str,
) -> Result<Vec<CellId>> {
    let edges: Vec<CellId> = cells
        .iter()
        .copied()
        .filter(|&x| c.dim(x).ok() == Some(1))
        .collect();
    let verts: BTreeSet<CellId> = cells
        .iter()
        .copied()
        .filter(|&x| c.dim(x).ok() == Some(0))
        .collect();
    if edges.len() + verts.len() != cells.len() {
        return Err(Error::InvalidTemplate(format!(
            "{what} contains cells of dimension above one"
        )));
    }
    let mut path = Vec::new();
    let mut interior = BTreeSet::new();
    let mut at = from;
    while at != to {
        let next: Vec<CellId> = edges
            .iter()
            .copied()
            .filter(|&e| !path.contains(&e) && c.ends(e).unwrap().0 == at)
            .collect();
        let [e] = next.as_slice() else {
            return Err(Error::InvalidTemplate(format!(
                "{what} does not chain at vertex {at}: {next:?}"
            )));
        };
        path.push(*e);
        at = c.ends(*e)?.1;
        if at != to {
            interior.insert(at);
        }
    }
    if path.len() != edges.len() || interior != verts {
        return Err(Error::InvalidTemplate(format!(
            "{what} is not a single simple path"
        )));
    }
    Ok(path)
}

/// Rebuilds the cell complex and, when a Morse-3 crossing exists, its template
/// decoration from the signed target sets.
///
/// Face circuits run from the minimum along the `-` half and back along the
/// `+` half, except for western faces of a ball, which run the other way.
pub fn complex_from_signed_template(
    t: &HemisphereTemplate,
) -> Result<(Complex, Option<Decoration>)> {
    let mut c = Complex::new();
    let tops = t.of_index(3);
    if tops.len() > 1 || t.morse.values().any(|&i| i > 3) {
        return Err(Error::InvalidTemplate(format!(
            "morse indices exceed a single 3-cell: {tops:?}"
        )));
    }
    for v in t.of_index(0) {
        c.add_vertex(v);
    }
    for e in t.of_index(1) {
        let tail = single(&t.get(e, 0, Sign::Minus), "E-0", e)?;
        let head = single(&t.get(e, 0, Sign::Plus), "E+0", e)?;
        c.add_edge(e, tail, head);
    }
    let top = tops.first().copied();
    let west: BTreeSet<CellId> = top.map(|o| t.get(o, 2, Sign::Minus)).unwrap_or_default();
    for f in t.of_index(2) {
        let lo = single(&t.get(f, 0, Sign::Minus), "E-0", f)?;
        let hi = single(&t.get(f, 0, Sign::Plus), "E+0", f)?;
        let minus = chain(
            &c,
            &t.get(f, 1, Sign::Minus),
            lo,
            hi,
            &format!("E-1 of {f}"),
        )?;
        let plus = chain(&c, &t.get(f, 1, Sign::Plus), lo, hi, &format!("E+1 of {f}"))?;
        let (out, back) = if west.contains(&f) {
            (plus, minus)
        } else {
            (minus, plus)
        };
        let mut edges = out;
        edges.extend(back.into_iter().rev());
        c.add_face_edges(f, lo, &edges)?;
    }
    let Some(o) = top else { return Ok((c, None)) };
    c.set_ball(o);
    let north = single(&t.get(o, 0, Sign::Minus), "E-0", o)?;
    let south = single(&t.get(o, 0, Sign::Plus), "E+0", o)?;
    let d = Decoration {
        north,
        south,
        meridian_ew: chain(
            &c,
            &t.get(o, 1, Sign::Minus),
            north,
            south,
            "E-1 of the ball",
        )?,
        meridian_we: chain(
            &c,
            &t.get(o, 1, Sign::Plus),
            north,
            south,
            "E+1 of the ball",
        )?,
        west,
        east: t.get(o, 2, Sign::Plus),
    };
    Ok((c, Some(d)))
}
