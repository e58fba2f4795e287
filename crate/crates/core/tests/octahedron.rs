use std::collections::BTreeSet;

use sturmkit::complex::{complex_from_signed_template, octahedron_template, solid_octahedron};
use sturmkit::pairs::{scoop, szs_pair, Side};
use sturmkit::{Meander, Permutation, Pole, Sign, ZeroMatrix};

const H0: [u32; 27] = [
    1, 10, 20, 9, 4, 13, 24, 17, 6, 18, 5, 14, 25, 15, 22, 16, 23, 12, 19, 27, 21, 7, 26, 8, 3, 11,
    2,
];
const H1: [u32; 27] = [
    1, 8, 19, 9, 4, 12, 23, 17, 6, 16, 3, 11, 22, 15, 25, 18, 24, 13, 20, 27, 26, 7, 21, 10, 5, 14,
    2,
];
const SIGMA: &str = "(2 24)(3 19)(6 18)(7 17)(10 16)(11 25)(12 26)(13 15)(21 23)";

fn sigma() -> Permutation {
    Permutation::parse(SIGMA, Some(27)).unwrap()
}

fn labelled() -> Meander {
    Meander::with_labels(&sigma(), H0.to_vec()).unwrap()
}

#[test]
fn szs_pair_reproduces_the_reference_paths() {
    let p = szs_pair(&octahedron_template()).unwrap();
    assert_eq!(p.h0, H0);
    assert_eq!(p.h1, H1);
    assert_eq!(p.meander().unwrap().sigma(), &sigma());
}

#[test]
fn labelled_meander_matches_the_paths() {
    let m = labelled();
    assert_eq!(m.order(1), H1);
}

#[test]
fn connection_graph_is_the_closure_incidence() {
    let z = ZeroMatrix::new(&labelled()).unwrap();
    let c = solid_octahedron();
    let conns = z.connections();
    let mut want = BTreeSet::new();
    for (cell, _) in c.cells() {
        for b in c.closure(cell).unwrap() {
            if b != cell {
                want.insert((cell, b));
            }
        }
    }
    let missing: Vec<_> = want.difference(&conns).collect();
    let extra: Vec<_> = conns.difference(&want).collect();
    assert!(
        missing.is_empty() && extra.is_empty(),
        "missing {missing:?} extra {extra:?}"
    );
    assert_eq!(z.connection_graph(), c.cover_relation());
}

#[test]
fn top_crossing_sets() {
    let t = ZeroMatrix::new(&labelled())
        .unwrap()
        .hemisphere_template()
        .unwrap();
    assert_eq!(t.get(27, 0, Sign::Minus), BTreeSet::from([1]));
    assert_eq!(t.get(27, 0, Sign::Plus), BTreeSet::from([2]));
    assert_eq!(t.get(27, 1, Sign::Plus), BTreeSet::from([8, 3, 11]));
    assert_eq!(t.get(27, 1, Sign::Minus), BTreeSet::from([10, 5, 14]));
    assert_eq!(t.get(27, 2, Sign::Plus), BTreeSet::from([21, 26, 7]));
}

#[test]
fn roundtrip() {
    let z = ZeroMatrix::new(&labelled()).unwrap();
    let (c, d) = complex_from_signed_template(&z.hemisphere_template().unwrap()).unwrap();
    let t = octahedron_template();
    assert!(c.same_as(&t.complex), "{c:?}");
    assert_eq!(d.unwrap(), t.decoration);
}

#[test]
fn serpents_and_neighbors() {
    let m = labelled();
    assert_eq!(m.neighbors(0).unwrap(), (19, 21));
    assert_eq!(m.neighbors(1).unwrap(), (20, 26));
    assert_eq!(m.extreme_sources(1), Some((19, 21)));
    let ov = |a, p: Pole| {
        Meander::overlap(
            &m.polar_serpent(a, p).unwrap(),
            &m.polar_serpent(1 - a, p.opposite()).unwrap(),
        )
    };
    assert_eq!(ov(0, Pole::North), BTreeSet::from([10]));
    assert_eq!(ov(0, Pole::South), BTreeSet::from([8]));
    assert!(m.is_three_meander_template());
}

#[test]
fn east_scoop() {
    let m = labelled();
    let s = scoop(&m, Side::East).unwrap();
    assert_eq!(s.len(), 23);
    assert!(s.is_sturm());
    let t = octahedron_template();
    let z = ZeroMatrix::new(&s).unwrap();
    let (c, d) = complex_from_signed_template(&z.hemisphere_template().unwrap()).unwrap();
    assert!(d.is_none());
    assert!(
        c.same_as(&t.closed_west().unwrap().flipped_circuits()),
        "{c:?}"
    );
}
