mod common;

use std::collections::BTreeSet;

use common::*;
use sturmkit::complex::{chafee_infante_ball, octahedron_template, Complex};
use sturmkit::pairs::{szs_pair, zs_pair, PathPair};
use sturmkit::{Meander, Permutation, Sign, SignedZero, ZeroMatrix};

fn zm(s: &str) -> ZeroMatrix {
    ZeroMatrix::from_sigma(&Permutation::parse(s, None).unwrap()).unwrap()
}

fn oct() -> ZeroMatrix {
    ZeroMatrix::new(&Meander::with_labels(&oct_sigma(), OCT_H0.to_vec()).unwrap()).unwrap()
}

fn of_pair(p: &PathPair) -> ZeroMatrix {
    ZeroMatrix::new(&p.meander().unwrap()).unwrap()
}

/// Every labelled Sturm meander with its prescribed complex.
fn realized() -> Vec<(String, ZeroMatrix, Complex)> {
    let mut out = Vec::new();
    for (name, t) in template_family() {
        out.push((name, of_pair(&szs_pair(&t).unwrap()), t.complex));
    }
    for (name, c) in planar_family() {
        out.push((name, of_pair(&zs_pair(&c).unwrap()), c));
    }
    let (seg, _) = chafee_infante_ball(1).unwrap();
    // the edge 3 sits between its endpoints on both orders
    let m = Meander::with_labels(&Permutation::identity(3), vec![1, 3, 2]).unwrap();
    out.push(("chafee-infante 1".into(), ZeroMatrix::new(&m).unwrap(), seg));
    out
}

/// `a` contains `b` in its boundary: the strict closure pairs.
fn closure_pairs(c: &Complex) -> BTreeSet<(u32, u32)> {
    let mut out = BTreeSet::new();
    for (a, _) in c.cells() {
        for b in c.closure(a).unwrap() {
            if b != a {
                out.insert((a, b));
            }
        }
    }
    out
}

fn zero(j: usize, sign: Sign) -> SignedZero {
    SignedZero { j, sign }
}

#[test]
fn identity_three() {
    let z = zm("1 2 3");
    for (a, b) in [(1, 2), (2, 3), (1, 3)] {
        assert_eq!(z.z(a, b).unwrap(), zero(0, Sign::Minus));
        assert_eq!(z.z(b, a).unwrap(), zero(0, Sign::Plus));
    }
    assert_eq!(z.connection_graph(), BTreeSet::from([(2, 1), (2, 3)]));
}

#[test]
fn poles_against_the_top_cell() {
    for (name, t) in template_family() {
        let z = of_pair(&szs_pair(&t).unwrap());
        let (o, d) = (t.complex.ball().unwrap(), &t.decoration);
        assert_eq!(z.z(d.north, o).unwrap(), zero(0, Sign::Minus), "{name}");
        assert_eq!(z.z(d.south, o).unwrap(), zero(0, Sign::Plus), "{name}");
    }
}

#[test]
fn octahedron_faces_against_the_top_cell() {
    let z = oct();
    for f in 19..=26 {
        let want = if f == 21 || f == 26 {
            Sign::Plus
        } else {
            Sign::Minus
        };
        assert_eq!(z.z(f, 27).unwrap(), zero(2, want), "face {f}");
    }
}

#[test]
fn adjacency_and_blocking() {
    // neighbors along either order can never be blocked
    for (name, z, _) in realized() {
        let m = z.meander().clone();
        for iota in 0..2 {
            for w in m.order(iota).windows(2) {
                for k in 0..4 {
                    assert!(z.k_adjacent(w[0], w[1], k).unwrap(), "{name}: {w:?} k={k}");
                }
            }
        }
    }
    let o = oct();
    for v in 1..27 {
        for w in 1..27 {
            assert!(!o.blocks(27, v, w).unwrap(), "{w} blocks 27 -> {v}");
        }
    }
    // in the five-equilibrium attractor no third equilibrium blocks an index drop of one
    let ci = zm("1 4 3 2 5");
    for a in 1..=5u32 {
        for b in 1..=5u32 {
            if ci.morse(a).unwrap() == ci.morse(b).unwrap() + 1 {
                assert!(ci.connects(a, b).unwrap(), "{a} -> {b}");
                for w in 1..=5 {
                    assert!(!ci.blocks(a, b, w).unwrap(), "{w} blocks {a} -> {b}");
                }
            }
        }
    }
}

#[test]
fn octahedron_connections() {
    let z = oct();
    for v in 1..=27 {
        assert_eq!(z.connects(27, v).unwrap(), v != 27);
        assert!(!z.connects(v, v).unwrap());
    }
    assert!(z.connects(19, 3).unwrap());
    assert!(!z.connects(19, 2).unwrap());
    let c = octahedron_template().complex;
    assert_eq!(z.connection_graph(), c.cover_relation());
    // 8 faces from the ball, 3 edges per face, 2 vertices per edge
    assert_eq!(z.connection_graph().len(), 8 + 24 + 24);
}

#[test]
fn five_equilibria_connection_graph() {
    let z = zm("1 4 3 2 5");
    let want = BTreeSet::from([(3, 2), (3, 4), (2, 1), (2, 5), (4, 1), (4, 5)]);
    assert_eq!(z.connection_graph(), want);
    // plus the two cascades from the source to the sinks
    assert_eq!(z.connections().len(), want.len() + 2);
}

#[test]
fn octahedron_hemisphere_template() {
    let z = oct();
    let t = z.hemisphere_template().unwrap();
    let d = octahedron_template().decoration;
    let set = |v: &[u32]| v.iter().copied().collect::<BTreeSet<u32>>();
    assert_eq!(t.get(27, 0, Sign::Minus), set(&[1]));
    assert_eq!(t.get(27, 0, Sign::Plus), set(&[2]));
    assert_eq!(t.get(27, 1, Sign::Plus), set(&[8, 3, 11]));
    assert_eq!(t.get(27, 1, Sign::Minus), set(&[10, 5, 14]));
    assert_eq!(t.get(27, 2, Sign::Minus), d.west);
    assert_eq!(t.get(27, 2, Sign::Plus), d.east);
    assert!(set(&[19, 20, 22, 23, 24, 25]).is_subset(&d.west));
    assert_eq!(d.east, set(&[7, 21, 26]));
}

#[test]
fn small_hemisphere_templates() {
    let (c, d) = chafee_infante_ball(3).unwrap();
    let t = sturmkit::complex::Template::new(c, d.unwrap());
    let z = of_pair(&szs_pair(&t).unwrap());
    let h = z.hemisphere_template().unwrap();
    let o = t.complex.ball().unwrap();
    for j in 0..3 {
        for sign in [Sign::Minus, Sign::Plus] {
            assert_eq!(h.get(o, j, sign).len(), 1, "level {j} {sign:?}");
        }
    }
    // every saddle has exactly one sink on each side
    for (name, z, _) in realized() {
        let h = z.hemisphere_template().unwrap();
        for v in h.of_index(1) {
            assert_eq!(h.get(v, 0, Sign::Minus).len(), 1, "{name}: {v}");
            assert_eq!(h.get(v, 0, Sign::Plus).len(), 1, "{name}: {v}");
        }
    }
}

#[test]
fn connections_match_closure_incidence() {
    for (name, z, c) in realized() {
        assert_eq!(z.connections(), closure_pairs(&c), "{name}");
        assert_eq!(z.connection_graph(), c.cover_relation(), "{name}");
    }
}

#[test]
fn hemisphere_conditions_on_every_crossing() {
    for (name, z, _) in realized() {
        let rep = z
            .hemisphere_report(&z.hemisphere_template().unwrap())
            .unwrap();
        assert!(rep.pass(), "{name}\n{rep}");
    }
}

#[test]
fn connection_relation_is_transitive_and_drops_index() {
    let mut cases: Vec<(String, ZeroMatrix)> =
        realized().into_iter().map(|(n, z, _)| (n, z)).collect();
    cases.push((
        "sigma minus".into(),
        ZeroMatrix::from_sigma(&sigma_minus()).unwrap(),
    ));
    for (name, z) in cases {
        let conns = z.connections();
        for &(a, b) in &conns {
            assert!(
                z.morse(a).unwrap() > z.morse(b).unwrap(),
                "{name}: {a} -> {b}"
            );
            for &(b2, c) in &conns {
                if b2 == b {
                    assert!(conns.contains(&(a, c)), "{name}: {a} -> {b} -> {c}");
                }
            }
        }
    }
}

#[test]
fn small_sturm_permutations_satisfy_the_hemisphere_conditions() {
    for s in sturm_upto(9) {
        let z = ZeroMatrix::from_sigma(&s).unwrap();
        let rep = z
            .hemisphere_report(&z.hemisphere_template().unwrap())
            .unwrap();
        assert!(rep.pass(), "{s}\n{rep}");
        let conns = z.connections();
        for &(a, b) in &conns {
            for &(_, c) in conns.range((b, 0)..=(b, u32::MAX)) {
                assert!(conns.contains(&(a, c)), "{s}: {a} -> {b} -> {c}");
            }
        }
    }
}
