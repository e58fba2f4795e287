//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use sturmkit::complex::{
    chafee_infante_ball, disk, mirror_ball, octahedron_template, weld, Complex, Template,
};
use sturmkit::pairs::standard_handed;
use sturmkit::{Meander, Permutation};

pub const OCT_H0: [u32; 27] = [
    1, 10, 20, 9, 4, 13, 24, 17, 6, 18, 5, 14, 25, 15, 22, 16, 23, 12, 19, 27, 21, 7, 26, 8, 3, 11,
    2,
];
pub const OCT_H1: [u32; 27] = [
    1, 8, 19, 9, 4, 12, 23, 17, 6, 16, 3, 11, 22, 15, 25, 18, 24, 13, 20, 27, 26, 7, 21, 10, 5, 14,
    2,
];
pub const OCT_SIGMA: &str = "(2 24)(3 19)(6 18)(7 17)(10 16)(11 25)(12 26)(13 15)(21 23)";
pub const SIGMA_PLUS: &str = "(2 12)(5 11)(8 10)";
pub const SIGMA_MINUS: &str = "1 12 9 4 5 8 7 6 3 10 11 2 13";

pub fn perm(s: &str, n: usize) -> Permutation {
    Permutation::parse(s, Some(n)).unwrap()
}

pub fn oct_sigma() -> Permutation {
    perm(OCT_SIGMA, 27)
}

pub fn sigma_plus() -> Permutation {
    perm(SIGMA_PLUS, 13)
}

pub fn sigma_minus() -> Permutation {
    perm(SIGMA_MINUS, 13)
}

/// Single-face disks with `m + n <= 5` boundary edges.
pub fn small_disks() -> Vec<((usize, usize), Complex)> {
    let mut out = Vec::new();
    for m in 1..=4 {
        for n in 1..=(5 - m) {
            out.push(((m, n), disk(m, n).unwrap().0));
        }
    }
    out
}

/// Welds of every compatible pair of small disks.
pub fn welded_balls() -> Vec<(String, Template)> {
    let disks = small_disks();
    let mut out = Vec::new();
    for (wmn, w) in &disks {
        for (emn, e) in &disks {
            if let Ok(t) = weld(w, e) {
                out.push((
                    format!("weld {wmn:?}|{emn:?}"),
                    standard_handed(&t).unwrap(),
                ));
            }
        }
    }
    out
}

/// The decorated balls used throughout: Chafee-Infante, welds, octahedron, mirror pair.
pub fn template_family() -> Vec<(String, Template)> {
    let (c, d) = chafee_infante_ball(3).unwrap();
    let mut out = vec![("chafee-infante 3".to_string(), Template::new(c, d.unwrap()))];
    out.extend(welded_balls());
    out.push(("octahedron".into(), octahedron_template()));
    out.push(("mirror plus".into(), mirror_ball(true)));
    out.push(("mirror minus".into(), mirror_ball(false)));
    out
}

/// Every planar complex with a ZS-pair used in the tests: small disks, the
/// lower Chafee-Infante attractors and the octahedron hemispheres.
pub fn planar_family() -> Vec<(String, Complex)> {
    let mut out: Vec<(String, Complex)> = small_disks()
        .into_iter()
        .map(|(mn, c)| (format!("disk {mn:?}"), c))
        .collect();
    out.push(("chafee-infante 2".into(), chafee_infante_ball(2).unwrap().0));
    let oct = octahedron_template();
    out.push(("octahedron west".into(), oct.closed_west().unwrap()));
    out.push(("octahedron east".into(), oct.closed_east().unwrap()));
    out
}

/// Calls `f` on every permutation of `1..=n`.
pub fn all_perms(n: usize, f: &mut dyn FnMut(&Permutation)) {
    fn go(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&Permutation)) {
        if k == v.len() {
            f(&Permutation::from_one_line(v).unwrap());
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            go(v, k + 1, f);
            v.swap(k, i);
        }
    }
    go(&mut (1..=n).collect(), 0, f);
}

/// All Sturm permutations with at most `n` crossings.
pub fn sturm_upto(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for k in (1..=n).step_by(2) {
        all_perms(k, &mut |p| {
            if Meander::build(p).is_sturm() {
                out.push(p.clone());
            }
        });
    }
    out
}
