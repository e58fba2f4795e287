mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sturmkit::complex::disk;
use sturmkit::meander::{morse_along_axis, morse_along_curve};
use sturmkit::pairs::{sigma_from_pair, zs_pair};
use sturmkit::{trivial_equivalence_orbit, Meander, Permutation, Pole};

fn m(s: &str) -> Meander {
    Meander::build(&Permutation::parse(s, None).unwrap())
}

fn oct() -> Meander {
    Meander::with_labels(&oct_sigma(), OCT_H0.to_vec()).unwrap()
}

/// Stack-based check that arcs over an axis are properly bracketed.
fn brackets_ok(arcs: &[(usize, usize)], n: usize) -> bool {
    let mut at = vec![None; n + 1];
    for (id, &(a, b)) in arcs.iter().enumerate() {
        at[a] = Some(id);
        at[b] = Some(id);
    }
    let mut stack: Vec<usize> = Vec::new();
    for x in at.into_iter().flatten() {
        if stack.last() == Some(&x) {
            stack.pop();
        } else {
            stack.push(x);
        }
    }
    stack.is_empty()
}

/// Sturm test written directly from the definitions: odd, fixes both ends,
/// upper and lower arcs bracket properly, and the curve recursion stays
/// nonnegative and returns to 0.
fn sturm_oracle(s: &Permutation) -> bool {
    let n = s.len();
    let images = s.one_line();
    if n.is_multiple_of(2) || images[0] != 1 || images[n - 1] != n {
        return false;
    }
    let mut pos = vec![0; n + 1];
    for (m, &v) in images.iter().enumerate() {
        pos[v] = m + 1;
    }
    let (mut upper, mut lower) = (Vec::new(), Vec::new());
    let mut i = 0i64;
    for k in 1..n {
        let (a, b) = (pos[k], pos[k + 1]);
        if k % 2 == 1 {
            upper.push((a.min(b), a.max(b)))
        } else {
            lower.push((a.min(b), a.max(b)))
        }
        let step = if b > a { 1 } else { -1 };
        i += if k % 2 == 1 { step } else { -step };
        if i < 0 {
            return false;
        }
    }
    i == 0 && brackets_ok(&upper, n) && brackets_ok(&lower, n)
}

#[test]
fn arcs_of_small_examples() {
    let id = m("1 2 3");
    assert_eq!(
        (id.upper_arcs(), id.lower_arcs()),
        (vec![(1, 2)], vec![(2, 3)])
    );
    let ci = m("1 4 3 2 5");
    assert_eq!(ci.upper_arcs(), vec![(1, 4), (2, 3)]);
    assert_eq!(ci.lower_arcs(), vec![(3, 4), (2, 5)]);
    let o = oct();
    assert_eq!(
        (o.len(), o.upper_arcs().len(), o.lower_arcs().len()),
        (27, 13, 13)
    );
}

#[test]
fn morse_examples() {
    assert_eq!(m("1 2 3").morse_numbers().unwrap(), vec![0, 1, 0]);
    assert_eq!(m("1 4 3 2 5").morse_numbers().unwrap(), vec![0, 1, 2, 1, 0]);
    let o = oct();
    for v in 1..=27u32 {
        let want = match v {
            1..=6 => 0,
            7..=18 => 1,
            19..=26 => 2,
            _ => 3,
        };
        assert_eq!(o.morse_of(v).unwrap(), want, "label {v}");
    }
}

#[test]
fn classification_examples() {
    assert!(!m("2 1 3").is_dissipative());
    let bad = m("1 3 2 4 5");
    assert!(!bad.is_meander());
    assert!(!brackets_ok(&bad.upper_arcs(), 5));
    for s in [sigma_plus(), sigma_minus(), oct_sigma()] {
        assert!(Meander::build(&s).is_sturm(), "{s}");
    }
    // even length is never Sturm, even when the arcs nest
    let even = m("1 2");
    assert!(even.is_meander() && !even.is_sturm());
}

#[test]
fn serpents_of_the_octahedron() {
    let o = oct();
    let n0 = o.polar_serpent(0, Pole::North).unwrap();
    let s0 = o.polar_serpent(0, Pole::South).unwrap();
    let n1 = o.polar_serpent(1, Pole::North).unwrap();
    let s1 = o.polar_serpent(1, Pole::South).unwrap();
    assert_eq!(Meander::overlap(&n0, &s1), BTreeSet::from([10]));
    assert_eq!(Meander::overlap(&s0, &n1), BTreeSet::from([8]));
    assert_eq!(n0.members, vec![1, 10]);
    assert_eq!(s1.members, vec![10, 5, 14, 2]);
}

#[test]
fn identity_serpents_cover_everything() {
    // every crossing has Morse number 0 or 1, so each maximal run is the whole axis
    let id = m("1 2 3");
    let n = id.polar_serpent(0, Pole::North).unwrap();
    let s = id.polar_serpent(0, Pole::South).unwrap();
    assert_eq!(n.members, vec![1, 2, 3]);
    assert_eq!(s.members, vec![1, 2, 3]);
    assert!(Meander::overlap(&n, &s).contains(&2));
}

#[test]
fn disk_serpents_are_full() {
    for ((a, b), c) in small_disks() {
        let sigma = sigma_from_pair(&zs_pair(&c).unwrap()).unwrap();
        let me = Meander::build(&sigma);
        for iota in 0..2 {
            for pole in [Pole::North, Pole::South] {
                let s = me.polar_serpent(iota, pole).unwrap();
                assert!(me.is_full(&s), "disk ({a},{b}) h{iota} {pole:?}: {s:?}");
            }
        }
    }
    // the bigon disk in particular
    let (c, _) = disk(1, 1).unwrap();
    assert_eq!(
        sigma_from_pair(&zs_pair(&c).unwrap()).unwrap().to_string(),
        "1 4 3 2 5"
    );
}

#[test]
fn top_crossing_neighbors() {
    let o = oct();
    assert_eq!(o.o_crossing().unwrap(), 27);
    assert_eq!(o.neighbors(0).unwrap(), (19, 21));
    assert_eq!(o.neighbors(1).unwrap(), (20, 26));
    assert_eq!(o.extreme_sources(1), Some((19, 21)));
    assert_eq!(o.extreme_sources(0), Some((20, 26)));
    assert!(Meander::build(&sigma_plus()).o_crossing().is_ok());
}

#[test]
fn three_meander_examples() {
    assert!(oct().is_three_meander_template());
    assert!(Meander::build(&sigma_plus()).is_three_meander_template());
    assert!(Meander::build(&sigma_minus()).is_three_meander_template());
    let ci = m("1 4 3 2 5");
    let rep = ci.three_meander_report().unwrap();
    assert!(!rep.checks[0].pass);
    assert!(m("2 1 3").three_meander_report().is_err());
}

#[test]
fn sturm_invariants_exhaustive_to_nine() {
    let all = sturm_upto(9);
    let mut oracle = 0;
    for k in (1..=9).step_by(2) {
        all_perms(k, &mut |p| oracle += sturm_oracle(p) as usize);
    }
    assert_eq!(all.len(), oracle);
    // the unique 3-ball with seven equilibria
    let seven: Vec<_> = all
        .iter()
        .filter(|s| s.len() == 7 && Meander::build(s).is_three_meander_template())
        .collect();
    assert_eq!(seven.len(), 1);
    assert_eq!(seven[0].to_string(), "1 6 3 4 5 2 7");
    for s in &all {
        let me = Meander::build(s);
        let n = me.len();
        let i = me.morse_numbers().unwrap();
        assert_eq!(morse_along_axis(s.raw()), i);
        assert_eq!(*i.iter().min().unwrap(), 0);
        for (k, &ik) in i.iter().enumerate() {
            // curve position k + 1 has parity opposite to its Morse number
            assert_eq!((ik + k as i64 + 1) % 2, 1, "{s}");
        }
        for iota in 0..2 {
            let order = me.order(iota);
            for w in order.windows(2) {
                assert_eq!(
                    (me.morse_of(w[0]).unwrap() - me.morse_of(w[1]).unwrap()).abs(),
                    1
                );
            }
        }
        assert!(brackets_ok(&me.upper_arcs(), n) && brackets_ok(&me.lower_arcs(), n));
        let template = me.is_three_meander_template();
        for q in trivial_equivalence_orbit(s) {
            let mq = Meander::build(&q);
            assert!(mq.is_sturm(), "{q} from {s}");
            assert_eq!(mq.is_three_meander_template(), template, "{q} from {s}");
        }
    }
    let templates = all
        .iter()
        .filter(|s| Meander::build(s).is_three_meander_template())
        .count();
    assert!(templates > 0);
}

#[test]
fn family_permutations_keep_template_status_under_equivalences() {
    for (name, t) in template_family() {
        let s = sigma_from_pair(&sturmkit::pairs::szs_pair(&t).unwrap()).unwrap();
        for q in trivial_equivalence_orbit(&s) {
            assert!(
                Meander::build(&q).is_three_meander_template(),
                "{name}: {q}"
            );
        }
    }
}

#[test]
fn random_dissipative_meanders_agree_on_both_recursions() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 2000 {
        let n = 2 * rng.gen_range(1..=10) + 1;
        let mut v: Vec<usize> = (2..n).collect();
        v.shuffle(&mut rng);
        v.insert(0, 1);
        v.push(n);
        let s = Permutation::from_one_line(&v).unwrap();
        let me = Meander::build(&s);
        if !me.is_meander() {
            continue;
        }
        checked += 1;
        let curve = morse_along_curve(s.inverse().raw());
        if curve[n - 1] == 0 {
            assert_eq!(morse_along_axis(s.raw()), curve, "{s}");
        }
    }
}

proptest! {
    #[test]
    fn noncrossing_matches_bracket_oracle(v in (1usize..=14).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())) {
        let s = Permutation::from_one_line(&v).unwrap();
        let me = Meander::build(&s);
        let n = me.len();
        prop_assert_eq!(me.is_meander(), brackets_ok(&me.upper_arcs(), n) && brackets_ok(&me.lower_arcs(), n));
    }

    #[test]
    fn labels_follow_the_permutation(v in (1usize..=14).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())) {
        let s = Permutation::from_one_line(&v).unwrap();
        let labels: Vec<u32> = (0..v.len() as u32).map(|k| 100 + 3 * k).collect();
        let me = Meander::with_labels(&s, labels.clone()).unwrap();
        prop_assert_eq!(me.order(0), labels.clone());
        let h1: Vec<u32> = (1..=v.len()).map(|m| labels[s.apply(m) - 1]).collect();
        prop_assert_eq!(me.order(1), h1.clone());
        let back = Meander::from_orders(&labels, &h1).unwrap();
        prop_assert_eq!(back.sigma(), &s);
    }
}
