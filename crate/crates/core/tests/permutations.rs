mod common;

use common::*;
use proptest::prelude::*;
use sturmkit::{orbit_key, trivial_equivalence_orbit, Permutation};

fn one_line(s: &str) -> Permutation {
    Permutation::parse(s, None).unwrap()
}

#[test]
fn cycle_notation_examples() {
    assert_eq!(
        sigma_plus().one_line(),
        vec![1, 12, 3, 4, 11, 6, 7, 10, 9, 8, 5, 2, 13]
    );
    let want = [
        1, 24, 19, 4, 5, 18, 17, 8, 9, 16, 25, 26, 15, 14, 13, 10, 7, 6, 3, 20, 23, 22, 21, 2, 11,
        12, 27,
    ];
    assert_eq!(oct_sigma().one_line(), want);
    assert!(one_line("1 2 3").is_identity());
}

#[test]
fn kappa_conjugate_by_composition() {
    let k = Permutation::kappa(13);
    let s = sigma_plus();
    let direct = k.compose(&s.compose(&k).unwrap()).unwrap();
    assert_eq!(direct, s.kappa_conjugate());
    // u-flip by hand: k -> 14 - σ(14 - k)
    let by_hand: Vec<usize> = (1..=13).map(|k| 14 - s.apply(14 - k)).collect();
    assert_eq!(direct.one_line(), by_hand);
}

#[test]
fn orbit_examples() {
    let id = Permutation::identity(5);
    assert_eq!(
        trivial_equivalence_orbit(&id)
            .into_iter()
            .collect::<Vec<_>>(),
        vec![id]
    );
    assert!(!trivial_equivalence_orbit(&sigma_plus()).contains(&sigma_minus()));
    assert_ne!(orbit_key(&sigma_plus()), orbit_key(&sigma_minus()));
    // an involution that is its own u-flip
    let s = one_line("1 4 3 2 5");
    assert_eq!(s.kappa_conjugate(), s);
    assert!(trivial_equivalence_orbit(&s).len() <= 2);
}

#[test]
fn both_notations_accept_headers_and_comments() {
    let a = Permutation::parse(
        "# the octahedron\nn=27\n(2 24)(3 19)(6 18)\n(7 17)(10 16)(11 25)(12 26)(13 15)(21 23)\n",
        None,
    )
    .unwrap();
    assert_eq!(a, oct_sigma());
    let b = Permutation::parse("1, 4, 3, 2, 5", None).unwrap();
    assert_eq!(b, one_line("1 4 3 2 5"));
    assert!(Permutation::parse("n=4\n1 2 3", None).is_err());
    assert!(Permutation::parse("1 x 3", None).is_err());
}

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::from_one_line(&v).unwrap())
}

proptest! {
    #[test]
    fn one_line_roundtrip(p in arb_perm(40)) {
        prop_assert_eq!(Permutation::parse(&p.to_string(), None).unwrap(), p);
    }

    #[test]
    fn cycle_roundtrip(p in arb_perm(40)) {
        let text = format!("n={}\n{}", p.len(), p.to_cycle_string());
        prop_assert_eq!(Permutation::parse(&text, None).unwrap(), p);
    }

    #[test]
    fn kappa_is_an_involution(n in 1usize..=64) {
        let k = Permutation::kappa(n);
        prop_assert!(k.compose(&k).unwrap().is_identity());
    }

    #[test]
    fn inverse_composes_to_identity(p in arb_perm(30)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        prop_assert_eq!(p.inverse().inverse(), p);
    }

    #[test]
    fn kappa_conjugation_matches_composition(p in arb_perm(30)) {
        let k = Permutation::kappa(p.len());
        prop_assert_eq!(k.compose(&p.compose(&k).unwrap()).unwrap(), p.kappa_conjugate());
    }

    #[test]
    fn orbit_is_closed(p in arb_perm(25)) {
        let orbit = trivial_equivalence_orbit(&p);
        prop_assert!(orbit.len() <= 4 && orbit.contains(&p));
        for q in &orbit {
            prop_assert!(orbit.contains(&q.inverse()));
            prop_assert!(orbit.contains(&q.kappa_conjugate()));
            prop_assert_eq!(trivial_equivalence_orbit(q), orbit.clone());
            prop_assert_eq!(orbit_key(q), orbit_key(&p));
        }
    }
}

#[test]
fn symmetric_involutions_have_small_orbits() {
    let mut seen = 0;
    for n in 1..=8 {
        all_perms(n, &mut |p| {
            if p.compose(p).unwrap().is_identity() && p.kappa_conjugate() == *p {
                seen += 1;
                assert!(trivial_equivalence_orbit(p).len() <= 2, "{p}");
            }
        });
    }
    assert!(seen > 50);
}
