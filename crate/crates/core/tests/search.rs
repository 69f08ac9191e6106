mod common;

use common::*;
use graphbt_core::refiners::{set_refiner, GroupStrategy};
use graphbt_core::{
    Approximator, DigraphStack, Error, Permutation, Problem, SearchOptions,
};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

const SETUPS: [(Approximator, Wrap); 4] = [
    (Approximator::Weak, Wrap::ArcFree),
    (Approximator::Weak, Wrap::CellTagged),
    (Approximator::Strong, Wrap::Plain),
    (Approximator::Exact, Wrap::Plain),
];

fn problem(n: usize, cs: &[Constraint], a: Approximator, w: Wrap, opts: SearchOptions) -> Problem {
    let mut p = Problem::new(n, a).with_options(opts);
    for c in cs {
        p.push(wrap(c.refiner(n), w));
    }
    p
}

fn opts() -> SearchOptions {
    SearchOptions { prune: true, verify_trace: true }
}

fn constraints(n: usize, contains_id: bool, rng: &mut ChaCha8Rng) -> Vec<Constraint> {
    let k = rng.gen_range(0..=3);
    (0..k).map(|_| random_constraint(n, contains_id, rng)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn search_matches_brute_force(seed: u64, n in 1usize..=6) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let cs = constraints(n, false, &mut r);
        let want = brute(n, &cs);
        for (a, w) in SETUPS {
            let mut p = problem(n, &cs, a, w, opts());
            let (all, stats) = p.search_all();
            prop_assert_eq!(&all, &want, "{:?} {:?} {:?}", a, w, cs);
            prop_assert!(stats.nodes > 0 || stats.leaves <= 1);
            let (one, _) = p.search_single();
            prop_assert_eq!(one.is_some(), !want.is_empty());
            if let Some(g) = one {
                prop_assert!(want.contains(&g));
            }
            let (coset, _) = p.search_coset();
            match coset {
                None => prop_assert!(want.is_empty()),
                Some((bsgs, g)) => {
                    prop_assert_eq!(bsgs.order(), BigUint::from(want.len()));
                    let got: BTreeSet<Permutation> =
                        closure(n, &bsgs.strong_generators).into_iter().map(|x| x.mul(&g)).collect();
                    prop_assert_eq!(got, want.iter().cloned().collect::<BTreeSet<_>>());
                }
            }
        }
    }

    #[test]
    fn search_gens_matches_brute_force(seed: u64, n in 1usize..=6) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let cs = constraints(n, true, &mut r);
        let want: BTreeSet<Permutation> = brute(n, &cs).into_iter().collect();
        for (a, w) in SETUPS {
            let (bsgs, _) = problem(n, &cs, a, w, opts()).search_gens().unwrap();
            prop_assert_eq!(bsgs.order(), BigUint::from(want.len()), "{:?} {:?} {:?}", a, w, cs);
            prop_assert_eq!(&closure(n, &bsgs.strong_generators), &want);
            prop_assert_eq!(bsgs.chain().base(), bsgs.base.clone());
            let unpruned = SearchOptions { prune: false, verify_trace: true };
            let (full, _) = problem(n, &cs, a, w, unpruned).search_gens().unwrap();
            prop_assert_eq!(&closure(n, &full.strong_generators), &want);
        }
    }

    #[test]
    fn refine_preserves_solutions(seed: u64, n in 2usize..=6) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let cs = constraints(n, false, &mut r);
        let want = brute(n, &cs);
        let e = DigraphStack::empty(n);
        for (a, w) in SETUPS {
            let (s, t) = problem(n, &cs, a, w, opts()).refine(&e, &e);
            let kept: Vec<_> = want.iter().filter(|g| s.maps_to(&t, g)).cloned().collect();
            prop_assert_eq!(&kept, &want);
        }
    }

    #[test]
    fn searches_are_deterministic(seed: u64, n in 2usize..=6) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let cs = constraints(n, false, &mut r);
        for (a, w) in SETUPS {
            let x = problem(n, &cs, a, w, opts()).search_all();
            let y = problem(n, &cs, a, w, opts()).search_all();
            prop_assert_eq!(x, y);
        }
    }
}

#[test]
fn no_constraints_gives_everything() {
    let mut p = Problem::new(3, Approximator::Strong);
    assert_eq!(p.search_all().0.len(), 6);
    let (b, _) = p.search_gens().unwrap();
    assert_eq!(b.order(), BigUint::from(6u32));
}

#[test]
fn refine_without_refiners_is_identity() {
    let mut p = Problem::new(4, Approximator::Strong);
    let s = DigraphStack::empty(4);
    assert_eq!(p.refine(&s, &s), (s.clone(), s));
}

#[test]
fn set_refiner_refines_once() {
    let mut p = Problem::new(4, Approximator::Strong).with(set_refiner(4, &[0, 1], &[2, 3]).unwrap());
    let s = DigraphStack::empty(4);
    let (l, r) = p.refine(&s, &s);
    assert_eq!((l.len(), r.len()), (1, 1));
}

#[test]
fn set_stabiliser() {
    let mut prob = Problem::new(4, Approximator::Strong).with(set_refiner(4, &[0, 1], &[0, 1]).unwrap());
    let want = sorted(vec![
        Permutation::identity(4),
        p("(1,2)", 4),
        p("(3,4)", 4),
        p("(1,2)(3,4)", 4),
    ]);
    assert_eq!(prob.search_all().0, want);
    let (g, _) = Problem::new(4, Approximator::Strong)
        .with(set_refiner(4, &[0, 1], &[2, 3]).unwrap())
        .search_single();
    assert_eq!(g.unwrap().image_of_set(&[0, 1]), vec![2, 3]);
}

#[test]
fn trivial_group_has_empty_base() {
    let u: Vec<Vec<usize>> = (0..5).map(|i| vec![i]).collect();
    let mut p = Problem::new(5, Approximator::Strong).with(Constraint::List(u.clone(), u).refiner(5));
    let (b, stats) = p.search_gens().unwrap();
    assert!(b.base.is_empty());
    assert_eq!(b.strong_generators, vec![Permutation::identity(5)]);
    assert_eq!(stats.node_count(), 0);
}

#[test]
fn partition_stabiliser_group() {
    let c = Constraint::Disjoint(vec![vec![0, 1], vec![2]], vec![vec![0, 1], vec![2]]);
    let (b, _) = Problem::new(4, Approximator::Strong).with(c.refiner(4)).search_gens().unwrap();
    assert_eq!(b.order(), BigUint::from(2u32));
}

#[test]
fn half_partition_stabiliser_orders() {
    for n in [4usize, 6] {
        let u = vec![(0..n / 2).collect::<Vec<_>>(), (n / 2..n).collect()];
        let c = Constraint::Disjoint(u.clone(), u);
        let fact: usize = (1..=n / 2).product();
        assert_eq!(brute(n, std::slice::from_ref(&c)).len(), 2 * fact * fact);
        let (b, _) = Problem::new(n, Approximator::Strong).with(c.refiner(n)).search_gens().unwrap();
        assert_eq!(b.order(), BigUint::from(2 * fact * fact));
    }
}

#[test]
fn identity_required_for_gens() {
    let mut p = Problem::new(4, Approximator::Strong).with(set_refiner(4, &[0], &[1]).unwrap());
    assert_eq!(p.search_gens().unwrap_err(), Error::IdentityNotMember);
}

#[test]
fn empty_at_root_uses_no_nodes() {
    let c = Constraint::Sets(vec![vec![0], vec![0, 1, 2], vec![1, 3]], vec![vec![4], vec![1, 2, 3], vec![2, 3]]);
    let (all, stats) = Problem::new(5, Approximator::Weak).with(c.refiner(5)).search_all();
    assert!(all.is_empty());
    assert_eq!(stats.node_count(), 0);
}

#[test]
fn coset_driver_on_disjoint_example() {
    let c = Constraint::Disjoint(vec![vec![0, 1], vec![2]], vec![vec![2, 3], vec![1]]);
    let want = coset_elements(&group(4, &["(1,2)"]), &p("(1,3,2,4)", 4));
    for (a, w) in SETUPS {
        let (res, _) = problem(4, std::slice::from_ref(&c), a, w, opts()).search_coset();
        let (b, g) = res.unwrap();
        let got = sorted(closure(4, &b.strong_generators).into_iter().map(|x| x.mul(&g)).collect());
        assert_eq!(got, want);
    }
}

#[test]
fn group_and_coset_intersection() {
    let g = group(6, &["(1,2,3,4,5,6)"]);
    let h = group(6, &["(1,4)(2,5)(3,6)", "(1,2)"]);
    let cs = vec![
        Constraint::Group(g, GroupStrategy::OrbitalGraphs),
        Constraint::Coset(h, p("(1,4)(2,5)(3,6)", 6), GroupStrategy::OrbitalGraphs),
    ];
    let want = brute(6, &cs);
    for (a, w) in SETUPS {
        assert_eq!(problem(6, &cs, a, w, opts()).search_all().0, want);
    }
}
