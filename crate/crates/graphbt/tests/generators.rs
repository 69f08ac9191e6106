use graphbt::core::{PermGroup, Permutation};
use graphbt::experiment::{grid_experiments, subdirect_experiments, CSV_HEADER};
use graphbt::subdirect::{make_subdirect, subdirect_spec, transitive_catalogue};
use graphbt::{grid_spec, make_grid_group, oracle, run, Goal, GridKind, Mode, Solutions};
use num_bigint::BigUint;

fn restrict(n: usize, g: &Permutation, i: usize) -> Permutation {
    Permutation::from_images((0..n).map(|x| g.apply(i * n + x) - i * n).collect()).unwrap()
}

fn transitive(g: &PermGroup) -> bool {
    g.orbits().len() == 1
}

#[test]
fn grid_group_order() {
    for (n, order) in [(2, 4u32), (3, 36), (4, 576)] {
        assert_eq!(make_grid_group(n).unwrap().order(), BigUint::from(order));
    }
}

#[test]
fn grid_kinds_solve_against_oracle() {
    for kind in [GridKind::I, GridKind::Ii, GridKind::Iii] {
        for seed in 0..3 {
            let sp = grid_spec(4, kind, seed, Mode::Strong).unwrap();
            let r = run(&sp, true).unwrap();
            assert_eq!(r.oracle_agrees, Some(true), "{kind:?} seed {seed}");
        }
    }
}

#[test]
fn grid_iii_needs_even_n() {
    assert!(grid_spec(5, GridKind::Iii, 0, Mode::Strong).is_err());
}

#[test]
fn catalogue_is_transitive_and_distinct() {
    for n in 2..=6 {
        let cat = transitive_catalogue(n);
        assert!(!cat.is_empty());
        let mut orders: Vec<BigUint> = cat.iter().map(|(_, g)| g.order()).collect();
        assert!(cat.iter().all(|(_, g)| transitive(g)));
        orders.dedup();
        assert_eq!(orders.len(), cat.len());
    }
}

#[test]
fn subdirect_products_are_proper_and_surjective() {
    for (k, n) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
        for seed in 0..5 {
            let s = make_subdirect(k, n, seed).unwrap();
            let full: BigUint = s.factors.iter().map(|f| f.order()).product();
            assert!(s.group.order() < full);
            for (i, f) in s.factors.iter().enumerate() {
                assert!(transitive(f));
                let proj: Vec<Permutation> = s.group.generators().iter().map(|g| restrict(n, g, i)).collect();
                assert_eq!(PermGroup::new(n, proj).unwrap().order(), f.order());
            }
        }
    }
    assert_eq!(make_subdirect(2, 2, 0).unwrap().group.order(), BigUint::from(2u32));
}

#[test]
fn subdirect_problems_match_oracle() {
    for seed in 0..6 {
        for goal in [Goal::All, Goal::Group] {
            let sp = subdirect_spec(2, 3, seed, Mode::Strong, goal).unwrap();
            let want = oracle(&sp).unwrap();
            let r = run(&sp, false).unwrap();
            assert_eq!(r.solution_set().unwrap(), want, "seed {seed}");
            if let Solutions::Group { group: Some(g), .. } = &r.result {
                assert_eq!(g.order, want.len().to_string());
            }
        }
    }
}

#[test]
fn experiment_csv_shape() {
    let rows = grid_experiments(4, GridKind::Iii, 3, &[Mode::Leon, Mode::Strong], 9).unwrap();
    assert_eq!(rows.len(), 6);
    let csv = graphbt::experiment::to_csv(&rows);
    assert_eq!(csv.lines().next().unwrap(), CSV_HEADER);
    assert!(csv.lines().skip(1).all(|l| l.split(',').count() == 7));
    let rows = subdirect_experiments(2, 2, 2, &Mode::ALL, 1).unwrap();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.order == "2"));
}
