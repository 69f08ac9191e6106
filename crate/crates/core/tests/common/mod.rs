#![allow(dead_code)]

use graphbt_core::{DigraphStack, Label, LabelledDigraph, PermGroup, Permutation};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn p(s: &str, n: usize) -> Permutation {
    Permutation::parse(s, n).unwrap()
}

pub fn group(n: usize, gens: &[&str]) -> PermGroup {
    PermGroup::new(n, gens.iter().map(|g| p(g, n)).collect()).unwrap()
}

pub fn s(x: &str) -> Label {
    Label::Str(x.into())
}

/// Every element of Sym(n), in lexicographic image order.
pub fn sym(n: usize) -> Vec<Permutation> {
    (0..n)
        .permutations(n)
        .map(|v| Permutation::from_images(v).unwrap())
        .collect()
}

pub fn brute_iso(a: &DigraphStack, b: &DigraphStack) -> Vec<Permutation> {
    if a.len() != b.len() {
        return Vec::new();
    }
    sym(a.degree()).into_iter().filter(|g| a.maps_to(b, g)).collect()
}

pub fn brute_digraph_iso(a: &LabelledDigraph, b: &LabelledDigraph) -> Vec<Permutation> {
    sym(a.degree()).into_iter().filter(|g| a.maps_to(b, g)).collect()
}

pub fn sorted(mut v: Vec<Permutation>) -> Vec<Permutation> {
    v.sort();
    v
}

pub fn coset_elements(g: &PermGroup, rep: &Permutation) -> Vec<Permutation> {
    sorted(g.elements().into_iter().map(|x| x.mul(rep)).collect())
}

pub fn random_perm<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

pub fn random_subset<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn random_digraph<R: Rng>(n: usize, rng: &mut R) -> LabelledDigraph {
    let vl = (0..n).map(|_| Label::Int(rng.gen_range(0..2))).collect();
    let density = rng.gen_range(0.0..0.6);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if rng.gen_bool(density) {
                arcs.push(((u, v), Label::Int(rng.gen_range(0..2))));
            }
        }
    }
    LabelledDigraph::new(n, vl, arcs).unwrap()
}

pub fn random_stack<R: Rng>(n: usize, rng: &mut R) -> DigraphStack {
    let k = rng.gen_range(0..=3);
    DigraphStack::new(n, (0..k).map(|_| random_digraph(n, rng)).collect()).unwrap()
}

/// A random stack, and either a random image of it or an unrelated stack of the same length.
pub fn random_pair<R: Rng>(n: usize, rng: &mut R) -> (DigraphStack, DigraphStack) {
    let a = random_stack(n, rng);
    let b = if rng.gen_bool(0.6) {
        a.apply_perm(&random_perm(n, rng)).unwrap()
    } else {
        let entries = (0..a.len()).map(|_| random_digraph(n, rng)).collect();
        DigraphStack::new(n, entries).unwrap()
    };
    (a, b)
}

use graphbt_core::refiners::{
    coset_refiner, digraph_iso_refiner, disjoint_subsets_refiner, group_refiner,
    list_of_subsets_refiner, perm_conjugacy_refiner, set_of_subsets_refiner, set_refiner,
    ArcFree, CellTagged, GroupStrategy,
};
use graphbt_core::Refiner;
use std::collections::{BTreeSet, VecDeque};

/// Closure of `gens` by breadth-first multiplication.
pub fn closure(n: usize, gens: &[Permutation]) -> BTreeSet<Permutation> {
    let id = Permutation::identity(n);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn set_image(g: &Permutation, a: &[usize]) -> BTreeSet<usize> {
    a.iter().map(|&x| g.apply(x)).collect()
}

fn family(sets: &[Vec<usize>]) -> BTreeSet<BTreeSet<usize>> {
    sets.iter().map(|s| s.iter().copied().collect()).collect()
}

#[derive(Clone, Debug)]
pub enum Constraint {
    Set(Vec<usize>, Vec<usize>),
    List(Vec<Vec<usize>>, Vec<Vec<usize>>),
    Sets(Vec<Vec<usize>>, Vec<Vec<usize>>),
    Disjoint(Vec<Vec<usize>>, Vec<Vec<usize>>),
    Conj(Permutation, Permutation),
    Iso(LabelledDigraph, LabelledDigraph),
    Group(PermGroup, GroupStrategy),
    Coset(PermGroup, Permutation, GroupStrategy),
}

impl Constraint {
    pub fn holds(&self, g: &Permutation) -> bool {
        let n = g.degree();
        match self {
            Constraint::Set(a, b) => set_image(g, a) == b.iter().copied().collect(),
            Constraint::List(u, v) => {
                u.len() == v.len()
                    && u.iter().zip(v).all(|(a, b)| set_image(g, a) == b.iter().copied().collect())
            }
            Constraint::Sets(u, v) | Constraint::Disjoint(u, v) => {
                let img: BTreeSet<BTreeSet<usize>> = u.iter().map(|s| set_image(g, s)).collect();
                img == family(v)
            }
            Constraint::Conj(x, h) => (0..n).all(|i| h.apply(g.apply(i)) == g.apply(x.apply(i))),
            Constraint::Iso(a, b) => (0..n).all(|u| {
                a.vertex_label(u) == b.vertex_label(g.apply(u))
                    && (0..n).all(|v| a.arc_label(u, v) == b.arc_label(g.apply(u), g.apply(v)))
            }),
            Constraint::Group(h, _) => closure(n, h.generators()).contains(g),
            Constraint::Coset(h, r, _) => closure(n, h.generators()).contains(&g.mul(&r.inverse())),
        }
    }

    pub fn refiner(&self, n: usize) -> Box<dyn Refiner> {
        match self {
            Constraint::Set(a, b) => set_refiner(n, a, b).unwrap(),
            Constraint::List(u, v) => list_of_subsets_refiner(n, u, v).unwrap(),
            Constraint::Sets(u, v) => set_of_subsets_refiner(n, u, v).unwrap(),
            Constraint::Disjoint(u, v) => disjoint_subsets_refiner(n, u, v).unwrap(),
            Constraint::Conj(x, h) => perm_conjugacy_refiner(x, h).unwrap(),
            Constraint::Iso(a, b) => digraph_iso_refiner(a, b).unwrap(),
            Constraint::Group(h, s) => group_refiner(h.clone(), *s),
            Constraint::Coset(h, r, s) => coset_refiner(h.clone(), r.clone(), *s).unwrap(),
        }
    }

    pub fn is_group_kind(&self) -> bool {
        matches!(self, Constraint::Group(..) | Constraint::Coset(..))
    }
}

/// How refiners are wrapped before being handed to the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wrap {
    Plain,
    ArcFree,
    CellTagged,
}

pub fn wrap(r: Box<dyn Refiner>, w: Wrap) -> Box<dyn Refiner> {
    match w {
        Wrap::Plain => r,
        Wrap::ArcFree => Box::new(ArcFree::new(r)),
        Wrap::CellTagged => Box::new(CellTagged::new(r)),
    }
}

pub fn random_small_perm<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    if n < 2 {
        return Permutation::identity(n);
    }
    match rng.gen_range(0..3) {
        0 => random_perm(n, rng),
        1 => {
            let mut v: Vec<usize> = (0..n).collect();
            v.shuffle(rng);
            let k = rng.gen_range(1..=n / 2);
            let mut images: Vec<usize> = (0..n).collect();
            for i in 0..k {
                images.swap(v[2 * i], v[2 * i + 1]);
            }
            Permutation::from_images(images).unwrap()
        }
        _ => {
            let mut v: Vec<usize> = (0..n).collect();
            v.shuffle(rng);
            let k = rng.gen_range(2..=n);
            let mut images: Vec<usize> = (0..n).collect();
            for i in 0..k {
                images[v[i]] = v[(i + 1) % k];
            }
            Permutation::from_images(images).unwrap()
        }
    }
}

pub fn random_group<R: Rng>(n: usize, rng: &mut R) -> PermGroup {
    let k = rng.gen_range(1..=2);
    PermGroup::new(n, (0..k).map(|_| random_small_perm(n, rng)).collect()).unwrap()
}

fn random_family<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let k = rng.gen_range(1..=3);
    let mut out: Vec<Vec<usize>> = Vec::new();
    for _ in 0..k {
        let s = random_subset(n, rng);
        if !s.is_empty() && !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

fn random_partial_partition<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let k = rng.gen_range(1..=3);
    let mut cells = vec![Vec::new(); k];
    for x in 0..n {
        let c = rng.gen_range(0..=k);
        if c < k {
            cells[c].push(x);
        }
    }
    cells.retain(|c| !c.is_empty());
    cells
}

fn image_family(g: &Permutation, f: &[Vec<usize>]) -> Vec<Vec<usize>> {
    f.iter().map(|s| g.image_of_set(s)).collect()
}

/// A random constraint; with `contains_id` the set is a group.
pub fn random_constraint<R: Rng>(n: usize, contains_id: bool, rng: &mut R) -> Constraint {
    let strategy =
        if rng.gen_bool(0.5) { GroupStrategy::Orbits } else { GroupStrategy::OrbitalGraphs };
    // With no identity requirement, the target is usually an image so the set is nonempty.
    let x = if contains_id {
        Permutation::identity(n)
    } else if rng.gen_bool(0.75) {
        random_perm(n, rng)
    } else {
        Permutation::identity(n)
    };
    let fresh = !contains_id && rng.gen_bool(0.2);
    match rng.gen_range(0..8) {
        0 => {
            let a = random_subset(n, rng);
            let b = if fresh { random_subset(n, rng) } else { x.image_of_set(&a) };
            Constraint::Set(a, b)
        }
        1 => {
            let u = random_family(n, rng);
            let v = if fresh { random_family(n, rng) } else { image_family(&x, &u) };
            Constraint::List(u, v)
        }
        2 => {
            let u = random_family(n, rng);
            let v = if fresh { random_family(n, rng) } else { image_family(&x, &u) };
            Constraint::Sets(u, v)
        }
        3 => {
            let u = random_partial_partition(n, rng);
            let v = if fresh { random_partial_partition(n, rng) } else { image_family(&x, &u) };
            Constraint::Disjoint(u, v)
        }
        4 => {
            let g = random_small_perm(n, rng);
            let h = if fresh { random_small_perm(n, rng) } else { g.conjugate_by(&x) };
            Constraint::Conj(g, h)
        }
        5 => {
            let a = random_digraph(n, rng);
            let b = if fresh { random_digraph(n, rng) } else { a.apply_perm(&x).unwrap() };
            Constraint::Iso(a, b)
        }
        6 => Constraint::Group(random_group(n, rng), strategy),
        _ => {
            let g = random_group(n, rng);
            let r = if contains_id {
                let els: Vec<Permutation> = closure(n, g.generators()).into_iter().collect();
                els.choose(rng).unwrap().clone()
            } else {
                random_perm(n, rng)
            };
            Constraint::Coset(g, r, strategy)
        }
    }
}

pub fn brute(n: usize, cs: &[Constraint]) -> Vec<Permutation> {
    sym(n).into_iter().filter(|g| cs.iter().all(|c| c.holds(g))).collect()
}
