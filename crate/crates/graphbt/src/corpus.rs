//! Random problem specs covering every constraint kind.

use graphbt_core::{PermGroup, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::spec::{ArcJson, ConstraintSpec, DigraphJson, Goal, LabelJson, Mode, ProblemSpec, Strategy};

pub const KINDS: usize = 14;

fn perm<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

/// A random permutation biased towards few moved points.
fn sparse_perm<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    if n < 2 || rng.gen_bool(0.3) {
        return perm(n, rng);
    }
    let mut pts: Vec<usize> = (0..n).collect();
    pts.shuffle(rng);
    let k = rng.gen_range(2..=n);
    let mut images: Vec<usize> = (0..n).collect();
    if rng.gen_bool(0.5) {
        for i in 0..k {
            images[pts[i]] = pts[(i + 1) % k];
        }
    } else {
        for i in 0..k / 2 {
            images.swap(pts[2 * i], pts[2 * i + 1]);
        }
    }
    Permutation::from_images(images).unwrap()
}

fn subset<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    (1..=n).filter(|_| rng.gen_bool(0.5)).collect()
}

fn family<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let s = subset(n, rng);
        if !s.is_empty() && !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

fn partition<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let k = rng.gen_range(1..=3);
    let mut cells = vec![Vec::new(); k];
    for x in 1..=n {
        let c = rng.gen_range(0..=k);
        if c < k {
            cells[c].push(x);
        }
    }
    cells.retain(|c| !c.is_empty());
    cells
}

fn digraph<R: Rng>(n: usize, rng: &mut R) -> DigraphJson {
    let density = rng.gen_range(0.0..0.5);
    let mut arcs = Vec::new();
    for u in 1..=n {
        for v in 1..=n {
            if rng.gen_bool(density) {
                arcs.push(ArcJson::Labelled(u, v, LabelJson::Int(rng.gen_range(0..2))));
            }
        }
    }
    let labels = ["a", "b"];
    DigraphJson {
        vertex_labels: (0..n).map(|_| LabelJson::Str(labels.choose(rng).unwrap().to_string())).collect(),
        arcs,
    }
}

fn move_points(g: &Permutation, s: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = s.iter().map(|&x| g.apply(x - 1) + 1).collect();
    v.sort_unstable();
    v
}

fn move_family(g: &Permutation, f: &[Vec<usize>]) -> Vec<Vec<usize>> {
    f.iter().map(|s| move_points(g, s)).collect()
}

fn move_digraph(g: &Permutation, d: &DigraphJson) -> DigraphJson {
    let mut labels = d.vertex_labels.clone();
    for (v, l) in d.vertex_labels.iter().enumerate() {
        labels[g.apply(v)] = l.clone();
    }
    let arcs = d
        .arcs
        .iter()
        .map(|a| match a {
            ArcJson::Labelled(u, v, l) => ArcJson::Labelled(g.apply(u - 1) + 1, g.apply(v - 1) + 1, l.clone()),
            ArcJson::Plain(u, v) => ArcJson::Plain(g.apply(u - 1) + 1, g.apply(v - 1) + 1),
        })
        .collect();
    DigraphJson { vertex_labels: labels, arcs }
}

/// A random constraint of kind `kind` (mod 14). Transporters usually target an
/// image of the source so that they are nonempty. With `contains_id` only
/// stabilisers, groups and cosets through the identity are produced.
pub fn random_constraint<R: Rng>(n: usize, kind: usize, contains_id: bool, rng: &mut R) -> ConstraintSpec {
    use ConstraintSpec as C;
    let kind = if contains_id { [0, 2, 4, 6, 8, 10, 12, 13][kind % 8] } else { kind % KINDS };
    let x = if rng.gen_bool(0.8) { perm(n, rng) } else { Permutation::identity(n) };
    let fresh = rng.gen_bool(0.2);
    let strategy = if rng.gen_bool(0.5) { Strategy::Orbits } else { Strategy::OrbitalGraphs };
    let gens = |rng: &mut R| -> Vec<String> {
        (0..rng.gen_range(1..=2)).map(|_| sparse_perm(n, rng).to_cycle_string()).collect()
    };
    match kind {
        0 => C::SetStab { set: subset(n, rng) },
        1 => {
            let from = subset(n, rng);
            let to = if fresh { subset(n, rng) } else { move_points(&x, &from) };
            C::SetTransport { from, to }
        }
        2 => C::ListStab { sets: family(n, rng) },
        3 => {
            let from = family(n, rng);
            let to = if fresh { family(n, rng) } else { move_family(&x, &from) };
            C::ListTransport { from, to }
        }
        4 => C::SetsStab { sets: family(n, rng) },
        5 => {
            let from = family(n, rng);
            let to = if fresh { family(n, rng) } else { move_family(&x, &from) };
            C::SetsTransport { from, to }
        }
        6 => C::DisjointStab { sets: partition(n, rng) },
        7 => {
            let from = partition(n, rng);
            let to = if fresh { partition(n, rng) } else { move_family(&x, &from) };
            C::DisjointTransport { from, to }
        }
        8 => C::Centralise { perm: sparse_perm(n, rng).to_cycle_string() },
        9 => {
            let g = sparse_perm(n, rng);
            let h = if fresh { sparse_perm(n, rng) } else { g.conjugate_by(&x) };
            C::Conjugate { from: g.to_cycle_string(), to: h.to_cycle_string() }
        }
        10 => C::DigraphAuto { digraph: digraph(n, rng) },
        11 => {
            let from = digraph(n, rng);
            let to = if fresh { digraph(n, rng) } else { move_digraph(&x, &from) };
            C::DigraphIso { from, to }
        }
        12 => C::InGroup { gens: gens(rng), strategy },
        _ => {
            let gens = gens(rng);
            let rep = if contains_id {
                let ps: Vec<Permutation> = gens.iter().map(|g| Permutation::parse(g, n).unwrap()).collect();
                let g = PermGroup::new(n, ps).unwrap();
                let chain = g.chain();
                let idx: Vec<usize> = chain.transversal_sizes().iter().map(|&s| rng.gen_range(0..s)).collect();
                chain.element(&idx)
            } else {
                perm(n, rng)
            };
            C::InCoset { gens, rep: rep.to_cycle_string(), strategy }
        }
    }
}

/// A random spec with one to three constraints; `seed` determines everything.
pub fn random_spec(n: usize, goal: Goal, mode: Mode, contains_id: bool, seed: u64) -> ProblemSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(1..=3);
    let constraints = (0..k)
        .map(|_| {
            let kind = rng.gen_range(0..KINDS);
            random_constraint(n, kind, contains_id, &mut rng)
        })
        .collect();
    ProblemSpec { degree: n, constraints, goal, mode, seed }
}
