//! Random proper subdirect products of transitive groups and coset-intersection instances.

use graphbt_core::{PermGroup, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::spec::{ConstraintSpec, Goal, Mode, ProblemSpec, Strategy};
use crate::Error;

pub const MAX_ATTEMPTS: usize = 200;

fn cycle(n: usize, pts: &[usize]) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for i in 0..pts.len() {
        images[pts[i]] = pts[(i + 1) % pts.len()];
    }
    Permutation::from_images(images).unwrap()
}

/// Transitive groups of degree `n`: cyclic, dihedral, alternating, symmetric,
/// and `S_a ≀ S_b` for each factorisation `n = a·b`. Groups of equal order are listed once.
pub fn transitive_catalogue(n: usize) -> Vec<(String, PermGroup)> {
    let all: Vec<usize> = (0..n).collect();
    let mut out: Vec<(String, PermGroup)> = Vec::new();
    let mut push = |name: String, gens: Vec<Permutation>| {
        let g = PermGroup::new(n, gens).unwrap();
        if !out.iter().any(|(_, h)| h.order() == g.order()) {
            out.push((name, g));
        }
    };
    push(format!("C{n}"), vec![cycle(n, &all)]);
    if n >= 3 {
        let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
        push(format!("D{n}"), vec![cycle(n, &all), refl]);
        push(format!("A{n}"), (2..n).map(|i| cycle(n, &[0, 1, i])).collect());
    }
    push(format!("S{n}"), vec![cycle(n, &all), cycle(n, &[0, 1])]);
    for a in 2..n {
        if n % a != 0 || n / a < 2 {
            continue;
        }
        let b = n / a;
        let block: Vec<usize> = (0..a).collect();
        let blocks = |p: &[usize]| {
            let mut images: Vec<usize> = (0..n).collect();
            for i in 0..p.len() {
                for j in 0..a {
                    images[p[i] * a + j] = p[(i + 1) % p.len()] * a + j;
                }
            }
            Permutation::from_images(images).unwrap()
        };
        let tops: Vec<usize> = (0..b).collect();
        push(
            format!("S{a}wrS{b}"),
            vec![cycle(n, &block), cycle(n, &[0, 1]), blocks(&tops), blocks(&[0, 1])],
        );
    }
    out
}

fn random_perm<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

fn random_element<R: Rng>(g: &PermGroup, rng: &mut R) -> Permutation {
    let chain = g.chain();
    let idx: Vec<usize> = chain.transversal_sizes().iter().map(|&s| rng.gen_range(0..s)).collect();
    chain.element(&idx)
}

/// Places `parts[i]` (each of degree `n`) on points `i·n .. (i+1)·n`.
fn embed(n: usize, parts: &[Permutation]) -> Permutation {
    let mut images = Vec::with_capacity(n * parts.len());
    for (i, p) in parts.iter().enumerate() {
        images.extend(p.images().iter().map(|x| x + i * n));
    }
    Permutation::from_images(images).unwrap()
}

fn restrict(n: usize, g: &Permutation, i: usize) -> Permutation {
    Permutation::from_images((0..n).map(|x| g.apply(i * n + x) - i * n).collect()).unwrap()
}

#[derive(Clone, Debug)]
pub struct Subdirect {
    pub k: usize,
    pub n: usize,
    pub factors: Vec<PermGroup>,
    pub group: PermGroup,
}

/// A proper `(k, n)`-subdirect product of `k` randomly conjugated catalogue groups.
pub fn make_subdirect(k: usize, n: usize, seed: u64) -> Result<Subdirect, Error> {
    if k < 2 || n < 2 {
        return Err(Error::Experiment("subdirect products need k, n ≥ 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let catalogue = transitive_catalogue(n);
    for _ in 0..MAX_ATTEMPTS {
        let factors: Vec<PermGroup> = (0..k)
            .map(|_| {
                let (_, g) = catalogue.choose(&mut rng).unwrap();
                let x = random_perm(n, &mut rng);
                PermGroup::new(n, g.generators().iter().map(|h| h.conjugate_by(&x)).collect()).unwrap()
            })
            .collect();
        let full: num_bigint::BigUint = factors.iter().map(|f| f.order()).product();
        let mut gens: Vec<Permutation> = Vec::new();
        for _ in 0..4 * k + 4 {
            let parts: Vec<Permutation> = factors.iter().map(|f| random_element(f, &mut rng)).collect();
            gens.push(embed(n, &parts));
            let surjective = factors.iter().enumerate().all(|(i, f)| {
                let proj: Vec<Permutation> = gens.iter().map(|g| restrict(n, g, i)).collect();
                PermGroup::new(n, proj).unwrap().order() == f.order()
            });
            if surjective {
                let group = PermGroup::new(k * n, gens.clone())?;
                if group.order() < full {
                    return Ok(Subdirect { k, n, factors, group });
                }
                break;
            }
        }
    }
    Err(Error::Generation(MAX_ATTEMPTS))
}

/// Two subdirect products `U`, `V` with the same orbits and representatives
/// `x`, `y` from the stabiliser of the orbit list; the problem is `U·x ∩ V·y`.
pub fn subdirect_spec(k: usize, n: usize, seed: u64, mode: Mode, goal: Goal) -> Result<ProblemSpec, Error> {
    let u = make_subdirect(k, n, seed)?;
    let v = make_subdirect(k, n, seed ^ 0x9e37_79b9_7f4a_7c15)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let mut rep = || embed(n, &(0..k).map(|_| random_perm(n, &mut rng)).collect::<Vec<_>>());
    let (x, y) = (rep(), rep());
    let gens = |g: &PermGroup| g.generators().iter().map(|h| h.to_cycle_string()).collect();
    Ok(ProblemSpec {
        degree: k * n,
        constraints: vec![
            ConstraintSpec::InCoset { gens: gens(&u.group), rep: x.to_cycle_string(), strategy: Strategy::OrbitalGraphs },
            ConstraintSpec::InCoset { gens: gens(&v.group), rep: y.to_cycle_string(), strategy: Strategy::OrbitalGraphs },
        ],
        goal,
        mode,
        seed,
    })
}
