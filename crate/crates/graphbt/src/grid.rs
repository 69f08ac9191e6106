//! Grid groups and the three grid stabiliser problems.

use graphbt_core::{PermGroup, Permutation};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::spec::{ConstraintSpec, Goal, Mode, ProblemSpec, Strategy};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GridKind {
    /// Stabiliser of a subset of size ⌊n²/2⌋.
    I,
    /// Stabiliser of a subset with ⌊n/2⌋ points in each grid row.
    Ii,
    /// Stabiliser of an unordered partition into two cells of size n²/2.
    Iii,
}

impl std::str::FromStr for GridKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "i" => Ok(GridKind::I),
            "ii" => Ok(GridKind::Ii),
            "iii" => Ok(GridKind::Iii),
            _ => Err(Error::Experiment(format!("unknown grid problem kind {s:?}"))),
        }
    }
}

fn coordinatewise(n: usize, g: &Permutation, rows: bool) -> Permutation {
    let images = (0..n * n)
        .map(|x| {
            let (r, c) = (x / n, x % n);
            if rows {
                g.apply(r) * n + c
            } else {
                r * n + g.apply(c)
            }
        })
        .collect();
    Permutation::from_images(images).unwrap()
}

/// `Sym(n) × Sym(n)` acting on the `n × n` grid, point `(r, c)` being `r·n + c`.
pub fn make_grid_group(n: usize) -> Result<PermGroup, Error> {
    if n < 2 {
        return Err(Error::Experiment("grid needs n ≥ 2".into()));
    }
    let sym = PermGroup::symmetric(n);
    let mut gens = Vec::new();
    for rows in [true, false] {
        for g in sym.generators() {
            gens.push(coordinatewise(n, g, rows));
        }
    }
    Ok(PermGroup::new(n * n, gens)?)
}

fn one_based(v: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = v.iter().map(|x| x + 1).collect();
    out.sort_unstable();
    out
}

/// The grid problem of `kind` for instance `seed`: the grid group intersected with a stabiliser.
pub fn grid_spec(n: usize, kind: GridKind, seed: u64, mode: Mode) -> Result<ProblemSpec, Error> {
    let g = make_grid_group(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<usize> = (0..n * n).collect();
    let stab = match kind {
        GridKind::I => {
            pts.shuffle(&mut rng);
            ConstraintSpec::SetStab { set: one_based(&pts[..n * n / 2]) }
        }
        GridKind::Ii => {
            let mut set = Vec::new();
            for r in 0..n {
                let mut cols: Vec<usize> = (0..n).collect();
                cols.shuffle(&mut rng);
                set.extend(cols[..n / 2].iter().map(|c| r * n + c));
            }
            ConstraintSpec::SetStab { set: one_based(&set) }
        }
        GridKind::Iii => {
            if n % 2 != 0 {
                return Err(Error::Experiment("problem iii needs even n".into()));
            }
            pts.shuffle(&mut rng);
            let half = n * n / 2;
            ConstraintSpec::DisjointStab { sets: vec![one_based(&pts[..half]), one_based(&pts[half..])] }
        }
    };
    let gens = g.generators().iter().map(|x| x.to_cycle_string()).collect();
    Ok(ProblemSpec {
        degree: n * n,
        constraints: vec![ConstraintSpec::InGroup { gens, strategy: Strategy::OrbitalGraphs }, stab],
        goal: Goal::Group,
        mode,
        seed,
    })
}
