//! Experiment harness: per-instance CSV rows for the grid and subdirect suites.

use rayon::prelude::*;

use crate::grid::{grid_spec, GridKind};
use crate::run::{run, Solutions};
use crate::spec::{Goal, Mode};
use crate::subdirect::subdirect_spec;
use crate::Error;

pub const CSV_HEADER: &str = "seed,mode,nodes,zero,order,empty,ms";

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub seed: u64,
    pub mode: Mode,
    pub nodes: u64,
    pub order: String,
    pub empty: bool,
    pub ms: f64,
}

impl Row {
    pub fn zero(&self) -> bool {
        self.nodes == 0
    }

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.3}",
            self.seed,
            self.mode,
            self.nodes,
            self.zero() as u8,
            self.order,
            self.empty as u8,
            self.ms
        )
    }
}

pub fn to_csv(rows: &[Row]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv());
        out.push('\n');
    }
    out
}

/// Instance `i` of a suite with master seed `seed`.
pub fn instance_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_add(i as u64)
}

fn group_order(s: &Solutions) -> (String, bool) {
    match s {
        Solutions::Group { group: Some(g), .. } => (g.order.clone(), false),
        Solutions::Group { group: None, .. } => ("0".into(), true),
        Solutions::All { solutions } => (solutions.len().to_string(), solutions.is_empty()),
        Solutions::Single { solution } => (String::new(), solution.is_none()),
    }
}

/// One row per instance and mode, instances in order and modes in the given order.
pub fn grid_experiments(
    n: usize,
    kind: GridKind,
    count: usize,
    modes: &[Mode],
    seed: u64,
) -> Result<Vec<Row>, Error> {
    let rows: Result<Vec<Vec<Row>>, Error> = (0..count)
        .into_par_iter()
        .map(|i| {
            let s = instance_seed(seed, i);
            modes
                .iter()
                .map(|&m| {
                    let r = run(&grid_spec(n, kind, s, m)?, false)?;
                    let (order, empty) = group_order(&r.result);
                    Ok(Row { seed: s, mode: m, nodes: r.stats.nodes, order, empty, ms: r.ms })
                })
                .collect()
        })
        .collect();
    Ok(rows?.into_iter().flatten().collect())
}

/// Coset-intersection emptiness per instance and mode. Nodes count the
/// single-solution search; `order` is the size of the intersection.
pub fn subdirect_experiments(
    k: usize,
    n: usize,
    count: usize,
    modes: &[Mode],
    seed: u64,
) -> Result<Vec<Row>, Error> {
    let rows: Result<Vec<Vec<Row>>, Error> = (0..count)
        .into_par_iter()
        .map(|i| {
            let s = instance_seed(seed, i);
            let sized = run(&subdirect_spec(k, n, s, Mode::Strong, Goal::Group)?, false)?;
            let (order, _) = group_order(&sized.result);
            modes
                .iter()
                .map(|&m| {
                    let r = run(&subdirect_spec(k, n, s, m, Goal::Single)?, false)?;
                    let (_, empty) = group_order(&r.result);
                    Ok(Row { seed: s, mode: m, nodes: r.stats.nodes, order: order.clone(), empty, ms: r.ms })
                })
                .collect()
        })
        .collect();
    Ok(rows?.into_iter().flatten().collect())
}
