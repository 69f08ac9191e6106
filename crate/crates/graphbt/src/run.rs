//! Running a problem spec in a given mode and reporting the result.

use std::time::Instant;

use graphbt_core::refiners::{ArcFree, CellTagged};
use graphbt_core::{Approximator, Permutation, Problem, Refiner, SearchOptions, SearchStats};
use serde::{Deserialize, Serialize};

use crate::oracle::{holds, oracle};
use crate::spec::{Constraint, Goal, Mode, ProblemSpec, Strategy};
use crate::Error;

impl Mode {
    pub fn approximator(self) -> Approximator {
        match self {
            Mode::Leon | Mode::Orbital => Approximator::Weak,
            Mode::Strong => Approximator::Strong,
            Mode::Full => Approximator::Exact,
        }
    }

    /// The refiner for `c` as used in this mode.
    pub fn refiner(self, n: usize, c: &Constraint) -> Box<dyn Refiner> {
        match self {
            Mode::Leon => Box::new(ArcFree::new(c.refiner(n, Some(Strategy::Orbits)))),
            Mode::Orbital => Box::new(CellTagged::new(c.refiner(n, None))),
            Mode::Strong | Mode::Full => c.refiner(n, None),
        }
    }

    pub fn problem(self, n: usize, cs: &[Constraint], options: SearchOptions) -> Problem {
        let mut p = Problem::new(n, self.approximator()).with_options(options);
        for c in cs {
            p.push(self.refiner(n, c));
        }
        p
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsJson {
    pub nodes: u64,
    pub leaves: u64,
    pub refiner_applications: u64,
    pub approximator_calls: u64,
}

impl From<&SearchStats> for StatsJson {
    fn from(s: &SearchStats) -> Self {
        StatsJson {
            nodes: s.nodes,
            leaves: s.leaves,
            refiner_applications: s.refiner_applications,
            approximator_calls: s.approximator_calls,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    /// Base points, 1-based.
    pub base: Vec<usize>,
    pub generators: Vec<String>,
    pub order: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Solutions {
    /// `goal = all`: every solution.
    All { solutions: Vec<String> },
    /// `goal = single`: one solution or null.
    Single { solution: Option<String> },
    /// `goal = group`: the solution set as `⟨generators⟩ · representative`, or null when empty.
    Group { group: Option<GroupJson>, representative: Option<String> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultReport {
    pub degree: usize,
    pub mode: Mode,
    pub goal: Goal,
    pub seed: u64,
    pub result: Solutions,
    pub stats: StatsJson,
    pub ms: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle_agrees: Option<bool>,
}

impl ResultReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(s)?)
    }

    /// Every permutation the report lists: solutions, generators and representative.
    pub fn listed(&self) -> Result<Vec<Permutation>, Error> {
        let n = self.degree;
        let parse = |s: &String| Permutation::parse(s, n).map_err(Error::from);
        match &self.result {
            Solutions::All { solutions } => solutions.iter().map(parse).collect(),
            Solutions::Single { solution } => solution.iter().map(parse).collect(),
            Solutions::Group { group, representative } => {
                let mut out: Vec<Permutation> = representative.iter().map(parse).collect::<Result<_, _>>()?;
                if let Some(g) = group {
                    for x in &g.generators {
                        out.push(parse(x)?);
                    }
                }
                Ok(out)
            }
        }
    }

    /// The solution set described by the report, enumerated.
    pub fn solution_set(&self) -> Result<Vec<Permutation>, Error> {
        let n = self.degree;
        let mut out = match &self.result {
            Solutions::Group { group: Some(g), representative: Some(r) } => {
                let gens = g
                    .generators
                    .iter()
                    .map(|x| Permutation::parse(x, n))
                    .collect::<Result<Vec<_>, _>>()?;
                let r = Permutation::parse(r, n)?;
                graphbt_core::PermGroup::new(n, gens)?
                    .elements()
                    .into_iter()
                    .map(|x| x.mul(&r))
                    .collect()
            }
            Solutions::Group { .. } => Vec::new(),
            _ => self.listed()?,
        };
        out.sort();
        Ok(out)
    }
}

/// Checks that every permutation listed in `report` satisfies every constraint of `spec`.
/// For group reports the generators must lie in the group part `U·r⁻¹`.
pub fn verify_report(spec: &ProblemSpec, report: &ResultReport) -> Result<bool, Error> {
    let cs = spec.resolve()?;
    let n = spec.degree;
    let ok = |g: &Permutation| cs.iter().all(|c| holds(c, g));
    Ok(match &report.result {
        Solutions::Group { group: Some(gj), representative: Some(r) } => {
            let r = Permutation::parse(r, n)?;
            ok(&r)
                && gj.generators.iter().all(|x| {
                    Permutation::parse(x, n).map(|x| ok(&x.mul(&r))).unwrap_or(false)
                })
        }
        _ => report.listed()?.iter().all(ok),
    })
}

/// Runs `spec` in its own mode and goal.
pub fn run(spec: &ProblemSpec, check_oracle: bool) -> Result<ResultReport, Error> {
    run_with(spec, SearchOptions::default(), check_oracle)
}

pub fn run_with(
    spec: &ProblemSpec,
    options: SearchOptions,
    check_oracle: bool,
) -> Result<ResultReport, Error> {
    let n = spec.degree;
    let cs = spec.resolve()?;
    let mut p = spec.mode.problem(n, &cs, options);
    let start = Instant::now();
    let (result, stats) = match spec.goal {
        Goal::All => {
            let (v, s) = p.search_all();
            (Solutions::All { solutions: v.iter().map(|g| g.to_cycle_string()).collect() }, s)
        }
        Goal::Single => {
            let (g, s) = p.search_single();
            (Solutions::Single { solution: g.map(|g| g.to_cycle_string()) }, s)
        }
        Goal::Group => {
            let (r, s) = p.search_coset();
            let res = match r {
                None => Solutions::Group { group: None, representative: None },
                Some((b, g)) => Solutions::Group {
                    group: Some(GroupJson {
                        base: b.base.iter().map(|x| x + 1).collect(),
                        generators: b.strong_generators.iter().map(|x| x.to_cycle_string()).collect(),
                        order: b.order().to_string(),
                    }),
                    representative: Some(g.to_cycle_string()),
                },
            };
            (res, s)
        }
    };
    let ms = start.elapsed().as_secs_f64() * 1000.0;
    let mut report = ResultReport {
        degree: n,
        mode: spec.mode,
        goal: spec.goal,
        seed: spec.seed,
        result,
        stats: StatsJson::from(&stats),
        ms,
        oracle_agrees: None,
    };
    if check_oracle {
        report.oracle_agrees = Some(agrees(&report, &oracle(spec)?)?);
    }
    Ok(report)
}

fn agrees(report: &ResultReport, want: &[Permutation]) -> Result<bool, Error> {
    Ok(match &report.result {
        Solutions::Single { solution: None } => want.is_empty(),
        Solutions::Single { .. } => report.listed()?.iter().all(|g| want.binary_search(g).is_ok()),
        _ => report.solution_set()? == want,
    })
}
