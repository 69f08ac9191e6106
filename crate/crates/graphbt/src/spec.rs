//! JSON problem specifications. Points are 1-based; permutations are cycle strings.

use graphbt_core::refiners::{
    coset_refiner, digraph_iso_refiner, disjoint_subsets_refiner, group_refiner,
    list_of_subsets_refiner, perm_conjugacy_refiner, set_of_subsets_refiner, set_refiner,
    GroupStrategy,
};
use graphbt_core::{Label, LabelledDigraph, PermGroup, Permutation, Refiner};
use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Goal {
    All,
    Single,
    Group,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Leon,
    Orbital,
    Strong,
    Full,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::Leon, Mode::Orbital, Mode::Strong, Mode::Full];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Leon => "leon",
            Mode::Orbital => "orbital",
            Mode::Strong => "strong",
            Mode::Full => "full",
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Orbits,
    #[default]
    OrbitalGraphs,
}

impl From<Strategy> for GroupStrategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::Orbits => GroupStrategy::Orbits,
            Strategy::OrbitalGraphs => GroupStrategy::OrbitalGraphs,
        }
    }
}

/// A label as JSON: an integer, a string, or an array of labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelJson {
    Int(i64),
    Str(String),
    Seq(Vec<LabelJson>),
}

impl Default for LabelJson {
    fn default() -> Self {
        LabelJson::Int(0)
    }
}

impl From<&LabelJson> for Label {
    fn from(l: &LabelJson) -> Label {
        match l {
            LabelJson::Int(i) => Label::Int(*i),
            LabelJson::Str(s) => Label::Str(s.clone()),
            LabelJson::Seq(v) => Label::Seq(v.iter().map(Label::from).collect()),
        }
    }
}

/// An arc `[u, v]` or `[u, v, label]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ArcJson {
    Plain(usize, usize),
    Labelled(usize, usize, LabelJson),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphJson {
    /// One label per vertex; all vertices get the default label when omitted.
    #[serde(default)]
    pub vertex_labels: Vec<LabelJson>,
    #[serde(default)]
    pub arcs: Vec<ArcJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ConstraintSpec {
    SetStab { set: Vec<usize> },
    SetTransport { from: Vec<usize>, to: Vec<usize> },
    ListStab { sets: Vec<Vec<usize>> },
    ListTransport { from: Vec<Vec<usize>>, to: Vec<Vec<usize>> },
    SetsStab { sets: Vec<Vec<usize>> },
    SetsTransport { from: Vec<Vec<usize>>, to: Vec<Vec<usize>> },
    DisjointStab { sets: Vec<Vec<usize>> },
    DisjointTransport { from: Vec<Vec<usize>>, to: Vec<Vec<usize>> },
    Centralise { perm: String },
    Conjugate { from: String, to: String },
    DigraphAuto { digraph: DigraphJson },
    DigraphIso { from: DigraphJson, to: DigraphJson },
    InGroup {
        gens: Vec<String>,
        #[serde(default)]
        strategy: Strategy,
    },
    InCoset {
        gens: Vec<String>,
        rep: String,
        #[serde(default)]
        strategy: Strategy,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub degree: usize,
    #[serde(default)]
    pub constraints: Vec<ConstraintSpec>,
    #[serde(default = "default_goal")]
    pub goal: Goal,
    #[serde(default = "default_mode")]
    pub mode: Mode,
    #[serde(default)]
    pub seed: u64,
}

fn default_goal() -> Goal {
    Goal::All
}

fn default_mode() -> Mode {
    Mode::Strong
}

impl ProblemSpec {
    pub fn from_json(s: &str) -> Result<Self, Error> {
        let spec: ProblemSpec = serde_json::from_str(s)?;
        spec.resolve()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serialises")
    }

    /// Converts every constraint to 0-based form, validating points and degrees.
    pub fn resolve(&self) -> Result<Vec<Constraint>, Error> {
        self.constraints.iter().map(|c| Constraint::resolve(self.degree, c)).collect()
    }
}

/// A validated constraint with 0-based points.
#[derive(Clone, Debug)]
pub enum Constraint {
    Set(Vec<usize>, Vec<usize>),
    List(Vec<Vec<usize>>, Vec<Vec<usize>>),
    Sets(Vec<Vec<usize>>, Vec<Vec<usize>>),
    Disjoint(Vec<Vec<usize>>, Vec<Vec<usize>>),
    Conjugacy(Permutation, Permutation),
    Iso(LabelledDigraph, LabelledDigraph),
    Group(PermGroup, Strategy),
    Coset(PermGroup, Permutation, Strategy),
}

fn points(n: usize, pts: &[usize]) -> Result<Vec<usize>, Error> {
    pts.iter()
        .map(|&x| {
            if x == 0 || x > n {
                Err(Error::Spec(format!("point {x} is outside 1..={n}")))
            } else {
                Ok(x - 1)
            }
        })
        .collect()
}

fn families(n: usize, f: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, Error> {
    f.iter().map(|s| points(n, s)).collect()
}

fn perm(n: usize, s: &str) -> Result<Permutation, Error> {
    Ok(Permutation::parse(s, n)?)
}

fn digraph(n: usize, d: &DigraphJson) -> Result<LabelledDigraph, Error> {
    let labels = if d.vertex_labels.is_empty() {
        vec![Label::default(); n]
    } else {
        d.vertex_labels.iter().map(Label::from).collect()
    };
    let mut arcs = Vec::with_capacity(d.arcs.len());
    for a in &d.arcs {
        let (u, v, l) = match a {
            ArcJson::Plain(u, v) => (*u, *v, Label::default()),
            ArcJson::Labelled(u, v, l) => (*u, *v, Label::from(l)),
        };
        let uv = points(n, &[u, v])?;
        arcs.push(((uv[0], uv[1]), l));
    }
    Ok(LabelledDigraph::new(n, labels, arcs)?)
}

fn group(n: usize, gens: &[String]) -> Result<PermGroup, Error> {
    let gens = gens.iter().map(|g| perm(n, g)).collect::<Result<Vec<_>, _>>()?;
    Ok(PermGroup::new(n, gens)?)
}

impl Constraint {
    pub fn resolve(n: usize, c: &ConstraintSpec) -> Result<Constraint, Error> {
        use ConstraintSpec as C;
        Ok(match c {
            C::SetStab { set } => Constraint::Set(points(n, set)?, points(n, set)?),
            C::SetTransport { from, to } => Constraint::Set(points(n, from)?, points(n, to)?),
            C::ListStab { sets } => Constraint::List(families(n, sets)?, families(n, sets)?),
            C::ListTransport { from, to } => Constraint::List(families(n, from)?, families(n, to)?),
            C::SetsStab { sets } => Constraint::Sets(families(n, sets)?, families(n, sets)?),
            C::SetsTransport { from, to } => Constraint::Sets(families(n, from)?, families(n, to)?),
            C::DisjointStab { sets } => {
                let f = families(n, sets)?;
                disjoint_subsets_refiner(n, &f, &f)?;
                Constraint::Disjoint(f.clone(), f)
            }
            C::DisjointTransport { from, to } => {
                let (u, v) = (families(n, from)?, families(n, to)?);
                disjoint_subsets_refiner(n, &u, &v)?;
                Constraint::Disjoint(u, v)
            }
            C::Centralise { perm: g } => Constraint::Conjugacy(perm(n, g)?, perm(n, g)?),
            C::Conjugate { from, to } => Constraint::Conjugacy(perm(n, from)?, perm(n, to)?),
            C::DigraphAuto { digraph: d } => Constraint::Iso(digraph(n, d)?, digraph(n, d)?),
            C::DigraphIso { from, to } => Constraint::Iso(digraph(n, from)?, digraph(n, to)?),
            C::InGroup { gens, strategy } => Constraint::Group(group(n, gens)?, *strategy),
            C::InCoset { gens, rep, strategy } => {
                Constraint::Coset(group(n, gens)?, perm(n, rep)?, *strategy)
            }
        })
    }

    /// The refiner for this constraint, before any mode-specific wrapping.
    pub fn refiner(&self, n: usize, strategy_override: Option<Strategy>) -> Box<dyn Refiner> {
        let strat = |s: Strategy| GroupStrategy::from(strategy_override.unwrap_or(s));
        let r = match self {
            Constraint::Set(a, b) => set_refiner(n, a, b),
            Constraint::List(u, v) => list_of_subsets_refiner(n, u, v),
            Constraint::Sets(u, v) => set_of_subsets_refiner(n, u, v),
            Constraint::Disjoint(u, v) => disjoint_subsets_refiner(n, u, v),
            Constraint::Conjugacy(g, h) => perm_conjugacy_refiner(g, h),
            Constraint::Iso(a, b) => digraph_iso_refiner(a, b),
            Constraint::Group(g, s) => Ok(group_refiner(g.clone(), strat(*s))),
            Constraint::Coset(g, r, s) => coset_refiner(g.clone(), r.clone(), strat(*s)),
        };
        r.expect("constraint was validated on resolve")
    }
}
