//! The recursive search: refine, split, and collect solutions or a base and
//! strong generating set.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::AddAssign;

use num_bigint::BigUint;

use crate::canon::{canonise, exact_compare, CanonResult};
use crate::digraph::LabelledDigraph;
use crate::equitable::{
    classify, strong_view, weak_view, CellView, Classification, Interner, IsoEstimate,
};
use crate::perm::{orbits_of, PermGroup, Permutation, StabChain};
use crate::refiners::{Refiner, StackInfo};
use crate::splitter::split;
use crate::stack::DigraphStack;
use crate::Error;

/// Which isomorphism approximator drives the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Approximator {
    /// Algorithm 1 on each stack entry, intersected.
    Weak,
    /// Algorithm 1 on the squash.
    Strong,
    /// Canonical labelling of the squash.
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Skip children already covered by the generators found so far.
    pub prune: bool,
    /// In debug builds, recompute cached left-hand refiner outputs and compare.
    pub verify_trace: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { prune: true, verify_trace: false }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Recursive search calls, not counting the root.
    pub nodes: u64,
    pub leaves: u64,
    pub refiner_applications: u64,
    pub approximator_calls: u64,
}

impl SearchStats {
    pub fn node_count(&self) -> u64 {
        self.nodes
    }
}

impl AddAssign<&SearchStats> for SearchStats {
    fn add_assign(&mut self, o: &SearchStats) {
        self.nodes += o.nodes;
        self.leaves += o.leaves;
        self.refiner_applications += o.refiner_applications;
        self.approximator_calls += o.approximator_calls;
    }
}

/// A base (as points) and strong generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BsgsResult {
    pub degree: usize,
    pub base: Vec<usize>,
    pub strong_generators: Vec<Permutation>,
}

impl BsgsResult {
    /// `[Γ_α]` for each base point `α`.
    pub fn base_stacks(&self) -> Vec<DigraphStack> {
        self.base
            .iter()
            .map(|&a| DigraphStack::single(LabelledDigraph::point(self.degree, a)))
            .collect()
    }

    pub fn chain(&self) -> StabChain {
        StabChain::build(self.degree, &self.strong_generators, &self.base)
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn group(&self) -> PermGroup {
        PermGroup::new(self.degree, self.strong_generators.clone()).unwrap()
    }
}

/// A search problem: a list of constraints, each given by a refiner that
/// also carries the membership test.
pub struct Problem {
    degree: usize,
    constraints: Vec<Box<dyn Refiner>>,
    approximator: Approximator,
    options: SearchOptions,
}

impl Problem {
    pub fn new(degree: usize, approximator: Approximator) -> Self {
        Problem { degree, constraints: Vec::new(), approximator, options: SearchOptions::default() }
    }

    pub fn with_options(mut self, options: SearchOptions) -> Self {
        self.options = options;
        self
    }

    pub fn push(&mut self, r: Box<dyn Refiner>) {
        self.constraints.push(r);
    }

    pub fn with(mut self, r: Box<dyn Refiner>) -> Self {
        self.push(r);
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn approximator(&self) -> Approximator {
        self.approximator
    }

    pub fn options(&self) -> SearchOptions {
        self.options
    }

    pub fn constraints(&self) -> &[Box<dyn Refiner>] {
        &self.constraints
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.constraints.iter().all(|c| c.contains(p))
    }

    /// Alg. 2's Refine applied to `(s, t)` from a fresh state.
    pub fn refine(&mut self, s: &DigraphStack, t: &DigraphStack) -> (DigraphStack, DigraphStack) {
        let mut e = Engine::new(self, s.clone());
        let same = e.all_group && s == t;
        let (l, r, _, _) = e.refine(0, t.clone(), same);
        (l, r)
    }

    /// Every permutation satisfying all constraints, sorted.
    pub fn search_all(&mut self) -> (Vec<Permutation>, SearchStats) {
        let n = self.degree;
        let mut e = Engine::new(self, DigraphStack::empty(n));
        let mut goal = Goal::All(Vec::new());
        let same = e.all_group;
        e.search(0, DigraphStack::empty(n), same, None, &mut goal);
        let Goal::All(mut v) = goal else { unreachable!() };
        v.sort();
        (v, e.stats)
    }

    /// The first solution found, if any.
    pub fn search_single(&mut self) -> (Option<Permutation>, SearchStats) {
        let n = self.degree;
        let mut e = Engine::new(self, DigraphStack::empty(n));
        let mut goal = Goal::Single(None);
        let same = e.all_group;
        e.search(0, DigraphStack::empty(n), same, None, &mut goal);
        let Goal::Single(g) = goal else { unreachable!() };
        (g, e.stats)
    }

    /// A base and strong generating set for the intersection, which must be a group.
    pub fn search_gens(&mut self) -> Result<(BsgsResult, SearchStats), Error> {
        let id = Permutation::identity(self.degree);
        if !self.contains(&id) {
            return Err(Error::IdentityNotMember);
        }
        let n = self.degree;
        let mut e = Engine::new(self, DigraphStack::empty(n));
        let mut base = Vec::new();
        let mut gens = Vec::new();
        e.gens(0, &mut base, &mut gens);
        gens.retain(|g: &Permutation| !g.is_identity());
        if gens.is_empty() {
            gens.push(id);
        }
        let r = BsgsResult { degree: n, base, strong_generators: gens };
        Ok((r, e.stats))
    }

    /// The intersection as `(BSGS of the group part, representative)`, or `None` if empty.
    pub fn search_coset(&mut self) -> (Option<(BsgsResult, Permutation)>, SearchStats) {
        let (g, mut stats) = self.search_single();
        let Some(g) = g else { return (None, stats) };
        let mut sub = Problem::new(self.degree, self.approximator).with_options(self.options);
        for c in &self.constraints {
            sub.push(c.translated(&g));
        }
        let (bsgs, s2) = sub.search_gens().expect("translated constraints contain the identity");
        stats += &s2;
        (Some((bsgs, g)), stats)
    }
}

enum Goal {
    All(Vec<Permutation>),
    Single(Option<Permutation>),
}

impl Goal {
    fn found(&mut self, g: Permutation) {
        match self {
            Goal::All(v) => v.push(g),
            Goal::Single(s) => *s = Some(g),
        }
    }

    fn done(&self) -> bool {
        matches!(self, Goal::Single(Some(_)))
    }
}

#[derive(Clone)]
enum View {
    Cells(Arc<CellView>),
    Canon(Arc<CanonResult>),
}

impl View {
    fn fixed(&self) -> Vec<usize> {
        match self {
            View::Cells(c) => c.fixed(),
            View::Canon(c) => c.fixed_points(),
        }
    }

    fn cells(&self, n: usize) -> Vec<u32> {
        let cells = match self {
            View::Cells(c) => c.cells.clone(),
            View::Canon(c) => c.orbit_cells(),
        };
        let mut idx = alloc::vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            for &x in c {
                idx[x] = i as u32;
            }
        }
        idx
    }

    fn compare(&self, other: &View, n: usize) -> IsoEstimate {
        match (self, other) {
            (View::Cells(a), View::Cells(b)) => a.compare(b, n),
            (View::Canon(a), View::Canon(b)) => exact_compare(a, b),
            _ => unreachable!(),
        }
    }
}

const CACHE_LIMIT: usize = 4096;

/// Approximator state shared by both sides of one search.
struct Views {
    n: usize,
    kind: Approximator,
    interner: Interner,
    entries: BTreeMap<usize, (Arc<LabelledDigraph>, Arc<Classification>)>,
    stacks: BTreeMap<Vec<usize>, (DigraphStack, View)>,
}

fn stack_key(s: &DigraphStack) -> Vec<usize> {
    s.entries().iter().map(|e| Arc::as_ptr(e) as usize).collect()
}

impl Views {
    fn entry(&mut self, e: &Arc<LabelledDigraph>) -> Arc<Classification> {
        let k = Arc::as_ptr(e) as usize;
        if let Some((_, c)) = self.entries.get(&k) {
            return c.clone();
        }
        let c = Arc::new(classify(e, &mut self.interner));
        if self.entries.len() >= CACHE_LIMIT * 8 {
            self.entries.clear();
        }
        self.entries.insert(k, (e.clone(), c.clone()));
        c
    }

    fn view(&mut self, s: &DigraphStack) -> View {
        let key = stack_key(s);
        if let Some((_, v)) = self.stacks.get(&key) {
            return v.clone();
        }
        let v = match self.kind {
            Approximator::Weak => {
                let cs: Vec<Arc<Classification>> = s.entries().iter().map(|e| self.entry(e)).collect();
                let refs: Vec<&Classification> = cs.iter().map(|c| &**c).collect();
                View::Cells(Arc::new(weak_view(self.n, &refs)))
            }
            Approximator::Strong => View::Cells(Arc::new(strong_view(s, &mut self.interner))),
            Approximator::Exact => View::Canon(Arc::new(canonise(&s.squash()))),
        };
        if self.stacks.len() >= CACHE_LIMIT {
            self.stacks.clear();
        }
        self.stacks.insert(key, (s.clone(), v.clone()));
        v
    }
}

impl StackInfo for Views {
    fn fixed(&mut self, s: &DigraphStack) -> Vec<usize> {
        self.view(s).fixed()
    }

    fn cells(&mut self, s: &DigraphStack) -> Vec<u32> {
        let n = self.n;
        self.view(s).cells(n)
    }
}

/// Left-hand state at one depth: the input stack, the refiner outputs in
/// application order, and the view at each pass boundary.
struct DepthTrace {
    input: DigraphStack,
    outputs: Vec<DigraphStack>,
    pass_views: Vec<View>,
}

struct Engine<'a> {
    n: usize,
    refiners: &'a mut [Box<dyn Refiner>],
    views: Views,
    trace: Vec<DepthTrace>,
    stats: SearchStats,
    options: SearchOptions,
    all_group: bool,
}

impl<'a> Engine<'a> {
    fn new(p: &'a mut Problem, root: DigraphStack) -> Self {
        for r in p.constraints.iter_mut() {
            r.reset();
        }
        let all_group = p.constraints.iter().all(|r| r.is_group());
        Engine {
            n: p.degree,
            refiners: &mut p.constraints,
            views: Views {
                n: p.degree,
                kind: p.approximator,
                interner: Interner::new(),
                entries: BTreeMap::new(),
                stacks: BTreeMap::new(),
            },
            trace: alloc::vec![DepthTrace { input: root, outputs: Vec::new(), pass_views: Vec::new() }],
            stats: SearchStats::default(),
            options: p.options,
            all_group,
        }
    }

    fn left_output(&mut self, d: usize, step: usize, left: &DigraphStack) -> DigraphStack {
        let i = step % self.refiners.len();
        if let Some(out) = self.trace[d].outputs.get(step).cloned() {
            if cfg!(debug_assertions) && self.options.verify_trace {
                let fresh = self.refiners[i].apply_left(left, &mut self.views);
                assert_eq!(fresh, out, "left trace replay diverged at depth {d}, step {step}");
            }
            return out;
        }
        assert_eq!(step, self.trace[d].outputs.len(), "left trace has a gap");
        self.stats.refiner_applications += 1;
        let out = self.refiners[i].apply_left(left, &mut self.views);
        self.trace[d].outputs.push(out.clone());
        out
    }

    fn left_view(&mut self, d: usize, pass: usize, left: &DigraphStack) -> View {
        if let Some(v) = self.trace[d].pass_views.get(pass) {
            return v.clone();
        }
        assert_eq!(pass, self.trace[d].pass_views.len(), "left trace has a gap");
        let v = self.views.view(left);
        self.trace[d].pass_views.push(v.clone());
        v
    }

    fn estimate(&mut self, l: &View, r: &View, llen: usize, rlen: usize) -> IsoEstimate {
        self.stats.approximator_calls += 1;
        if llen != rlen {
            return IsoEstimate::Empty;
        }
        l.compare(r, self.n)
    }

    /// Returns the refined pair, its estimate, and the estimate before any pass.
    fn refine(
        &mut self,
        d: usize,
        mut right: DigraphStack,
        same: bool,
    ) -> (DigraphStack, DigraphStack, IsoEstimate, BigUint) {
        let mut left = self.trace[d].input.clone();
        let m = self.refiners.len();
        let lv = self.left_view(d, 0, &left);
        let rv = if same { lv.clone() } else { self.views.view(&right) };
        let mut est = self.estimate(&lv, &rv, left.len(), right.len());
        let initial = est.size();
        let mut pass = 0;
        while !est.is_empty() && m > 0 {
            let (ls, rs) = (left.len(), right.len());
            for i in 0..m {
                if left.len() != right.len() {
                    break;
                }
                let out_l = self.left_output(d, pass * m + i, &left);
                let out_r = if same {
                    out_l.clone()
                } else {
                    self.stats.refiner_applications += 1;
                    self.refiners[i].apply_right(&right, &mut self.views)
                };
                left.extend(&out_l);
                right.extend(&out_r);
            }
            let next = if left.len() != right.len() {
                IsoEstimate::Empty
            } else {
                let lv = self.left_view(d, pass + 1, &left);
                let rv = if same { lv.clone() } else { self.views.view(&right) };
                self.estimate(&lv, &rv, left.len(), right.len())
            };
            if next.size() >= est.size() {
                left.truncate(ls);
                right.truncate(rs);
                return (left, right, est, initial);
            }
            est = next;
            pass += 1;
        }
        (left, right, est, initial)
    }

    fn child_trace(&mut self, d: usize, left: &DigraphStack, alpha: usize) {
        let mut input = left.clone();
        input.push(LabelledDigraph::point(self.n, alpha)).unwrap();
        if let Some(t) = self.trace.get(d + 1) {
            debug_assert_eq!(t.input, input, "left stack differs between branches at depth {}", d + 1);
            return;
        }
        self.trace.push(DepthTrace { input, outputs: Vec::new(), pass_views: Vec::new() });
    }

    fn check_shrink(parent: Option<&BigUint>, initial: &BigUint) {
        if let Some(p) = parent {
            assert!(
                initial < p,
                "splitter did not shrink the estimate ({initial} is not below {p})"
            );
        }
    }

    fn search(
        &mut self,
        d: usize,
        right: DigraphStack,
        same: bool,
        parent: Option<&BigUint>,
        goal: &mut Goal,
    ) {
        let (left, right, est, initial) = self.refine(d, right, same);
        Self::check_shrink(parent, &initial);
        if est.is_empty() {
            return;
        }
        let size = est.size();
        if size == BigUint::from(1u32) {
            self.stats.leaves += 1;
            let h = est.representative().unwrap();
            if left.maps_to(&right, h) && self.refiners.iter().all(|r| r.contains(h)) {
                goal.found(h.clone());
            }
            return;
        }
        let sp = split(&left, &right, &est).expect("estimate has size at least two");
        self.child_trace(d, &left, sp.alpha);
        for &beta in &sp.betas {
            let mut child = right.clone();
            child.push(LabelledDigraph::point(self.n, beta)).unwrap();
            self.stats.nodes += 1;
            self.search(d + 1, child, same && beta == sp.alpha, Some(&size), goal);
            if goal.done() {
                return;
            }
        }
    }

    fn gens(&mut self, d: usize, base: &mut Vec<usize>, x: &mut Vec<Permutation>) {
        let right = self.trace[d].input.clone();
        let same = self.all_group;
        let (left, right, est, _) = self.refine(d, right, same);
        debug_assert!(!est.is_empty(), "identity lies in Approx(S, S)");
        let size = est.size();
        if size <= BigUint::from(1u32) {
            return;
        }
        let sp = split(&left, &right, &est).expect("estimate has size at least two");
        debug_assert_eq!(sp.betas[0], sp.alpha);
        base.push(sp.alpha);
        self.child_trace(d, &left, sp.alpha);
        self.stats.nodes += 1;
        self.gens(d + 1, base, x);
        for i in 1..sp.betas.len() {
            let beta = sp.betas[i];
            if self.options.prune {
                let orbits = orbits_of(self.n, x);
                let orbit = orbits.iter().find(|o| o.contains(&beta)).unwrap();
                if sp.betas[..i].iter().any(|b| orbit.contains(b)) {
                    continue;
                }
            }
            let mut child = right.clone();
            child.push(LabelledDigraph::point(self.n, beta)).unwrap();
            self.stats.nodes += 1;
            let mut goal = Goal::Single(None);
            self.search(d + 1, child, false, Some(&size), &mut goal);
            if let Goal::Single(Some(g)) = goal {
                x.push(g);
            }
        }
    }
}
