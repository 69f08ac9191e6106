//! Refiners: pairs of stack functions that preserve the solutions of one constraint.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::digraph::{orbital_arcs, Label, LabelledDigraph};
use crate::perm::{orbits_of, PermGroup, Permutation, StabChain};
use crate::stack::DigraphStack;
use crate::Error;

/// What a refiner may ask about a stack during search.
pub trait StackInfo {
    /// `Fixed(S)` for the configured fixed-point approximator.
    fn fixed(&mut self, s: &DigraphStack) -> Vec<usize>;
    /// Index of the approximator's cell containing each vertex.
    fn cells(&mut self, s: &DigraphStack) -> Vec<u32>;
}

/// Context-free `StackInfo` using the strong approximator.
pub struct StrongInfo;

impl StackInfo for StrongInfo {
    fn fixed(&mut self, s: &DigraphStack) -> Vec<usize> {
        crate::equitable::strong_fixed(s)
    }

    fn cells(&mut self, s: &DigraphStack) -> Vec<u32> {
        let mut interner = crate::equitable::Interner::new();
        let v = crate::equitable::strong_view(s, &mut interner);
        let mut idx = alloc::vec![0; s.degree()];
        for (i, c) in v.cells.iter().enumerate() {
            for &x in c {
                idx[x] = i as u32;
            }
        }
        idx
    }
}

/// A refiner `(f_L, f_R)` for a set `U` of permutations, with a membership test.
pub trait Refiner: Send {
    fn name(&self) -> String;
    fn apply_left(&mut self, s: &DigraphStack, info: &mut dyn StackInfo) -> DigraphStack;
    fn apply_right(&mut self, t: &DigraphStack, info: &mut dyn StackInfo) -> DigraphStack;
    fn contains(&self, p: &Permutation) -> bool;
    /// Whether `f_L = f_R`.
    fn is_group(&self) -> bool;
    /// Clears any per-search state.
    fn reset(&mut self) {}
    /// A refiner for `U · g⁻¹`, given some `g` in `U`.
    fn translated(&self, g: &Permutation) -> Box<dyn Refiner>;
}

#[derive(Clone, Debug)]
enum Kind {
    Set(Vec<usize>, Vec<usize>),
    List(Vec<Vec<usize>>, Vec<Vec<usize>>),
    Sets(Vec<Vec<usize>>, Vec<Vec<usize>>),
    Disjoint(Vec<Vec<usize>>, Vec<Vec<usize>>),
    Conjugacy(Permutation, Permutation),
    Iso(LabelledDigraph, LabelledDigraph),
}

/// A refiner whose functions ignore their input stack.
#[derive(Clone, Debug)]
pub struct ConstantRefiner {
    kind: Kind,
    left: DigraphStack,
    right: DigraphStack,
}

fn sorted_set(s: &[usize]) -> Vec<usize> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

fn sorted_sets(s: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = s.iter().map(|x| sorted_set(x)).collect();
    v.sort();
    v.dedup();
    v
}

fn check_points(n: usize, pts: &[usize]) -> Result<(), Error> {
    match pts.iter().find(|&&x| x >= n) {
        Some(&x) => Err(Error::PointOutOfRange { point: x, degree: n }),
        None => Ok(()),
    }
}

fn set_digraph(n: usize, a: &[usize]) -> LabelledDigraph {
    let mut labels = alloc::vec![Label::Int(0); n];
    for &x in a {
        labels[x] = Label::Int(1);
    }
    LabelledDigraph::arc_free(labels)
}

fn list_digraph(n: usize, sets: &[Vec<usize>]) -> LabelledDigraph {
    let mut labels: Vec<Vec<Label>> = alloc::vec![Vec::new(); n];
    for (i, s) in sets.iter().enumerate() {
        for &x in s {
            labels[x].push(Label::Int(i as i64));
        }
    }
    LabelledDigraph::arc_free(labels.into_iter().map(Label::Seq).collect())
}

fn sets_digraph(n: usize, sets: &[Vec<usize>]) -> LabelledDigraph {
    let k = sets.len() as u64;
    let width = sets.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut vcount = alloc::vec![alloc::vec![0u64; width]; n];
    let mut acount: BTreeMap<(usize, usize), Vec<u64>> = BTreeMap::new();
    for s in sets {
        if s.is_empty() {
            continue;
        }
        let size = s.len() - 1;
        for &a in s {
            vcount[a][size] += 1;
            for &b in s {
                if a != b {
                    acount.entry((a, b)).or_insert_with(|| alloc::vec![0; width])[size] += 1;
                }
            }
        }
    }
    let lab = |c: &[u64]| Label::Seq(c.iter().map(|&x| Label::Count(x, k)).collect());
    let vertex_labels = vcount.iter().map(|c| lab(c)).collect();
    let arcs = acount.iter().map(|(&a, c)| (a, lab(c))).collect();
    LabelledDigraph::new(n, vertex_labels, arcs).unwrap()
}

fn disjoint_digraph(n: usize, sets: &[Vec<usize>]) -> LabelledDigraph {
    let mut labels = alloc::vec![Label::Int(0); n];
    let mut arcs = Vec::new();
    for s in sets {
        for &a in s {
            labels[a] = Label::Int(1);
            for &b in s {
                if a != b {
                    arcs.push(((a, b), Label::Int(0)));
                }
            }
        }
    }
    LabelledDigraph::new(n, labels, arcs).unwrap()
}

fn functional_digraph(g: &Permutation) -> LabelledDigraph {
    let n = g.degree();
    let arcs = (0..n).map(|a| ((a, g.apply(a)), Label::Int(0))).collect();
    LabelledDigraph::new(n, alloc::vec![Label::Int(0); n], arcs).unwrap()
}

impl ConstantRefiner {
    fn build(n: usize, kind: Kind) -> ConstantRefiner {
        let (l, r) = match &kind {
            Kind::Set(a, b) => (set_digraph(n, a), set_digraph(n, b)),
            Kind::List(u, v) => (list_digraph(n, u), list_digraph(n, v)),
            Kind::Sets(u, v) => (sets_digraph(n, u), sets_digraph(n, v)),
            Kind::Disjoint(u, v) => (disjoint_digraph(n, u), disjoint_digraph(n, v)),
            Kind::Conjugacy(g, h) => (functional_digraph(g), functional_digraph(h)),
            Kind::Iso(a, b) => (a.clone(), b.clone()),
        };
        ConstantRefiner { kind, left: DigraphStack::single(l), right: DigraphStack::single(r) }
    }

    /// Stabiliser of `a`, or the transporter from `a` to `b`.
    pub fn set(n: usize, a: &[usize], b: &[usize]) -> Result<Self, Error> {
        check_points(n, a)?;
        check_points(n, b)?;
        Ok(Self::build(n, Kind::Set(sorted_set(a), sorted_set(b))))
    }

    /// `{g : U_i^g = V_i for all i}`.
    pub fn list_of_subsets(n: usize, u: &[Vec<usize>], v: &[Vec<usize>]) -> Result<Self, Error> {
        for s in u.iter().chain(v) {
            check_points(n, s)?;
        }
        let norm = |x: &[Vec<usize>]| x.iter().map(|s| sorted_set(s)).collect();
        Ok(Self::build(n, Kind::List(norm(u), norm(v))))
    }

    /// `{g : 𝒰^g = 𝒱}` for sets of subsets.
    pub fn set_of_subsets(n: usize, u: &[Vec<usize>], v: &[Vec<usize>]) -> Result<Self, Error> {
        for s in u.iter().chain(v) {
            check_points(n, s)?;
        }
        Ok(Self::build(n, Kind::Sets(sorted_sets(u), sorted_sets(v))))
    }

    /// `{g : 𝒰^g = 𝒱}` for sets of pairwise disjoint subsets.
    pub fn disjoint_subsets(n: usize, u: &[Vec<usize>], v: &[Vec<usize>]) -> Result<Self, Error> {
        for fam in [u, v] {
            let mut seen = alloc::vec![false; n];
            for s in fam {
                check_points(n, s)?;
                for &x in &sorted_set(s) {
                    if seen[x] {
                        return Err(Error::Overlap);
                    }
                    seen[x] = true;
                }
            }
        }
        Ok(Self::build(n, Kind::Disjoint(sorted_sets(u), sorted_sets(v))))
    }

    /// `{x : g^x = h}`.
    pub fn perm_conjugacy(g: &Permutation, h: &Permutation) -> Result<Self, Error> {
        if g.degree() != h.degree() {
            return Err(Error::DegreeMismatch { left: g.degree(), right: h.degree() });
        }
        Ok(Self::build(g.degree(), Kind::Conjugacy(g.clone(), h.clone())))
    }

    /// `Iso(Γ, Δ)`.
    pub fn digraph_iso(a: &LabelledDigraph, b: &LabelledDigraph) -> Result<Self, Error> {
        if a.degree() != b.degree() {
            return Err(Error::DegreeMismatch { left: a.degree(), right: b.degree() });
        }
        Ok(Self::build(a.degree(), Kind::Iso(a.clone(), b.clone())))
    }

    pub fn left_stack(&self) -> &DigraphStack {
        &self.left
    }

    pub fn right_stack(&self) -> &DigraphStack {
        &self.right
    }
}

fn image_sets(p: &Permutation, sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = sets.iter().map(|s| p.image_of_set(s)).collect();
    v.sort();
    v
}

impl Refiner for ConstantRefiner {
    fn name(&self) -> String {
        match self.kind {
            Kind::Set(..) => "set",
            Kind::List(..) => "list-of-subsets",
            Kind::Sets(..) => "set-of-subsets",
            Kind::Disjoint(..) => "disjoint-subsets",
            Kind::Conjugacy(..) => "perm-conjugacy",
            Kind::Iso(..) => "digraph-iso",
        }
        .into()
    }

    fn apply_left(&mut self, _s: &DigraphStack, _info: &mut dyn StackInfo) -> DigraphStack {
        self.left.clone()
    }

    fn apply_right(&mut self, _t: &DigraphStack, _info: &mut dyn StackInfo) -> DigraphStack {
        self.right.clone()
    }

    fn contains(&self, p: &Permutation) -> bool {
        match &self.kind {
            Kind::Set(a, b) => p.degree() == self.left.degree() && p.image_of_set(a) == *b,
            Kind::List(u, v) => {
                u.len() == v.len() && u.iter().zip(v).all(|(a, b)| p.image_of_set(a) == *b)
            }
            Kind::Sets(u, v) | Kind::Disjoint(u, v) => image_sets(p, u) == *v,
            Kind::Conjugacy(g, h) => g.conjugate_by(p) == *h,
            Kind::Iso(a, b) => a.maps_to(b, p),
        }
    }

    fn is_group(&self) -> bool {
        self.left == self.right
    }

    fn translated(&self, _g: &Permutation) -> Box<dyn Refiner> {
        let n = self.left.degree();
        let kind = match &self.kind {
            Kind::Set(a, _) => Kind::Set(a.clone(), a.clone()),
            Kind::List(u, _) => Kind::List(u.clone(), u.clone()),
            Kind::Sets(u, _) => Kind::Sets(u.clone(), u.clone()),
            Kind::Disjoint(u, _) => Kind::Disjoint(u.clone(), u.clone()),
            Kind::Conjugacy(g, _) => Kind::Conjugacy(g.clone(), g.clone()),
            Kind::Iso(a, _) => Kind::Iso(a.clone(), a.clone()),
        };
        Box::new(ConstantRefiner::build(n, kind))
    }
}

/// How a group refiner encodes the stabiliser `G_F` as a stack.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupStrategy {
    Orbits,
    OrbitalGraphs,
}

struct TableEntry {
    fixed: Vec<usize>,
    stack: DigraphStack,
    chain: StabChain,
}

/// Refiner for a group given by generators, built from a table of
/// `(F_i, V_i)` keyed by stack length.
pub struct GroupRefiner {
    group: PermGroup,
    strategy: GroupStrategy,
    table: BTreeMap<usize, TableEntry>,
    created: usize,
}

fn orbit_encoding(n: usize, orbits: &[Vec<usize>]) -> LabelledDigraph {
    let mut labels = alloc::vec![Label::Int(0); n];
    for (i, o) in orbits.iter().enumerate() {
        for &x in o {
            labels[x] = Label::Seq(alloc::vec![Label::Int(i as i64)]);
        }
    }
    LabelledDigraph::arc_free(labels)
}

/// `V` for the stabiliser `G_F`, following `strategy`.
fn stabiliser_stack(
    n: usize,
    chain: &StabChain,
    strategy: GroupStrategy,
) -> DigraphStack {
    let gens = chain.prefix_stabiliser_generators();
    let mut orbits = orbits_of(n, &gens);
    orbits.sort_by_key(|o| (o.len(), o[0]));
    let mut stack = DigraphStack::single(orbit_encoding(n, &orbits));
    if strategy == GroupStrategy::Orbits {
        return stack;
    }
    let mut orbit_of = alloc::vec![0; n];
    for (i, o) in orbits.iter().enumerate() {
        for &x in o {
            orbit_of[x] = i;
        }
    }
    for o in &orbits {
        if o.len() == 1 {
            continue;
        }
        let alpha = o[0];
        let sub = StabChain::build(n, &gens, &[alpha]).prefix_stabiliser_generators();
        for so in orbits_of(n, &sub) {
            let beta = so[0];
            if beta == alpha || so.len() == orbits[orbit_of[beta]].len() {
                continue;
            }
            stack.push(orbital_arcs(n, &gens, alpha, beta)).unwrap();
        }
    }
    stack
}

impl GroupRefiner {
    pub fn new(group: PermGroup, strategy: GroupStrategy) -> Self {
        GroupRefiner { group, strategy, table: BTreeMap::new(), created: 0 }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn strategy(&self) -> GroupStrategy {
        self.strategy
    }

    /// Number of table entries created since the last reset.
    pub fn table_creations(&self) -> usize {
        self.created
    }

    fn ensure_entry(&mut self, len: usize, fixed: &[usize]) {
        if self.table.contains_key(&len) {
            return;
        }
        let n = self.group.degree();
        let chain = StabChain::build(n, self.group.generators(), fixed);
        let stack = stabiliser_stack(n, &chain, self.strategy);
        self.created += 1;
        self.table.insert(len, TableEntry { fixed: fixed.to_vec(), stack, chain });
    }

    /// `V^a` where `a` maps the stored `F` onto `fixed`, then `post` is applied.
    fn image(&self, len: usize, fixed: &[usize], post: Option<&Permutation>) -> DigraphStack {
        let n = self.group.degree();
        let entry = self
            .table
            .get(&len)
            .expect("group refiner applied on the right before the left at this stack length");
        if entry.fixed.len() != fixed.len() {
            return DigraphStack::empty(n);
        }
        if entry.fixed == fixed && post.is_none() {
            return entry.stack.clone();
        }
        match entry.chain.map_prefix(&entry.fixed, fixed) {
            None => DigraphStack::empty(n),
            Some(a) => {
                let a = match post {
                    Some(r) => a.mul(r),
                    None => a,
                };
                entry.stack.act(&a)
            }
        }
    }
}

impl Refiner for GroupRefiner {
    fn name(&self) -> String {
        "group".into()
    }

    fn apply_left(&mut self, s: &DigraphStack, info: &mut dyn StackInfo) -> DigraphStack {
        let fixed = info.fixed(s);
        self.ensure_entry(s.len(), &fixed);
        self.image(s.len(), &fixed, None)
    }

    fn apply_right(&mut self, t: &DigraphStack, info: &mut dyn StackInfo) -> DigraphStack {
        let fixed = info.fixed(t);
        self.image(t.len(), &fixed, None)
    }

    fn contains(&self, p: &Permutation) -> bool {
        self.group.contains(p).unwrap_or(false)
    }

    fn is_group(&self) -> bool {
        true
    }

    fn reset(&mut self) {
        self.table.clear();
        self.created = 0;
    }

    fn translated(&self, _g: &Permutation) -> Box<dyn Refiner> {
        Box::new(GroupRefiner::new(self.group.clone(), self.strategy))
    }
}

/// Refiner for a right coset `G · rep`.
pub struct CosetRefiner {
    inner: GroupRefiner,
    rep: Permutation,
    rep_inv: Permutation,
}

impl CosetRefiner {
    pub fn new(group: PermGroup, rep: Permutation, strategy: GroupStrategy) -> Result<Self, Error> {
        if group.degree() != rep.degree() {
            return Err(Error::DegreeMismatch { left: group.degree(), right: rep.degree() });
        }
        let rep_inv = rep.inverse();
        Ok(CosetRefiner { inner: GroupRefiner::new(group, strategy), rep, rep_inv })
    }
}

impl Refiner for CosetRefiner {
    fn name(&self) -> String {
        "coset".into()
    }

    fn apply_left(&mut self, s: &DigraphStack, info: &mut dyn StackInfo) -> DigraphStack {
        self.inner.apply_left(s, info)
    }

    /// `f(T^{rep⁻¹})^{rep}`, using `Fixed(T^{rep⁻¹}) = Fixed(T)^{rep⁻¹}`.
    fn apply_right(&mut self, t: &DigraphStack, info: &mut dyn StackInfo) -> DigraphStack {
        let fixed: Vec<usize> = info.fixed(t).iter().map(|&x| self.rep_inv.apply(x)).collect();
        self.inner.image(t.len(), &fixed, Some(&self.rep))
    }

    fn contains(&self, p: &Permutation) -> bool {
        self.inner.contains(&p.mul(&self.rep_inv))
    }

    fn is_group(&self) -> bool {
        self.rep.is_identity()
    }

    fn reset(&mut self) {
        self.inner.reset();
    }

    fn translated(&self, g: &Permutation) -> Box<dyn Refiner> {
        self.inner.translated(g)
    }
}

/// Strips arcs from another refiner's output, recording instead how each
/// vertex relates to the fixed points of the input stack.
pub struct ArcFree {
    inner: Box<dyn Refiner>,
}

impl ArcFree {
    pub fn new(inner: Box<dyn Refiner>) -> Self {
        ArcFree { inner }
    }
}

fn arc_free_view(out: &DigraphStack, fixed: &[usize]) -> DigraphStack {
    let n = out.degree();
    let mut s = DigraphStack::empty(n);
    for e in out.entries() {
        if e.arc_count() == 0 {
            s.push((**e).clone()).unwrap();
            continue;
        }
        let labels = (0..n)
            .map(|v| {
                let rel = fixed
                    .iter()
                    .flat_map(|&p| {
                        let wrap = |l: Option<&Label>| {
                            Label::Seq(l.into_iter().cloned().collect())
                        };
                        [wrap(e.arc_label(p, v)), wrap(e.arc_label(v, p))]
                    })
                    .collect();
                Label::Seq(alloc::vec![e.vertex_label(v).clone(), Label::Seq(rel)])
            })
            .collect();
        s.push(LabelledDigraph::arc_free(labels)).unwrap();
    }
    s
}

impl Refiner for ArcFree {
    fn name(&self) -> String {
        alloc::format!("arc-free {}", self.inner.name())
    }

    fn apply_left(&mut self, s: &DigraphStack, info: &mut dyn StackInfo) -> DigraphStack {
        let out = self.inner.apply_left(s, info);
        arc_free_view(&out, &info.fixed(s))
    }

    fn apply_right(&mut self, t: &DigraphStack, info: &mut dyn StackInfo) -> DigraphStack {
        let out = self.inner.apply_right(t, info);
        arc_free_view(&out, &info.fixed(t))
    }

    fn contains(&self, p: &Permutation) -> bool {
        self.inner.contains(p)
    }

    fn is_group(&self) -> bool {
        self.inner.is_group()
    }

    fn reset(&mut self) {
        self.inner.reset();
    }

    fn translated(&self, g: &Permutation) -> Box<dyn Refiner> {
        Box::new(ArcFree::new(self.inner.translated(g)))
    }
}

/// Tags every vertex of another refiner's output with its current cell.
pub struct CellTagged {
    inner: Box<dyn Refiner>,
}

impl CellTagged {
    pub fn new(inner: Box<dyn Refiner>) -> Self {
        CellTagged { inner }
    }
}

fn tag_cells(out: &DigraphStack, cells: &[u32]) -> DigraphStack {
    let n = out.degree();
    let mut s = DigraphStack::empty(n);
    for e in out.entries() {
        let labels = (0..n)
            .map(|v| Label::Seq(alloc::vec![e.vertex_label(v).clone(), Label::Int(cells[v] as i64)]))
            .collect();
        let arcs = e.arcs().iter().copied().zip(e.arc_labels().iter().cloned()).collect();
        s.push(LabelledDigraph::new(n, labels, arcs).unwrap()).unwrap();
    }
    s
}

impl Refiner for CellTagged {
    fn name(&self) -> String {
        alloc::format!("cell-tagged {}", self.inner.name())
    }

    fn apply_left(&mut self, s: &DigraphStack, info: &mut dyn StackInfo) -> DigraphStack {
        let out = self.inner.apply_left(s, info);
        tag_cells(&out, &info.cells(s))
    }

    fn apply_right(&mut self, t: &DigraphStack, info: &mut dyn StackInfo) -> DigraphStack {
        let out = self.inner.apply_right(t, info);
        tag_cells(&out, &info.cells(t))
    }

    fn contains(&self, p: &Permutation) -> bool {
        self.inner.contains(p)
    }

    fn is_group(&self) -> bool {
        self.inner.is_group()
    }

    fn reset(&mut self) {
        self.inner.reset();
    }

    fn translated(&self, g: &Permutation) -> Box<dyn Refiner> {
        Box::new(CellTagged::new(self.inner.translated(g)))
    }
}

/// Convenience constructors returning boxed refiners.
pub fn set_refiner(n: usize, a: &[usize], b: &[usize]) -> Result<Box<dyn Refiner>, Error> {
    Ok(Box::new(ConstantRefiner::set(n, a, b)?))
}

pub fn list_of_subsets_refiner(
    n: usize,
    u: &[Vec<usize>],
    v: &[Vec<usize>],
) -> Result<Box<dyn Refiner>, Error> {
    Ok(Box::new(ConstantRefiner::list_of_subsets(n, u, v)?))
}

pub fn set_of_subsets_refiner(
    n: usize,
    u: &[Vec<usize>],
    v: &[Vec<usize>],
) -> Result<Box<dyn Refiner>, Error> {
    Ok(Box::new(ConstantRefiner::set_of_subsets(n, u, v)?))
}

pub fn disjoint_subsets_refiner(
    n: usize,
    u: &[Vec<usize>],
    v: &[Vec<usize>],
) -> Result<Box<dyn Refiner>, Error> {
    Ok(Box::new(ConstantRefiner::disjoint_subsets(n, u, v)?))
}

pub fn perm_conjugacy_refiner(g: &Permutation, h: &Permutation) -> Result<Box<dyn Refiner>, Error> {
    Ok(Box::new(ConstantRefiner::perm_conjugacy(g, h)?))
}

pub fn digraph_iso_refiner(
    a: &LabelledDigraph,
    b: &LabelledDigraph,
) -> Result<Box<dyn Refiner>, Error> {
    Ok(Box::new(ConstantRefiner::digraph_iso(a, b)?))
}

pub fn group_refiner(group: PermGroup, strategy: GroupStrategy) -> Box<dyn Refiner> {
    Box::new(GroupRefiner::new(group, strategy))
}

pub fn coset_refiner(
    group: PermGroup,
    rep: Permutation,
    strategy: GroupStrategy,
) -> Result<Box<dyn Refiner>, Error> {
    Ok(Box::new(CosetRefiner::new(group, rep, strategy)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn set_membership() {
        let r = ConstantRefiner::set(6, &[0, 1], &[0, 1]).unwrap();
        assert!(r.contains(&p("(1,2)", 6)));
        assert!(!r.contains(&p("(2,3)", 6)));
        assert!(r.is_group());
    }

    #[test]
    fn set_of_subsets_arc_counts_differ() {
        let u = alloc::vec![alloc::vec![0], alloc::vec![0, 1, 2], alloc::vec![1, 3]];
        let v = alloc::vec![alloc::vec![4], alloc::vec![1, 2, 3], alloc::vec![2, 3]];
        let r = ConstantRefiner::set_of_subsets(5, &u, &v).unwrap();
        let a = r.left_stack().get(0).unwrap().arc_count();
        let b = r.right_stack().get(0).unwrap().arc_count();
        assert_ne!(a, b);
    }

    #[test]
    fn disjoint_rejects_overlap() {
        let u = alloc::vec![alloc::vec![0, 1], alloc::vec![1]];
        assert_eq!(ConstantRefiner::disjoint_subsets(3, &u, &u).unwrap_err(), Error::Overlap);
    }

    #[test]
    fn group_table_left_then_right() {
        let g = PermGroup::new(
            6,
            alloc::vec![p("(1,2)", 6), p("(3,4)", 6), p("(5,6)", 6), p("(1,3,5)(2,4,6)", 6)],
        )
        .unwrap();
        let mut r = GroupRefiner::new(g, GroupStrategy::Orbits);
        let mut info = StrongInfo;
        let s = DigraphStack::empty(6);
        let out = r.apply_left(&s, &mut info);
        assert_eq!(out.len(), 1);
        assert_eq!(r.table_creations(), 1);
        assert_eq!(r.apply_right(&s, &mut info), out);
        r.apply_left(&s, &mut info);
        assert_eq!(r.table_creations(), 1);
    }
}
