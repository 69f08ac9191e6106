//! Equitable vertex labelling and the weak/strong approximators built on it.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigUint;

use crate::digraph::{Label, LabelledDigraph};
use crate::perm::{PermGroup, Permutation};
use crate::stack::DigraphStack;

pub(crate) type LabelId = u32;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    Atom(Label),
    List(Vec<LabelId>),
    /// `[y, x, L, f]` with `f` stored sparsely as `(index into L, out, in)`.
    Derived { y: LabelId, x: LabelId, l: LabelId, f: Vec<(u32, u32, u32)> },
    Individualised { parent: LabelId, single: bool },
}

/// Hash-consing table for labels produced during refinement.
///
/// Ids are only meaningful within one interner; two classifications can be
/// compared only if they were produced by the same interner.
#[derive(Default)]
pub struct Interner {
    map: BTreeMap<Key, LabelId>,
    keys: Vec<Key>,
}

impl Interner {
    pub fn new() -> Self {
        Self::default()
    }

    fn intern(&mut self, key: Key) -> LabelId {
        if let Some(&id) = self.map.get(&key) {
            return id;
        }
        let id = self.keys.len() as LabelId;
        self.keys.push(key.clone());
        self.map.insert(key, id);
        id
    }

    pub(crate) fn atom(&mut self, l: &Label) -> LabelId {
        if let Some(&id) = self.map.get(&Key::Atom(l.clone())) {
            return id;
        }
        self.intern(Key::Atom(l.clone()))
    }

    pub(crate) fn individualised(&mut self, parent: LabelId, single: bool) -> LabelId {
        self.intern(Key::Individualised { parent, single })
    }

    /// The label value behind an id.
    pub fn resolve(&self, id: LabelId) -> Label {
        match &self.keys[id as usize] {
            Key::Atom(l) => l.clone(),
            Key::List(v) => Label::Seq(v.iter().map(|&i| self.resolve(i)).collect()),
            Key::Derived { y, x, l, f } => {
                let len = match &self.keys[*l as usize] {
                    Key::List(v) => v.len(),
                    _ => 0,
                };
                let mut dense = alloc::vec![Label::Count(0, 0); len];
                for &(i, o, n) in f {
                    dense[i as usize] = Label::Count(o as u64, n as u64);
                }
                Label::Seq(alloc::vec![
                    self.resolve(*y),
                    self.resolve(*x),
                    self.resolve(*l),
                    Label::Seq(dense)
                ])
            }
            Key::Individualised { parent, single } => Label::Seq(alloc::vec![
                Label::Str("individualised".into()),
                self.resolve(*parent),
                Label::Int(*single as i64),
            ]),
        }
    }
}

/// Adjacency of a digraph with arc labels replaced by their rank in label order.
pub(crate) struct Prepared {
    n: usize,
    out_adj: Vec<Vec<(usize, u32)>>,
    in_adj: Vec<Vec<(usize, u32)>>,
    rank_ids: Vec<LabelId>,
    initial: Vec<(LabelId, Vec<usize>)>,
}

impl Prepared {
    pub(crate) fn new(g: &LabelledDigraph, interner: &mut Interner) -> Prepared {
        let n = g.degree();
        let mut distinct: Vec<&Label> = g.arc_labels().iter().collect();
        distinct.sort();
        distinct.dedup();
        let rank_ids: Vec<LabelId> = distinct.iter().map(|l| interner.atom(l)).collect();
        let mut out_adj = alloc::vec![Vec::new(); n];
        let mut in_adj = alloc::vec![Vec::new(); n];
        for (&(u, v), l) in g.arcs().iter().zip(g.arc_labels()) {
            let r = distinct.binary_search(&l).unwrap() as u32;
            out_adj[u].push((v, r));
            in_adj[v].push((u, r));
        }
        let mut by_label: BTreeMap<&Label, Vec<usize>> = BTreeMap::new();
        for (v, l) in g.vertex_labels().iter().enumerate() {
            by_label.entry(l).or_default().push(v);
        }
        let mut initial = Vec::with_capacity(by_label.len());
        for (l, cell) in by_label {
            let id = interner.atom(l);
            initial.push((id, cell));
        }
        Prepared { n, out_adj, in_adj, rank_ids, initial }
    }

    pub(crate) fn degree(&self) -> usize {
        self.n
    }

    pub(crate) fn initial_cells(&self) -> Vec<(LabelId, Vec<usize>)> {
        self.initial.clone()
    }
}

/// An ordered list of labelled cells, labels given as interner ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Classification {
    pub labels: Vec<LabelId>,
    pub cells: Vec<Vec<usize>>,
}

impl Classification {
    pub(crate) fn cell_index(&self, n: usize) -> Vec<u32> {
        let mut idx = alloc::vec![0; n];
        for (i, c) in self.cells.iter().enumerate() {
            for &v in c {
                idx[v] = i as u32;
            }
        }
        idx
    }
}

type Sparse = Vec<(u32, u32, u32)>;

fn cmp_sparse(a: &Sparse, b: &Sparse) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    let c = (x.1, x.2).cmp(&(y.1, y.2));
                    if c != Ordering::Equal {
                        return c;
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

/// Algorithm 1 started from an arbitrary ordered labelled partition.
pub(crate) fn refine_cells(
    prep: &Prepared,
    interner: &mut Interner,
    initial: Vec<(LabelId, Vec<usize>)>,
    queue_from: Option<&[usize]>,
) -> Classification {
    let n = prep.n;
    let ranks = prep.rank_ids.len();
    let mut labels: Vec<LabelId> = Vec::with_capacity(initial.len());
    let mut points: Vec<Vec<usize>> = Vec::with_capacity(initial.len());
    for (l, c) in initial {
        labels.push(l);
        points.push(c);
    }
    let mut alive = alloc::vec![true; points.len()];
    let mut order: Vec<usize> = (0..points.len()).collect();
    let mut queue: VecDeque<(LabelId, usize)> = match queue_from {
        Some(ix) => ix.iter().map(|&i| (labels[i], i)).collect(),
        None => (0..points.len()).map(|i| (labels[i], i)).collect(),
    };

    let mut counts: Vec<(u32, u32)> = alloc::vec![(0, 0); n * ranks];
    let mut touched_vertex = alloc::vec![false; n];
    let mut touched_rank = alloc::vec![false; ranks];
    let mut f: Vec<Sparse> = alloc::vec![Vec::new(); n];

    while order.len() < n {
        let Some((x, cid)) = queue.pop_front() else { break };
        if !alive[cid] {
            continue;
        }
        let u_cell = points[cid].clone();
        let mut tv: Vec<usize> = Vec::new();
        let mut tr: Vec<u32> = Vec::new();
        for &u in &u_cell {
            for &(w, r) in &prep.in_adj[u] {
                counts[w * ranks + r as usize].0 += 1;
                if !touched_vertex[w] {
                    touched_vertex[w] = true;
                    tv.push(w);
                }
                if !touched_rank[r as usize] {
                    touched_rank[r as usize] = true;
                    tr.push(r);
                }
            }
            for &(w, r) in &prep.out_adj[u] {
                counts[w * ranks + r as usize].1 += 1;
                if !touched_vertex[w] {
                    touched_vertex[w] = true;
                    tv.push(w);
                }
                if !touched_rank[r as usize] {
                    touched_rank[r as usize] = true;
                    tr.push(r);
                }
            }
        }
        tr.sort_unstable();
        let l_id = interner.intern(Key::List(tr.iter().map(|&r| prep.rank_ids[r as usize]).collect()));
        for &w in &tv {
            let mut s = Vec::new();
            for (i, &r) in tr.iter().enumerate() {
                let c = &mut counts[w * ranks + r as usize];
                if *c != (0, 0) {
                    s.push((i as u32, c.0, c.1));
                    *c = (0, 0);
                }
            }
            f[w] = s;
            touched_vertex[w] = false;
        }
        for &r in &tr {
            touched_rank[r as usize] = false;
        }

        let mut new_order = Vec::with_capacity(order.len());
        for &c in &order {
            let y = labels[c];
            let mut vs = points[c].clone();
            vs.sort_by(|&a, &b| cmp_sparse(&f[a], &f[b]).then(a.cmp(&b)));
            let mut groups: Vec<Vec<usize>> = Vec::new();
            for &v in &vs {
                match groups.last_mut() {
                    Some(g) if cmp_sparse(&f[g[0]], &f[v]) == Ordering::Equal => g.push(v),
                    _ => groups.push(alloc::vec![v]),
                }
            }
            if groups.len() == 1 {
                let fv = f[groups[0][0]].clone();
                labels[c] = interner.intern(Key::Derived { y, x, l: l_id, f: fv });
                new_order.push(c);
                continue;
            }
            alive[c] = false;
            for g in groups {
                let fv = f[g[0]].clone();
                let id = interner.intern(Key::Derived { y, x, l: l_id, f: fv });
                let nc = points.len();
                labels.push(id);
                points.push(g);
                alive.push(true);
                new_order.push(nc);
                queue.push_back((id, nc));
            }
        }
        for &w in &tv {
            f[w].clear();
        }
        order = new_order;
    }
    Classification {
        labels: order.iter().map(|&c| labels[c]).collect(),
        cells: order.into_iter().map(|c| core::mem::take(&mut points[c])).collect(),
    }
}

pub(crate) fn classify(g: &LabelledDigraph, interner: &mut Interner) -> Classification {
    let prep = Prepared::new(g, interner);
    let init = prep.initial_cells();
    refine_cells(&prep, interner, init, None)
}

/// The output of Algorithm 1: an ordered list of labelled cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClassification {
    pub cells: Vec<(Label, Vec<usize>)>,
}

impl VertexClassification {
    pub fn labels(&self) -> Vec<&Label> {
        self.cells.iter().map(|(l, _)| l).collect()
    }
}

/// Algorithm 1 on a single labelled digraph.
pub fn equitable_labelling(g: &LabelledDigraph) -> VertexClassification {
    let mut interner = Interner::new();
    let c = classify(g, &mut interner);
    VertexClassification {
        cells: c.labels.iter().map(|&l| interner.resolve(l)).zip(c.cells).collect(),
    }
}

/// The group part of an estimate.
#[derive(Clone, Debug)]
pub enum EstimateGroup {
    /// The stabiliser of an ordered list of cells: a direct product of
    /// symmetric groups.
    Cells { degree: usize, cells: Vec<Vec<usize>> },
    Group(PermGroup),
}

fn factorial(k: usize) -> BigUint {
    let mut r = BigUint::from(1u32);
    for i in 2..=k {
        r *= BigUint::from(i);
    }
    r
}

impl EstimateGroup {
    pub fn degree(&self) -> usize {
        match self {
            EstimateGroup::Cells { degree, .. } => *degree,
            EstimateGroup::Group(g) => g.degree(),
        }
    }

    pub fn order(&self) -> BigUint {
        match self {
            EstimateGroup::Cells { cells, .. } => {
                cells.iter().fold(BigUint::from(1u32), |acc, c| acc * factorial(c.len()))
            }
            EstimateGroup::Group(g) => g.order(),
        }
    }

    /// Orbits sorted by minimum, points ascending.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        match self {
            EstimateGroup::Cells { cells, .. } => {
                let mut o: Vec<Vec<usize>> = cells
                    .iter()
                    .map(|c| {
                        let mut c = c.clone();
                        c.sort_unstable();
                        c
                    })
                    .collect();
                o.sort();
                o
            }
            EstimateGroup::Group(g) => g.orbits(),
        }
    }

    pub fn generators(&self) -> Vec<Permutation> {
        match self {
            EstimateGroup::Cells { degree, cells } => {
                let mut gens = Vec::new();
                for c in cells {
                    let mut c = c.clone();
                    c.sort_unstable();
                    if c.len() >= 2 {
                        gens.push(Permutation::from_cycles(*degree, &[&c[..2]]).unwrap());
                    }
                    if c.len() >= 3 {
                        gens.push(Permutation::from_cycles(*degree, &[&c]).unwrap());
                    }
                }
                gens
            }
            EstimateGroup::Group(g) => g.generators().to_vec(),
        }
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        match self {
            EstimateGroup::Cells { cells, .. } => {
                let mut idx = alloc::vec![usize::MAX; p.degree()];
                for (i, c) in cells.iter().enumerate() {
                    for &v in c {
                        idx[v] = i;
                    }
                }
                (0..p.degree()).all(|v| idx[v] == idx[p.apply(v)])
            }
            EstimateGroup::Group(g) => g.contains(p).unwrap_or(false),
        }
    }

    pub fn to_perm_group(&self) -> PermGroup {
        match self {
            EstimateGroup::Cells { degree, .. } => {
                PermGroup::new(*degree, self.generators()).unwrap()
            }
            EstimateGroup::Group(g) => g.clone(),
        }
    }
}

/// Either empty, or a right coset `group · representative`.
#[derive(Clone, Debug)]
pub enum IsoEstimate {
    Empty,
    Coset { group: EstimateGroup, representative: Permutation },
}

impl IsoEstimate {
    pub fn is_empty(&self) -> bool {
        matches!(self, IsoEstimate::Empty)
    }

    pub fn size(&self) -> BigUint {
        match self {
            IsoEstimate::Empty => BigUint::from(0u32),
            IsoEstimate::Coset { group, .. } => group.order(),
        }
    }

    pub fn representative(&self) -> Option<&Permutation> {
        match self {
            IsoEstimate::Empty => None,
            IsoEstimate::Coset { representative, .. } => Some(representative),
        }
    }

    pub fn group(&self) -> Option<&EstimateGroup> {
        match self {
            IsoEstimate::Empty => None,
            IsoEstimate::Coset { group, .. } => Some(group),
        }
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        match self {
            IsoEstimate::Empty => false,
            IsoEstimate::Coset { group, representative } => {
                group.contains(&p.mul(&representative.inverse()))
            }
        }
    }
}

/// A side's cells plus what must agree for two sides to be comparable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct CellView {
    pub header: Vec<u32>,
    pub keys: Vec<Vec<u32>>,
    pub cells: Vec<Vec<usize>>,
}

impl CellView {
    pub(crate) fn fixed(&self) -> Vec<usize> {
        self.cells.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect()
    }

    pub(crate) fn compare(&self, other: &CellView, n: usize) -> IsoEstimate {
        if self.header != other.header || self.cells.len() != other.cells.len() {
            return IsoEstimate::Empty;
        }
        let mut images = alloc::vec![0; n];
        for i in 0..self.cells.len() {
            if self.cells[i].len() != other.cells[i].len() || self.keys[i] != other.keys[i] {
                return IsoEstimate::Empty;
            }
            let mut a = self.cells[i].clone();
            let mut b = other.cells[i].clone();
            a.sort_unstable();
            b.sort_unstable();
            for (x, y) in a.into_iter().zip(b) {
                images[x] = y;
            }
        }
        IsoEstimate::Coset {
            group: EstimateGroup::Cells { degree: n, cells: self.cells.clone() },
            representative: Permutation::from_images(images).unwrap(),
        }
    }
}

pub(crate) fn strong_view(s: &DigraphStack, interner: &mut Interner) -> CellView {
    let c = classify(&s.squash(), interner);
    CellView {
        header: alloc::vec![s.len() as u32],
        keys: c.labels.iter().map(|&l| alloc::vec![l]).collect(),
        cells: c.cells,
    }
}

/// Intersects per-entry classifications into the weak cell system.
pub(crate) fn weak_view(n: usize, entries: &[&Classification]) -> CellView {
    let mut header = alloc::vec![entries.len() as u32];
    for e in entries {
        header.push(e.labels.len() as u32);
        header.extend(e.labels.iter().copied());
    }
    let idx: Vec<Vec<u32>> = entries.iter().map(|e| e.cell_index(n)).collect();
    let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let sig: Vec<u32> = idx.iter().map(|ix| ix[v]).collect();
        groups.entry(sig).or_default().push(v);
    }
    let (keys, cells) = groups.into_iter().unzip();
    CellView { header, keys, cells }
}

fn weak_view_of(s: &DigraphStack, interner: &mut Interner) -> CellView {
    let cs: Vec<Classification> = s.entries().iter().map(|e| classify(e, interner)).collect();
    let refs: Vec<&Classification> = cs.iter().collect();
    weak_view(s.degree(), &refs)
}

/// Runs Algorithm 1 on each entry separately and intersects the results.
pub fn weak_approx(s: &DigraphStack, t: &DigraphStack) -> IsoEstimate {
    if s.len() != t.len() || s.degree() != t.degree() {
        return IsoEstimate::Empty;
    }
    let mut interner = Interner::new();
    let a = weak_view_of(s, &mut interner);
    let b = weak_view_of(t, &mut interner);
    a.compare(&b, s.degree())
}

/// Runs Algorithm 1 on the squashes of both stacks.
pub fn strong_approx(s: &DigraphStack, t: &DigraphStack) -> IsoEstimate {
    if s.len() != t.len() || s.degree() != t.degree() {
        return IsoEstimate::Empty;
    }
    let mut interner = Interner::new();
    let a = strong_view(s, &mut interner);
    let b = strong_view(t, &mut interner);
    a.compare(&b, s.degree())
}

pub fn weak_fixed(s: &DigraphStack) -> Vec<usize> {
    weak_view_of(s, &mut Interner::new()).fixed()
}

pub fn strong_fixed(s: &DigraphStack) -> Vec<usize> {
    strong_view(s, &mut Interner::new()).fixed()
}
