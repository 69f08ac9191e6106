//! Vertex- and arc-labelled digraphs and their permutation action.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::{PermGroup, Permutation};
use crate::Error;

/// Labels, totally ordered as `Hash < Int < Str < Count < Seq`.
///
/// `Hash` marks an absent arc inside squashed labels and is never used as a
/// label of its own.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Hash,
    Int(i64),
    Str(String),
    Count(u64, u64),
    Seq(Vec<Label>),
}

impl Default for Label {
    fn default() -> Self {
        Label::Int(0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Hash => f.write_str("#"),
            Label::Int(i) => write!(f, "{i}"),
            Label::Str(s) => write!(f, "{s:?}"),
            Label::Count(a, b) => write!(f, "{a}/{b}"),
            Label::Seq(v) => f.debug_list().entries(v).finish(),
        }
    }
}

/// A labelled digraph on `{0, .., n-1}`. Arcs are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabelledDigraph {
    n: usize,
    vertex_labels: Vec<Label>,
    arcs: Vec<(usize, usize)>,
    arc_labels: Vec<Label>,
}

impl LabelledDigraph {
    pub fn new(
        n: usize,
        vertex_labels: Vec<Label>,
        arcs: Vec<((usize, usize), Label)>,
    ) -> Result<Self, Error> {
        if vertex_labels.len() != n {
            return Err(Error::LengthMismatch { left: n, right: vertex_labels.len() });
        }
        if vertex_labels.iter().any(|l| *l == Label::Hash) {
            return Err(Error::Parse("# is not a valid vertex label".into()));
        }
        let mut arcs = arcs;
        for ((u, v), l) in &arcs {
            for &x in [u, v] {
                if x >= n {
                    return Err(Error::PointOutOfRange { point: x, degree: n });
                }
            }
            if *l == Label::Hash {
                return Err(Error::Parse("# is not a valid arc label".into()));
            }
        }
        arcs.sort_by(|a, b| a.0.cmp(&b.0));
        if arcs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Parse("repeated arc".into()));
        }
        let (arcs, arc_labels) = arcs.into_iter().unzip();
        Ok(LabelledDigraph { n, vertex_labels, arcs, arc_labels })
    }

    /// No arcs, every vertex labelled `Int(0)`.
    pub fn empty(n: usize) -> Self {
        LabelledDigraph {
            n,
            vertex_labels: alloc::vec![Label::Int(0); n],
            arcs: Vec::new(),
            arc_labels: Vec::new(),
        }
    }

    pub fn arc_free(vertex_labels: Vec<Label>) -> Self {
        LabelledDigraph {
            n: vertex_labels.len(),
            vertex_labels,
            arcs: Vec::new(),
            arc_labels: Vec::new(),
        }
    }

    /// Arc-free digraph with vertex `alpha` labelled 1 and the rest 0.
    pub fn point(n: usize, alpha: usize) -> Self {
        let mut labels = alloc::vec![Label::Int(0); n];
        labels[alpha] = Label::Int(1);
        LabelledDigraph::arc_free(labels)
    }

    pub(crate) fn from_sorted_parts(
        n: usize,
        vertex_labels: Vec<Label>,
        arcs: Vec<(usize, usize)>,
        arc_labels: Vec<Label>,
    ) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        LabelledDigraph { n, vertex_labels, arcs, arc_labels }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn vertex_labels(&self) -> &[Label] {
        &self.vertex_labels
    }

    pub fn vertex_label(&self, v: usize) -> &Label {
        &self.vertex_labels[v]
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_labels(&self) -> &[Label] {
        &self.arc_labels
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arc_label(&self, u: usize, v: usize) -> Option<&Label> {
        self.arcs.binary_search(&(u, v)).ok().map(|i| &self.arc_labels[i])
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    pub fn without_arcs(&self) -> Self {
        LabelledDigraph::arc_free(self.vertex_labels.clone())
    }

    pub fn apply_perm(&self, g: &Permutation) -> Result<Self, Error> {
        if g.degree() != self.n {
            return Err(Error::DegreeMismatch { left: self.n, right: g.degree() });
        }
        Ok(self.act(g))
    }

    pub(crate) fn act(&self, g: &Permutation) -> Self {
        let mut vertex_labels = alloc::vec![Label::Int(0); self.n];
        for (v, l) in self.vertex_labels.iter().enumerate() {
            vertex_labels[g.apply(v)] = l.clone();
        }
        let mut arcs: Vec<((usize, usize), usize)> = self
            .arcs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| ((g.apply(u), g.apply(v)), i))
            .collect();
        arcs.sort_unstable();
        let arc_labels = arcs.iter().map(|&(_, i)| self.arc_labels[i].clone()).collect();
        let arcs = arcs.into_iter().map(|(a, _)| a).collect();
        LabelledDigraph { n: self.n, vertex_labels, arcs, arc_labels }
    }

    pub fn induces_isomorphism(&self, other: &Self, g: &Permutation) -> Result<bool, Error> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch { left: self.n, right: other.n });
        }
        Ok(self.apply_perm(g)? == *other)
    }

    /// Whether `g` maps this digraph onto `other`, without building the image.
    pub fn maps_to(&self, other: &Self, g: &Permutation) -> bool {
        if self.n != other.n || self.arcs.len() != other.arcs.len() {
            return false;
        }
        for v in 0..self.n {
            if self.vertex_labels[v] != other.vertex_labels[g.apply(v)] {
                return false;
            }
        }
        self.arcs.iter().zip(&self.arc_labels).all(|(&(u, v), l)| {
            other.arc_label(g.apply(u), g.apply(v)) == Some(l)
        })
    }
}

impl fmt::Debug for LabelledDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LabelledDigraph")
            .field("n", &self.n)
            .field("vertex_labels", &self.vertex_labels)
            .field(
                "arcs",
                &self
                    .arcs
                    .iter()
                    .zip(&self.arc_labels)
                    .map(|(&(u, v), l)| ((u + 1, v + 1), l))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// The orbital graph of `g` with base pair `(alpha, beta)`.
pub fn orbital_graph(g: &PermGroup, alpha: usize, beta: usize) -> Result<LabelledDigraph, Error> {
    let n = g.degree();
    for x in [alpha, beta] {
        if x >= n {
            return Err(Error::PointOutOfRange { point: x, degree: n });
        }
    }
    if alpha == beta {
        return Err(Error::DiagonalBasePair);
    }
    Ok(orbital_arcs(n, g.generators(), alpha, beta))
}

pub(crate) fn orbital_arcs(
    n: usize,
    gens: &[Permutation],
    alpha: usize,
    beta: usize,
) -> LabelledDigraph {
    let mut seen = BTreeSet::new();
    seen.insert((alpha, beta));
    let mut queue = alloc::vec![(alpha, beta)];
    let mut k = 0;
    while k < queue.len() {
        let (a, b) = queue[k];
        for s in gens {
            let img = (s.apply(a), s.apply(b));
            if seen.insert(img) {
                queue.push(img);
            }
        }
        k += 1;
    }
    let arcs: Vec<(usize, usize)> = seen.into_iter().collect();
    let arc_labels = alloc::vec![Label::Int(0); arcs.len()];
    LabelledDigraph::from_sorted_parts(n, alloc::vec![Label::Int(0); n], arcs, arc_labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn label_order() {
        let mut v = alloc::vec![
            Label::Seq(alloc::vec![]),
            Label::Count(0, 1),
            Label::Str("a".into()),
            Label::Int(5),
            Label::Hash,
        ];
        v.sort();
        assert_eq!(v[0], Label::Hash);
        assert_eq!(v[1], Label::Int(5));
        assert_eq!(v[4], Label::Seq(alloc::vec![]));
    }

    #[test]
    fn rejects_hash_and_bad_arcs() {
        assert!(LabelledDigraph::new(2, alloc::vec![Label::Hash, Label::Int(0)], alloc::vec![]).is_err());
        let l = alloc::vec![Label::Int(0); 2];
        assert!(LabelledDigraph::new(2, l.clone(), alloc::vec![((0, 2), Label::Int(0))]).is_err());
        assert!(LabelledDigraph::new(
            2,
            l,
            alloc::vec![((0, 1), Label::Int(0)), ((0, 1), Label::Int(1))]
        )
        .is_err());
    }

    #[test]
    fn cyclic_orbital_graphs() {
        let c6 = PermGroup::new(6, alloc::vec![p("(1,2,3,4,5,6)", 6)]).unwrap();
        let g = orbital_graph(&c6, 0, 1).unwrap();
        assert_eq!(g.arcs(), &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let g = orbital_graph(&c6, 0, 3).unwrap();
        assert_eq!(g.arcs(), &[(0, 3), (1, 4), (2, 5), (3, 0), (4, 1), (5, 2)]);
        assert!(orbital_graph(&c6, 2, 2).is_err());
    }

    #[test]
    fn klein_orbital_graph() {
        let v = PermGroup::new(4, alloc::vec![p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)]).unwrap();
        let g = orbital_graph(&v, 0, 1).unwrap();
        assert_eq!(g.arcs(), &[(0, 1), (1, 0), (2, 3), (3, 2)]);
    }
}
