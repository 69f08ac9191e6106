//! Stacks of labelled digraphs and the squash construction.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::digraph::{Label, LabelledDigraph};
use crate::perm::Permutation;
use crate::Error;

/// A finite list of labelled digraphs on a common point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigraphStack {
    n: usize,
    entries: Vec<Arc<LabelledDigraph>>,
}

impl DigraphStack {
    /// The empty stack.
    pub fn empty(n: usize) -> Self {
        DigraphStack { n, entries: Vec::new() }
    }

    pub fn new(n: usize, entries: Vec<LabelledDigraph>) -> Result<Self, Error> {
        let mut s = DigraphStack::empty(n);
        for e in entries {
            s.push(e)?;
        }
        Ok(s)
    }

    pub fn single(g: LabelledDigraph) -> Self {
        DigraphStack { n: g.degree(), entries: alloc::vec![Arc::new(g)] }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Arc<LabelledDigraph>] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Option<&LabelledDigraph> {
        self.entries.get(i).map(|e| &**e)
    }

    pub fn push(&mut self, g: LabelledDigraph) -> Result<(), Error> {
        if g.degree() != self.n {
            return Err(Error::DegreeMismatch { left: self.n, right: g.degree() });
        }
        self.entries.push(Arc::new(g));
        Ok(())
    }

    pub fn append(&self, other: &DigraphStack) -> Result<DigraphStack, Error> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch { left: self.n, right: other.n });
        }
        let mut s = self.clone();
        s.extend(other);
        Ok(s)
    }

    pub(crate) fn extend(&mut self, other: &DigraphStack) {
        debug_assert_eq!(self.n, other.n);
        self.entries.extend(other.entries.iter().cloned());
    }

    pub(crate) fn truncate(&mut self, len: usize) {
        self.entries.truncate(len);
    }

    pub fn apply_perm(&self, g: &Permutation) -> Result<DigraphStack, Error> {
        if g.degree() != self.n {
            return Err(Error::DegreeMismatch { left: self.n, right: g.degree() });
        }
        Ok(self.act(g))
    }

    pub(crate) fn act(&self, g: &Permutation) -> DigraphStack {
        DigraphStack { n: self.n, entries: self.entries.iter().map(|e| Arc::new(e.act(g))).collect() }
    }

    /// Whether `g` maps this stack entrywise onto `other`.
    pub fn maps_to(&self, other: &DigraphStack, g: &Permutation) -> bool {
        self.n == other.n
            && self.len() == other.len()
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a.maps_to(b, g))
    }

    /// The single labelled digraph carrying the same isomorphisms as the stack.
    pub fn squash(&self) -> LabelledDigraph {
        let k = self.entries.len();
        let vertex_labels = (0..self.n)
            .map(|v| Label::Seq(self.entries.iter().map(|e| e.vertex_label(v).clone()).collect()))
            .collect();
        let mut arcs: Vec<(usize, usize)> =
            self.entries.iter().flat_map(|e| e.arcs().iter().copied()).collect();
        arcs.sort_unstable();
        arcs.dedup();
        let mut labels: Vec<Vec<Label>> = alloc::vec![alloc::vec![Label::Hash; k]; arcs.len()];
        for (i, e) in self.entries.iter().enumerate() {
            for (a, l) in e.arcs().iter().zip(e.arc_labels()) {
                let j = arcs.binary_search(a).unwrap();
                labels[j][i] = l.clone();
            }
        }
        let arc_labels = labels.into_iter().map(Label::Seq).collect();
        LabelledDigraph::from_sorted_parts(self.n, vertex_labels, arcs, arc_labels)
    }
}
