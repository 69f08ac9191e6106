//! Canonical labelling by individualisation and refinement, and the exact
//! approximators built on it.

use alloc::vec::Vec;

use crate::digraph::LabelledDigraph;
use crate::equitable::{
    classify, refine_cells, Classification, EstimateGroup, Interner, IsoEstimate, Prepared,
};
use crate::perm::{orbits_of, PermGroup, Permutation};
use crate::stack::DigraphStack;

/// A canonical labelling together with the automorphism group.
#[derive(Clone, Debug)]
pub struct CanonResult {
    pub canonical_perm: Permutation,
    pub automorphisms: PermGroup,
    /// The image of the input under `canonical_perm`.
    pub canonical_form: LabelledDigraph,
}

impl CanonResult {
    /// Fixed points of the automorphism group, ordered by canonical position.
    pub fn fixed_points(&self) -> Vec<usize> {
        let n = self.canonical_perm.degree();
        let gens = self.automorphisms.generators();
        let inv = self.canonical_perm.inverse();
        (0..n).map(|i| inv.apply(i)).filter(|&x| gens.iter().all(|g| g.apply(x) == x)).collect()
    }

    /// Orbits of the automorphism group, ordered by least canonical position.
    pub fn orbit_cells(&self) -> Vec<Vec<usize>> {
        let n = self.canonical_perm.degree();
        let mut orbits = orbits_of(n, self.automorphisms.generators());
        let key = |o: &Vec<usize>| o.iter().map(|&x| self.canonical_perm.apply(x)).min();
        orbits.sort_by_key(key);
        orbits
    }
}

struct Leaf {
    perm: Permutation,
    form: LabelledDigraph,
}

struct Canoniser<'a> {
    g: &'a LabelledDigraph,
    prep: Prepared,
    interner: Interner,
    autos: Vec<Permutation>,
    first: Option<Leaf>,
    first_path: Vec<usize>,
    best: Option<Leaf>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Canoniser<'_> {
    /// Returns `Some(d)` to unwind to the node at depth `d`.
    fn node(&mut self, cls: Classification, path: &mut Vec<usize>) -> Option<usize> {
        let n = self.prep.degree();
        if cls.cells.len() == n {
            return self.leaf(&cls, path);
        }
        let (target, _) = cls
            .cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .unwrap();
        let mut cell = cls.cells[target].clone();
        cell.sort_unstable();
        let parent = cls.labels[target];
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() {
                let stab: Vec<Permutation> = self
                    .autos
                    .iter()
                    .filter(|a| path.iter().all(|&p| a.apply(p) == p))
                    .cloned()
                    .collect();
                let orbits = orbits_of(n, &stab);
                let orbit = orbits.iter().find(|o| o.contains(&v)).unwrap();
                if explored.iter().any(|e| orbit.contains(e)) {
                    continue;
                }
            }
            explored.push(v);
            let mut init = Vec::with_capacity(cls.cells.len() + 1);
            for (i, c) in cls.cells.iter().enumerate() {
                if i == target {
                    init.push((self.interner.individualised(parent, true), alloc::vec![v]));
                    let rest: Vec<usize> = c.iter().copied().filter(|&x| x != v).collect();
                    init.push((self.interner.individualised(parent, false), rest));
                } else {
                    init.push((cls.labels[i], c.clone()));
                }
            }
            let child =
                refine_cells(&self.prep, &mut self.interner, init, Some(&[target, target + 1]));
            path.push(v);
            let jump = self.node(child, path);
            path.pop();
            if let Some(d) = jump {
                if d < path.len() {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cls: &Classification, path: &[usize]) -> Option<usize> {
        let n = self.prep.degree();
        let mut images = alloc::vec![0; n];
        for (i, c) in cls.cells.iter().enumerate() {
            images[c[0]] = i;
        }
        let perm = Permutation::from_images(images).unwrap();
        let form = self.g.act(&perm);
        let Some(first) = &self.first else {
            self.first_path = path.to_vec();
            self.first = Some(Leaf { perm: perm.clone(), form: form.clone() });
            self.best = Some(Leaf { perm, form });
            return None;
        };
        if form == first.form {
            self.autos.push(first.perm.mul(&perm.inverse()));
            return Some(common_prefix(path, &self.first_path));
        }
        let best = self.best.as_ref().unwrap();
        if form == best.form {
            self.autos.push(best.perm.mul(&perm.inverse()));
            return None;
        }
        if form_less(&form, &best.form) {
            self.best = Some(Leaf { perm, form });
        }
        None
    }
}

fn form_less(a: &LabelledDigraph, b: &LabelledDigraph) -> bool {
    let ka = (a.vertex_labels(), a.arcs(), a.arc_labels());
    let kb = (b.vertex_labels(), b.arcs(), b.arc_labels());
    ka < kb
}

/// Canonical labelling and automorphism group of `g`.
pub fn canonise(g: &LabelledDigraph) -> CanonResult {
    let mut interner = Interner::new();
    let prep = Prepared::new(g, &mut interner);
    let root = classify(g, &mut interner);
    let mut c = Canoniser {
        g,
        prep,
        interner,
        autos: Vec::new(),
        first: None,
        first_path: Vec::new(),
        best: None,
    };
    c.node(root, &mut Vec::new());
    let best = c.best.unwrap();
    CanonResult {
        canonical_perm: best.perm,
        automorphisms: PermGroup::new(g.degree(), c.autos).unwrap(),
        canonical_form: best.form,
    }
}

pub(crate) fn exact_compare(s: &CanonResult, t: &CanonResult) -> IsoEstimate {
    if s.canonical_form != t.canonical_form {
        return IsoEstimate::Empty;
    }
    IsoEstimate::Coset {
        group: EstimateGroup::Group(s.automorphisms.clone()),
        representative: s.canonical_perm.mul(&t.canonical_perm.inverse()),
    }
}

/// `Aut(Squash S) · g · h⁻¹` when the canonical forms agree, otherwise empty.
pub fn exact_approx(s: &DigraphStack, t: &DigraphStack) -> IsoEstimate {
    if s.len() != t.len() || s.degree() != t.degree() {
        return IsoEstimate::Empty;
    }
    exact_compare(&canonise(&s.squash()), &canonise(&t.squash()))
}

/// Fixed points of `Aut(S)`, in canonical order.
pub fn exact_fixed(s: &DigraphStack) -> Vec<usize> {
    canonise(&s.squash()).fixed_points()
}
