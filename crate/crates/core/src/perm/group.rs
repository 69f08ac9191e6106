use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use once_cell::race::OnceBox;

use super::{Permutation, StabChain};
use crate::Error;

/// A group given by generators, with a lazily built stabiliser chain.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceBox<StabChain>,
}

impl PermGroup {
    /// Identity generators are dropped.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, Error> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup { degree, generators, chain: OnceBox::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, generators: Vec::new(), chain: OnceBox::new() }
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[&[0, 1]]).unwrap());
        }
        if degree >= 3 {
            let cyc: Vec<usize> = (0..degree).collect();
            gens.push(Permutation::from_cycles(degree, &[&cyc]).unwrap());
        }
        PermGroup { degree, generators: gens, chain: OnceBox::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| Box::new(StabChain::build(self.degree, &self.generators, &[])))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, Error> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: p.degree() });
        }
        Ok(self.chain().contains(p))
    }

    /// Some `g` in the group with `src[i]^g = dst[i]` for every `i`.
    pub fn representative_action(
        &self,
        src: &[usize],
        dst: &[usize],
    ) -> Result<Option<Permutation>, Error> {
        if src.len() != dst.len() {
            return Err(Error::LengthMismatch { left: src.len(), right: dst.len() });
        }
        for &x in src.iter().chain(dst) {
            if x >= self.degree {
                return Err(Error::PointOutOfRange { point: x, degree: self.degree });
            }
        }
        let chain = StabChain::build(self.degree, &self.generators, src);
        Ok(chain.map_prefix(src, dst))
    }

    /// The pointwise stabiliser of `points`.
    pub fn pointwise_stabiliser(&self, points: &[usize]) -> PermGroup {
        let chain = StabChain::build(self.degree, &self.generators, points);
        let gens = chain.prefix_stabiliser_generators();
        PermGroup::new(self.degree, gens).unwrap()
    }

    /// The elements of the group. Only sensible for small groups.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = self.chain().elements();
        out.sort();
        out
    }
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup { degree: self.degree, generators: self.generators.clone(), chain: OnceBox::new() }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "> on {} points", self.degree)
    }
}

/// A right coset `group · representative`.
#[derive(Clone, Debug)]
pub struct RightCoset {
    pub group: PermGroup,
    pub representative: Permutation,
}

impl RightCoset {
    pub fn new(group: PermGroup, representative: Permutation) -> Result<Self, Error> {
        if group.degree() != representative.degree() {
            return Err(Error::DegreeMismatch {
                left: group.degree(),
                right: representative.degree(),
            });
        }
        Ok(RightCoset { group, representative })
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, Error> {
        if p.degree() != self.group.degree() {
            return Err(Error::DegreeMismatch { left: self.group.degree(), right: p.degree() });
        }
        self.group.contains(&p.mul(&self.representative.inverse()))
    }
}

/// Orbits of `<gens>`, sorted by minimum, points ascending within each orbit.
pub fn orbits_of(n: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for x in 0..n {
            let a = find(&mut parent, x);
            let b = find(&mut parent, g.apply(x));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    let mut index = alloc::vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        if index[r] == usize::MAX {
            index[r] = out.len();
            out.push(Vec::new());
        }
        out[index[r]].push(x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn orbits_of_transposition() {
        let g = PermGroup::new(4, alloc::vec![p("(1,2)", 4)]).unwrap();
        assert_eq!(g.orbits(), alloc::vec![alloc::vec![0, 1], alloc::vec![2], alloc::vec![3]]);
    }

    #[test]
    fn klein_is_transitive() {
        let g = PermGroup::new(4, alloc::vec![p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)]).unwrap();
        assert_eq!(g.orbits().len(), 1);
        assert_eq!(g.order(), BigUint::from(4u32));
    }

    #[test]
    fn sym4_order_and_membership() {
        let g = PermGroup::new(4, alloc::vec![p("(1,2)", 4), p("(1,2,3,4)", 4)]).unwrap();
        assert_eq!(g.order(), BigUint::from(24u32));
        assert!(g.contains(&p("(1,2)", 4)).unwrap());
        let c3 = PermGroup::new(4, alloc::vec![p("(1,2,3)", 4)]).unwrap();
        assert!(!c3.contains(&p("(1,2)", 4)).unwrap());
    }

    #[test]
    fn representative_action_cases() {
        let g = PermGroup::new(
            6,
            alloc::vec![p("(1,2)", 6), p("(3,4)", 6), p("(5,6)", 6), p("(1,3,5)(2,4,6)", 6)],
        )
        .unwrap();
        assert_eq!(g.representative_action(&[], &[]).unwrap(), Some(Permutation::identity(6)));
        let a = g.representative_action(&[0, 1], &[2, 3]).unwrap().unwrap();
        assert_eq!((a.apply(0), a.apply(1)), (2, 3));
        assert!(g.contains(&a).unwrap());
        let h = PermGroup::new(4, alloc::vec![p("(3,4)", 4)]).unwrap();
        assert_eq!(h.representative_action(&[0], &[1]).unwrap(), None);
        assert!(h.representative_action(&[0], &[]).is_err());
    }

    #[test]
    fn repeated_source_points() {
        let g = PermGroup::symmetric(4);
        assert!(g.representative_action(&[0, 0], &[1, 2]).unwrap().is_none());
        let a = g.representative_action(&[0, 0], &[1, 1]).unwrap().unwrap();
        assert_eq!(a.apply(0), 1);
    }
}
