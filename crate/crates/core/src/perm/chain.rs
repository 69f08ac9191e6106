use alloc::vec::Vec;

use num_bigint::BigUint;

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<usize>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
}

/// A stabiliser chain built by deterministic Schreier–Sims.
///
/// Level `i` holds the orbit of `base[i]` under the stabiliser of
/// `base[0..i]`, with a transversal `u_x` satisfying `base[i]^u_x = x`.
#[derive(Clone, Debug)]
pub struct StabChain {
    n: usize,
    prefix_len: usize,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

fn smallest_moved(g: &Permutation) -> Option<usize> {
    (0..g.degree()).find(|&x| g.apply(x) != x)
}

impl StabChain {
    /// Builds a chain whose base starts with `prefix` (duplicates ignored).
    /// Remaining base points are the smallest point moved at each new level.
    pub fn build(n: usize, gens: &[Permutation], prefix: &[usize]) -> StabChain {
        let mut base: Vec<usize> = Vec::new();
        for &b in prefix {
            if !base.contains(&b) {
                base.push(b);
            }
        }
        let prefix_len = base.len();
        let strong: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &strong {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(smallest_moved(g).unwrap());
            }
        }
        let mut chain = StabChain { n, prefix_len, strong, levels: Vec::new() };
        for (i, &b) in base.iter().enumerate() {
            let gens: Vec<usize> = (0..chain.strong.len())
                .filter(|&s| base[..i].iter().all(|&p| chain.strong[s].apply(p) == p))
                .collect();
            chain.levels.push(Level { point: b, gens, orbit: Vec::new(), transversal: Vec::new() });
            chain.recompute_orbit(i);
        }
        chain.schreier_sims();
        chain
    }

    fn recompute_orbit(&mut self, i: usize) {
        let n = self.n;
        let level = &mut self.levels[i];
        let mut trans: Vec<Option<Permutation>> = alloc::vec![None; n];
        trans[level.point] = Some(Permutation::identity(n));
        let mut orbit = alloc::vec![level.point];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for &s in &level.gens {
                let y = self.strong[s].apply(x);
                if trans[y].is_none() {
                    let u = trans[x].as_ref().unwrap().mul(&self.strong[s]);
                    trans[y] = Some(u);
                    orbit.push(y);
                }
            }
            k += 1;
        }
        level.orbit = orbit;
        level.transversal = trans;
    }

    /// Strips `h` through levels `from..`; returns the residue and the level where it stopped.
    fn strip(&self, mut h: Permutation, from: usize) -> (Permutation, usize) {
        for l in from..self.levels.len() {
            let y = h.apply(self.levels[l].point);
            match &self.levels[l].transversal[y] {
                None => return (h, l),
                Some(u) => h = h.mul(&u.inverse()),
            }
        }
        (h, self.levels.len())
    }

    fn first_failure(&self, i: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[i];
        for &x in &level.orbit {
            let ux = level.transversal[x].as_ref().unwrap();
            for &s in &level.gens {
                let us = ux.mul(&self.strong[s]);
                let uy = level.transversal[self.strong[s].apply(x)].as_ref().unwrap();
                if &us == uy {
                    continue;
                }
                let (res, j) = self.strip(us.mul(&uy.inverse()), i + 1);
                if !res.is_identity() {
                    return Some((res, j));
                }
            }
        }
        None
    }

    fn schreier_sims(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() - 1;
        loop {
            if let Some((res, j)) = self.first_failure(i) {
                if j == self.levels.len() {
                    let b = smallest_moved(&res).unwrap();
                    self.levels.push(Level {
                        point: b,
                        gens: Vec::new(),
                        orbit: Vec::new(),
                        transversal: Vec::new(),
                    });
                }
                let idx = self.strong.len();
                self.strong.push(res);
                for l in i + 1..=j {
                    self.levels[l].gens.push(idx);
                    self.recompute_orbit(l);
                }
                i = j;
                continue;
            }
            if i == 0 {
                break;
            }
            i -= 1;
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        let mut o = BigUint::from(1u32);
        for l in &self.levels {
            o *= BigUint::from(l.orbit.len());
        }
        o
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.n {
            return false;
        }
        let (res, _) = self.strip(p.clone(), 0);
        res.is_identity()
    }

    /// Element `u_{k-1} ⋯ u_0` where `u_i` is the transversal element for
    /// `orbit(i)[indices[i] % |orbit(i)|]`.
    pub fn element(&self, indices: &[usize]) -> Permutation {
        let mut g = Permutation::identity(self.n);
        for (l, level) in self.levels.iter().enumerate() {
            let k = indices.get(l).copied().unwrap_or(0) % level.orbit.len();
            let x = level.orbit[k];
            g = level.transversal[x].as_ref().unwrap().mul(&g);
        }
        g
    }

    /// All group elements.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = alloc::vec![Permutation::identity(self.n)];
        for level in self.levels.iter() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &x in &level.orbit {
                let u = level.transversal[x].as_ref().unwrap();
                for g in &out {
                    next.push(u.mul(g));
                }
            }
            out = next;
        }
        out
    }

    /// Generators of the pointwise stabiliser of the base prefix given to `build`.
    pub fn prefix_stabiliser_generators(&self) -> Vec<Permutation> {
        let k = self.prefix_len;
        let fixed: Vec<usize> =
            self.levels[..k.min(self.levels.len())].iter().map(|l| l.point).collect();
        self.strong
            .iter()
            .filter(|g| fixed.iter().all(|&p| g.apply(p) == p))
            .cloned()
            .collect()
    }

    /// Some `g` with `src[i]^g = dst[i]`, where `src` is the prefix given to `build`.
    pub(crate) fn map_prefix(&self, src: &[usize], dst: &[usize]) -> Option<Permutation> {
        let mut acc = Permutation::identity(self.n);
        let mut acc_inv = Permutation::identity(self.n);
        let mut level = 0;
        for (i, &s) in src.iter().enumerate() {
            if let Some(j) = src[..i].iter().position(|&t| t == s) {
                if dst[j] != dst[i] {
                    return None;
                }
                continue;
            }
            debug_assert_eq!(self.levels[level].point, s);
            let t = acc_inv.apply(dst[i]);
            let u = self.levels[level].transversal[t].as_ref()?;
            acc = u.mul(&acc);
            acc_inv = acc_inv.mul(&u.inverse());
            level += 1;
        }
        Some(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn chain_of_sym5() {
        let c = StabChain::build(5, &[p("(1,2)", 5), p("(1,2,3,4,5)", 5)], &[]);
        assert_eq!(c.order(), BigUint::from(120u32));
        assert_eq!(c.elements().len(), 120);
        assert_eq!(c.base()[0], 0);
    }

    #[test]
    fn prefix_becomes_base() {
        let c = StabChain::build(5, &[p("(1,2)", 5), p("(1,2,3,4,5)", 5)], &[3, 1]);
        assert_eq!(&c.base()[..2], &[3, 1]);
        let st = c.prefix_stabiliser_generators();
        assert!(st.iter().all(|g| g.apply(3) == 3 && g.apply(1) == 1));
        let c2 = StabChain::build(5, &st, &[]);
        assert_eq!(c2.order(), BigUint::from(6u32));
    }

    #[test]
    fn trivial_group() {
        let c = StabChain::build(3, &[], &[]);
        assert_eq!(c.order(), BigUint::from(1u32));
        assert!(c.contains(&Permutation::identity(3)));
        assert!(!c.contains(&p("(1,2)", 3)));
    }
}
