//! Permutations of `{0, .., n-1}`, groups given by generators, and stabiliser chains.

mod chain;
mod group;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::Error;

pub use chain::StabChain;
pub use group::{orbits_of, PermGroup, RightCoset};

/// A permutation stored as its image list: point `i` maps to `images[i]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::PointOutOfRange { point: x, degree: n });
            }
            if seen[x] {
                return Err(Error::NotBijection);
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, Error> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = alloc::vec![false; n];
        for cyc in cycles {
            for (i, &x) in cyc.iter().enumerate() {
                if x >= n {
                    return Err(Error::PointOutOfRange { point: x, degree: n });
                }
                if moved[x] {
                    return Err(Error::NotBijection);
                }
                moved[x] = true;
                images[x] = cyc[(i + 1) % cyc.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `"(1,2)(3,6,5)"` or `"(1 2)(3 6 5)"`.
    pub fn parse(s: &str, n: usize) -> Result<Self, Error> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::Parse(s.to_string()));
            };
            let Some(end) = body.find(')') else {
                return Err(Error::Parse(s.to_string()));
            };
            let mut cyc = Vec::new();
            for tok in body[..end].split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let v: usize = tok.parse().map_err(|_| Error::Parse(s.to_string()))?;
                if v == 0 {
                    return Err(Error::Parse(s.to_string()));
                }
                cyc.push(v - 1);
            }
            cycles.push(cyc);
            rest = body[end + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `x^(self·q) = (x^self)^q`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation, Error> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: q.degree() });
        }
        Ok(self.mul(q))
    }

    /// Unchecked composition; panics on a degree mismatch.
    pub fn mul(&self, q: &Permutation) -> Permutation {
        assert_eq!(self.degree(), q.degree(), "degree mismatch");
        Permutation { images: self.images.iter().map(|&x| q.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self^-1 · g · self`, so that `g^self` satisfies `(x^g)^self = (x^self)^(g^self)`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().mul(self).mul(g)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.images[x];
            }
            out.push(cyc);
        }
        out
    }

    pub fn image_of_set(&self, set: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = set.iter().map(|&x| self.images[x]).collect();
        v.sort_unstable();
        v
    }

    pub fn to_cycle_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cyc in cycles {
            f.write_str("(")?;
            for (i, x) in cyc.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_left_to_right() {
        let a = Permutation::parse("(1,4)", 5).unwrap();
        let b = Permutation::parse("(1,5)(2,3)", 5).unwrap();
        assert_eq!(a.compose(&b).unwrap().to_string(), "(1,4,5)(2,3)");
    }

    #[test]
    fn identity_prints_empty() {
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert!(Permutation::parse("()", 4).unwrap().is_identity());
    }

    #[test]
    fn inverse_of_three_cycle() {
        let p = Permutation::parse("(1 2 3)", 3).unwrap();
        assert_eq!(p.inverse().to_string(), "(1,3,2)");
    }

    #[test]
    fn parse_rejects_junk() {
        assert!(Permutation::parse("(1,2", 3).is_err());
        assert!(Permutation::parse("(1,1)", 3).is_err());
        assert!(Permutation::parse("(0,1)", 3).is_err());
        assert!(Permutation::parse("(1,4)", 3).is_err());
    }

    #[test]
    fn degree_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(a.compose(&b), Err(Error::DegreeMismatch { left: 3, right: 4 }));
    }
}
