//! The fixed-point splitter.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::digraph::LabelledDigraph;
use crate::equitable::IsoEstimate;
use crate::stack::DigraphStack;
use crate::Error;

/// Children of a search node: one left extension `[Γ_α]` shared by every
/// child, and a right extension `[Γ_β]` per child.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    pub alpha: usize,
    pub betas: Vec<usize>,
}

impl SplitResult {
    pub fn left_extension(&self, n: usize) -> DigraphStack {
        DigraphStack::single(LabelledDigraph::point(n, self.alpha))
    }

    pub fn right_extensions(&self, n: usize) -> Vec<DigraphStack> {
        self.betas.iter().map(|&b| DigraphStack::single(LabelledDigraph::point(n, b))).collect()
    }

    /// `(left, right)` extension pairs in child order.
    pub fn pairs(&self, n: usize) -> Vec<(DigraphStack, DigraphStack)> {
        let l = self.left_extension(n);
        self.right_extensions(n).into_iter().map(|r| (l.clone(), r)).collect()
    }
}

/// The smallest point of a smallest orbit of size at least two.
pub fn split_point(est: &IsoEstimate) -> Option<usize> {
    let group = est.group()?;
    group
        .orbits()
        .into_iter()
        .filter(|o| o.len() >= 2)
        .min_by_key(|o| (o.len(), o[0]))
        .map(|o| o[0])
}

/// Splits on `α`; children are `β ∈ α^{G·h}` ascending, with `α` first when `S = T`.
pub fn split(s: &DigraphStack, t: &DigraphStack, est: &IsoEstimate) -> Result<SplitResult, Error> {
    if est.size() <= BigUint::from(1u32) {
        return Err(Error::NothingToSplit);
    }
    let alpha = split_point(est).ok_or(Error::NothingToSplit)?;
    let group = est.group().unwrap();
    let h = est.representative().unwrap();
    let orbit = group.orbits().into_iter().find(|o| o.contains(&alpha)).unwrap();
    let mut betas: Vec<usize> = orbit.iter().map(|&x| h.apply(x)).collect();
    betas.sort_unstable();
    if s == t {
        if let Some(i) = betas.iter().position(|&b| b == alpha) {
            betas.remove(i);
            betas.insert(0, alpha);
        }
    }
    Ok(SplitResult { alpha, betas })
}
