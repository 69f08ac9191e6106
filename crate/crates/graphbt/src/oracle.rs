//! Brute-force reference answers by direct semantic checks of each constraint.

use std::collections::BTreeSet;

use graphbt_core::Permutation;

use crate::spec::{Constraint, ProblemSpec};
use crate::Error;

/// Largest degree for which the oracle enumerates all of Sym(Ω).
pub const MAX_DEGREE: usize = 8;
/// Largest group the oracle enumerates when a group or coset constraint is present.
pub const MAX_CANDIDATES: usize = 50_000;

fn image(g: &Permutation, s: &[usize]) -> BTreeSet<usize> {
    s.iter().map(|&x| g.apply(x)).collect()
}

fn as_set(s: &[usize]) -> BTreeSet<usize> {
    s.iter().copied().collect()
}

/// Whether `g` satisfies `c`, checked from the definition.
pub fn holds(c: &Constraint, g: &Permutation) -> bool {
    let n = g.degree();
    match c {
        Constraint::Set(a, b) => image(g, a) == as_set(b),
        Constraint::List(u, v) => {
            u.len() == v.len() && u.iter().zip(v).all(|(a, b)| image(g, a) == as_set(b))
        }
        Constraint::Sets(u, v) | Constraint::Disjoint(u, v) => {
            let lhs: BTreeSet<_> = u.iter().map(|s| image(g, s)).collect();
            let rhs: BTreeSet<_> = v.iter().map(|s| as_set(s)).collect();
            lhs == rhs
        }
        Constraint::Conjugacy(x, h) => (0..n).all(|i| h.apply(g.apply(i)) == g.apply(x.apply(i))),
        Constraint::Iso(a, b) => (0..n).all(|u| {
            a.vertex_label(u) == b.vertex_label(g.apply(u))
                && (0..n).all(|v| a.arc_label(u, v) == b.arc_label(g.apply(u), g.apply(v)))
        }),
        Constraint::Group(h, _) => h.contains(g).unwrap_or(false),
        Constraint::Coset(h, r, _) => h.contains(&g.mul(&r.inverse())).unwrap_or(false),
    }
}

/// Every element of Sym(n) in lexicographic order of image lists.
pub fn symmetric_elements(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::from_images(cur.clone()).unwrap());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// All solutions, sorted. Candidates come from the first group or coset
/// constraint when there is one, otherwise from Sym(Ω).
pub fn oracle(spec: &ProblemSpec) -> Result<Vec<Permutation>, Error> {
    let n = spec.degree;
    let cs = spec.resolve()?;
    let bounded = cs.iter().find_map(|c| match c {
        Constraint::Group(g, _) => Some((g, Permutation::identity(n))),
        Constraint::Coset(g, r, _) => Some((g, r.clone())),
        _ => None,
    });
    let candidates = match bounded {
        Some((g, r)) => {
            let order = g.order();
            if order > MAX_CANDIDATES.into() {
                return Err(Error::OracleTooLarge(format!("group of order {order}")));
            }
            g.elements().into_iter().map(|x| x.mul(&r)).collect()
        }
        None if n <= MAX_DEGREE => symmetric_elements(n),
        None => return Err(Error::OracleTooLarge(format!("degree {n}"))),
    };
    let mut out: Vec<Permutation> =
        candidates.into_iter().filter(|g| cs.iter().all(|c| holds(c, g))).collect();
    out.sort();
    Ok(out)
}
