//! Brute-force independent-set census, independent of the transfer matrix.
//!
//! Two routes: depth-first enumeration over vertex masks in ascending order
//! with neighbourhood pruning, and the deletion recurrence
//! `I(G) = I(G - v) + x I(G - N[v])` memoized on the remaining vertex set.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::OracleCapExceeded;
use crate::exact_poly::IntPoly;
use crate::gp_graph::Graph;

/// Largest graph the oracles accept.
pub const ORACLE_VERTEX_CAP: usize = 30;

/// `counts[s]` is the number of independent sets of size `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub counts: Vec<u64>,
}

impl Census {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn independence_number(&self) -> usize {
        self.counts.len() - 1
    }
}

fn check_cap(g: &Graph) -> Result<(), OracleCapExceeded> {
    if g.vertex_count() > ORACLE_VERTEX_CAP {
        return Err(OracleCapExceeded {
            vertices: g.vertex_count(),
            cap: ORACLE_VERTEX_CAP,
        });
    }
    Ok(())
}

fn closed_neighborhood_masks(g: &Graph) -> Vec<u64> {
    let mut masks: Vec<u64> = (0..g.vertex_count()).map(|v| 1u64 << v).collect();
    for &(a, b) in g.edges() {
        masks[a] |= 1 << b;
        masks[b] |= 1 << a;
    }
    masks
}

/// Counts independent sets among vertices `>= next`, given that vertices in
/// `blocked` may not be added.
fn enumerate(next: usize, blocked: u64, size: usize, nbhd: &[u64], counts: &mut Vec<u64>) {
    if size >= counts.len() {
        counts.resize(size + 1, 0);
    }
    counts[size] += 1;
    for v in next..nbhd.len() {
        if blocked >> v & 1 == 0 {
            enumerate(v + 1, blocked | nbhd[v], size + 1, nbhd, counts);
        }
    }
}

fn merge(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Every independent set is visited once, as the chain of its members in
/// ascending order. The top-level branches (smallest member) are split
/// across workers and summed.
pub fn census(g: &Graph) -> Result<Census, OracleCapExceeded> {
    check_cap(g)?;
    let nbhd = closed_neighborhood_masks(g);
    let nonempty = (0..g.vertex_count())
        .into_par_iter()
        .map(|v| {
            let mut counts = Vec::new();
            enumerate(v + 1, nbhd[v], 1, &nbhd, &mut counts);
            counts
        })
        .reduce(Vec::new, merge);
    let mut counts = merge(vec![1], nonempty);
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(Census { counts })
}

pub fn census_to_poly(c: &Census) -> IntPoly {
    IntPoly::new(c.counts.iter().map(|&n| BigInt::from(n)).collect())
}

/// Independence polynomial by the deletion recurrence on the lowest
/// remaining vertex.
pub fn deletion_recurrence(g: &Graph) -> Result<IntPoly, OracleCapExceeded> {
    check_cap(g)?;
    let nbhd = closed_neighborhood_masks(g);
    let all = if g.vertex_count() == 64 {
        u64::MAX
    } else {
        (1u64 << g.vertex_count()) - 1
    };
    let mut memo = HashMap::new();
    Ok(recur(all, &nbhd, &mut memo))
}

fn recur(remaining: u64, nbhd: &[u64], memo: &mut HashMap<u64, IntPoly>) -> IntPoly {
    if remaining == 0 {
        return IntPoly::one();
    }
    if let Some(p) = memo.get(&remaining) {
        return p.clone();
    }
    let v = remaining.trailing_zeros() as usize;
    let without = recur(remaining & !(1 << v), nbhd, memo);
    let with = recur(remaining & !nbhd[v], nbhd, memo);
    let p = &without + &(&with * &IntPoly::monomial(1, 1));
    memo.insert(remaining, p.clone());
    p
}
