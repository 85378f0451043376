//! Generalized Petersen graphs GP(n,k) as explicit edge lists.
//!
//! Vertex labels: the outer vertex `u_i` is `i` and the inner vertex `v_i` is
//! `n + i`, for `0 <= i < n`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::ParamError;

/// Validated parameters of GP(n,k): `n >= 3` and `1 <= k < n/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GpParams {
    n: usize,
    k: usize,
}

impl GpParams {
    pub fn new(n: i64, k: i64) -> Result<Self, ParamError> {
        validate_params(n, k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `n >= 2k + 1`, the range over which the parity question is posed.
    pub fn in_conjecture_domain(&self) -> bool {
        self.n > 2 * self.k
    }
}

impl std::fmt::Display for GpParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GP({},{})", self.n, self.k)
    }
}

pub fn validate_params(n: i64, k: i64) -> Result<GpParams, ParamError> {
    if n < 3 {
        return Err(ParamError::CycleTooShort { n });
    }
    if k < 1 {
        return Err(ParamError::StepTooSmall { k });
    }
    if 2 * k >= n {
        return Err(ParamError::StepTooLarge { n, k });
    }
    Ok(GpParams {
        n: n as usize,
        k: k as usize,
    })
}

/// A simple undirected graph. Edges are stored sorted, each as `(a, b)` with
/// `a < b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from arbitrary edge pairs, dropping duplicates.
    ///
    /// Panics on a self-loop or an endpoint outside `0..vertex_count`.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| {
                assert!(a != b, "self-loop at vertex {a}");
                assert!(
                    a < vertex_count && b < vertex_count,
                    "edge ({a},{b}) out of range for {vertex_count} vertices"
                );
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Graph {
            vertex_count,
            edges,
        }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vertex_count);
        Graph::from_edges(
            self.vertex_count,
            self.edges.iter().map(|&(a, b)| (perm[a], perm[b])),
        )
    }

    /// Disjoint union; vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        Graph::from_edges(
            self.vertex_count + other.vertex_count,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift))),
        )
    }

    /// Edge-list text: `p <vertices> <edges>` followed by `e <a> <b>` lines.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p {} {}", self.vertex_count, self.edges.len()).unwrap();
        for (a, b) in &self.edges {
            writeln!(out, "e {a} {b}").unwrap();
        }
        out
    }
}

/// Outer cycle `u_i u_{i+1}`, inner chords `v_i v_{i+k}`, spokes `u_i v_i`.
pub fn build_gp(params: GpParams) -> Graph {
    let GpParams { n, k } = params;
    let outer = (0..n).map(|i| (i, (i + 1) % n));
    let inner = (0..n).map(|i| (n + i, n + (i + k) % n));
    let spokes = (0..n).map(|i| (i, n + i));
    Graph::from_edges(2 * n, outer.chain(inner).chain(spokes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn validation_boundaries() {
        assert!(validate_params(5, 2).is_ok());
        assert!(validate_params(3, 1).is_ok());
        assert_eq!(
            validate_params(4, 2),
            Err(ParamError::StepTooLarge { n: 4, k: 2 })
        );
        assert_eq!(
            validate_params(2, 1),
            Err(ParamError::CycleTooShort { n: 2 })
        );
        assert_eq!(
            validate_params(7, 0),
            Err(ParamError::StepTooSmall { k: 0 })
        );
        // distinct diagnostics
        let msgs: Vec<String> = [
            validate_params(2, 1),
            validate_params(7, 0),
            validate_params(4, 2),
        ]
        .into_iter()
        .map(|r| r.unwrap_err().to_string())
        .collect();
        assert_ne!(msgs[0], msgs[1]);
        assert_ne!(msgs[1], msgs[2]);
        assert!(msgs[2].contains("require k < n/2"));
    }

    #[test]
    fn prism_three() {
        let g = build_gp(GpParams::new(3, 1).unwrap());
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 9);
        assert!(g.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn petersen_inner_chords() {
        let g = build_gp(GpParams::new(5, 2).unwrap());
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        let inner: Vec<_> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(a, b)| a >= 5 && b >= 5)
            .map(|(a, b)| (a - 5, b - 5))
            .collect();
        assert_eq!(inner, vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
    }

    #[test]
    fn gp_6_2_inner_is_two_triangles() {
        let g = build_gp(GpParams::new(6, 2).unwrap());
        let inner: Vec<_> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(a, b)| a >= 6 && b >= 6)
            .map(|(a, b)| (a - 6, b - 6))
            .collect();
        assert_eq!(inner, vec![(0, 2), (0, 4), (1, 3), (1, 5), (2, 4), (3, 5)]);
    }

    #[test]
    fn edge_list_format() {
        let g = build_gp(GpParams::new(3, 1).unwrap());
        let text = g.to_edge_list();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("p 6 9"));
        assert_eq!(lines.next(), Some("e 0 1"));
        assert_eq!(text.lines().count(), 10);
    }

    proptest! {
        #[test]
        fn every_gp_is_cubic(n in 3i64..60, kk in 1i64..30) {
            prop_assume!(2 * kk < n);
            let p = GpParams::new(n, kk).unwrap();
            let g = build_gp(p);
            prop_assert_eq!(g.vertex_count(), 2 * p.n());
            prop_assert_eq!(g.edge_count(), 3 * p.n());
            prop_assert!(g.degrees().iter().all(|&d| d == 3));
            let inner = g.edges().iter().filter(|&&(a, _)| a >= p.n()).count();
            prop_assert_eq!(inner, p.n());
            prop_assert_eq!(build_gp(p), g);
        }
    }
}
