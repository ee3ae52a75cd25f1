//! Rooted loopless multigraphs on `{0, 1, ..., n}` with root `0`.
//!
//! Edge multiplicities live in a dense symmetric matrix. Parallel edges are
//! counted here, never labeled; see [`crate::enumeration::EdgeList`] for the
//! labeled view used by subgraph enumeration.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    adj: Vec<u64>,
}

/// An essentially connected component: the induced subgraph on one connected
/// component of the non-root vertices, with the root re-attached and the
/// vertices relabeled `1..=k` in ascending original order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub graph: Multigraph,
    /// `labels[i - 1]` is the original name of component vertex `i`.
    pub labels: Vec<usize>,
}

impl Multigraph {
    /// Graph on `{0..=n}` with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(Self {
            n,
            adj: vec![0; (n + 1) * (n + 1)],
        })
    }

    /// Accumulates `(u, v, multiplicity)` triples; repeated pairs add up.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u64)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v, m) in edges {
            g.add_edges(u, v, m)?;
        }
        Ok(g)
    }

    pub fn from_adjacency(rows: &[Vec<u64>]) -> Result<Self> {
        let size = rows.len();
        let mut g = Self::empty(size.saturating_sub(1))?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidAdjacency(format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            if row[i] != 0 {
                return Err(Error::InvalidAdjacency(format!("loop at vertex {i}")));
            }
            for (j, &m) in row.iter().enumerate() {
                if rows[j][i] != m {
                    return Err(Error::InvalidAdjacency(format!(
                        "asymmetric entry ({i}, {j})"
                    )));
                }
                g.adj[i * size + j] = m;
            }
        }
        Ok(g)
    }

    /// `K_{n+1}^{a,b}`: `a` edges from the root to each vertex, `b` between
    /// each pair of non-root vertices.
    pub fn complete(n: usize, a: u64, b: u64) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for i in 1..=n {
            g.set(0, i, a);
            for j in (i + 1)..=n {
                g.set(i, j, b);
            }
        }
        Ok(g)
    }

    pub fn add_edges(&mut self, u: usize, v: usize, m: u64) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            if m == 0 {
                return Ok(());
            }
            return Err(Error::InvalidAdjacency(format!("loop at vertex {u}")));
        }
        let cur = self.multiplicity(u, v);
        self.set(u, v, cur + m);
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize, m: u64) {
        let s = self.n + 1;
        self.adj[u * s + v] = m;
        self.adj[v * s + u] = m;
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v > self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                max: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Number of non-root vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        self.adj[u * (self.n + 1) + v]
    }

    pub fn rooted(&self, i: usize) -> u64 {
        self.multiplicity(0, i)
    }

    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        self.adj.chunks(self.n + 1).map(<[u64]>::to_vec).collect()
    }

    /// `(u, v, multiplicity)` for each adjacent pair `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..=self.n).flat_map(move |u| {
            ((u + 1)..=self.n).filter_map(move |v| {
                let m = self.multiplicity(u, v);
                (m > 0).then_some((u, v, m))
            })
        })
    }

    /// Total number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.edges().map(|(_, _, m)| m).sum()
    }

    pub fn degree(&self, i: usize) -> Result<u64> {
        self.check_vertex(i)?;
        Ok(self.deg(i))
    }

    fn deg(&self, i: usize) -> u64 {
        (0..=self.n).map(|j| self.multiplicity(i, j)).sum()
    }

    /// Number of edges from `i` to vertices outside `subset`, where `subset`
    /// is a nonempty set of non-root vertices containing `i`.
    pub fn d_s(&self, subset: &[usize], i: usize) -> Result<u64> {
        if subset.is_empty() {
            return Err(Error::InvalidSubset("subset is empty".into()));
        }
        if subset.contains(&0) {
            return Err(Error::InvalidSubset("subset contains the root".into()));
        }
        for &v in subset {
            self.check_vertex(v)?;
        }
        if !subset.contains(&i) {
            return Err(Error::InvalidSubset(format!("vertex {i} not in subset")));
        }
        let mut inside = vec![false; self.n + 1];
        for &v in subset {
            inside[v] = true;
        }
        Ok((0..=self.n)
            .filter(|&j| !inside[j])
            .map(|j| self.multiplicity(i, j))
            .sum())
    }

    /// Removes `count` of the edges between the root and each listed vertex.
    pub fn delete_rooted_edges(&self, removals: &BTreeMap<usize, u64>) -> Result<Self> {
        let mut g = self.clone();
        for (&v, &count) in removals {
            if v == 0 {
                return Err(Error::InvalidSubset("the root has no rooted edge to itself".into()));
            }
            self.check_vertex(v)?;
            let available = self.rooted(v);
            if count > available {
                return Err(Error::RemovalExceeds {
                    vertex: v,
                    requested: count,
                    available,
                });
            }
            g.set(0, v, available - count);
        }
        Ok(g)
    }

    /// The `d`-fold product: vertices of `other` are shifted past `self`,
    /// each graph keeps its own inner and rooted edges, and every pair
    /// (vertex of `self`, vertex of `other`) gets exactly `d` edges.
    pub fn d_fold_product(&self, other: &Multigraph, d: u64) -> Multigraph {
        let (n, m) = (self.n, other.n);
        let mut g = Multigraph {
            n: n + m,
            adj: vec![0; (n + m + 1) * (n + m + 1)],
        };
        for (u, v, k) in self.edges() {
            g.set(u, v, k);
        }
        let shift = |v: usize| if v == 0 { 0 } else { v + n };
        for (u, v, k) in other.edges() {
            g.set(shift(u), shift(v), k);
        }
        for i in 1..=n {
            for j in (n + 1)..=(n + m) {
                g.set(i, j, d);
            }
        }
        g
    }

    /// Truncated signless Laplacian: degrees on the diagonal, multiplicities
    /// off it, root row and column removed.
    pub fn signless_laplacian_truncated(&self) -> SymMatrix {
        SymMatrix::from_fn(self.n, |i, j| {
            if i == j {
                self.deg(i + 1) as i64
            } else {
                self.multiplicity(i + 1, j + 1) as i64
            }
        })
    }

    /// Truncated Laplacian, the same as the signless one with negated
    /// off-diagonal entries.
    pub fn laplacian_truncated(&self) -> SymMatrix {
        SymMatrix::from_fn(self.n, |i, j| {
            if i == j {
                self.deg(i + 1) as i64
            } else {
                -(self.multiplicity(i + 1, j + 1) as i64)
            }
        })
    }

    /// Induced subgraph on `vertices` (non-root, ascending) plus the root.
    pub fn induced_with_root(&self, vertices: &[usize]) -> Multigraph {
        let mut keep = Vec::with_capacity(vertices.len() + 1);
        keep.push(0);
        keep.extend_from_slice(vertices);
        let k = keep.len();
        let mut adj = vec![0; k * k];
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate() {
                adj[a * k + b] = self.multiplicity(u, v);
            }
        }
        Multigraph { n: k - 1, adj }
    }

    /// Vertex sets of the connected components of the graph with the root
    /// deleted, each ascending, ordered by smallest vertex.
    pub fn inner_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in 1..=self.n {
                    if !seen[v] && self.multiplicity(u, v) > 0 {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn essential_components(&self) -> Vec<Component> {
        self.inner_components()
            .into_iter()
            .map(|labels| Component {
                graph: self.induced_with_root(&labels),
                labels,
            })
            .collect()
    }

    pub fn is_essentially_connected(&self) -> bool {
        self.inner_components().len() == 1
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, edges=[", self.n)?;
        for (k, (u, v, m)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
            if m > 1 {
                write!(f, "x{m}")?;
            }
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The worked example graph with components {1,2} and {3,4,5}.
    fn two_components() -> Multigraph {
        Multigraph::from_edges(
            5,
            &[
                (0, 1, 1),
                (0, 2, 1),
                (1, 2, 1),
                (0, 3, 1),
                (0, 4, 1),
                (3, 4, 1),
                (3, 5, 1),
                (4, 5, 1),
            ],
        )
        .unwrap()
    }

    fn sym(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn complete_multigraphs() {
        let k3 = Multigraph::complete(2, 1, 1).unwrap();
        assert_eq!(k3.edges().collect::<Vec<_>>(), vec![(0, 1, 1), (0, 2, 1), (1, 2, 1)]);
        let k = Multigraph::complete(2, 1, 2).unwrap();
        assert_eq!(k.edges().collect::<Vec<_>>(), vec![(0, 1, 1), (0, 2, 1), (1, 2, 2)]);
        let k4 = Multigraph::complete(3, 2, 1).unwrap();
        for i in 1..=3 {
            assert_eq!(k4.rooted(i), 2);
        }
        assert_eq!(k4.multiplicity(1, 3), 1);
        assert_eq!(Multigraph::complete(0, 1, 1), Err(Error::NoVertices));
    }

    #[test]
    fn rooted_edge_deletion() {
        let k3 = Multigraph::complete(2, 1, 1).unwrap();
        let g = k3.delete_rooted_edges(&BTreeMap::from([(1, 1)])).unwrap();
        assert_eq!((g.rooted(1), g.rooted(2), g.multiplicity(1, 2)), (0, 1, 1));

        let k4 = Multigraph::complete(3, 2, 1).unwrap();
        let g = k4.delete_rooted_edges(&BTreeMap::from([(1, 2)])).unwrap();
        assert_eq!(g.rooted(1), 0);
        assert_eq!(g.degree(1).unwrap(), 2);
        assert_eq!(g.rooted(2), 2);

        assert_eq!(k4.delete_rooted_edges(&BTreeMap::new()).unwrap(), k4);
        assert_eq!(
            k4.delete_rooted_edges(&BTreeMap::from([(3, 3)])),
            Err(Error::RemovalExceeds {
                vertex: 3,
                requested: 3,
                available: 2
            })
        );
    }

    #[test]
    fn product_of_single_edges_is_triangle() {
        let edge = Multigraph::complete(1, 1, 1).unwrap();
        assert_eq!(edge.d_fold_product(&edge, 1), Multigraph::complete(2, 1, 1).unwrap());
    }

    #[test]
    fn product_with_zero_fold_is_union_over_root() {
        let k3 = Multigraph::complete(2, 1, 1).unwrap();
        let p = k3.d_fold_product(&k3, 0);
        assert_eq!(p.n(), 4);
        assert_eq!(p.inner_components(), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(p.edge_count(), 6);
    }

    #[test]
    fn product_matches_drawn_example() {
        // G1: 0-1 x2, 0-2 x3, 1-2 x3; G2 = K_3^{2,2}
        let g1 = Multigraph::from_edges(2, &[(0, 1, 2), (0, 2, 3), (1, 2, 3)]).unwrap();
        let g2 = Multigraph::complete(2, 2, 2).unwrap();
        let p = g1.d_fold_product(&g2, 1);
        let expected = Multigraph::from_edges(
            4,
            &[
                (0, 1, 2),
                (0, 2, 3),
                (1, 2, 3),
                (0, 3, 2),
                (0, 4, 2),
                (3, 4, 2),
                (1, 3, 1),
                (1, 4, 1),
                (2, 3, 1),
                (2, 4, 1),
            ],
        )
        .unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn degrees() {
        let g = two_components();
        assert_eq!(g.degree(3).unwrap(), 3);
        let k3 = Multigraph::complete(2, 1, 1).unwrap();
        assert_eq!(k3.degree(1).unwrap(), 2);
        let lonely = Multigraph::from_edges(2, &[(0, 1, 1)]).unwrap();
        assert_eq!(lonely.degree(2).unwrap(), 0);
        assert!(matches!(k3.degree(3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn outgoing_edge_counts() {
        let k3 = Multigraph::complete(2, 1, 1).unwrap();
        assert_eq!(k3.d_s(&[1, 2], 1).unwrap(), 1);
        assert_eq!(two_components().d_s(&[3, 4], 3).unwrap(), 2);
        assert_eq!(k3.d_s(&[2], 2).unwrap(), k3.degree(2).unwrap());
        assert!(k3.d_s(&[], 1).is_err());
        assert!(k3.d_s(&[0, 1], 1).is_err());
        assert!(k3.d_s(&[2], 1).is_err());
    }

    #[test]
    fn truncated_matrices() {
        let k3 = Multigraph::complete(2, 1, 1).unwrap();
        assert_eq!(k3.signless_laplacian_truncated(), sym(&[&[2, 1], &[1, 2]]));
        assert_eq!(k3.laplacian_truncated(), sym(&[&[2, -1], &[-1, 2]]));
        let k4 = Multigraph::complete(3, 1, 1).unwrap();
        assert_eq!(
            k4.signless_laplacian_truncated(),
            sym(&[&[3, 1, 1], &[1, 3, 1], &[1, 1, 3]])
        );
        assert_eq!(
            k4.laplacian_truncated(),
            sym(&[&[3, -1, -1], &[-1, 3, -1], &[-1, -1, 3]])
        );
        let edge = Multigraph::complete(1, 1, 0).unwrap();
        assert_eq!(edge.laplacian_truncated(), sym(&[&[1]]));
    }

    #[test]
    fn essential_components_of_worked_example() {
        let comps = two_components().essential_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].labels, vec![1, 2]);
        assert_eq!(comps[1].labels, vec![3, 4, 5]);
        assert_eq!(comps[0].graph, Multigraph::complete(2, 1, 1).unwrap());
        assert_eq!(
            comps[1].graph.signless_laplacian_truncated(),
            sym(&[&[3, 1, 1], &[1, 3, 1], &[1, 1, 2]])
        );
    }

    #[test]
    fn essential_components_trivial_cases() {
        let k4 = Multigraph::complete(3, 1, 1).unwrap();
        let comps = k4.essential_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].graph, k4);

        let star = Multigraph::complete(3, 1, 0).unwrap();
        let comps = star.essential_components();
        assert_eq!(comps.len(), 3);
        for (k, c) in comps.iter().enumerate() {
            assert_eq!(c.labels, vec![k + 1]);
            assert_eq!(c.graph, Multigraph::complete(1, 1, 0).unwrap());
        }
    }

    #[test]
    fn invalid_adjacency() {
        assert!(Multigraph::from_adjacency(&[vec![0, 1], vec![2, 0]]).is_err());
        assert!(Multigraph::from_adjacency(&[vec![1, 1], vec![1, 0]]).is_err());
        assert!(Multigraph::from_edges(2, &[(1, 1, 1)]).is_err());
        assert!(Multigraph::from_edges(2, &[(1, 3, 1)]).is_err());
    }
}
