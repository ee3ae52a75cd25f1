//! Brute-force subgraph census on labeled edges.
//!
//! Parallel edges are distinguishable here: a double edge contributes two
//! labels, and choosing either copy yields a different subgraph. This is the
//! convention under which the Matrix-Tree theorem counts spanning trees of a
//! multigraph, and the one used for spanning TU-subgraphs as well.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::{Monomial, DEFAULT_MAX_BOX};
use crate::multigraph::Multigraph;
use crate::skeleton::parking_ideal;

/// Default cap on the number of labeled edges for `2^E` subset scans.
pub const DEFAULT_MAX_EDGES: usize = 18;

/// Subsets per parallel work unit (the low bits of the subset mask).
const BLOCK_BITS: usize = 10;

/// Labeled edges of a multigraph; parallel copies appear as distinct labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn from_graph(g: &Multigraph) -> Self {
        let mut edges = Vec::with_capacity(g.edge_count() as usize);
        for (u, v, m) in g.edges() {
            for _ in 0..m {
                edges.push((u, v));
            }
        }
        Self {
            vertices: g.n() + 1,
            edges,
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Rebuilds the multigraph by counting labels per vertex pair.
    pub fn to_graph(&self) -> Multigraph {
        let mut g = Multigraph::empty(self.vertices - 1).expect("at least one non-root vertex");
        for &(u, v) in &self.edges {
            g.add_edges(u, v, 1).expect("labels come from a valid graph");
        }
        g
    }
}

/// Census of spanning TU-subgraphs by number of unicyclic components.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TuReport {
    /// `census[c]` = number of qualifying subgraphs with `c` unicyclic
    /// components.
    pub census: BTreeMap<usize, u64>,
    pub weighted_sum: BigUint,
}

impl TuReport {
    pub fn from_census(census: BTreeMap<usize, u64>) -> Self {
        let weighted_sum = census
            .iter()
            .map(|(&c, &k)| BigUint::from(4u32).pow(c as u32) * k)
            .sum();
        Self {
            census,
            weighted_sum,
        }
    }

    pub fn total(&self) -> u64 {
        self.census.values().sum()
    }
}

impl fmt::Display for TuReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.census.iter().map(|(c, k)| format!("c={c}:{k}")).collect();
        write!(f, "{}, weighted {}", rows.join(", "), self.weighted_sum)
    }
}

/// Number of spanning trees, via the Matrix-Tree theorem.
pub fn spanning_trees_count(g: &Multigraph) -> BigInt {
    g.laplacian_truncated().determinant()
}

/// Number of spanning trees by trying every `n`-edge labeled subset.
pub fn spanning_trees_enumerate(g: &Multigraph) -> Result<u64> {
    spanning_trees_enumerate_within(g, DEFAULT_MAX_EDGES)
}

pub fn spanning_trees_enumerate_within(g: &Multigraph, max_edges: usize) -> Result<u64> {
    let list = guard(g, max_edges)?;
    let e = list.len();
    let need = g.n() as u32;
    Ok((0u64..(1u64 << e))
        .into_par_iter()
        .filter(|mask| mask.count_ones() == need)
        .filter(|&mask| {
            let mut uf = ParityForest::new(list.vertices);
            list.edges
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .all(|(_, &(u, v))| uf.union(u, v) == Join::Merged)
        })
        .count() as u64)
}

fn guard(g: &Multigraph, max_edges: usize) -> Result<EdgeList> {
    let list = EdgeList::from_graph(g);
    if list.len() > max_edges || list.len() >= 64 {
        return Err(Error::TooManyEdges {
            edges: list.len(),
            limit: max_edges.min(63),
        });
    }
    Ok(list)
}

/// Census of spanning TU-subgraphs: every vertex is covered (isolated
/// vertices count as one-vertex trees), exactly one component is a tree and
/// it contains the root, and every other component is unicyclic with an odd
/// cycle.
pub fn tu_enumerate(g: &Multigraph) -> Result<TuReport> {
    tu_enumerate_within(g, DEFAULT_MAX_EDGES)
}

pub fn tu_enumerate_within(g: &Multigraph, max_edges: usize) -> Result<TuReport> {
    let list = guard(g, max_edges)?;
    let e = list.len();
    let low = e.min(BLOCK_BITS);
    let blocks = 1u64 << (e - low);
    let census = (0..blocks)
        .into_par_iter()
        .map(|hi| {
            let mut local = BTreeMap::new();
            for lo in 0..(1u64 << low) {
                let mask = hi << low | lo;
                if let Some(c) = classify_subset(&list, mask) {
                    *local.entry(c).or_insert(0u64) += 1;
                }
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (c, k) in b {
                *a.entry(c).or_insert(0) += k;
            }
            a
        });
    Ok(TuReport::from_census(census))
}

/// Unicyclic-component count if the masked edges form a qualifying spanning
/// TU-subgraph.
fn classify_subset(list: &EdgeList, mask: u64) -> Option<usize> {
    let mut uf = ParityForest::new(list.vertices);
    for (k, &(u, v)) in list.edges.iter().enumerate() {
        if mask >> k & 1 == 1 {
            uf.union(u, v);
        }
    }
    let root0 = uf.find(0).0;
    let mut unicyclic = 0;
    for r in 0..list.vertices {
        if uf.parent[r] != r {
            continue;
        }
        let (size, edges) = (uf.size[r], uf.edges[r]);
        if r == root0 {
            if edges + 1 != size {
                return None;
            }
        } else if edges == size && uf.odd[r] {
            unicyclic += 1;
        } else {
            return None;
        }
    }
    Some(unicyclic)
}

#[derive(Debug, PartialEq, Eq)]
enum Join {
    Merged,
    Cycle,
}

/// Union-find that also tracks each vertex's parity relative to its root, so
/// an edge closing an odd cycle is detected on insertion.
struct ParityForest {
    parent: Vec<usize>,
    parity: Vec<bool>,
    size: Vec<usize>,
    edges: Vec<usize>,
    odd: Vec<bool>,
}

impl ParityForest {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            parity: vec![false; n],
            size: vec![1; n],
            edges: vec![0; n],
            odd: vec![false; n],
        }
    }

    fn find(&mut self, v: usize) -> (usize, bool) {
        let p = self.parent[v];
        if p == v {
            return (v, false);
        }
        let (root, par) = self.find(p);
        self.parent[v] = root;
        self.parity[v] ^= par;
        (root, self.parity[v])
    }

    fn union(&mut self, u: usize, v: usize) -> Join {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            self.edges[ru] += 1;
            // endpoints on the same side: the new edge closes an odd cycle
            if pu == pv {
                self.odd[ru] = true;
            }
            return Join::Cycle;
        }
        let (big, small) = if self.size[ru] >= self.size[rv] {
            (ru, rv)
        } else {
            (rv, ru)
        };
        self.parent[small] = big;
        self.parity[small] = pu == pv;
        self.size[big] += self.size[small];
        self.edges[big] += self.edges[small] + 1;
        self.odd[big] |= self.odd[small];
        Join::Merged
    }
}

/// G-parking functions: exponent vectors of the standard monomials of `M_G`.
pub fn parking_functions(g: &Multigraph) -> Result<Vec<Monomial>> {
    parking_functions_within(g, DEFAULT_MAX_BOX)
}

pub fn parking_functions_within(g: &Multigraph, max_box: u128) -> Result<Vec<Monomial>> {
    parking_ideal(g)?.std_enumerate_within(max_box)
}
