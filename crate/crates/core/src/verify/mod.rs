//! Checks of the equality `dim_K(R / M_G^(1)) = det Q~_G` and of the
//! structural conditions that predict it.
//!
//! The dimension side always dominates the determinant side; the interesting
//! question is when the two agree. [`check_equality`] computes both sides for
//! the whole graph and for each essentially connected component, and
//! [`classify_subgraph_of_ka1`] predicts the answer from the graph's shape
//! alone for subgraphs of `K_{n+1}^{a,1}`.

mod normal_form;
mod scan;
mod suites;
mod families;

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::multigraph::Multigraph;
use crate::skeleton::one_skeleton;

pub use normal_form::{CliqueNormalForm, NormalFormCondition};
pub use scan::{fingerprint, edge_hash, scan_family, Counterexample, ScanMode, ScanOptions, ScanReport, ScanRow};
pub use suites::{run_suite, SuiteOptions, SuiteReport, SUITES};
pub use families::{verify_block_join_equality, verify_uniform_offdiag_equality, MatrixCheck};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentVerdict {
    /// Original vertex names of the component.
    pub labels: Vec<usize>,
    pub std_count: BigUint,
    pub det: BigInt,
}

impl ComponentVerdict {
    pub fn equal(&self) -> bool {
        BigInt::from(self.std_count.clone()) == self.det
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityVerdict {
    pub std_count: BigUint,
    pub det_q: BigInt,
    pub equal: bool,
    pub per_component: Vec<ComponentVerdict>,
}

impl EqualityVerdict {
    /// The totals factor over the components on both sides.
    pub fn is_multiplicative(&self) -> bool {
        let count: BigUint = self.per_component.iter().map(|c| &c.std_count).product();
        let det: BigInt = self.per_component.iter().map(|c| &c.det).product();
        count == self.std_count && det == self.det_q
    }

    pub fn is_strict(&self) -> bool {
        BigInt::from(self.std_count.clone()) > self.det_q
    }
}

/// Dimension of `R / M_G^(1)` and its ideal.
pub fn one_skeleton_dimension(g: &Multigraph) -> Result<(MonomialIdeal, BigUint)> {
    let ideal = one_skeleton(g)?;
    let count = ideal.std_count_recursive()?;
    Ok((ideal, count))
}

/// Both sides of the equality, for the whole graph and per essentially
/// connected component. The totals are computed directly on `g`, not as
/// products of the component values.
pub fn check_equality(g: &Multigraph) -> Result<EqualityVerdict> {
    let (_, std_count) = one_skeleton_dimension(g)?;
    let det_q = g.signless_laplacian_truncated().determinant();
    let per_component = g
        .essential_components()
        .into_iter()
        .map(|c| {
            let (_, count) = one_skeleton_dimension(&c.graph)?;
            Ok(ComponentVerdict {
                labels: c.labels,
                std_count: count,
                det: c.graph.signless_laplacian_truncated().determinant(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let equal = BigInt::from(std_count.clone()) == det_q;
    Ok(EqualityVerdict {
        std_count,
        det_q,
        equal,
        per_component,
    })
}

/// Structural prediction for a subgraph of `K_{n+1}^{a,1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Predicted equality: `cliques`, or a zero-dimensional component.
    pub holds: bool,
    /// Every essentially connected component is a clique on its non-root
    /// vertices, i.e. a complete `K^{a_i,1}` with some rooted edges removed.
    pub cliques: bool,
    /// First non-adjacent pair inside a component, in original labels.
    pub witness: Option<(usize, usize)>,
    /// A component whose quotient is zero: a vertex with no edges at all, or
    /// two vertices joined only to each other. Its factor makes both sides
    /// vanish, so the equality holds whatever the other components are.
    pub zero_component: Option<Vec<usize>>,
}

/// Classifies a subgraph of `K_{n+1}^{a,1}` (inner multiplicities at most
/// one; rooted multiplicities are unrestricted since `a` is free).
pub fn classify_subgraph_of_ka1(g: &Multigraph) -> Result<Classification> {
    for (u, v, m) in g.edges() {
        if u > 0 && m > 1 {
            return Err(Error::NotSubgraphOfKa1 { u, v, multiplicity: m });
        }
    }
    let mut witness = None;
    let mut zero_component = None;
    for comp in g.inner_components() {
        if witness.is_none() {
            witness = first_missing_pair(g, &comp);
        }
        if zero_component.is_none() && is_zero_component(g, &comp) {
            zero_component = Some(comp);
        }
    }
    let cliques = witness.is_none();
    Ok(Classification {
        holds: cliques || zero_component.is_some(),
        cliques,
        witness,
        zero_component,
    })
}

fn first_missing_pair(g: &Multigraph, comp: &[usize]) -> Option<(usize, usize)> {
    comp.iter().enumerate().find_map(|(k, &u)| {
        comp[k + 1..]
            .iter()
            .find(|&&v| g.multiplicity(u, v) == 0)
            .map(|&v| (u, v))
    })
}

/// One or two vertices with no rooted edges: the component's one-skeleton
/// ideal contains `1`.
fn is_zero_component(g: &Multigraph, comp: &[usize]) -> bool {
    comp.len() <= 2 && comp.iter().all(|&v| g.rooted(v) == 0)
}
