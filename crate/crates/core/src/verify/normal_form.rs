//! Clique normal form of an essentially connected multigraph.
//!
//! Pick a heaviest inner pair (multiplicity `b`), then greedily grow a clique
//! whose pairs all carry exactly `b` edges; the clique vertices come first,
//! the rest follow in ascending order. In that order `Q~_G` has the block
//! shape
//!
//! ```text
//! [ alpha_i   b    | d_{i,j} ]
//! [   b    alpha_k | d_{k,j} ]
//! [ ---------------+------- ]
//! [ d_{i,j}        | beta_j  c_{j,l} ]
//! ```
//!
//! and a column `j` of the cross block with two different entries forces
//! `dim_K(R / M_G^(1)) > det Q~_G`, provided the conditions checked by
//! [`CliqueNormalForm::violated_conditions`] hold and `m >= 1`.

use std::fmt;

use crate::matrix::SymMatrix;
use crate::multigraph::Multigraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueNormalForm {
    /// Original vertex names in normal-form order: clique first.
    pub order: Vec<usize>,
    /// Number of clique vertices (`n` in the block picture).
    pub clique_size: usize,
    /// Multiplicity on every clique pair.
    pub b: u64,
    /// `Q~_G` permuted into normal-form order.
    pub matrix: SymMatrix,
}

/// The side conditions on the block shape, one per labeled inequality group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormalFormCondition {
    /// `alpha_i >= b >= 1`, `b >= d_{i,j}`, `beta_j >= 1`, `beta_j >= d_{i,j}`.
    Bounds,
    /// `beta_i >= c_{i,j}` and `b >= c_{i,j}`.
    OuterBounds,
    /// No two clique vertices both have `alpha = b`.
    CliqueSeparated,
    /// No outer pair has `beta_i = c_{i,j} = beta_j`.
    OuterSeparated,
    /// No clique/outer pair has `alpha_i = d_{i,j} = beta_j`.
    CrossSeparated,
    /// Every outer column has some entry different from `b`.
    Maximal,
}

impl fmt::Display for NormalFormCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Bounds => "bounds",
            Self::OuterBounds => "outer-bounds",
            Self::CliqueSeparated => "clique-separated",
            Self::OuterSeparated => "outer-separated",
            Self::CrossSeparated => "cross-separated",
            Self::Maximal => "maximal",
        };
        f.write_str(s)
    }
}

impl CliqueNormalForm {
    /// `None` unless the graph is essentially connected with at least two
    /// non-root vertices.
    pub fn of(g: &Multigraph) -> Option<Self> {
        let n = g.n();
        if n < 2 || !g.is_essentially_connected() {
            return None;
        }
        let mut best = (0u64, 0usize, 0usize);
        for i in 1..=n {
            for j in (i + 1)..=n {
                let m = g.multiplicity(i, j);
                if m > best.0 {
                    best = (m, i, j);
                }
            }
        }
        let (b, first, second) = best;
        let mut clique = vec![first, second];
        while let Some(v) = (1..=n)
            .find(|v| !clique.contains(v) && clique.iter().all(|&c| g.multiplicity(*v, c) == b))
        {
            clique.push(v);
        }
        let clique_size = clique.len();
        let rest: Vec<usize> = (1..=n).filter(|v| !clique.contains(v)).collect();
        let mut order = clique;
        order.extend(rest);
        let q = g.signless_laplacian_truncated();
        let matrix = SymMatrix::from_fn(n, |i, j| q.get(order[i] - 1, order[j] - 1));
        Some(Self {
            order,
            clique_size,
            b,
            matrix,
        })
    }

    /// Number of vertices outside the clique (`m` in the block picture).
    pub fn outer_size(&self) -> usize {
        self.order.len() - self.clique_size
    }

    fn alpha(&self, i: usize) -> i64 {
        self.matrix.get(i, i)
    }

    fn beta(&self, j: usize) -> i64 {
        let k = self.clique_size + j;
        self.matrix.get(k, k)
    }

    fn d(&self, i: usize, j: usize) -> i64 {
        self.matrix.get(i, self.clique_size + j)
    }

    fn c(&self, i: usize, j: usize) -> i64 {
        self.matrix.get(self.clique_size + i, self.clique_size + j)
    }

    pub fn violated_conditions(&self) -> Vec<NormalFormCondition> {
        use NormalFormCondition::*;
        let (n, m) = (self.clique_size, self.outer_size());
        let b = self.b as i64;
        let mut out = Vec::new();

        let bounds = b >= 1
            && (0..n).all(|i| self.alpha(i) >= b)
            && (0..m).all(|j| {
                self.beta(j) >= 1 && (0..n).all(|i| b >= self.d(i, j) && self.beta(j) >= self.d(i, j))
            });
        if !bounds {
            out.push(Bounds);
        }
        let outer_pairs = || (0..m).flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)));
        if !outer_pairs().all(|(i, j)| self.beta(i) >= self.c(i, j) && b >= self.c(i, j)) {
            out.push(OuterBounds);
        }
        let clique_ok = (0..n).all(|i| {
            (0..n).all(|j| i == j || self.alpha(i) > b || self.alpha(j) > b)
        });
        if !clique_ok {
            out.push(CliqueSeparated);
        }
        if !outer_pairs().all(|(i, j)| self.beta(i) > self.c(i, j) || self.beta(j) > self.c(i, j)) {
            out.push(OuterSeparated);
        }
        let cross_ok = (0..n).all(|i| {
            (0..m).all(|j| self.alpha(i) > self.d(i, j) || self.beta(j) > self.d(i, j))
        });
        if !cross_ok {
            out.push(CrossSeparated);
        }
        if !(0..m).all(|j| (0..n).any(|i| self.d(i, j) != b)) {
            out.push(Maximal);
        }
        out
    }

    /// First outer column whose cross entries differ, as
    /// `(column, clique row r, clique row s)` with `d_{r,j} != d_{s,j}`.
    pub fn unequal_cross_column(&self) -> Option<(usize, usize, usize)> {
        (0..self.outer_size()).find_map(|j| {
            let first = self.d(0, j);
            (1..self.clique_size)
                .find(|&s| self.d(s, j) != first)
                .map(|s| (j, 0, s))
        })
    }

    /// True when the block-shape argument applies and predicts a strict
    /// inequality: some outer vertex exists, every side condition holds, and
    /// some cross column is non-constant. (`Q~_G` is always positive
    /// semidefinite, so no further hypothesis is needed for graphs.)
    pub fn predicts_strict(&self) -> bool {
        self.outer_size() >= 1
            && self.violated_conditions().is_empty()
            && self.unequal_cross_column().is_some()
    }
}
