//! Ideals attached to rooted multigraphs and to matrices in `G_n`.
//!
//! For a nonempty set `S` of non-root vertices, `m_S` is the monomial
//! `prod_{i in S} x_i^{d_S(i)}`. The G-parking function ideal `M_G` is
//! generated by all `m_S`; the k-skeleton ideal `M_G^(k)` keeps only the
//! sets with `|S| <= k + 1`. For `H` in `G_n`, `J_H` is generated by the
//! pure powers `x_t^{h_tt}` and the pair monomials
//! `x_i^{h_ii - h_ij} x_j^{h_jj - h_ij}`.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::matrix::GnMatrix;
use crate::multigraph::Multigraph;

/// Largest vertex count for which all `2^n - 1` subsets are expanded.
pub const MAX_SUBSET_VERTICES: usize = 20;

/// Cap on the number of subsets a skeleton ideal may expand.
pub const MAX_SKELETON_SUBSETS: u128 = 1 << 20;

/// The G-parking function ideal `M_G`.
///
/// Subsets are visited in Gray-code order so each step toggles one vertex
/// and the per-vertex "edges into S" tallies update in `O(n)`.
pub fn parking_ideal(g: &Multigraph) -> Result<MonomialIdeal> {
    let n = g.n();
    if n > MAX_SUBSET_VERTICES {
        return Err(Error::TooManySubsets {
            what: "parking ideal",
            count: (1u128 << n) - 1,
            limit: (1u128 << MAX_SUBSET_VERTICES) - 1,
        });
    }
    let degree: Vec<u64> = (0..=n).map(|i| g.degree(i).expect("in range")).collect();
    let mut in_s = vec![false; n + 1];
    // into_s[i] = number of edges from i into the current S
    let mut into_s = vec![0u64; n + 1];
    let mut gens = Vec::with_capacity((1usize << n) - 1);
    for step in 1u64..(1u64 << n) {
        let v = step.trailing_zeros() as usize + 1;
        in_s[v] = !in_s[v];
        for (i, tally) in into_s.iter_mut().enumerate() {
            let m = g.multiplicity(i, v);
            if in_s[v] {
                *tally += m;
            } else {
                *tally -= m;
            }
        }
        let exps = (1..=n)
            .map(|i| {
                if in_s[i] {
                    (degree[i] - into_s[i]) as u32
                } else {
                    0
                }
            })
            .collect();
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::minimalize(n, gens)
}

/// `m_S` for an explicit subset.
pub fn subset_monomial(g: &Multigraph, subset: &[usize]) -> Result<Monomial> {
    let mut exps = vec![0u32; g.n()];
    for &i in subset {
        exps[i - 1] = g.d_s(subset, i)? as u32;
    }
    Ok(Monomial::new(exps))
}

/// The k-skeleton ideal `M_G^(k)`, generated by `m_S` with
/// `1 <= |S| <= k + 1`. Requires `k <= n - 1`; `k = n - 1` gives `M_G`.
pub fn skeleton_ideal(g: &Multigraph, k: usize) -> Result<MonomialIdeal> {
    let n = g.n();
    if k > n - 1 {
        return Err(Error::SkeletonIndex { k, max: n - 1 });
    }
    let count: u128 = (1..=k + 1).map(|s| binomial(n, s)).sum();
    if count > MAX_SKELETON_SUBSETS {
        return Err(Error::TooManySubsets {
            what: "skeleton ideal",
            count,
            limit: MAX_SKELETON_SUBSETS,
        });
    }
    let mut gens = Vec::with_capacity(count as usize);
    for size in 1..=k + 1 {
        for subset in (1..=n).combinations(size) {
            gens.push(subset_monomial(g, &subset)?);
        }
    }
    MonomialIdeal::minimalize(n, gens)
}

/// `M_G^(1)`, clamped to `M_G^(0)` when the graph has a single non-root
/// vertex.
pub fn one_skeleton(g: &Multigraph) -> Result<MonomialIdeal> {
    skeleton_ideal(g, 1.min(g.n() - 1))
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// The ideal `J_H` of a matrix in `G_n`.
pub fn matrix_ideal(h: &GnMatrix) -> MonomialIdeal {
    let t = h.order();
    let mut gens = Vec::with_capacity(t + t * t.saturating_sub(1) / 2);
    for i in 0..t {
        gens.push(Monomial::pure_power(t, i, h.diag(i) as u32));
    }
    for (i, j) in (0..t).tuple_combinations() {
        let off = h.entry(i, j);
        let mut a = vec![0u32; t];
        a[i] = (h.diag(i) - off) as u32;
        a[j] = (h.diag(j) - off) as u32;
        gens.push(Monomial::new(a));
    }
    MonomialIdeal::minimalize(t, gens).expect("exponent vectors have the matrix order")
}
