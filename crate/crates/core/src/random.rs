//! Seeded generators for the randomized checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::ideal::{Monomial, MonomialIdeal};
use crate::matrix::{build_block_join, build_uniform_offdiag, GnMatrix, JoinBlock, SymMatrix};
use crate::multigraph::Multigraph;

/// Multigraph with `1..=max_n` non-root vertices and each pair's
/// multiplicity uniform in `0..=max_mult`.
pub fn multigraph<R: Rng>(rng: &mut R, max_n: usize, max_mult: u64) -> Multigraph {
    let n = rng.gen_range(1..=max_n);
    let mut g = Multigraph::empty(n).expect("n >= 1");
    for u in 0..=n {
        for v in (u + 1)..=n {
            g.add_edges(u, v, rng.gen_range(0..=max_mult)).expect("in range");
        }
    }
    g
}

/// Like [`multigraph`], resampled until the labeled edge count is at most
/// `max_edges`.
pub fn multigraph_with_edges<R: Rng>(
    rng: &mut R,
    max_n: usize,
    max_mult: u64,
    max_edges: u64,
) -> Multigraph {
    loop {
        let g = multigraph(rng, max_n, max_mult);
        if g.edge_count() <= max_edges {
            return g;
        }
    }
}

/// Random positive semidefinite member of `G_n` with `n <= max_n` and
/// entries in `0..=max_entry`, by rejection.
pub fn psd_gn<R: Rng>(rng: &mut R, max_n: usize, max_entry: i64) -> GnMatrix {
    loop {
        let t = rng.gen_range(1..=max_n);
        let mut off = vec![0i64; t * t];
        for i in 0..t {
            for j in (i + 1)..t {
                let v = rng.gen_range(0..=max_entry);
                off[i * t + j] = v;
                off[j * t + i] = v;
            }
        }
        let diag: Vec<i64> = (0..t)
            .map(|i| {
                let floor = (0..t).map(|j| off[i * t + j]).max().unwrap_or(0);
                rng.gen_range(floor..=max_entry)
            })
            .collect();
        let m = SymMatrix::from_fn(t, |i, j| if i == j { diag[i] } else { off[i * t + j] });
        if m.is_positive_semidefinite().expect("small order") {
            return GnMatrix::new(m).expect("diagonal dominates by construction");
        }
    }
}

/// Random admissible `(diag, off)` pair with `diag[i] >= off`, order
/// `1..=max_n`, values at most `max_val`.
pub fn uniform_offdiag<R: Rng>(rng: &mut R, max_n: usize, max_val: u64) -> (Vec<u64>, u64) {
    let n = rng.gen_range(1..=max_n);
    let b = rng.gen_range(0..=max_val);
    let diag = (0..n).map(|_| rng.gen_range(b..=max_val)).collect();
    (diag, b)
}

/// Random block-join data satisfying the admissibility chain, total order at
/// most `max_n`, values at most `max_val`.
pub fn block_join<R: Rng>(rng: &mut R, max_n: usize, max_val: u64) -> (Vec<JoinBlock>, Vec<u64>) {
    let total = rng.gen_range(1..=max_n);
    // split `total` into a random composition
    let mut sizes = Vec::new();
    let mut left = total;
    while left > 0 {
        let s = rng.gen_range(1..=left);
        sizes.push(s);
        left -= s;
    }
    let r = sizes.len();
    let mut cross: Vec<u64> = (0..r.saturating_sub(1)).map(|_| rng.gen_range(0..=max_val)).collect();
    cross.sort_unstable_by(|a, b| b.cmp(a));
    let blocks: Vec<JoinBlock> = sizes
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let floor = if i == 0 {
                cross.first().copied().unwrap_or(0)
            } else {
                cross[i - 1]
            };
            let b = rng.gen_range(floor..=max_val);
            let diag = (0..s).map(|_| rng.gen_range(b..=max_val)).collect();
            JoinBlock::new(diag, b)
        })
        .collect();
    debug_assert!(build_block_join(&blocks, &cross).is_ok());
    (blocks, cross)
}

/// Random uniform-off-diagonal matrix, already built.
pub fn uniform_offdiag_matrix<R: Rng>(rng: &mut R, max_n: usize, max_val: u64) -> GnMatrix {
    let (diag, b) = uniform_offdiag(rng, max_n, max_val);
    build_uniform_offdiag(&diag, b).expect("admissible by construction")
}

/// Random Artinian monomial ideal: a pure power of every variable with
/// exponent in `1..=max_exp`, plus up to `2 * nvars` further random
/// monomials with exponents in `0..=max_exp`.
pub fn artinian_ideal<R: Rng>(rng: &mut R, max_vars: usize, max_exp: u32) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_vars);
    let mut gens: Vec<Monomial> = (0..n)
        .map(|i| Monomial::pure_power(n, i, rng.gen_range(1..=max_exp)))
        .collect();
    let extra = rng.gen_range(0..=2 * n);
    for _ in 0..extra {
        let a = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        gens.push(Monomial::new(a));
    }
    gens.shuffle(rng);
    MonomialIdeal::minimalize(n, gens).expect("consistent lengths")
}

/// Every labeled simple connected graph on `{0..=n}` for `1 <= n` and
/// `n + 1 <= max_vertices`.
pub fn all_simple_connected(max_vertices: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..max_vertices {
        let pairs: Vec<(usize, usize)> = (0..=n)
            .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<(usize, usize, u64)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &(u, v))| (u, v, 1))
                .collect();
            let g = Multigraph::from_edges(n, &edges).expect("valid pairs");
            if is_connected(&g) {
                out.push(g);
            }
        }
    }
    out
}

/// Connectivity of the whole graph, root included.
pub fn is_connected(g: &Multigraph) -> bool {
    let n = g.n();
    let mut seen = vec![false; n + 1];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for v in 0..=n {
            if !seen[v] && g.multiplicity(u, v) > 0 {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
