//! Exact integer linear algebra for the small symmetric matrices that show up
//! as truncated (signless) Laplacians and as abstract members of `G_n`.
//!
//! Everything here is exact: determinants are computed by fraction-free
//! (Bareiss) elimination in arbitrary-precision integers, and positive
//! semidefiniteness is decided by checking every principal minor.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest order accepted by [`SymMatrix::is_positive_semidefinite`]; the
/// check evaluates `2^order` principal minors.
pub const PSD_ORDER_LIMIT: usize = 20;

/// A square symmetric matrix with (possibly negative) integer entries, stored
/// row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl SymMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(Error::NotSquare {
                    rows: order,
                    row,
                    len: r.len(),
                });
            }
            entries.extend_from_slice(r);
        }
        Self::from_flat(order, entries)
    }

    pub fn from_flat(order: usize, entries: Vec<i64>) -> Result<Self> {
        assert_eq!(entries.len(), order * order, "flat storage size");
        for i in 0..order {
            for j in (i + 1)..order {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { order, entries })
    }

    /// Builds a matrix from an entry function evaluated on the upper triangle.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut entries = vec![0; order * order];
        for i in 0..order {
            for j in i..order {
                let v = f(i, j);
                entries[i * order + j] = v;
                entries[j * order + i] = v;
            }
        }
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.order.max(1))
            .take(self.order)
            .map(<[i64]>::to_vec)
            .collect()
    }

    /// Principal submatrix on the given (ascending) index set.
    pub fn principal(&self, indices: &[usize]) -> SymMatrix {
        SymMatrix::from_fn(indices.len(), |a, b| self.get(indices[a], indices[b]))
    }

    /// Submatrix obtained by deleting row and column `k`.
    pub fn delete(&self, k: usize) -> SymMatrix {
        let keep: Vec<usize> = (0..self.order).filter(|&i| i != k).collect();
        self.principal(&keep)
    }

    pub fn determinant(&self) -> BigInt {
        determinant(self.order, &self.entries)
    }

    /// True iff every principal minor is nonnegative.
    ///
    /// Runs over all `2^order` index subsets, so the order is capped at
    /// [`PSD_ORDER_LIMIT`].
    pub fn is_positive_semidefinite(&self) -> Result<bool> {
        if self.order > PSD_ORDER_LIMIT {
            return Err(Error::OrderTooLarge {
                order: self.order,
                limit: PSD_ORDER_LIMIT,
            });
        }
        // a negative diagonal entry is a 1x1 minor; catch it before the scan
        if (0..self.order).any(|i| self.get(i, i) < 0) {
            return Ok(false);
        }
        let subsets = 1u64 << self.order;
        Ok((1..subsets).into_par_iter().all(|mask| {
            let idx: Vec<usize> = (0..self.order).filter(|&i| mask >> i & 1 == 1).collect();
            !self.principal(&idx).determinant().is_negative()
        }))
    }

    /// Membership in `G_n`: nonnegative, symmetric, and each diagonal entry
    /// dominates every off-diagonal entry of its row.
    pub fn in_gn(&self) -> bool {
        self.gn_violation().is_none()
    }

    pub(crate) fn gn_violation(&self) -> Option<String> {
        for i in 0..self.order {
            for j in 0..self.order {
                let v = self.get(i, j);
                if v < 0 {
                    return Some(format!("entry ({i}, {j}) = {v} is negative"));
                }
                if i != j && v > self.get(i, i) {
                    return Some(format!(
                        "row {i}: off-diagonal entry ({i}, {j}) = {v} exceeds diagonal {}",
                        self.get(i, i)
                    ));
                }
            }
        }
        None
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Exact determinant of a square row-major integer matrix, by Bareiss
/// fraction-free elimination. Works for any square matrix, symmetric or not.
pub fn determinant(order: usize, entries: &[i64]) -> BigInt {
    assert_eq!(entries.len(), order * order, "flat storage size");
    if order == 0 {
        return BigInt::from(1);
    }
    let mut m: Vec<Vec<BigInt>> = entries
        .chunks(order)
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..order - 1 {
        if m[k][k].is_zero() {
            match (k + 1..order).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..order {
            for j in k + 1..order {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // exact by Sylvester's identity
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[order - 1][order - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// A matrix known to lie in `G_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GnMatrix(SymMatrix);

impl GnMatrix {
    pub fn new(m: SymMatrix) -> Result<Self> {
        match m.gn_violation() {
            Some(why) => Err(Error::NotInGn(why)),
            None => Ok(Self(m)),
        }
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.0
    }

    pub fn into_inner(self) -> SymMatrix {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    /// Diagonal entry `alpha_i`, always nonnegative.
    pub fn diag(&self, i: usize) -> u64 {
        self.0.get(i, i) as u64
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.0.get(i, j) as u64
    }

    pub fn determinant(&self) -> BigInt {
        self.0.determinant()
    }
}

/// The matrix with the given diagonal and every off-diagonal entry equal to
/// `off`. Requires each diagonal entry to be at least `off`.
pub fn build_uniform_offdiag(diag: &[u64], off: u64) -> Result<GnMatrix> {
    if let Some((i, a)) = diag.iter().enumerate().find(|(_, &a)| a < off) {
        return Err(Error::Hypothesis(format!(
            "diagonal entry {i} is {a}, below the off-diagonal value {off}"
        )));
    }
    let m = SymMatrix::from_fn(diag.len(), |i, j| {
        if i == j {
            diag[i] as i64
        } else {
            off as i64
        }
    });
    GnMatrix::new(m)
}

/// One diagonal block of a block-join matrix: its diagonal entries and the
/// uniform value inside the block. The inner value may be omitted only for a
/// one-vertex block, where it never appears in the matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinBlock {
    pub diag: Vec<u64>,
    pub inner: Option<u64>,
}

impl JoinBlock {
    pub fn new(diag: Vec<u64>, inner: u64) -> Self {
        Self {
            diag,
            inner: Some(inner),
        }
    }

    pub fn single(alpha: u64) -> Self {
        Self {
            diag: vec![alpha],
            inner: None,
        }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }
}

/// Builds the block-join matrix: diagonal blocks with uniform off-diagonal
/// `inner`, and the block between blocks `s < t` constant `cross[t - 1]`
/// (zero-based: `cross[t-1]` joins block `t` to every earlier block).
///
/// Checks the admissibility chain `inner_1 >= cross_1`,
/// `inner_i >= cross_{i-1}`, `cross_i >= cross_{i+1}` and
/// `alpha >= inner` in each block, naming the first failure.
pub fn build_block_join(blocks: &[JoinBlock], cross: &[u64]) -> Result<GnMatrix> {
    if blocks.is_empty() {
        return Err(Error::Hypothesis("at least one block is required".into()));
    }
    if cross.len() + 1 != blocks.len() {
        return Err(Error::Hypothesis(format!(
            "{} blocks need {} cross values, got {}",
            blocks.len(),
            blocks.len() - 1,
            cross.len()
        )));
    }
    for (i, blk) in blocks.iter().enumerate() {
        let k = i + 1;
        if blk.is_empty() {
            return Err(Error::Hypothesis(format!("block {k} is empty")));
        }
        let inner = match (blk.inner, blk.len()) {
            (Some(b), _) => b,
            (None, 1) => blk.diag[0],
            (None, _) => {
                return Err(Error::Hypothesis(format!(
                    "block {k} has {} vertices but no inner value",
                    blk.len()
                )))
            }
        };
        if let Some((j, a)) = blk.diag.iter().enumerate().find(|(_, &a)| a < inner) {
            return Err(Error::Hypothesis(format!(
                "alpha_{{{k},{}}} = {a} < b_{k} = {inner}",
                j + 1
            )));
        }
        // b_1 >= d_1 and b_i >= d_{i-1}
        let bound = if i == 0 { cross.first() } else { cross.get(i - 1) };
        if let Some(&d) = bound {
            if inner < d {
                let di = if i == 0 { 1 } else { i };
                return Err(Error::Hypothesis(format!("b_{k} = {inner} < d_{di} = {d}")));
            }
        }
    }
    for (i, w) in cross.windows(2).enumerate() {
        if w[0] < w[1] {
            return Err(Error::Hypothesis(format!(
                "d_{} = {} < d_{} = {}",
                i + 1,
                w[0],
                i + 2,
                w[1]
            )));
        }
    }

    let mut owner = Vec::new();
    let mut diag = Vec::new();
    for (bi, blk) in blocks.iter().enumerate() {
        for &a in &blk.diag {
            owner.push(bi);
            diag.push(a);
        }
    }
    let m = SymMatrix::from_fn(diag.len(), |i, j| {
        let (s, t) = (owner[i], owner[j]);
        if i == j {
            diag[i] as i64
        } else if s == t {
            blocks[s].inner.unwrap_or(0) as i64
        } else {
            cross[s.max(t) - 1] as i64
        }
    });
    GnMatrix::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(m(&[&[2, 1], &[1, 2]]).determinant(), BigInt::from(3));
        assert_eq!(
            m(&[&[3, 1, 1], &[1, 3, 1], &[1, 1, 3]]).determinant(),
            BigInt::from(20)
        );
        // a1*a2 - b^2 with (3, 2, 1)
        assert_eq!(m(&[&[3, 1], &[1, 2]]).determinant(), BigInt::from(5));
        assert_eq!(SymMatrix::from_fn(0, |_, _| 0).determinant(), BigInt::from(1));
    }

    #[test]
    fn determinant_needs_pivoting() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(
            m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]).determinant(),
            BigInt::from(-1)
        );
        assert_eq!(m(&[&[0, 0], &[0, 5]]).determinant(), BigInt::zero());
    }

    #[test]
    fn psd_examples() {
        assert!(m(&[&[2, 1], &[1, 2]]).is_positive_semidefinite().unwrap());
        assert!(!m(&[&[1, 2], &[2, 1]]).is_positive_semidefinite().unwrap());
        // det 0 but singular PSD
        assert!(m(&[&[1, 1], &[1, 1]]).is_positive_semidefinite().unwrap());
        // leading minors nonnegative, but a 1x1 minor is negative
        assert!(!m(&[&[0, 0], &[0, -1]]).is_positive_semidefinite().unwrap());
    }

    #[test]
    fn psd_order_limit() {
        let big = SymMatrix::from_fn(21, |i, j| (i == j) as i64);
        assert!(matches!(
            big.is_positive_semidefinite(),
            Err(Error::OrderTooLarge { order: 21, limit: 20 })
        ));
    }

    #[test]
    fn gn_membership() {
        assert!(m(&[&[2, 1], &[1, 2]]).in_gn());
        assert!(!m(&[&[1, 2], &[2, 3]]).in_gn());
        assert!(!m(&[&[2, -1], &[-1, 2]]).in_gn());
    }

    #[test]
    fn asymmetric_rejected() {
        assert_eq!(
            SymMatrix::from_rows(&[vec![1, 2], vec![3, 1]]),
            Err(Error::NotSymmetric { row: 0, col: 1 })
        );
        assert!(matches!(
            SymMatrix::from_rows(&[vec![1, 2], vec![3]]),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn uniform_offdiag() {
        let h = build_uniform_offdiag(&[3, 2], 1).unwrap();
        assert_eq!(h.matrix(), &m(&[&[3, 1], &[1, 2]]));
        let flat = build_uniform_offdiag(&[2, 2, 2], 2).unwrap();
        assert!(flat.determinant().is_zero());
        assert!(build_uniform_offdiag(&[3, 0], 1).is_err());
    }

    #[test]
    fn block_join_expands() {
        let h = build_block_join(
            &[JoinBlock::new(vec![3, 3], 1), JoinBlock::single(3)],
            &[1],
        )
        .unwrap();
        assert_eq!(h.matrix(), &m(&[&[3, 1, 1], &[1, 3, 1], &[1, 1, 3]]));

        let one = build_block_join(&[JoinBlock::new(vec![4, 3, 2], 2)], &[]).unwrap();
        assert_eq!(one, build_uniform_offdiag(&[4, 3, 2], 2).unwrap());
    }

    #[test]
    fn block_join_cross_pattern() {
        // three blocks: cross between 1-2 is d_1, both 1-3 and 2-3 are d_2
        let h = build_block_join(
            &[
                JoinBlock::single(5),
                JoinBlock::single(5),
                JoinBlock::single(5),
            ],
            &[3, 1],
        )
        .unwrap();
        assert_eq!(h.matrix(), &m(&[&[5, 3, 1], &[3, 5, 1], &[1, 1, 5]]));
    }

    #[test]
    fn block_join_names_failed_hypothesis() {
        let err = build_block_join(
            &[JoinBlock::new(vec![3, 3], 1), JoinBlock::new(vec![3, 3], 2)],
            &[2],
        )
        .unwrap_err();
        assert_eq!(err, Error::Hypothesis("b_1 = 1 < d_1 = 2".into()));

        let err = build_block_join(
            &[
                JoinBlock::new(vec![4, 4], 3),
                JoinBlock::new(vec![4, 4], 3),
                JoinBlock::new(vec![4, 4], 3),
            ],
            &[1, 2],
        )
        .unwrap_err();
        assert_eq!(err, Error::Hypothesis("d_1 = 1 < d_2 = 2".into()));

        let err = build_block_join(&[JoinBlock::new(vec![1, 3], 2)], &[]).unwrap_err();
        assert_eq!(err, Error::Hypothesis("alpha_{1,1} = 1 < b_1 = 2".into()));
    }
}
