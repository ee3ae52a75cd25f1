use num_bigint::{BigInt, BigUint};

use crate::error::Result;
use crate::matrix::{build_block_join, build_uniform_offdiag, GnMatrix, JoinBlock};
use crate::skeleton::matrix_ideal;

/// `dim_K(R / J_H)` against `det H` for one matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixCheck {
    pub matrix: GnMatrix,
    pub std_count: BigUint,
    pub det: BigInt,
}

impl MatrixCheck {
    pub fn of(matrix: GnMatrix) -> Result<Self> {
        let std_count = matrix_ideal(&matrix).std_count_recursive()?;
        let det = matrix.determinant();
        Ok(Self {
            matrix,
            std_count,
            det,
        })
    }

    pub fn equal(&self) -> bool {
        BigInt::from(self.std_count.clone()) == self.det
    }

    pub fn dominates(&self) -> bool {
        BigInt::from(self.std_count.clone()) >= self.det
    }
}

/// Builds the uniform off-diagonal matrix and compares both sides.
pub fn verify_uniform_offdiag_equality(diag: &[u64], off: u64) -> Result<MatrixCheck> {
    MatrixCheck::of(build_uniform_offdiag(diag, off)?)
}

/// Builds the block-join matrix and compares both sides.
pub fn verify_block_join_equality(blocks: &[JoinBlock], cross: &[u64]) -> Result<MatrixCheck> {
    MatrixCheck::of(build_block_join(blocks, cross)?)
}
