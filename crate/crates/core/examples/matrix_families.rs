//! Matrix families with equality, and the d-fold product of two graphs.

use gparking::matrix::{build_block_join, build_uniform_offdiag};
use gparking::skeleton::matrix_ideal;
use gparking::{JoinBlock, Multigraph};

fn main() -> gparking::Result<()> {
    let h = build_uniform_offdiag(&[5, 4, 3], 2)?;
    println!("uniform:\n{}\nJ_H = {}", h.matrix(), matrix_ideal(&h));
    println!("dim {} det {}\n", matrix_ideal(&h).std_count_recursive()?, h.determinant());

    let blocks = [JoinBlock::new(vec![7, 8], 3), JoinBlock::new(vec![6, 6], 2)];
    let h = build_block_join(&blocks, &[1])?;
    println!("block join:\n{}", h.matrix());
    println!("dim {} det {}\n", matrix_ideal(&h).std_count_recursive()?, h.determinant());

    let g1 = Multigraph::from_edges(2, &[(0, 1, 2), (0, 2, 3), (1, 2, 3)])?;
    let g2 = Multigraph::complete(2, 2, 2)?;
    let p = g1.d_fold_product(&g2, 1);
    println!("product Q~:\n{}", p.signless_laplacian_truncated());
    assert_eq!(p.signless_laplacian_truncated(), *h.matrix());
    Ok(())
}
