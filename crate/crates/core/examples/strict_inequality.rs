//! The 4-cycle through the root: dim R/M_G^(1) = 5 exceeds det Q~_G = 4.

use gparking::skeleton::one_skeleton;
use gparking::verify::{check_equality, classify_subgraph_of_ka1, CliqueNormalForm};
use gparking::Multigraph;

fn main() -> gparking::Result<()> {
    let g = Multigraph::from_edges(3, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])?;
    let ideal = one_skeleton(&g)?;
    println!("M_G^(1) = {ideal}");
    println!("standard monomials:");
    for m in ideal.std_enumerate()? {
        println!("  {m}");
    }
    let v = check_equality(&g)?;
    println!("dim {} > det {}", v.std_count, v.det_q);
    let c = classify_subgraph_of_ka1(&g)?;
    println!("classifier: equality {}, missing edge {:?}", c.holds, c.witness);
    if let Some(nf) = CliqueNormalForm::of(&g) {
        println!("normal form order {:?}, clique size {}", nf.order, nf.clique_size);
        println!("{}", nf.matrix);
        println!("predicts strict: {}", nf.predicts_strict());
    }
    Ok(())
}
