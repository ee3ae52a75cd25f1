//! G-parking functions are the standard monomials of M_G; there are as
//! many as spanning trees.

use gparking::enumeration::{parking_functions, spanning_trees_enumerate};
use gparking::skeleton::parking_ideal;
use gparking::Multigraph;

fn main() -> gparking::Result<()> {
    let g = Multigraph::from_edges(3, &[(0, 1, 2), (1, 2, 1), (2, 3, 1), (0, 3, 1), (1, 3, 1)])?;
    println!("M_G = {}", parking_ideal(&g)?);
    let pf = parking_functions(&g)?;
    for m in &pf {
        println!("  {:?}", m.exponents());
    }
    println!(
        "{} parking functions, {} spanning trees, det L~ = {}",
        pf.len(),
        spanning_trees_enumerate(&g)?,
        g.laplacian_truncated().determinant()
    );
    Ok(())
}
