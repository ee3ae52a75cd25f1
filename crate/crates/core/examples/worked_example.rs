//! Two essential components whose counts multiply: 36 = 3 * 12.

use gparking::skeleton::one_skeleton;
use gparking::verify::check_equality;
use gparking::Multigraph;

fn main() -> gparking::Result<()> {
    let g = Multigraph::from_edges(
        5,
        &[(0, 1, 1), (0, 2, 1), (1, 2, 1), (0, 3, 1), (0, 4, 1), (3, 4, 1), (3, 5, 1), (4, 5, 1)],
    )?;
    println!("M_G^(1) = {}", one_skeleton(&g)?);
    println!("Q~_G =\n{}", g.signless_laplacian_truncated());
    let v = check_equality(&g)?;
    for c in &v.per_component {
        println!("component {:?}: dim {} det {}", c.labels, c.std_count, c.det);
    }
    println!("total: dim {} det {}", v.std_count, v.det_q);
    Ok(())
}
