//! Spanning TU-subgraphs weighted by 4^(odd cycles) add up to det Q~_G.

use gparking::enumeration::tu_enumerate;
use gparking::Multigraph;

fn main() -> gparking::Result<()> {
    let graphs = [
        ("K_3", Multigraph::complete(2, 1, 1)?),
        ("K_4", Multigraph::complete(3, 1, 1)?),
        ("K_4 doubled", Multigraph::complete(3, 2, 2)?),
        ("4-cycle", Multigraph::from_edges(3, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])?),
    ];
    for (name, g) in graphs {
        let r = tu_enumerate(&g)?;
        println!("{name}: {r}, det {}", g.signless_laplacian_truncated().determinant());
    }
    Ok(())
}
