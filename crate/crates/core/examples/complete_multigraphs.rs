//! Equality `dim R/M_G^(1) = det Q~_G` for complete multigraphs `K^{a,b}`.

use gparking::verify::check_equality;
use gparking::Multigraph;

fn main() -> gparking::Result<()> {
    println!("{:>2} {:>2} {:>2} {:>10} {:>10}", "n", "a", "b", "dim", "det");
    for n in 1..=4 {
        for a in 1..=3 {
            for b in 1..=3 {
                let v = check_equality(&Multigraph::complete(n, a, b)?)?;
                assert!(v.equal);
                println!("{n:>2} {a:>2} {b:>2} {:>10} {:>10}", v.std_count, v.det_q);
            }
        }
    }
    Ok(())
}
