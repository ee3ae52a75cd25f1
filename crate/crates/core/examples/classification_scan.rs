//! Exhaustive scan of subgraphs of K^{a,1}: equality against the clique
//! classifier. Usage: `classification_scan [n] [a]`.

use gparking::verify::{scan_family, ScanOptions};

fn main() -> gparking::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse().expect("integer argument"));
    let n = args.next().unwrap_or(4) as usize;
    let a = args.next().unwrap_or(2);
    let report = scan_family(&ScanOptions::exhaustive(n, a))?;
    print!("{}", report.summary());
    for cx in report.counterexamples()? {
        println!("counterexample: {:?} ({})", cx.row.graph, cx.reason);
    }
    Ok(())
}
