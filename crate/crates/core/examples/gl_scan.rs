//! Classification scan for `(GL(n+1), GL(n))`. Every cell has dimension at
//! most one; the nonzero ones are printed.
//!
//! `cargo run --release --example gl_scan -- 2 4 4`

use fmethod::fmethod::{classify, ClassifyConfig};
use fmethod::liealg::Flavor;

fn main() -> fmethod::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let n = args.first().copied().unwrap_or(2) as usize;
    let m_max = args.get(1).copied().unwrap_or(3);
    let l_max = args.get(2).copied().unwrap_or(3);

    let t = std::time::Instant::now();
    let rows = classify(&ClassifyConfig::new(n, Flavor::GL, m_max, l_max))?;
    for r in rows.iter().filter(|r| r.computed_dim > 0).take(20) {
        println!(
            "alpha={} beta={} lambda={} nu={}  {}",
            r.alpha, r.beta, r.lambda, r.nu, r.basis_symbols
        );
    }
    let max_dim = rows.iter().map(|r| r.computed_dim).max().unwrap_or(0);
    let hits = rows.iter().filter(|r| r.computed_dim > 0).count();
    let bad = rows.iter().filter(|r| !r.matches()).count();
    println!(
        "{} cells, {hits} nonzero, max dim {max_dim}, {bad} mismatches, {:.1?}",
        rows.len(),
        t.elapsed()
    );
    Ok(())
}
