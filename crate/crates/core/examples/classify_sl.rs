//! Classification scan for `(SL(n+1), SL(n))`: prints every cell where a
//! differential symmetry breaking operator exists, then a summary line.
//!
//! `cargo run --release --example classify_sl -- 3 4 4`

use fmethod::fmethod::{classify, ClassifyConfig};
use fmethod::liealg::Flavor;

fn main() -> fmethod::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let n = args.first().copied().unwrap_or(3) as usize;
    let m_max = args.get(1).copied().unwrap_or(3);
    let l_max = args.get(2).copied().unwrap_or(3);
    let t = std::time::Instant::now();
    let rows = classify(&ClassifyConfig::new(n, Flavor::SL, m_max, l_max))?;
    for r in rows.iter().filter(|r| r.computed_dim > 0 || !r.matches()) {
        println!(
            "alpha={} beta={} l={} lambda={} nu={}  dim={} (predicted {})  {}",
            r.alpha,
            r.beta,
            r.ell,
            r.lambda,
            r.nu,
            r.computed_dim,
            r.predicted_dim,
            r.basis_symbols
        );
    }
    let bad = rows.iter().filter(|r| !r.matches()).count();
    println!(
        "{} cells, {} mismatches, {:.1?}",
        rows.len(),
        bad,
        t.elapsed()
    );
    Ok(())
}
