//! Invariant differential operators `I(triv, lambda) -> I(poly^k, tau)` of
//! `G` itself, found with the full nilradical. Only `k = 0` (the identity)
//! and `lambda = 1 - k` (the operator `D_k`) survive.
//!
//! `cargo run --release --example ido_scan -- 3 4`

use fmethod::fmethod::classify_ido;
use fmethod::liealg::Flavor;

fn main() -> fmethod::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let n = args.first().copied().unwrap_or(2) as usize;
    let k_max = args.get(1).copied().unwrap_or(3);
    for flavor in [Flavor::SL, Flavor::GL] {
        let rows = classify_ido(n, flavor, k_max, &[])?;
        for r in rows.iter().filter(|r| r.computed_dim > 0 && r.ell > 0) {
            println!(
                "{flavor} k={} alpha={} delta={} lambda={} tau={}  {}",
                r.ell, r.alpha, r.beta, r.lambda, r.nu, r.basis_symbols
            );
        }
        let bad = rows.iter().filter(|r| !r.matches()).count();
        println!("{flavor}: {} cells, {bad} mismatches", rows.len());
    }
    Ok(())
}
