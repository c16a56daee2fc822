//! Both factorizations `D_(m,l) = D'_l o D_(m,0) = Proj o D_(m+l)` on all
//! monomials of bounded degree, and the matching three-route identity for
//! the Verma homomorphisms.
//!
//! `cargo run --release --example factorization -- 3 6`

use fmethod::liealg::Flavor;
use fmethod::operators::verify_factorization_sbo;
use fmethod::verma::verify_factorization_verma;

fn main() -> fmethod::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let n = args.first().copied().unwrap_or(3) as usize;
    let cap = args.get(1).copied().unwrap_or(5);
    for m in 0..=2 {
        for l in 0..=2 {
            for r in verify_factorization_sbo(m, l, n, cap)? {
                println!(
                    "m={m} l={l}  {:<30} {:?} ({} monomials)",
                    r.identity, r.status, r.checked
                );
            }
            for flavor in [Flavor::SL, Flavor::GL] {
                let r = verify_factorization_verma(m, l, n, flavor, cap.min(3))?;
                println!(
                    "m={m} l={l}  {flavor} Verma three routes      {:?} ({} vectors)",
                    r.status, r.checked
                );
            }
        }
    }
    Ok(())
}
