//! Homomorphisms between generalized Verma modules in the Fourier picture:
//! the classification read through `(s, r) = (-lambda, -nu)`, an explicit
//! `Phi_(m,l)` with its equivariance check, and `F_c(Phi)`.
//!
//! `cargo run --release --example verma_homs -- 3 1 2`

use fmethod::algebra::VarNames;
use fmethod::fmethod::{ClassifyConfig, Equivariance};
use fmethod::liealg::Flavor;
use fmethod::params::SignPair;
use fmethod::verma::{build_phi, check_hom_equivariance, classify_homs, factorization_modules};

fn main() -> fmethod::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let n = args.first().copied().unwrap_or(3) as usize;
    let m = args.get(1).copied().unwrap_or(1);
    let l = args.get(2).copied().unwrap_or(2);

    let mut cfg = ClassifyConfig::new(n, Flavor::SL, 1, 1);
    cfg.mode = Equivariance::Connected;
    for h in classify_homs(&cfg)?
        .iter()
        .filter(|h| h.computed_dim > 0)
        .take(12)
    {
        println!("M'(sym^{}, {}) -> M({}): {}", h.ell, h.r, h.s, h.images);
    }

    let fm = factorization_modules(m, l, n, Flavor::SL, SignPair::all(Flavor::SL)[0]);
    let phi = build_phi(m, l, fm.source, fm.target)?;
    let rep = check_hom_equivariance(&phi, 3, 1)?;
    println!(
        "Phi_({m},{l}) equivariant up to grade 3: {:?} ({} checks)",
        rep.status, rep.checked
    );
    let names = VarNames::joint(&[("zeta", n), ("y", n - 1)]);
    println!("F_c(Phi) = {}", phi.fc()?.to_joint().to_text(&names));
    Ok(())
}
