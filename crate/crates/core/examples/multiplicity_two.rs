//! For `(SL(3), SL(2))` the solution space can be two-dimensional. This
//! prints those cells with their bases, and one dimension-one cell of the
//! critical family for comparison.
//!
//! `cargo run --release --example multiplicity_two -- 3 3`

use fmethod::algebra::int;
use fmethod::fmethod::{classify, solve_fsystem, ClassifyConfig, Equivariance};
use fmethod::liealg::Flavor;
use fmethod::params::Sign;
use fmethod::rep::{ScalarRepParams, TargetRepParams};

fn main() -> fmethod::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let m_max = args.first().copied().unwrap_or(2);
    let l_max = args.get(1).copied().unwrap_or(2);
    let rows = classify(&ClassifyConfig::new(2, Flavor::SL, m_max, l_max))?;
    for r in rows.iter().filter(|r| r.computed_dim == 2) {
        println!(
            "alpha={} beta={} lambda={} nu={}  {}",
            r.alpha, r.beta, r.lambda, r.nu, r.basis_symbols
        );
    }
    let twos = rows.iter().filter(|r| r.computed_dim == 2).count();
    let bad = rows.iter().filter(|r| !r.matches()).count();
    println!("{twos} cells of dimension two, {bad} mismatches");

    // (m, l) = (1, 0) at lambda = 0: nu = 1, only zeta2.
    let s = ScalarRepParams::sl(2, Sign::Plus, int(0));
    let t = TargetRepParams::sl(2, Sign::Minus, 0, int(1));
    let sol = solve_fsystem(&s, &t, 4, Equivariance::Full)?;
    println!("lambda=0 nu=1: {:?}", sol.symbols());
    Ok(())
}
