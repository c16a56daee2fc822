//! The operator `D_(m,l)` intertwines `dpi_lambda` with the target action
//! exactly on the classified parameters; elsewhere a violating pair
//! `(X, monomial)` is reported.
//!
//! `cargo run --release --example equivariance -- 3 2 1`

use fmethod::algebra::{int, Rational};
use fmethod::fmethod::Target;
use fmethod::operators::{build_sbo, check_equivariance, sbo_target};
use fmethod::params::Sign;
use fmethod::rep::ScalarRepParams;

fn main() -> fmethod::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let n = args.first().copied().unwrap_or(3) as usize;
    let m = args.get(1).copied().unwrap_or(2);
    let l = args.get(2).copied().unwrap_or(1);
    let d = build_sbo(m, l, n);
    println!("D = {}", d.op.to_text());

    let lambda = int(1 - (m + l) as i64);
    let source = ScalarRepParams::sl(n, Sign::Plus, lambda);
    let target = sbo_target(&source, m, l);
    let good = check_equivariance(&d.op, &source, &Target::Restricted(target.clone()), 5, 1)?;
    println!(
        "lambda={} nu={}: {:?} on {} checks",
        source.lambda.first, target.nu.first, good.status, good.checked
    );

    let mut off = target;
    off.nu.first += Rational::new(1.into(), 2.into());
    let bad = check_equivariance(&d.op, &source, &Target::Restricted(off.clone()), 5, 3)?;
    println!("nu={}: {:?}", off.nu.first, bad.status);
    for v in &bad.violations {
        println!("  fails for X = {} on {}", v.element, v.monomial);
    }
    Ok(())
}
