//! The infinitesimal actions as Weyl algebra elements: `dpi_lambda(X)`, its
//! dual, the Fourier transform and the bracket relations.
//!
//! `cargo run --release --example weyl_fourier -- 2`

use fmethod::algebra::{rat, VarNames};
use fmethod::liealg::{Flavor, ParabolicData};
use fmethod::operators::element_name;
use fmethod::params::Sign;
use fmethod::rep::{dpi_hat, dpi_lambda, dpi_lambda_star, ScalarRepParams};

fn main() -> fmethod::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(2);
    let pd = ParabolicData::new(n, Flavor::SL)?;
    let p = ScalarRepParams::sl(n, Sign::Plus, rat(1, 3));
    let x = VarNames::role("x", n);
    let z = VarNames::role("zeta", n);
    for j in 1..=n {
        let e = pd.n_plus(j);
        println!(
            "dpi({})   = {}",
            element_name(&e),
            dpi_lambda(&e, &p)?.to_text(&x)
        );
        println!(
            "dpi*({})  = {}",
            element_name(&e),
            dpi_lambda_star(&e, &p)?.to_text(&x)
        );
        println!(
            "dpi^({})  = {}",
            element_name(&e),
            dpi_hat(&e, &p)?.to_text(&z)
        );
    }
    let basis = pd.basis_g();
    let mut ok = true;
    for a in &basis {
        for b in &basis {
            let lhs = dpi_lambda(a, &p)?.commutator(&dpi_lambda(b, &p)?)?;
            ok &= lhs == dpi_lambda(&a.bracket(b)?, &p)?;
        }
        ok &= dpi_lambda_star(a, &p)?.fourier() == dpi_hat(a, &p)?;
    }
    println!(
        "bracket relations and Fourier compatibility on {} basis elements: {ok}",
        basis.len()
    );
    Ok(())
}
