//! Image statements at `lambda = 1 - k`: the finite-dimensional submodule of
//! polynomials of degree `< k`, its annihilation by `D_(m,l)` and its image
//! under `D_(m,0)`.
//!
//! `cargo run --release --example images -- 3`

use fmethod::operators::image_computations;

fn main() -> fmethod::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    for k in 1..=4u32 {
        for m in 0..=k {
            let r = image_computations(m, k - m, n, 3)?;
            println!(
                "k={k} m={m} l={}: stable={} annihilated={} rank {}/{} D(m,0)x_n^m={} surjective={} -> {:?}",
                r.l, r.stable, r.annihilated, r.image_rank, r.expected_rank, r.witness, r.surjective, r.status
            );
        }
    }
    Ok(())
}
