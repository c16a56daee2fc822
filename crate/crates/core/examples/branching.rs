//! Truncated branching of `M(s)` to the subgroup: characters and invariant
//! vectors, generic and integral `s`.
//!
//! `cargo run --release --example branching -- 2 8`

use fmethod::algebra::{int, rat};
use fmethod::branch::verify_branching;

fn main() -> fmethod::Result<()> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let n = args.first().copied().unwrap_or(2) as usize;
    let depth = args.get(1).copied().unwrap_or(8);
    for s in [rat(1, 3), int(0), int(1), int(2)] {
        let r = verify_branching(n, &s, depth)?;
        println!("s = {} (weights >= {}): {:?}", r.s, r.floor, r.status);
        for c in &r.checks {
            println!("  {:<55} {}", c.name, if c.pass { "pass" } else { "FAIL" });
        }
        let inv: Vec<String> = r
            .invariant_counts
            .iter()
            .filter(|c| c.computed > 1)
            .map(|c| format!("{}:{}", c.weight, c.computed))
            .collect();
        if !inv.is_empty() {
            println!("  weights with several invariants: {}", inv.join(" "));
        }
    }
    Ok(())
}
