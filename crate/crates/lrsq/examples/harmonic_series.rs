//! Stable Hilbert series: the block-invariant series ∏ 1/(1 − m t^k), its
//! harmonic companion ∏ (1 − t^k)/(1 − m t^k), and the finite-n dimensions
//! that converge to it.
//!
//!     cargo run --example harmonic_series

use lrsq::hilbert::{
    graded_rhs, harmonic_finite_dim, harmonic_stable_series, stable_block_series,
};
use lrsq::series::IdentityReport;

fn main() {
    let degree = 8u32;
    for m in 2..=3usize {
        let invariants = stable_block_series(m, degree);
        let harmonics = harmonic_stable_series(m, degree);
        println!("m = {m}:");
        print!("  invariants:");
        for d in 0..=degree {
            print!(" {}", invariants.coefficient(&[d]).unwrap());
        }
        print!("\n  harmonics: ");
        for d in 0..=degree {
            print!(" {}", harmonics.coefficient(&[d]).unwrap());
        }
        println!();
    }

    // the harmonic series is itself an LR-squared sum under a regrading
    let r = IdentityReport::compare(graded_rhs(2, 6), harmonic_stable_series(2, 6));
    println!(
        "\ngraded LR sum vs product (m=2, degree 6): {}",
        if r.equal { "identical" } else { "MISMATCH" }
    );

    // finite block sizes stabilize once min(n_j) >= d
    println!("\nharmonic dimensions for block sizes (n,n), degree d:");
    for n in 1..=4usize {
        print!("  n = {n}:");
        for d in 0..=4u32 {
            print!(" {}", harmonic_finite_dim(&[n, n], d));
        }
        println!();
    }
}
