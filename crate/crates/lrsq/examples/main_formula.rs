//! The main product formula: ∏_k 1/(1 − (t₁^k + … + t_m^k)) equals the
//! generating function of Σ_λ (c^λ_𝛍)² over exponent tuples 𝛍.
//!
//!     cargo run --example main_formula

use lrsq::hilbert::{main_formula_lhs, verify_main_formula};

fn main() {
    for (m, degree) in [(1usize, 8u32), (2, 6), (3, 4)] {
        let report = verify_main_formula(m, degree);
        println!(
            "m = {m}, total degree ≤ {degree}: {}",
            if report.equal { "identical" } else { "MISMATCH" }
        );
    }

    // a closer look at m = 2: the diagonal coefficient at t1^d t2^d grows
    // like the number of "2-colored" tensor decompositions
    let s = main_formula_lhs(2, 8);
    println!("\ncoefficients of (t1 t2)^d for m = 2:");
    for d in 0..=4u32 {
        println!("  d = {d}: {}", s.coefficient(&[d, d]).unwrap());
    }

    // the all-ones coefficient is m! (Schur-Weyl duality in disguise)
    for m in 1..=5usize {
        let s = main_formula_lhs(m, m as u32);
        let exp = vec![1u32; m];
        println!("m = {m}: coefficient of t1...t{m} = {}", s.coefficient(&exp).unwrap());
    }
}
