//! Dimensions of invariants for simultaneous conjugation on tuples of
//! matrices: the LR-squared route against the Weyl-integration oracle, and
//! stabilization as the matrix size grows.
//!
//!     cargo run --example invariant_dimensions

use lrsq::hilbert::{block_invariant_dim, finite_invariant_dim, molien_invariant_dim};

fn main() {
    println!("GL_n acting on pairs of n x n matrices, multidegree (d1,d2):");
    println!("{:>4} {:>10} {:>12} {:>10}", "n", "profile", "LR route", "Molien");
    for n in 1..=3usize {
        for profile in [[1u32, 1], [2, 1], [2, 2]] {
            let lr = finite_invariant_dim(n, &profile);
            let molien = molien_invariant_dim(n, &profile).unwrap();
            assert_eq!(lr, molien);
            println!("{n:>4} {:>10} {lr:>12} {molien:>10}", format!("{profile:?}"));
        }
    }

    // once n >= d the dimension stops moving: the stable range
    println!("\nstabilization of a_n(3,2) in n:");
    for n in 1..=7usize {
        println!("  n = {n}: {}", finite_invariant_dim(n, &[3, 2]));
    }

    // block case: copies of different sizes
    println!("\nblock invariants for sizes (2,2), degree d:");
    for d in 0..=5u32 {
        println!("  d = {d}: {}", block_invariant_dim(&[2, 2], d));
    }
}
