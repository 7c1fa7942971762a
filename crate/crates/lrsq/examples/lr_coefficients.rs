//! Littlewood-Richardson coefficients: single, multi-factor, and the Kostka
//! specialization.
//!
//!     cargo run --example lr_coefficients

use lrsq::partition::{Partition, PartitionTuple};
use lrsq::{kostka, lr_coefficient, lr_multi, lr_multi_all};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.iter().copied())
}

fn main() {
    // the classic first nontrivial case: c^{(3,2,1)}_{(2,1),(2,1)} = 2
    let lambda = p(&[3, 2, 1]);
    let mu = p(&[2, 1]);
    println!(
        "c^{{{lambda}}}_{{{mu},{mu}}} = {}",
        lr_coefficient(&lambda, &mu, &mu)
    );

    // multi-factor: decompose F^{(2,1)} ⊗ F^{(1,1)} ⊗ F^{(1)}
    let tuple = PartitionTuple::new(vec![p(&[2, 1]), p(&[1, 1]), p(&[1])]);
    println!("\nF^(2,1) (x) F^(1,1) (x) F^(1) decomposes as:");
    for (lam, mult) in lr_multi_all(&tuple) {
        println!("  {mult} x F^({lam})");
    }

    // one-row factors give Kostka numbers
    let lambda = p(&[3, 2]);
    let rows = PartitionTuple::new(vec![p(&[2]), p(&[2]), p(&[1])]);
    println!(
        "\nc^{{(3,2)}}_{{(2),(2),(1)}} = {} = K_{{(3,2),(2,2,1)}} = {}",
        lr_multi(&lambda, &rows),
        kostka(&lambda, &p(&[2, 2, 1]))
    );

    // hook-length check: f^(2,1) = 2 standard tableaux, so all-ones content
    let ones = PartitionTuple::new(vec![p(&[1]), p(&[1]), p(&[1])]);
    println!("f^(2,1) = {}", lr_multi(&p(&[2, 1]), &ones));
}
