//! The truncated-series engine on its own: exact products over k, geometric
//! inversion, substitution, and JSON export.
//!
//!     cargo run --example power_series

use lrsq::series::{geometric_factor, TruncatedSeries};
use num_bigint::BigInt;
use num_traits::One;

fn main() {
    // the partition generating function ∏ 1/(1 − t^k)
    let partitions = TruncatedSeries::product_over_k(1, 10, |k| {
        Ok(geometric_factor(10, k, &BigInt::one()))
    })
    .unwrap();
    print!("p(d) for d = 0..10:");
    for d in 0..=10u32 {
        print!(" {}", partitions.coefficient(&[d]).unwrap());
    }
    println!();

    // substitution: turn the two-variable series ∏ 1/(1 − q t^k) into a
    // one-variable one by q ↦ t (partitions weighted by size + length)
    let by_length = lrsq::finite::partitions_by_length_series(8);
    let weighted = by_length.substitute(&[vec![1], vec![1]], 1, 8).unwrap();
    print!("partitions weighted by size+length:");
    for d in 0..=8u32 {
        print!(" {}", weighted.coefficient(&[d]).unwrap());
    }
    println!();

    // JSON schema: decimal-string coefficients, sorted exponents
    let json = serde_json::to_string_pretty(&partitions.to_json(&["t"])).unwrap();
    println!("\nJSON form of the partition series (truncated view):");
    for line in json.lines().take(12) {
        println!("{line}");
    }
    println!("...");
}
