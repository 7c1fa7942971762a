//! The symmetric-function toolkit: Schur expansions, the Hall scalar
//! product, and the function-counting interpretation of power sums in the
//! monomial basis.
//!
//!     cargo run --example symmetric_functions

use lrsq::partition::{partitions_of, z_lambda, Partition};
use lrsq::symfunc::{
    count_functions, hall, macdonald_corollary_count, power_sum, schur, schur_expand,
};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.iter().copied())
}

fn main() {
    // s_(2,1) * s_(1) in the Schur basis
    let product = schur(&p(&[2, 1])).multiply(&schur(&p(&[1])));
    println!("s_(2,1) * s_(1) =");
    for (lam, c) in schur_expand(&product) {
        println!("  {c} s_({lam})");
    }

    // power sums are orthogonal with norm z_λ
    println!("\n<p_ν, p_ν> = z_ν:");
    for nu in partitions_of(4, None, None) {
        let pn = power_sum(&nu);
        println!("  ν = ({nu}): {} (z = {})", hall(&pn, &pn), z_lambda(&nu));
    }

    // the coefficient of m_δ in p_γ counts functions f with f(γ) = δ
    let gamma = p(&[2, 1, 1]);
    let delta = p(&[2, 2]);
    println!(
        "\nfunctions taking cycle type ({gamma}) onto ({delta}): {}",
        count_functions(&gamma, &delta)
    );

    // summing over γ with multiplicity 1/z recovers an LR-squared count
    for delta in partitions_of(4, None, None) {
        println!(
            "L-count for δ = ({delta}): {}",
            macdonald_corollary_count(&delta)
        );
    }
}
