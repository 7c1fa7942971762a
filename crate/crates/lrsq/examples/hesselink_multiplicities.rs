//! Graded multiplicities in the harmonic polynomials on gl_n: Lusztig's
//! t-analog of the partition function, the alternating Weyl sum, and the
//! freeness sum rule that ties them to the invariant-theory Hilbert series.
//!
//!     cargo run --example hesselink_multiplicities

use lrsq::hesselink::{
    dominant_zero_sum_weights, hesselink_multiplicity, kostant_partition_q, spherical_hilbert,
    weyl_dimension, Weight,
};
use num_bigint::BigInt;

fn main() {
    // the t-analog on the A2 root lattice
    for coords in [[1i64, 0, -1], [2, 0, -2], [2, -1, -1]] {
        let xi = Weight::new(coords.to_vec());
        println!("p_t({xi}) = {}", kostant_partition_q(3, &xi, 8));
    }

    // graded multiplicity of the adjoint representation: the exponents
    println!("\nadjoint multiplicities m_λ(t), λ = (1,0,...,0,-1):");
    for n in 2..=5usize {
        let mut c = vec![0i64; n];
        c[0] = 1;
        c[n - 1] = -1;
        let m = hesselink_multiplicity(n, &Weight::new(c), 12).unwrap();
        println!("  n = {n}: {m}");
    }

    // Σ_λ m_λ(t) · dim L(λ) recovers the harmonics Hilbert series of gl_3
    let n = 3usize;
    let d = 4u32;
    let mut total = vec![BigInt::from(0); d as usize + 1];
    for lambda in dominant_zero_sum_weights(n, d as i64) {
        let m = hesselink_multiplicity(n, &lambda, d).unwrap();
        let dim = BigInt::from(weyl_dimension(n, &lambda).unwrap());
        for e in 0..=d {
            total[e as usize] += m.coeff(e) * &dim;
        }
    }
    println!("\ngl_3 harmonics dimensions by degree: {total:?}");

    // a spherical Hilbert series from a hand-picked weight set
    let s = vec![Weight::zero(2), Weight::new(vec![1, -1])];
    println!(
        "\nspherical series for S = {{0, (1,-1)}}, n = 2: {}",
        spherical_hilbert(2, &s, 6).unwrap()
    );
}
