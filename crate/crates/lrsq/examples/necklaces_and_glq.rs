//! Necklace counts, the necklace product η_m(t), colored conjugation orbits
//! of S_d, and conjugacy classes of GL_m(F_q) — all tied together by the
//! same sums of squared LR coefficients.
//!
//!     cargo run --example necklaces_and_glq

use lrsq::finite::{
    eta_glq_identity, eta_series, glq_class_count_brute, glq_class_series, necklace_count,
    orbit_count_brute, orbit_count_lr,
};

fn main() {
    println!("necklace counts N_k(m):");
    for k in 1..=6u32 {
        let row: Vec<String> = (1..=4u64).map(|m| necklace_count(k, m).to_string()).collect();
        println!("  k = {k}: {}", row.join("  "));
    }

    println!("\nη_2(t) coefficients (multisets of 2-colored necklaces):");
    let eta = eta_series(2, 8);
    for d in 0..=8u32 {
        print!(" {}", eta.coefficient(&[d]).unwrap());
    }
    println!();

    // orbits of S_d under a Young subgroup: union-find vs LR sum
    println!("\nS_(d1,d2)-conjugation orbits of S_d:");
    for comp in [[2u32, 1], [2, 2], [3, 2]] {
        let brute = orbit_count_brute(&comp).unwrap();
        let lr = orbit_count_lr(&comp);
        assert_eq!(brute, lr);
        println!("  d = {comp:?}: {brute} orbits (both routes)");
    }

    // class counts of GL_m(F_q): series vs matrix enumeration
    println!("\nconjugacy classes of GL_m(F_2):");
    let series = glq_class_series(2, 3);
    for m in 1..=3usize {
        let brute = glq_class_count_brute(m, 2).unwrap();
        println!(
            "  m = {m}: {brute} (series says {})",
            series.coefficient(&[m as u32]).unwrap()
        );
    }

    let r = eta_glq_identity(2, 8);
    println!(
        "\nthree-way class-count identity to degree 8: {}",
        if r.equal { "verified" } else { "MISMATCH" }
    );
}
