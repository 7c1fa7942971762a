//! Both sides of the main product formula and the Hilbert-series statements
//! derived from it: stable and finite-n invariant dimensions for conjugation
//! on several copies of the matrices, harmonic specializations, the bigraded
//! identity, and an independent Molien-Weyl oracle.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::lr::{lr_multi_all, sum_lr_squared, sum_lr_squared_profile, LengthBounds};
use crate::partition::{factorial, partitions_of, weak_compositions, Partition, PartitionTuple};
use crate::series::{geometric_factor, IdentityReport, SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HilbertError {
    #[error("molien oracle bounds exceeded: requires n ≤ 3 and total degree ≤ 6, got n = {n}, degree = {degree}")]
    MolienBounds { n: usize, degree: u32 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// ∏_{k=1}^{D} 1/(1 − (t₁^k + … + t_m^k)), exact to total degree D.
pub fn main_formula_lhs(m: usize, max_degree: u32) -> TruncatedSeries {
    assert!(m >= 1);
    TruncatedSeries::product_over_k(m, max_degree, |k| {
        let mut f = TruncatedSeries::zero(m, max_degree);
        for j in 0..m {
            let mut e = vec![0u32; m];
            e[j] = k;
            f.set_coefficient(e, BigInt::one());
        }
        f.inverse_one_minus()
    })
    .expect("power-sum factors satisfy the degree-k precondition")
}

/// Σ_λ Σ_𝛍 (c^λ_𝛍)² 𝐭^𝛍 restricted to m slots, coefficient by coefficient.
pub fn main_formula_rhs(m: usize, max_degree: u32) -> TruncatedSeries {
    assert!(m >= 1);
    let mut out = TruncatedSeries::zero(m, max_degree);
    for d in 0..=max_degree {
        for profile in weak_compositions(d, m) {
            let v = sum_lr_squared(d, m, Some(&profile), &LengthBounds::default());
            out.set_coefficient(profile, BigInt::from(v));
        }
    }
    out
}

/// Compare both sides of the main formula coefficient-exactly.
pub fn verify_main_formula(m: usize, max_degree: u32) -> IdentityReport {
    IdentityReport::compare(main_formula_lhs(m, max_degree), main_formula_rhs(m, max_degree))
}

/// a_n(𝐝) = Σ_{λ⊢Σdⱼ, ℓ(λ)≤n} Σ_{𝛍: |μ⁽ʲ⁾|=dⱼ} (c^λ_𝛍)².
pub fn finite_invariant_dim(n: usize, profile: &[u32]) -> BigUint {
    let d: u32 = profile.iter().sum();
    let bounds = LengthBounds {
        lambda: Some(n),
        mus: None,
    };
    sum_lr_squared(d, profile.len(), Some(profile), &bounds)
}

/// a^{(𝐧)}(d) = Σ (c^λ_𝛍)² over λ ⊢ d with ℓ(λ) ≤ Σnⱼ and all weak degree
/// profiles, with ℓ(μ⁽ʲ⁾) ≤ nⱼ.
pub fn block_invariant_dim(ns: &[usize], d: u32) -> BigUint {
    let n: usize = ns.iter().sum();
    let bounds = LengthBounds {
        lambda: Some(n),
        mus: Some(ns.to_vec()),
    };
    let mut total = BigUint::zero();
    for profile in weak_compositions(d, ns.len()) {
        total += sum_lr_squared_profile(&profile, &bounds);
    }
    total
}

/// A(t) = ∏ 1/(1 − m t^k), the stable block-invariant Hilbert series.
pub fn stable_block_series(m: usize, max_degree: u32) -> TruncatedSeries {
    TruncatedSeries::product_over_k(1, max_degree, |k| {
        Ok(geometric_factor(max_degree, k, &BigInt::from(m as u64)))
    })
    .expect("geometric factors satisfy the degree-k precondition")
}

/// ∏ (1 − t^k)/(1 − m t^k), the stable Hilbert series of the K-invariant
/// harmonic polynomials.
pub fn harmonic_stable_series(m: usize, max_degree: u32) -> TruncatedSeries {
    assert!(m >= 2);
    TruncatedSeries::product_over_k(1, max_degree, |k| {
        let mut one_minus_tk = TruncatedSeries::one(1, max_degree);
        one_minus_tk.set_coefficient(vec![k], BigInt::from(-1));
        one_minus_tk.mul(&geometric_factor(max_degree, k, &BigInt::from(m as u64)))
    })
    .expect("harmonic factors satisfy the degree-k precondition")
}

/// Grade weight of slot j (1-based) under the grouped specialization: blocks
/// of (m−1) consecutive slots carry weights 1, 2, 3, ….
fn slot_weight(j: usize, m: usize) -> u32 {
    ((j + m - 2) / (m - 1)) as u32
}

/// Σ_λ Σ_𝛍 (c^λ_𝛍)² t^{gr(𝛍)} with gr assigning weight ⌈j/(m−1)⌉ to slot j,
/// by brute enumeration of all tuples of grade ≤ D.
pub fn graded_rhs(m: usize, max_degree: u32) -> TruncatedSeries {
    assert!(m >= 2);
    let num_slots = (m - 1) * max_degree as usize;
    let weights: Vec<u32> = (1..=num_slots).map(|j| slot_weight(j, m)).collect();
    let mut coeffs = vec![BigUint::zero(); max_degree as usize + 1];
    let mut tuple: Vec<Partition> = Vec::new();
    graded_rec(&weights, 0, 0, max_degree, &mut tuple, &mut coeffs);
    let mut out = TruncatedSeries::zero(1, max_degree);
    for (g, c) in coeffs.iter().enumerate() {
        out.set_coefficient(vec![g as u32], BigInt::from(c.clone()));
    }
    out
}

fn graded_rec(
    weights: &[u32],
    j: usize,
    grade: u32,
    max_degree: u32,
    tuple: &mut Vec<Partition>,
    coeffs: &mut Vec<BigUint>,
) {
    if j == weights.len() {
        let all = lr_multi_all(&PartitionTuple::new(tuple.clone()));
        let mut sq = BigUint::zero();
        for (_, mult) in all {
            sq += &mult * &mult;
        }
        coeffs[grade as usize] += sq;
        return;
    }
    let w = weights[j];
    let max_size = (max_degree - grade) / w;
    for a in 0..=max_size {
        for mu in partitions_of(a, None, None) {
            tuple.push(mu);
            graded_rec(weights, j + 1, grade + w * a, max_degree, tuple, coeffs);
            tuple.pop();
        }
    }
}

/// Coefficient of t^d in (Σ_e a^{(𝐧)}(e) t^e) · ∏_{j=1}^{n}(1 − t^j): the
/// dimension of the degree-d K(𝐧)-invariant harmonic polynomials, via
/// Kostant's tensor factorization.
pub fn harmonic_finite_dim(ns: &[usize], d: u32) -> BigInt {
    let n: usize = ns.iter().sum();
    // ∏_{j=1}^{n}(1−t^j) truncated to degree d
    let mut euler = TruncatedSeries::one(1, d);
    for j in 1..=n as u32 {
        if j > d {
            break;
        }
        let mut f = TruncatedSeries::one(1, d);
        f.set_coefficient(vec![j], BigInt::from(-1));
        euler = euler.mul(&f).unwrap();
    }
    let mut total = BigInt::zero();
    for e in 0..=d {
        let a = BigInt::from(block_invariant_dim(ns, e));
        let c = euler.coefficient(&[d - e]).unwrap();
        total += a * c;
    }
    total
}

/// The three sides of the bigraded identity, compared pairwise.
#[derive(Debug, Clone)]
pub struct BigradedReport {
    /// ∏_k 1/(1 − Σ_{i,j≥1}(qⁱtʲ)^k).
    pub lhs: TruncatedSeries,
    /// ∏_k (1−q^k)(1−t^k)/(1 − (q^k + t^k)).
    pub rhs_product: TruncatedSeries,
    /// Σ (c^λ_𝛍)² under the grid substitution z_s ↦ qⁱtʲ.
    pub rhs_lr: TruncatedSeries,
    pub equal: bool,
    pub first_discrepancy: Option<Vec<u32>>,
}

/// Verify the bigraded identity of the two-copy harmonic invariants in (q,t)
/// to total degree D, all three expressions computed independently.
pub fn bigraded_identity(max_degree: u32) -> BigradedReport {
    let d = max_degree;
    let lhs = TruncatedSeries::product_over_k(2, d, |k| {
        let mut f = TruncatedSeries::zero(2, d);
        for i in 1..=d / k {
            for j in 1..=d / k {
                if k * (i + j) <= d {
                    f.set_coefficient(vec![k * i, k * j], BigInt::one());
                }
            }
        }
        f.inverse_one_minus()
    })
    .unwrap();

    let rhs_product = TruncatedSeries::product_over_k(2, d, |k| {
        let mut qk = TruncatedSeries::one(2, d);
        qk.set_coefficient(vec![k, 0], BigInt::from(-1));
        let mut tk = TruncatedSeries::one(2, d);
        tk.set_coefficient(vec![0, k], BigInt::from(-1));
        let mut sum = TruncatedSeries::zero(2, d);
        sum.set_coefficient(vec![k, 0], BigInt::one());
        sum.set_coefficient(vec![0, k], BigInt::one());
        qk.mul(&tk)?.mul(&sum.inverse_one_minus()?)
    })
    .unwrap();

    let rhs_lr = bigraded_lr_sum(d);

    let r1 = IdentityReport::compare(lhs.clone(), rhs_product.clone());
    let r2 = IdentityReport::compare(lhs.clone(), rhs_lr.clone());
    BigradedReport {
        lhs,
        rhs_product,
        rhs_lr,
        equal: r1.equal && r2.equal,
        first_discrepancy: r1.first_discrepancy.or(r2.first_discrepancy),
    }
}

/// Σ over grid assignments (i,j) ↦ μ⁽ⁱʲ⁾ of Σ_λ (c^λ_𝛍)² q^{Σ i|μ|} t^{Σ j|μ|}.
fn bigraded_lr_sum(max_degree: u32) -> TruncatedSeries {
    let d = max_degree;
    let mut cells: Vec<(u32, u32)> = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            if i + j <= d {
                cells.push((i, j));
            }
        }
    }
    let mut out = TruncatedSeries::zero(2, d);
    let mut tuple: Vec<Partition> = Vec::new();
    fn rec(
        cells: &[(u32, u32)],
        idx: usize,
        qdeg: u32,
        tdeg: u32,
        d: u32,
        tuple: &mut Vec<Partition>,
        out: &mut TruncatedSeries,
    ) {
        if idx == cells.len() {
            let all = lr_multi_all(&PartitionTuple::new(tuple.clone()));
            let mut sq = BigUint::zero();
            for (_, mult) in all {
                sq += &mult * &mult;
            }
            let prev = out.coefficient(&[qdeg, tdeg]).unwrap();
            out.set_coefficient(vec![qdeg, tdeg], prev + BigInt::from(sq));
            return;
        }
        let (i, j) = cells[idx];
        let budget = d - (qdeg + tdeg);
        for a in 0..=budget / (i + j) {
            for mu in partitions_of(a, None, None) {
                tuple.push(mu);
                rec(cells, idx + 1, qdeg + i * a, tdeg + j * a, d, tuple, out);
                tuple.pop();
            }
        }
    }
    rec(&cells, 0, 0, 0, d, &mut tuple, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Molien-Weyl oracle
// ---------------------------------------------------------------------------

type Laurent = HashMap<Vec<i32>, BigInt>;

fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out: Laurent = HashMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += ca * cb;
            if entry.is_zero() {
                out.remove(&e);
            }
        }
    }
    out
}

/// Complete homogeneous h_d evaluated at the multiset of n² torus monomials
/// xᵢ/xⱼ: the character of the degree-d polynomials on M_n.
fn conjugation_character(n: usize, d: u32) -> Laurent {
    let mut monomials: Vec<Vec<i32>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut e = vec![0i32; n];
            e[i] += 1;
            e[j] -= 1;
            monomials.push(e);
        }
    }
    let mut out: Laurent = HashMap::new();
    // multisets of size d over the monomial list
    fn rec(
        monomials: &[Vec<i32>],
        idx: usize,
        left: u32,
        acc: &mut Vec<i32>,
        out: &mut Laurent,
    ) {
        if idx == monomials.len() - 1 {
            // put all remaining weight on the last monomial
            let e: Vec<i32> = acc
                .iter()
                .zip(&monomials[idx])
                .map(|(a, m)| a + m * left as i32)
                .collect();
            *out.entry(e).or_insert_with(BigInt::zero) += BigInt::one();
            return;
        }
        for c in 0..=left {
            let saved = acc.clone();
            for (a, m) in acc.iter_mut().zip(&monomials[idx]) {
                *a += m * c as i32;
            }
            rec(monomials, idx + 1, left - c, acc, out);
            *acc = saved;
        }
    }
    let mut acc = vec![0i32; n];
    rec(&monomials, 0, d, &mut acc, &mut out);
    out
}

/// ∏_{i≠j} (1 − xᵢ/xⱼ), the Weyl integration density for U(n) (ρ-free form).
fn weyl_density(n: usize) -> Laurent {
    let mut out: Laurent = HashMap::new();
    out.insert(vec![0i32; n], BigInt::one());
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut factor: Laurent = HashMap::new();
            factor.insert(vec![0i32; n], BigInt::one());
            let mut e = vec![0i32; n];
            e[i] = 1;
            e[j] = -1;
            factor.insert(e, BigInt::from(-1));
            out = laurent_mul(&out, &factor);
        }
    }
    out
}

/// Independent computation of a_n(𝐝) by Weyl integration over the maximal
/// torus with exact Laurent-polynomial bookkeeping. Exponential cost, hence
/// the hard bounds n ≤ 3 and Σdⱼ ≤ 6.
pub fn molien_invariant_dim(n: usize, profile: &[u32]) -> Result<BigUint, HilbertError> {
    let degree: u32 = profile.iter().sum();
    if n == 0 || n > 3 || degree > 6 {
        return Err(HilbertError::MolienBounds { n, degree });
    }
    let mut integrand = weyl_density(n);
    for &d in profile {
        integrand = laurent_mul(&integrand, &conjugation_character(n, d));
    }
    let ct = integrand
        .get(&vec![0i32; n])
        .cloned()
        .unwrap_or_else(BigInt::zero);
    let order = BigInt::from(factorial(n as u32));
    let (q, r) = num_integer::Integer::div_rem(&ct, &order);
    assert!(r.is_zero(), "constant term must be divisible by n!");
    assert!(!q.is_negative(), "invariant dimension must be non-negative");
    Ok(q.to_biguint().expect("non-negative"))
}

/// Convenience: the t^d coefficient of a univariate series as BigUint.
pub fn series_coefficient_unsigned(s: &TruncatedSeries, d: u32) -> BigUint {
    let c = s.coefficient(&[d]).unwrap();
    assert!(!c.is_negative());
    c.to_biguint().unwrap()
}
