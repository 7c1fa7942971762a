//! Exact symmetric-function arithmetic on the monomial basis.
//!
//! A `SymFunc` is a homogeneous symmetric function of a fixed degree with
//! arbitrary-precision integer coordinates on the monomial basis {m_δ}.
//! Products are computed with stable-variable-count semantics: expanding both
//! factors in deg(f) + deg(g) variables guarantees no monomial is lost, so
//! the result is the product in the inverse limit Λ, free of variable-count
//! artifacts.
//!
//! This module is the independent oracle against which the combinatorial
//! Littlewood-Richardson rule is checked: Schur functions are built from
//! Gelfand-Tsetlin pattern counts, products are expanded monomial-by-monomial,
//! and `schur_expand` inverts the unitriangular Kostka transition.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::{partitions_of, Partition};

/// Homogeneous symmetric function in monomial-basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: u32,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SymFunc {
    pub fn zero(degree: u32) -> Self {
        SymFunc {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element m_δ.
    pub fn monomial(delta: &Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(delta.clone(), BigInt::one());
        SymFunc {
            degree: delta.size(),
            coeffs,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, delta: &Partition) -> BigInt {
        self.coeffs.get(delta).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn insert(&mut self, delta: Partition, c: BigInt) {
        debug_assert_eq!(delta.size(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(delta.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&delta);
        }
    }

    pub fn add_assign_scaled(&mut self, other: &SymFunc, scale: &BigInt) {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        for (k, v) in &other.coeffs {
            self.insert(k.clone(), v * scale);
        }
    }

    /// Product in Λ, computed with ≥ deg(f) + deg(g) variables.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let degree = self.degree + other.degree;
        let nvars = (degree as usize).max(1);
        let a = self.expand(nvars);
        let b = other.expand(nvars);
        let mut prod: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *prod.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        // the coefficient of m_δ in a symmetric polynomial is the coefficient
        // of the sorted-descending exponent vector x^δ
        let mut out = SymFunc::zero(degree);
        for (e, c) in prod {
            if !c.is_zero() && e.windows(2).all(|w| w[0] >= w[1]) {
                out.insert(Partition::new(e), c);
            }
        }
        out
    }

    /// Expand into a sparse polynomial in `nvars` variables
    /// (exponent vector → coefficient).
    fn expand(&self, nvars: usize) -> Vec<(Vec<u32>, BigInt)> {
        let mut out = Vec::new();
        for (delta, c) in &self.coeffs {
            for e in orbit(delta, nvars) {
                out.push((e, c.clone()));
            }
        }
        out
    }
}

/// All distinct permutations of δ padded to `nvars` entries.
fn orbit(delta: &Partition, nvars: usize) -> Vec<Vec<u32>> {
    assert!(delta.len() <= nvars, "not enough variables for orbit of {delta}");
    // ascending start, then lexicographic next-permutation
    let mut cur = delta.padded(nvars);
    cur.reverse();
    let mut out = Vec::new();
    loop {
        out.push(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The power sum p_ν = ∏ⱼ p_{νⱼ} in monomial coordinates.
pub fn power_sum(nu: &Partition) -> SymFunc {
    let mut f = SymFunc::monomial(&Partition::empty());
    for &k in nu.parts() {
        let pk = SymFunc::monomial(&Partition::new([k]));
        f = f.multiply(&pk);
    }
    f
}

/// The Schur function s_λ = Σ_δ K_{λδ} m_δ, Kostka numbers from
/// Gelfand-Tsetlin pattern enumeration.
pub fn schur(lambda: &Partition) -> SymFunc {
    let d = lambda.size();
    let mut out = SymFunc::zero(d);
    for delta in partitions_of(d, None, None) {
        let k = kostka_gt(lambda, delta.parts());
        if k > 0 {
            out.insert(delta, BigInt::from(k));
        }
    }
    out
}

/// K_{λ,content} via Gelfand-Tsetlin patterns: interlacing triangular arrays
/// with top row λ and prescribed row sums. Content may be any composition.
pub fn kostka_gt(lambda: &Partition, content: &[u32]) -> u64 {
    let total: u32 = content.iter().sum();
    if lambda.size() != total {
        return 0;
    }
    if total == 0 {
        return 1;
    }
    let n = content.len().max(lambda.len());
    let top = lambda.padded(n);
    // prefix sums of the content: row k (length k) must sum to Σ_{i≤k} content_i
    let mut want: Vec<u32> = Vec::with_capacity(n);
    let mut acc = 0;
    for i in 0..n {
        acc += content.get(i).copied().unwrap_or(0);
        want.push(acc);
    }
    count_gt_rows(&top, &want)
}

fn count_gt_rows(row: &[u32], want: &[u32]) -> u64 {
    let r = row.len();
    if r == 1 {
        return (row[0] == want[0]) as u64;
    }
    let target: u32 = want[r - 2];
    let mut next = vec![0u32; r - 1];
    count_interlacing(row, &mut next, 0, target, want)
}

fn count_interlacing(row: &[u32], next: &mut Vec<u32>, i: usize, remaining: u32, want: &[u32]) -> u64 {
    let r = row.len();
    if i == r - 1 {
        if remaining != 0 {
            return 0;
        }
        return count_gt_rows(&next.clone(), want);
    }
    // interlacing: row[i] ≥ next[i] ≥ row[i+1]; also keep weakly decreasing
    let hi = row[i].min(remaining).min(if i > 0 { next[i - 1] } else { u32::MAX });
    let lo = row[i + 1];
    if lo > hi {
        return 0;
    }
    let mut total = 0;
    for v in lo..=hi {
        next[i] = v;
        total += count_interlacing(row, next, i + 1, remaining - v, want);
    }
    total
}

/// Coefficients c_λ with f = Σ c_λ s_λ, by back-substitution against the
/// unitriangular Kostka matrix. Elimination order is lexicographic-max,
/// a total refinement of dominance.
pub fn schur_expand(f: &SymFunc) -> BTreeMap<Partition, BigInt> {
    let mut residual = f.clone();
    let mut out = BTreeMap::new();
    while let Some((lam, c)) = residual.coeffs.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        let s = schur(&lam);
        let neg = -&c;
        residual.add_assign_scaled(&s, &neg);
        out.insert(lam, c);
    }
    out
}

/// Hall scalar product ⟨f, g⟩ with Schur functions orthonormal.
/// Mixed degrees give 0 by convention.
pub fn hall(f: &SymFunc, g: &SymFunc) -> BigInt {
    if f.degree != g.degree {
        return BigInt::zero();
    }
    let a = schur_expand(f);
    let b = schur_expand(g);
    let mut dot = BigInt::zero();
    for (lam, ca) in &a {
        if let Some(cb) = b.get(lam) {
            dot += ca * cb;
        }
    }
    dot
}

/// The row L_{γ·} of the transition p_γ = Σ_δ L_{γδ} m_δ.
pub fn power_sum_to_monomial(gamma: &Partition) -> BTreeMap<Partition, BigInt> {
    power_sum(gamma).coeffs.clone()
}

/// Number of functions f on {1,…,ℓ(γ)} with f(γ) = δ as sequences, where
/// f(γ)ᵢ = Σ_{j: f(j)=i} γⱼ. Any f hitting an index beyond ℓ(δ) would force a
/// positive value where δ is zero, so the search range {1,…,ℓ(δ)} is complete.
pub fn count_functions(gamma: &Partition, delta: &Partition) -> u64 {
    if gamma.size() != delta.size() {
        return 0;
    }
    let lg = gamma.len();
    let ld = delta.len();
    if lg == 0 {
        return 1; // empty function, all sums zero
    }
    if ld == 0 {
        return 0;
    }
    let mut sums = vec![0u32; ld];
    fn rec(gamma: &[u32], j: usize, sums: &mut Vec<u32>, delta: &[u32]) -> u64 {
        if j == gamma.len() {
            return sums.iter().zip(delta).all(|(s, d)| s == d) as u64;
        }
        let mut total = 0;
        for i in 0..delta.len() {
            if sums[i] + gamma[j] <= delta[i] {
                sums[i] += gamma[j];
                total += rec(gamma, j + 1, sums, delta);
                sums[i] -= gamma[j];
            }
        }
        total
    }
    rec(gamma.parts(), 0, &mut sums, delta.parts())
}

/// Σ_γ count_functions(γ, δ) over all γ ⊢ |δ|; the number of functions whose
/// image sequence is δ for some partition γ.
pub fn macdonald_corollary_count(delta: &Partition) -> u64 {
    partitions_of(delta.size(), None, None)
        .iter()
        .map(|gamma| count_functions(gamma, delta))
        .sum()
}
