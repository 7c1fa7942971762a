//! Type-A root data, Lusztig's t-analog of Kostant's partition function, the
//! Hesselink graded multiplicity m_λ(t) of an irreducible in the harmonic
//! polynomials on gl_n, and the spherical Hilbert series for a caller-supplied
//! weight set.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A gl_n weight in standard ε-coordinates; entries may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(n: usize) -> Self {
        Weight {
            coords: vec![0; n],
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn sum(&self) -> i64 {
        self.coords.iter().sum()
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A polynomial in t with integer coefficients, indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedMultiplicity {
    coeffs: BTreeMap<u32, BigInt>,
}

impl GradedMultiplicity {
    pub fn zero() -> Self {
        GradedMultiplicity::default()
    }

    pub fn one() -> Self {
        let mut g = GradedMultiplicity::default();
        g.set(0, BigInt::one());
        g
    }

    pub fn set(&mut self, d: u32, c: BigInt) {
        if c.is_zero() {
            self.coeffs.remove(&d);
        } else {
            self.coeffs.insert(d, c);
        }
    }

    pub fn coeff(&self, d: u32) -> BigInt {
        self.coeffs.get(&d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, BigInt> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_assign(&mut self, other: &GradedMultiplicity) {
        for (d, c) in &other.coeffs {
            let v = self.coeff(*d) + c;
            self.set(*d, v);
        }
    }

    pub fn add_scaled(&mut self, other: &GradedMultiplicity, scale: &BigInt) {
        for (d, c) in &other.coeffs {
            let v = self.coeff(*d) + c * scale;
            self.set(*d, v);
        }
    }

    /// Value at t = 1 (sum of coefficients).
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }
}

impl std::fmt::Display for GradedMultiplicity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (d, c.to_i64()) {
                (0, _) => write!(f, "{c}")?,
                (1, Some(1)) => write!(f, "t")?,
                (1, _) => write!(f, "{c}*t")?,
                (_, Some(1)) => write!(f, "t^{d}")?,
                (_, _) => write!(f, "{c}*t^{d}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HesselinkError {
    #[error("weight {0} is not dominant (coordinates must be weakly decreasing)")]
    NotDominant(Weight),
    #[error("rank {n} too large: the Weyl alternating sum runs over n! terms, refusing n > 10")]
    RankTooLarge { n: usize },
    #[error("weight {weight} has length {got}, expected {expected}")]
    LengthMismatch {
        weight: Weight,
        expected: usize,
        got: usize,
    },
}

/// Φ⁺ for A_{n−1} inside gl_n: {εᵢ − εⱼ : i < j}, row-major order.
pub fn positive_roots(n: usize) -> Vec<Weight> {
    let mut roots = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let mut c = vec![0i64; n];
            c[i] = 1;
            c[j] = -1;
            roots.push(Weight::new(c));
        }
    }
    roots
}

/// ℘_t(ξ): the coefficient of t^k counts multisets of k positive roots
/// summing to ξ, for k ≤ k_max. Zero off the root lattice.
pub fn kostant_partition_q(n: usize, xi: &Weight, k_max: u32) -> GradedMultiplicity {
    assert_eq!(xi.len(), n);
    if xi.sum() != 0 {
        return GradedMultiplicity::zero();
    }
    let roots = positive_roots(n);
    let mut memo: HashMap<(usize, Vec<i64>), Vec<BigInt>> = HashMap::new();
    let counts = kostant_rec(&roots, 0, xi.coords().to_vec(), k_max, &mut memo);
    let mut out = GradedMultiplicity::zero();
    for (k, c) in counts.into_iter().enumerate() {
        out.set(k as u32, c);
    }
    out
}

/// Residual ξ is expressible over the remaining tail of Φ⁺ only if every
/// prefix sum is ≥ 0 (positive roots only move mass leftward-to-rightward).
fn prefix_feasible(xi: &[i64]) -> bool {
    let mut s = 0i64;
    for &c in &xi[..xi.len() - 1] {
        s += c;
        if s < 0 {
            return false;
        }
    }
    true
}

fn kostant_rec(
    roots: &[Weight],
    idx: usize,
    xi: Vec<i64>,
    k_max: u32,
    memo: &mut HashMap<(usize, Vec<i64>), Vec<BigInt>>,
) -> Vec<BigInt> {
    let len = k_max as usize + 1;
    if xi.iter().all(|&c| c == 0) {
        let mut v = vec![BigInt::zero(); len];
        v[0] = BigInt::one();
        return v;
    }
    if idx == roots.len() || !prefix_feasible(&xi) {
        return vec![BigInt::zero(); len];
    }
    if let Some(v) = memo.get(&(idx, xi.clone())) {
        return v.clone();
    }
    let root = roots[idx].coords();
    let (i, j) = {
        let i = root.iter().position(|&c| c == 1).unwrap();
        let j = root.iter().position(|&c| c == -1).unwrap();
        (i, j)
    };
    // coefficient of εᵢ−εⱼ is bounded by the smallest prefix sum over [i, j)
    let mut bound = i64::MAX;
    let mut s = 0i64;
    for (k, &c) in xi.iter().enumerate() {
        s += c;
        if k >= i && k < j {
            bound = bound.min(s);
        }
    }
    let bound = bound.max(0).min(k_max as i64);
    let mut total = vec![BigInt::zero(); len];
    let mut residual = xi.clone();
    for c in 0..=bound {
        if c > 0 {
            residual[i] -= 1;
            residual[j] += 1;
        }
        let sub = kostant_rec(roots, idx + 1, residual.clone(), k_max, memo);
        for (k, v) in sub.iter().enumerate() {
            if k + c as usize <= k_max as usize {
                total[k + c as usize] += v;
            }
        }
    }
    memo.insert((idx, xi), total.clone());
    total
}

/// All n! pairs ((−1)^{ℓ(w)}, w(λ+δ)−δ) with the integer shift
/// δ = (n−1, …, 1, 0); central shifts of ρ cancel under w(·)−(·).
pub fn weyl_orbit_terms(n: usize, lambda: &Weight) -> Result<Vec<(i32, Weight)>, HesselinkError> {
    check_weight(n, lambda)?;
    if !lambda.is_dominant() {
        return Err(HesselinkError::NotDominant(lambda.clone()));
    }
    let delta: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    let shifted: Vec<i64> = lambda
        .coords()
        .iter()
        .zip(&delta)
        .map(|(a, d)| a + d)
        .collect();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let sign = if inversions(&perm) % 2 == 0 { 1 } else { -1 };
        // w permutes coordinate positions: (w·v)_i = v_{w⁻¹(i)}
        let moved: Vec<i64> = perm
            .iter()
            .map(|&p| shifted[p])
            .zip(&delta)
            .map(|(v, d)| v - d)
            .collect();
        out.push((sign, Weight::new(moved)));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

fn inversions(perm: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

fn check_weight(n: usize, w: &Weight) -> Result<(), HesselinkError> {
    if w.len() != n {
        return Err(HesselinkError::LengthMismatch {
            weight: w.clone(),
            expected: n,
            got: w.len(),
        });
    }
    Ok(())
}

/// m_λ(t) = Σ_{w∈W} (−1)^{ℓ(w)} ℘_t(w(λ+ρ)−ρ), coefficients for d ≤ d_max.
///
/// Weights with Σλᵢ ≠ 0 lie off the root lattice, so every ℘ term vanishes;
/// they yield the zero polynomial (with a stderr warning) rather than an
/// error.
pub fn hesselink_multiplicity(
    n: usize,
    lambda: &Weight,
    d_max: u32,
) -> Result<GradedMultiplicity, HesselinkError> {
    check_weight(n, lambda)?;
    if n > 10 {
        return Err(HesselinkError::RankTooLarge { n });
    }
    if !lambda.is_dominant() {
        return Err(HesselinkError::NotDominant(lambda.clone()));
    }
    if lambda.sum() != 0 {
        eprintln!(
            "warning: weight {lambda} has nonzero coordinate sum; \
             it is off the root lattice and its graded multiplicity is 0"
        );
        return Ok(GradedMultiplicity::zero());
    }
    let mut total = GradedMultiplicity::zero();
    for (sign, xi) in weyl_orbit_terms(n, lambda)? {
        if xi.sum() != 0 || !prefix_feasible(xi.coords()) {
            continue;
        }
        let p = kostant_partition_q(n, &xi, d_max);
        total.add_scaled(&p, &BigInt::from(sign));
    }
    Ok(total)
}

/// dim L(λ) = ∏_{i<j} (λᵢ − λⱼ + j − i)/(j − i), exact.
pub fn weyl_dimension(n: usize, lambda: &Weight) -> Result<BigUint, HesselinkError> {
    check_weight(n, lambda)?;
    if !lambda.is_dominant() {
        return Err(HesselinkError::NotDominant(lambda.clone()));
    }
    let c = lambda.coords();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigInt::from(c[i] - c[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero());
    debug_assert!(q.is_positive());
    Ok(q.to_biguint().expect("dimension is positive"))
}

/// H_t = Σ_{λ∈S} m_λ(t), truncated at d_max.
pub fn spherical_hilbert(
    n: usize,
    spherical_set: &[Weight],
    d_max: u32,
) -> Result<GradedMultiplicity, HesselinkError> {
    let mut total = GradedMultiplicity::zero();
    for lambda in spherical_set {
        total.add_assign(&hesselink_multiplicity(n, lambda, d_max)?);
    }
    Ok(total)
}

/// All dominant weights of length n with coordinate sum 0 and λ₁ ≤ bound:
/// exactly the candidates that can appear in harmonics of degree ≤ bound.
pub fn dominant_zero_sum_weights(n: usize, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut coords = Vec::with_capacity(n);
    fn rec(n: usize, hi: i64, lo: i64, sum: i64, coords: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if coords.len() == n {
            if sum == 0 {
                out.push(Weight::new(coords.clone()));
            }
            return;
        }
        let remaining = (n - coords.len()) as i64;
        for c in lo..=hi {
            // weakly decreasing tail bounded below by lo keeps the sum in
            // [sum + c + (remaining−1)·lo, sum + c·remaining]
            if sum + c * remaining < 0 || sum + c + (remaining - 1) * lo > 0 {
                continue;
            }
            coords.push(c);
            rec(n, c, lo, sum + c, coords, out);
            coords.pop();
        }
    }
    rec(n, bound, -bound * (n as i64), 0, &mut coords, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn roots() {
        assert_eq!(positive_roots(1), vec![]);
        assert_eq!(positive_roots(2), vec![w(&[1, -1])]);
        assert_eq!(positive_roots(3).len(), 3);
        assert_eq!(positive_roots(5).len(), 10);
    }

    #[test]
    fn kostant_q_small() {
        for c in 0..=4i64 {
            let p = kostant_partition_q(2, &w(&[c, -c]), 6);
            let mut want = GradedMultiplicity::zero();
            want.set(c as u32, BigInt::one());
            assert_eq!(p, want, "c = {c}");
        }
        let p = kostant_partition_q(3, &w(&[1, 0, -1]), 6);
        assert_eq!(p.coeff(1), BigInt::one());
        assert_eq!(p.coeff(2), BigInt::one());
        assert_eq!(p.coeff(3), BigInt::zero());
        assert!(kostant_partition_q(3, &w(&[1, 1, -1]), 6).is_zero());
        assert!(kostant_partition_q(3, &w(&[-1, 0, 1]), 6).is_zero());
        assert_eq!(
            kostant_partition_q(4, &Weight::zero(4), 5),
            GradedMultiplicity::one()
        );
    }

    /// Brute-force multiset enumeration over Φ⁺ as an independent check.
    fn kostant_brute(n: usize, xi: &Weight, k_max: u32) -> GradedMultiplicity {
        let roots = positive_roots(n);
        let mut out = GradedMultiplicity::zero();
        fn rec(
            roots: &[Weight],
            idx: usize,
            left: u32,
            acc: &mut Vec<i64>,
            target: &[i64],
            k: u32,
            out: &mut GradedMultiplicity,
        ) {
            if idx == roots.len() {
                if acc == target {
                    let c = out.coeff(k) + 1;
                    out.set(k, c);
                }
                return;
            }
            for c in 0..=left {
                for (a, r) in acc.iter_mut().zip(roots[idx].coords()) {
                    *a += r * c as i64;
                }
                rec(roots, idx + 1, left - c, acc, target, k + c, out);
                for (a, r) in acc.iter_mut().zip(roots[idx].coords()) {
                    *a -= r * c as i64;
                }
            }
        }
        let mut acc = vec![0i64; n];
        rec(&roots, 0, k_max, &mut acc, xi.coords(), 0, &mut out);
        out
    }

    #[test]
    fn kostant_q_matches_brute_force() {
        for n in 2..=3usize {
            for xi in dominant_zero_sum_weights(n, 3) {
                // check the whole S_n orbit, not just the dominant member
                let mut coords = xi.coords().to_vec();
                coords.sort_unstable();
                loop {
                    let v = Weight::new(coords.clone());
                    assert_eq!(
                        kostant_partition_q(n, &v, 5),
                        kostant_brute(n, &v, 5),
                        "n = {n}, xi = {v}"
                    );
                    if !next_lexicographic(&mut coords) {
                        break;
                    }
                }
            }
        }
    }

    fn next_lexicographic(v: &mut [i64]) -> bool {
        let n = v.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    #[test]
    fn orbit_terms_n2() {
        let terms = weyl_orbit_terms(2, &w(&[1, -1])).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0], (1, w(&[1, -1])));
        assert_eq!(terms[1], (-1, w(&[-2, 2])));
        let signs: i32 = terms.iter().map(|(s, _)| s).sum();
        assert_eq!(signs, 0);
        assert!(weyl_orbit_terms(2, &w(&[-1, 1])).is_err());
    }

    #[test]
    fn orbit_matches_half_integer_rho() {
        // w(λ+ρ)−ρ with the true half-sum ρ, done in doubled coordinates,
        // must agree with the δ-shift implementation
        for n in 2..=3usize {
            let two_rho: Vec<i64> = (0..n).map(|i| (n - 1) as i64 - 2 * i as i64).collect();
            for lambda in dominant_zero_sum_weights(n, 2) {
                let doubled: Vec<i64> = lambda
                    .coords()
                    .iter()
                    .zip(&two_rho)
                    .map(|(a, r)| 2 * a + r)
                    .collect();
                let mut perm: Vec<usize> = (0..n).collect();
                let terms = weyl_orbit_terms(n, &lambda).unwrap();
                let mut idx = 0;
                loop {
                    let via_rho: Vec<i64> = perm
                        .iter()
                        .map(|&p| doubled[p])
                        .zip(&two_rho)
                        .map(|(v, r)| (v - r) / 2)
                        .collect();
                    assert_eq!(terms[idx].1, Weight::new(via_rho));
                    idx += 1;
                    if !next_permutation(&mut perm) {
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn hesselink_adjoint_values() {
        let m = hesselink_multiplicity(2, &w(&[1, -1]), 6).unwrap();
        let mut want = GradedMultiplicity::zero();
        want.set(1, BigInt::one());
        assert_eq!(m, want);

        let m = hesselink_multiplicity(3, &w(&[1, 0, -1]), 6).unwrap();
        let mut want = GradedMultiplicity::zero();
        want.set(1, BigInt::one());
        want.set(2, BigInt::one());
        assert_eq!(m, want);

        assert_eq!(
            hesselink_multiplicity(4, &Weight::zero(4), 4).unwrap(),
            GradedMultiplicity::one()
        );
    }

    #[test]
    fn hesselink_off_lattice_is_zero() {
        let m = hesselink_multiplicity(2, &w(&[2, 0]), 4).unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn hesselink_refuses_large_rank() {
        let lambda = Weight::zero(11);
        assert!(matches!(
            hesselink_multiplicity(11, &lambda, 2),
            Err(HesselinkError::RankTooLarge { n: 11 })
        ));
    }

    #[test]
    fn nonnegativity_sweep() {
        for n in 2..=4usize {
            for lambda in dominant_zero_sum_weights(n, 3) {
                if lambda.coords().iter().any(|&c| c.abs() > 3) {
                    continue;
                }
                let m = hesselink_multiplicity(n, &lambda, 6).unwrap();
                for (d, c) in m.coeffs() {
                    assert!(
                        !c.is_negative(),
                        "negative coefficient at t^{d} for n = {n}, λ = {lambda}"
                    );
                }
            }
        }
    }

    #[test]
    fn adjoint_at_one_is_rank() {
        for n in 2..=4usize {
            let mut c = vec![0i64; n];
            c[0] = 1;
            c[n - 1] = -1;
            // d_max = n(n−1)/2 + n covers all exponents of the Weyl group
            let m = hesselink_multiplicity(n, &Weight::new(c), (n * n) as u32).unwrap();
            assert_eq!(m.eval_at_one(), BigInt::from(n as i64 - 1), "n = {n}");
        }
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dimension(2, &w(&[1, 0])).unwrap(), BigUint::from(2u32));
        assert_eq!(
            weyl_dimension(3, &w(&[1, 0, -1])).unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(
            weyl_dimension(4, &Weight::zero(4)).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            weyl_dimension(3, &w(&[2, 1, 0])).unwrap(),
            weyl_dimension(3, &w(&[1, 0, -1])).unwrap()
        );
    }

    #[test]
    fn kostant_freeness_sum_rule() {
        use crate::series::TruncatedSeries;
        let d = 4u32;
        for n in 2..=3usize {
            // Σ_λ m_λ(t)·dim L(λ) over dominant zero-sum λ with λ₁ ≤ d
            let mut lhs = GradedMultiplicity::zero();
            for lambda in dominant_zero_sum_weights(n, d as i64) {
                let m = hesselink_multiplicity(n, &lambda, d).unwrap();
                let dim = BigInt::from(weyl_dimension(n, &lambda).unwrap());
                lhs.add_scaled(&m, &dim);
            }
            // ∏_{j=1}^{n}(1−t^j)/(1−t)^{n²}
            let mut rhs = TruncatedSeries::one(1, d);
            for j in 1..=n as u32 {
                let mut f = TruncatedSeries::one(1, d);
                f.set_coefficient(vec![j], BigInt::from(-1));
                rhs = rhs.mul(&f).unwrap();
            }
            let mut t = TruncatedSeries::zero(1, d);
            t.set_coefficient(vec![1], BigInt::one());
            let inv = t.inverse_one_minus().unwrap();
            for _ in 0..n * n {
                rhs = rhs.mul(&inv).unwrap();
            }
            for e in 0..=d {
                assert_eq!(
                    lhs.coeff(e),
                    rhs.coefficient(&[e]).unwrap(),
                    "n = {n}, degree {e}"
                );
            }
        }
    }

    #[test]
    fn spherical_series() {
        assert_eq!(
            spherical_hilbert(2, &[Weight::zero(2)], 4).unwrap(),
            GradedMultiplicity::one()
        );
        let h = spherical_hilbert(2, &[Weight::zero(2), w(&[1, -1])], 4).unwrap();
        assert_eq!(h.coeff(0), BigInt::one());
        assert_eq!(h.coeff(1), BigInt::one());
        assert_eq!(h.coeff(2), BigInt::zero());
        assert!(spherical_hilbert(3, &[], 4).unwrap().is_zero());
    }

    #[test]
    fn display_forms() {
        let mut g = GradedMultiplicity::zero();
        assert_eq!(g.to_string(), "0");
        g.set(0, BigInt::one());
        g.set(1, BigInt::from(2));
        g.set(3, BigInt::one());
        assert_eq!(g.to_string(), "1 + 2*t + t^3");
    }
}
