//! Necklace counts, the necklace product series η_m(t), colored-conjugation
//! orbits of S_d under a Young subgroup, partitions counted by length, and
//! conjugacy-class counts of GL_m(F_q) with a brute-force matrix oracle.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::lr::{sum_lr_squared, LengthBounds};
use crate::series::{geometric_factor, IdentityReport, SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiniteError {
    #[error("total degree {d} exceeds the brute-force bound of {bound}")]
    BruteForceBound { d: u32, bound: u32 },
    #[error("brute-force GL oracle requires m ≤ 3 and prime q ≤ 5 with q^(m²) ≤ 19683, got m = {m}, q = {q}")]
    GlBounds { m: usize, q: u64 },
    #[error("q = {q} is not prime; the matrix oracle works over prime fields only")]
    NotPrime { q: u64 },
}

/// Euler's totient by trial factorization.
pub fn totient(r: u64) -> u64 {
    assert!(r >= 1);
    let mut n = r;
    let mut phi = r;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// N_k(m) = (1/k) Σ_{r|k} φ(r) m^{k/r}: k-bead necklaces in m colors.
pub fn necklace_count(k: u32, m: u64) -> BigUint {
    assert!(k >= 1 && m >= 1);
    let mut total = BigUint::zero();
    for r in 1..=k as u64 {
        if k as u64 % r == 0 {
            total += BigUint::from(totient(r)) * BigUint::from(m).pow(k / r as u32);
        }
    }
    let (q, rem) = total.div_rem(&BigUint::from(k));
    debug_assert!(rem.is_zero(), "necklace division is always exact");
    q
}

/// η_m(t) = ∏_k (1/(1−t^k))^{N_k(m)}, exact to degree D. The factor for
/// each k is expanded directly: (1/(1−t^k))^N = Σ_u C(N+u−1, u) t^{ku}.
pub fn eta_series(m: u64, max_degree: u32) -> TruncatedSeries {
    TruncatedSeries::product_over_k(1, max_degree, |k| {
        let n = BigInt::from(necklace_count(k, m));
        let mut f = TruncatedSeries::zero(1, max_degree);
        let mut c = BigInt::one();
        let mut u = 0u32;
        loop {
            let deg = k.checked_mul(u).filter(|&d| d <= max_degree);
            match deg {
                Some(d) => f.set_coefficient(vec![d], c.clone()),
                None => break,
            }
            // C(N+u, u+1) = C(N+u−1, u) · (N+u)/(u+1)
            c = c * (&n + BigInt::from(u)) / BigInt::from(u + 1);
            u += 1;
        }
        Ok(f)
    })
    .expect("eta factors satisfy the degree-k precondition")
}

/// Brute-force rotation-orbit count of the m^k color strings, for
/// cross-checking [`necklace_count`].
pub fn necklace_count_brute(k: u32, m: u64) -> u64 {
    assert!(k >= 1 && m >= 1);
    assert!(m.pow(k) <= 1 << 20, "string space too large for brute force");
    let total = m.pow(k) as usize;
    let mut seen = vec![false; total];
    let mut orbits = 0u64;
    for s in 0..total {
        if seen[s] {
            continue;
        }
        orbits += 1;
        // rotate the base-m string of length k
        let mut digits = to_digits(s, m, k);
        for _ in 0..k {
            digits.rotate_left(1);
            seen[from_digits(&digits, m)] = true;
        }
    }
    orbits
}

fn to_digits(mut s: usize, m: u64, k: u32) -> Vec<u64> {
    let mut d = vec![0u64; k as usize];
    for slot in d.iter_mut() {
        *slot = (s as u64) % m;
        s /= m as usize;
    }
    d
}

fn from_digits(d: &[u64], m: u64) -> usize {
    let mut s = 0u64;
    for &x in d.iter().rev() {
        s = s * m + x;
    }
    s as usize
}

const ORBIT_BRUTE_BOUND: u32 = 8;

/// Number of orbits of S_d under conjugation by the Young subgroup S_𝐝,
/// computed by union-find closure over all d! permutations under the
/// adjacent-transposition generators of each block.
pub fn orbit_count_brute(composition: &[u32]) -> Result<BigUint, FiniteError> {
    let d: u32 = composition.iter().sum();
    if d > ORBIT_BRUTE_BOUND {
        return Err(FiniteError::BruteForceBound {
            d,
            bound: ORBIT_BRUTE_BOUND,
        });
    }
    let n = d as usize;
    let total = (1..=n).product::<usize>().max(1);
    // generators: adjacent transpositions (i, i+1) inside each block of 𝐝
    let mut generators: Vec<usize> = Vec::new();
    let mut offset = 0usize;
    for &part in composition {
        for i in 0..part.saturating_sub(1) as usize {
            generators.push(offset + i);
        }
        offset += part as usize;
    }
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut perm = vec![0usize; n];
    let mut conj = vec![0usize; n];
    for idx in 0..total {
        lehmer_decode(idx, n, &mut perm);
        for &g in &generators {
            // conjugate perm by the transposition s = (g, g+1): s∘perm∘s
            for (i, slot) in conj.iter_mut().enumerate() {
                let src = if i == g {
                    g + 1
                } else if i == g + 1 {
                    g
                } else {
                    i
                };
                let mut img = perm[src];
                if img == g {
                    img = g + 1;
                } else if img == g + 1 {
                    img = g;
                }
                *slot = img;
            }
            let a = find(&mut parent, idx);
            let b = find(&mut parent, lehmer_encode(&conj));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut count = 0u64;
    for idx in 0..total {
        if find(&mut parent, idx) == idx {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// Rank of a permutation of {0..n−1} in lexicographic order (Lehmer code).
fn lehmer_encode(perm: &[usize]) -> usize {
    let n = perm.len();
    let mut rank = 0usize;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

fn lehmer_decode(mut rank: usize, n: usize, perm: &mut [usize]) {
    let mut code = vec![0usize; n];
    for i in (0..n).rev() {
        code[i] = rank % (n - i);
        rank /= n - i;
    }
    let mut available: Vec<usize> = (0..n).collect();
    for i in 0..n {
        perm[i] = available.remove(code[i]);
    }
}

/// |𝒪(𝐝)| via the LR-squared sum with exact degree profile 𝐝.
pub fn orbit_count_lr(composition: &[u32]) -> BigUint {
    let d: u32 = composition.iter().sum();
    sum_lr_squared(d, composition.len(), Some(composition), &LengthBounds::default())
}

/// ∏_k 1/(1 − q t^k) in variables (q, t): coefficient of q^ℓ t^n is the
/// number of partitions of n with exactly ℓ parts.
pub fn partitions_by_length_series(max_degree: u32) -> TruncatedSeries {
    TruncatedSeries::product_over_k(2, max_degree, |k| {
        let mut f = TruncatedSeries::zero(2, max_degree);
        f.set_coefficient(vec![1, k], BigInt::one());
        f.inverse_one_minus()
    })
    .expect("q t^k factors satisfy the degree-k precondition")
}

/// ∏_k (1−t^k)/(1−q t^k): the generating series of the conjugacy-class
/// counts of GL_m(F_q), with q a formal integer ≥ 2.
pub fn glq_class_series(q: u64, max_degree: u32) -> TruncatedSeries {
    assert!(q >= 2);
    TruncatedSeries::product_over_k(1, max_degree, |k| {
        let mut one_minus_tk = TruncatedSeries::one(1, max_degree);
        one_minus_tk.set_coefficient(vec![k], BigInt::from(-1));
        one_minus_tk.mul(&geometric_factor(max_degree, k, &BigInt::from(q)))
    })
    .expect("glq factors satisfy the degree-k precondition")
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..q).take_while(|p| p * p <= q).all(|p| q % p != 0)
}

/// Conjugacy classes of GL_m(F_q) by exhaustive enumeration: collect the
/// invertible matrices, count commuting ordered pairs, divide by the group
/// order (Burnside). Hard bounds keep the search below 3⁹ matrices.
pub fn glq_class_count_brute(m: usize, q: u64) -> Result<BigUint, FiniteError> {
    let cells = m * m;
    if m == 0 || m > 3 || q > 5 || q.checked_pow(cells as u32).map_or(true, |t| t > 19683) {
        return Err(FiniteError::GlBounds { m, q });
    }
    if !is_prime(q) {
        return Err(FiniteError::NotPrime { q });
    }
    let total = q.pow(cells as u32) as usize;
    let mut group: Vec<Vec<u64>> = Vec::new();
    for idx in 0..total {
        let mat = to_digits(idx, q, cells as u32);
        if is_invertible(&mat, m, q) {
            group.push(mat);
        }
    }
    let mut commuting = 0u64;
    for a in &group {
        for b in &group {
            if mat_mul(a, b, m, q) == mat_mul(b, a, m, q) {
                commuting += 1;
            }
        }
    }
    let (classes, rem) = BigUint::from(commuting).div_rem(&BigUint::from(group.len()));
    assert!(rem.is_zero(), "commuting-pair count must divide by |GL|");
    Ok(classes)
}

fn mat_mul(a: &[u64], b: &[u64], m: usize, q: u64) -> Vec<u64> {
    let mut c = vec![0u64; m * m];
    for i in 0..m {
        for j in 0..m {
            let mut s = 0u64;
            for k in 0..m {
                s += a[i * m + k] * b[k * m + j];
            }
            c[i * m + j] = s % q;
        }
    }
    c
}

/// Row reduction over F_q (q prime, so every nonzero pivot is invertible).
fn is_invertible(mat: &[u64], m: usize, q: u64) -> bool {
    let mut a = mat.to_vec();
    for col in 0..m {
        let pivot = (col..m).find(|&r| a[r * m + col] != 0);
        let pivot = match pivot {
            Some(p) => p,
            None => return false,
        };
        if pivot != col {
            for j in 0..m {
                a.swap(pivot * m + j, col * m + j);
            }
        }
        let inv = mod_inverse(a[col * m + col], q);
        for j in 0..m {
            a[col * m + j] = a[col * m + j] * inv % q;
        }
        for r in 0..m {
            if r != col && a[r * m + col] != 0 {
                let f = a[r * m + col];
                for j in 0..m {
                    a[r * m + j] = (a[r * m + j] + (q - f) * a[col * m + j]) % q;
                }
            }
        }
    }
    true
}

fn mod_inverse(x: u64, q: u64) -> u64 {
    // Fermat: x^(q−2) mod q, fine for prime q ≤ 5
    let mut acc = 1u64;
    for _ in 0..q - 2 {
        acc = acc * x % q;
    }
    acc
}

/// The three expressions for the GL_m(F_q) class-count series, compared to
/// degree D: ∏(1−t^k)/(1−qt^k), (∏(1−t^k))·η_q(t), and
/// ∏(1/(1−t^k))^{N_k(q)−1}. Returns the report of the first pair together
/// with a flag covering all three.
pub fn eta_glq_identity(q: u64, max_degree: u32) -> IdentityReport {
    let direct = glq_class_series(q, max_degree);
    let via_eta = euler_product(max_degree)
        .and_then(|e| e.mul(&eta_series(q, max_degree)))
        .expect("univariate series share a shape");
    let via_necklaces = TruncatedSeries::product_over_k(1, max_degree, |k| {
        let n = BigInt::from(necklace_count(k, q)) - BigInt::one();
        let mut f = TruncatedSeries::zero(1, max_degree);
        let mut c = BigInt::one();
        let mut u = 0u32;
        while let Some(d) = k.checked_mul(u).filter(|&d| d <= max_degree) {
            f.set_coefficient(vec![d], c.clone());
            c = c * (&n + BigInt::from(u)) / BigInt::from(u + 1);
            u += 1;
        }
        Ok(f)
    })
    .expect("necklace-exponent factors satisfy the degree-k precondition");

    let first = IdentityReport::compare(direct.clone(), via_eta);
    let second = IdentityReport::compare(direct, via_necklaces);
    IdentityReport {
        equal: first.equal && second.equal,
        first_discrepancy: first.first_discrepancy.clone().or(second.first_discrepancy),
        ..first
    }
}

/// ∏_{k=1}^{D} (1 − t^k), one variable.
pub fn euler_product(max_degree: u32) -> Result<TruncatedSeries, SeriesError> {
    let mut out = TruncatedSeries::one(1, max_degree);
    for k in 1..=max_degree {
        let mut f = TruncatedSeries::one(1, max_degree);
        f.set_coefficient(vec![k], BigInt::from(-1));
        out = out.mul(&f)?;
    }
    Ok(out)
}
