//! Combinatorial-rule computation of Littlewood-Richardson, generalized
//! multi-factor LR, and Kostka coefficients.
//!
//! The two-factor rule enumerates LR skew tableaux directly (cell by cell,
//! maintaining lattice-word prefix counts); the multi-factor case folds over
//! intermediate shapes. Both are checked elsewhere against the symmetric
//! function oracle in `symfunc`, which shares no code with this module.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::{partitions_of, weak_compositions, Partition, PartitionTuple};

/// A generalized LR query: the multiplicity of F^λ in ⊗ⱼ F^{μ⁽ʲ⁾}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LrQuery {
    pub lambda: Partition,
    pub factors: PartitionTuple,
}

impl LrQuery {
    pub fn evaluate(&self) -> BigUint {
        lr_multi(&self.lambda, &self.factors)
    }
}

fn lr_memo() -> &'static Mutex<HashMap<(Partition, Partition, Partition), u64>> {
    static MEMO: OnceLock<Mutex<HashMap<(Partition, Partition, Partition), u64>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The Littlewood-Richardson coefficient c^λ_{μν}: the number of LR skew
/// tableaux of shape λ/μ and content ν. Zero when μ ⊄ λ or sizes mismatch.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !mu.contained_in(lambda) {
        return 0;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&v) = lr_memo().lock().unwrap().get(&key) {
        return v;
    }
    let v = count_lr_tableaux(lambda, mu, nu);
    lr_memo().lock().unwrap().insert(key, v);
    v
}

/// Cells in reverse reading order: rows top to bottom, right to left within
/// each row, so lattice prefixes and column/row constraints are checkable
/// at placement time.
fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let rows = lambda.len();
    let values = nu.len();
    if nu.is_empty() {
        return 1; // shape λ/μ is empty here since sizes matched
    }
    let mut cells = Vec::new();
    for r in 0..rows {
        let lo = mu.part(r);
        let hi = lambda.part(r);
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0; lambda.part(r) as usize])
        .collect();
    let mut counts = vec![0u32; values];
    rec_lr(&mut grid, &cells, 0, &mut counts, lambda, mu, nu)
}

fn rec_lr(
    grid: &mut Vec<Vec<u32>>,
    cells: &[(usize, u32)],
    idx: usize,
    counts: &mut Vec<u32>,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> u64 {
    if idx == cells.len() {
        return 1;
    }
    let (r, c) = cells[idx];
    let mut total = 0;
    for v in 1..=counts.len() as u32 {
        let vi = (v - 1) as usize;
        if counts[vi] >= nu.part(vi) {
            continue;
        }
        // lattice: after placement, #v ≤ #(v−1)
        if v >= 2 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        // column strict against the filled cell above (if any)
        if r > 0 && c >= mu.part(r - 1) && c < lambda.part(r - 1) {
            if v <= grid[r - 1][c as usize] {
                continue;
            }
        }
        // row weak against the already-filled right neighbor (if any)
        if c + 1 < lambda.part(r) && v > grid[r][(c + 1) as usize] {
            continue;
        }
        grid[r][c as usize] = v;
        counts[vi] += 1;
        total += rec_lr(grid, cells, idx + 1, counts, lambda, mu, nu);
        counts[vi] -= 1;
        grid[r][c as usize] = 0;
    }
    total
}

/// Kostka number K_{λν}: semistandard tableaux of shape λ and content ν,
/// by direct cell-filling backtracking.
pub fn kostka(lambda: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != nu.size() {
        return 0;
    }
    if lambda.is_empty() {
        return 1;
    }
    if nu.is_empty() {
        return 0;
    }
    let rows = lambda.len();
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0; lambda.part(r) as usize])
        .collect();
    let mut counts = vec![0u32; nu.len()];
    rec_ssyt(&mut grid, lambda, nu, 0, 0, &mut counts)
}

fn rec_ssyt(
    grid: &mut Vec<Vec<u32>>,
    lambda: &Partition,
    nu: &Partition,
    r: usize,
    c: u32,
    counts: &mut Vec<u32>,
) -> u64 {
    if r == lambda.len() {
        return 1;
    }
    if c == lambda.part(r) {
        return rec_ssyt(grid, lambda, nu, r + 1, 0, counts);
    }
    let lo = if c > 0 {
        grid[r][c as usize - 1]
    } else {
        1
    };
    let lo = lo.max(if r > 0 { grid[r - 1][c as usize] + 1 } else { 1 });
    let mut total = 0;
    for v in lo..=nu.len() as u32 {
        let vi = (v - 1) as usize;
        if counts[vi] >= nu.part(vi) {
            continue;
        }
        grid[r][c as usize] = v;
        counts[vi] += 1;
        total += rec_ssyt(grid, lambda, nu, r, c + 1, counts);
        counts[vi] -= 1;
    }
    grid[r][c as usize] = 0;
    total
}

/// Multiplicities of every F^λ in ⊗ⱼ F^{μ⁽ʲ⁾}, as a map λ → multiplicity.
/// Computed by folding two-factor coefficients over intermediate shapes.
pub fn lr_multi_all(factors: &PartitionTuple) -> BTreeMap<Partition, BigUint> {
    let mut state: BTreeMap<Partition, BigUint> = BTreeMap::new();
    state.insert(Partition::empty(), BigUint::one());
    let mut size = 0u32;
    for mu in &factors.entries {
        if mu.is_empty() {
            continue;
        }
        size += mu.size();
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for kappa in partitions_of(size, None, None) {
            let mut total = BigUint::zero();
            for (tau, mult) in &state {
                let c = lr_coefficient(&kappa, tau, mu);
                if c > 0 {
                    total += mult * BigUint::from(c);
                }
            }
            if !total.is_zero() {
                next.insert(kappa, total);
            }
        }
        state = next;
    }
    state
}

/// Multiplicity of F^λ in ⊗ⱼ F^{μ⁽ʲ⁾}. The empty tuple yields [λ = ()].
pub fn lr_multi(lambda: &Partition, factors: &PartitionTuple) -> BigUint {
    if lambda.size() != factors.total_size() {
        return BigUint::zero();
    }
    lr_multi_all(factors)
        .remove(lambda)
        .unwrap_or_else(BigUint::zero)
}

/// Optional length restrictions for [`sum_lr_squared`].
#[derive(Debug, Clone, Default)]
pub struct LengthBounds {
    /// Bound on ℓ(λ).
    pub lambda: Option<usize>,
    /// Per-slot bounds on ℓ(μ⁽ʲ⁾).
    pub mus: Option<Vec<usize>>,
}

/// Σ_λ Σ_𝛍 (c^λ_𝛍)² over λ ⊢ d and tuples 𝛍 with |μ⁽ʲ⁾| = dⱼ for the given
/// degree profile, or over all weak m-profiles summing to d when no profile
/// is given, subject to the length bounds.
pub fn sum_lr_squared(
    d: u32,
    m: usize,
    degree_profile: Option<&[u32]>,
    bounds: &LengthBounds,
) -> BigUint {
    let profiles: Vec<Vec<u32>> = match degree_profile {
        Some(p) => {
            assert_eq!(p.iter().sum::<u32>(), d, "profile must sum to d");
            assert_eq!(p.len(), m, "profile length must equal m");
            vec![p.to_vec()]
        }
        None => weak_compositions(d, m),
    };
    let mut total = BigUint::zero();
    for profile in &profiles {
        total += sum_lr_squared_profile(profile, bounds);
    }
    total
}

/// The LR-squared sum for one exact degree profile.
pub fn sum_lr_squared_profile(profile: &[u32], bounds: &LengthBounds) -> BigUint {
    let per_slot: Vec<Vec<Partition>> = profile
        .iter()
        .enumerate()
        .map(|(j, &dj)| {
            let bound = bounds.mus.as_ref().and_then(|b| b.get(j).copied());
            partitions_of(dj, bound, None)
        })
        .collect();
    let mut total = BigUint::zero();
    let mut tuple: Vec<Partition> = Vec::with_capacity(profile.len());
    sum_rec(&per_slot, 0, &mut tuple, bounds.lambda, &mut total);
    total
}

fn sum_rec(
    per_slot: &[Vec<Partition>],
    j: usize,
    tuple: &mut Vec<Partition>,
    lambda_bound: Option<usize>,
    total: &mut BigUint,
) {
    if j == per_slot.len() {
        let all = lr_multi_all(&PartitionTuple::new(tuple.clone()));
        for (lam, mult) in all {
            if lambda_bound.map_or(true, |n| lam.len() <= n) {
                *total += &mult * &mult;
            }
        }
        return;
    }
    for mu in &per_slot[j] {
        tuple.push(mu.clone());
        sum_rec(per_slot, j + 1, tuple, lambda_bound, total);
        tuple.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{schur, schur_expand};
    use num_bigint::BigInt;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    fn tup(entries: &[&[u32]]) -> PartitionTuple {
        PartitionTuple::new(entries.iter().map(|e| p(e)).collect())
    }

    #[test]
    fn lr_spot_values() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[2]), &p(&[1])), 0);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
    }

    #[test]
    fn lr_matches_schur_product_oracle() {
        // exhaustive up to |λ| = 6 here; the acceptance suite goes to 7
        for d in 0..=6u32 {
            for a in 0..=d {
                let mus = partitions_of(a, None, None);
                let nus = partitions_of(d - a, None, None);
                for mu in &mus {
                    for nu in &nus {
                        let prod = schur(mu).multiply(&schur(nu));
                        let expansion = schur_expand(&prod);
                        for lam in partitions_of(d, None, None) {
                            let want = expansion
                                .get(&lam)
                                .cloned()
                                .unwrap_or_else(|| BigInt::from(0));
                            assert_eq!(
                                BigInt::from(lr_coefficient(&lam, mu, nu)),
                                want,
                                "λ={lam} μ={mu} ν={nu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_symmetry() {
        for d in 0..=6u32 {
            for a in 0..=d {
                for mu in partitions_of(a, None, None) {
                    for nu in partitions_of(d - a, None, None) {
                        for lam in partitions_of(d, None, None) {
                            assert_eq!(
                                lr_coefficient(&lam, &mu, &nu),
                                lr_coefficient(&lam, &nu, &mu)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_spot_values() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(kostka(&p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(kostka(&p(&[1, 1]), &p(&[2])), 0);
        for lam in partitions_of(5, None, None) {
            assert_eq!(kostka(&lam, &lam), 1);
        }
    }

    #[test]
    fn multi_base_cases() {
        let lam = p(&[3, 1]);
        assert_eq!(lr_multi(&lam, &tup(&[&[3, 1]])), BigUint::one());
        assert_eq!(
            lr_multi(&Partition::empty(), &PartitionTuple::new(vec![])),
            BigUint::one()
        );
        assert_eq!(lr_multi(&p(&[3]), &tup(&[&[2], &[1]])), BigUint::one());
        // f^(2,1) = 2 standard Young tableaux
        assert_eq!(
            lr_multi(&p(&[2, 1]), &tup(&[&[1], &[1], &[1]])),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn multi_invariant_under_permutation() {
        let factors = vec![p(&[2, 1]), p(&[1]), p(&[2])];
        let base = lr_multi_all(&PartitionTuple::new(factors.clone()));
        let perms = [
            vec![1usize, 0, 2],
            vec![2, 1, 0],
            vec![1, 2, 0],
            vec![0, 2, 1],
            vec![2, 0, 1],
        ];
        for perm in &perms {
            let shuffled =
                PartitionTuple::new(perm.iter().map(|&i| factors[i].clone()).collect());
            assert_eq!(lr_multi_all(&shuffled), base);
        }
    }

    #[test]
    fn kostka_specialization() {
        // one-row tuples: c^λ_((ν₁),(ν₂),…) = K_{λν}
        for d in 0..=5u32 {
            for nu in partitions_of(d, None, None) {
                let rows: Vec<Partition> =
                    nu.parts().iter().map(|&v| Partition::new([v])).collect();
                let factors = PartitionTuple::new(rows);
                for lam in partitions_of(d, None, None) {
                    assert_eq!(
                        lr_multi(&lam, &factors),
                        BigUint::from(kostka(&lam, &nu)),
                        "λ={lam} ν={nu}"
                    );
                }
            }
        }
    }

    #[test]
    fn schur_weyl_factorials() {
        use crate::partition::factorial;
        for m in 1..=6u32 {
            let ones = PartitionTuple::new(vec![p(&[1]); m as usize]);
            let all = lr_multi_all(&ones);
            let mut total = BigUint::zero();
            for (_, mult) in all {
                total += &mult * &mult;
            }
            assert_eq!(total, factorial(m), "m = {m}");
        }
    }

    #[test]
    fn sum_lr_squared_examples() {
        assert_eq!(
            sum_lr_squared(3, 3, Some(&[1, 1, 1]), &LengthBounds::default()),
            BigUint::from(6u32)
        );
        let bounded = LengthBounds {
            lambda: Some(1),
            mus: None,
        };
        assert_eq!(
            sum_lr_squared(2, 2, Some(&[1, 1]), &bounded),
            BigUint::one()
        );
        assert_eq!(
            sum_lr_squared(2, 1, None, &LengthBounds::default()),
            BigUint::from(2u32)
        );
    }
}
