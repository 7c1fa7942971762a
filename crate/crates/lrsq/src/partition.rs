//! Integer partitions, partition tuples, and cycle-type statistics.
//!
//! Partitions are stored in canonical form: weakly decreasing parts with no
//! trailing zeros. The empty partition is the partition of 0.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

/// A partition of a non-negative integer, canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts; sorts descending and strips zeros.
    pub fn new<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of parts, |λ|.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `i`, zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Pad with zeros to length `n`. Panics if ℓ(λ) > n.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(self.parts.len() <= n, "partition longer than pad length");
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    /// Containment of Young diagrams: self ⊆ other.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= other.part(i))
    }

    /// Dominance order: self ⊵ other (self dominates), sizes must agree.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..self.parts.len().max(other.parts.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed partition {input:?}: {reason}")]
pub struct ParsePartitionError {
    pub input: String,
    pub reason: String,
}

impl FromStr for Partition {
    type Err = ParsePartitionError;

    /// Comma-separated parts, e.g. "3,2,1". Empty string or "0" is the
    /// empty partition. Parts must be weakly decreasing.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u32 = tok.trim().parse().map_err(|_| ParsePartitionError {
                input: s.to_string(),
                reason: format!("part {tok:?} is not a non-negative integer"),
            })?;
            if p > 0 {
                parts.push(p);
            }
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(ParsePartitionError {
                    input: s.to_string(),
                    reason: "parts must be weakly decreasing".to_string(),
                });
            }
        }
        Ok(Partition { parts })
    }
}

/// A finite ordered sequence of partitions 𝛍 = (μ⁽¹⁾,…,μ⁽ᵐ⁾).
/// Empty entries are allowed (weak-composition semantics).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PartitionTuple {
    pub entries: Vec<Partition>,
}

impl PartitionTuple {
    pub fn new(entries: Vec<Partition>) -> Self {
        PartitionTuple { entries }
    }

    /// |𝛍| = Σ |μ⁽ʲ⁾|.
    pub fn total_size(&self) -> u32 {
        self.entries.iter().map(|p| p.size()).sum()
    }

    /// Sorted concatenation ∪ μ⁽ʲ⁾ of all parts.
    pub fn concat(&self) -> Partition {
        Partition::new(
            self.entries
                .iter()
                .flat_map(|p| p.parts().iter().copied())
                .collect::<Vec<_>>(),
        )
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(";"))
    }
}

impl FromStr for PartitionTuple {
    type Err = ParsePartitionError;

    /// Entries joined by ";", e.g. "2,1;3;1,1".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(PartitionTuple::new(Vec::new()));
        }
        let entries = s
            .split(';')
            .map(|tok| tok.parse::<Partition>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PartitionTuple::new(entries))
    }
}

/// Multiplicity vector (v₁, v₂, …) with vᵢ = number of parts equal to i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeVector {
    pub multiplicities: Vec<u32>,
}

impl TypeVector {
    /// Round-trip back to the partition with these part multiplicities.
    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (i, &v) in self.multiplicities.iter().enumerate().rev() {
            for _ in 0..v {
                parts.push((i + 1) as u32);
            }
        }
        Partition { parts }
    }
}

/// The type vector of λ: vᵢ counts parts equal to i.
pub fn type_vector(lambda: &Partition) -> TypeVector {
    let max = lambda.part(0) as usize;
    let mut mult = vec![0u32; max];
    for &p in lambda.parts() {
        mult[p as usize - 1] += 1;
    }
    TypeVector {
        multiplicities: mult,
    }
}

/// z_λ = ∏ᵢ vᵢ! · i^{vᵢ}, the centralizer order of cycle type λ in S_{|λ|}.
pub fn z_lambda(lambda: &Partition) -> BigUint {
    let tv = type_vector(lambda);
    let mut z = BigUint::one();
    for (i, &v) in tv.multiplicities.iter().enumerate() {
        z *= factorial(v);
        z *= BigUint::from((i + 1) as u64).pow(v);
    }
    z
}

/// |λ|!/z_λ, the size of the conjugacy class of cycle type λ.
pub fn conjugacy_class_size(lambda: &Partition) -> BigUint {
    let num = factorial(lambda.size());
    let z = z_lambda(lambda);
    debug_assert!((&num % &z) == BigUint::from(0u32));
    num / z
}

pub fn factorial(n: u32) -> BigUint {
    let mut f = BigUint::one();
    for k in 2..=n as u64 {
        f *= BigUint::from(k);
    }
    f
}

/// All partitions of `n` in reverse-lexicographic order, subject to optional
/// bounds on the number of parts and the largest part.
pub fn partitions_of(n: u32, max_length: Option<usize>, max_part: Option<u32>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    let max_len = max_length.unwrap_or(usize::MAX);
    let max_part = max_part.unwrap_or(n).min(n.max(1));
    rec_partitions(n, max_part, max_len, &mut prefix, &mut out);
    out
}

fn rec_partitions(
    n: u32,
    max_part: u32,
    max_len: usize,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if n == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    if max_len == 0 || max_part == 0 {
        return;
    }
    let mut p = max_part.min(n);
    while p >= 1 {
        // remaining n - p must fit in (max_len - 1) parts each ≤ p
        if (n - p) as u64 <= (p as u64).saturating_mul(max_len as u64 - 1) {
            prefix.push(p);
            rec_partitions(n - p, p, max_len - 1, prefix, out);
            prefix.pop();
        }
        p -= 1;
    }
}

/// All weak compositions of `n` into exactly `m` parts, lexicographic order.
pub fn weak_compositions(n: u32, m: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(n: u32, m: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if m == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if m == 1 {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in 0..=n {
            cur.push(a);
            rec(n - a, m - 1, cur, out);
            cur.pop();
        }
    }
    rec(n, m, &mut cur, &mut out);
    out
}
