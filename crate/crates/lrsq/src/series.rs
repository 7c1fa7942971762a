//! Exact truncated formal power series in several variables.
//!
//! Coefficients are arbitrary-precision integers; truncation is by total
//! degree, and arithmetic never consults truncated-away terms, so every
//! stored coefficient is exact.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series shapes differ: {0} vars to degree {1} vs {2} vars to degree {3}")]
    ShapeMismatch(usize, u32, usize, u32),
    #[error("geometric inversion requires zero constant term")]
    NonzeroConstantTerm,
    #[error("factor({k}) differs from 1 below degree {k}")]
    FactorBelowDegree { k: u32 },
    #[error("coefficient at total degree {degree} exceeds truncation degree {max}")]
    DegreeOutOfRange { degree: u32, max: u32 },
    #[error("substitution image must have positive total degree")]
    ZeroDegreeImage,
}

/// Formal power series in `num_vars` variables, exact modulo terms of total
/// degree > `max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    num_vars: usize,
    max_degree: u32,
    coeffs: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(num_vars: usize, max_degree: u32) -> Self {
        assert!(num_vars >= 1);
        TruncatedSeries {
            num_vars,
            max_degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize, max_degree: u32) -> Self {
        let mut s = Self::zero(num_vars, max_degree);
        s.set_coefficient(vec![0; num_vars], BigInt::one());
        s
    }

    /// The monomial c·x^exp (dropped silently if beyond the truncation).
    pub fn monomial(num_vars: usize, max_degree: u32, exp: Vec<u32>, c: BigInt) -> Self {
        let mut s = Self::zero(num_vars, max_degree);
        s.set_coefficient(exp, c);
        s
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.coeffs
    }

    /// Set one coefficient, enforcing the truncation invariant.
    pub fn set_coefficient(&mut self, exp: Vec<u32>, c: BigInt) {
        assert_eq!(exp.len(), self.num_vars);
        if exp.iter().sum::<u32>() > self.max_degree {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&exp);
        } else {
            self.coeffs.insert(exp, c);
        }
    }

    fn add_to(&mut self, exp: Vec<u32>, c: &BigInt) {
        if exp.iter().sum::<u32>() > self.max_degree || c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Exact coefficient; degree beyond the truncation is an error, never a
    /// silent zero.
    pub fn coefficient(&self, exp: &[u32]) -> Result<BigInt, SeriesError> {
        assert_eq!(exp.len(), self.num_vars);
        let degree = exp.iter().sum::<u32>();
        if degree > self.max_degree {
            return Err(SeriesError::DegreeOutOfRange {
                degree,
                max: self.max_degree,
            });
        }
        Ok(self.coeffs.get(exp).cloned().unwrap_or_else(BigInt::zero))
    }

    fn same_shape(&self, other: &TruncatedSeries) -> Result<(), SeriesError> {
        if self.num_vars != other.num_vars || self.max_degree != other.max_degree {
            return Err(SeriesError::ShapeMismatch(
                self.num_vars,
                self.max_degree,
                other.num_vars,
                other.max_degree,
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_to(e.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_to(e.clone(), &(-c));
        }
        Ok(out)
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.same_shape(other)?;
        let mut out = Self::zero(self.num_vars, self.max_degree);
        for (ea, ca) in &self.coeffs {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in &other.coeffs {
                let db: u32 = eb.iter().sum();
                if da + db > self.max_degree {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_to(e, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// 1/(1−f) = Σ_{u≥0} f^u for f with zero constant term; terminates
    /// because f^u starts at total degree ≥ u.
    pub fn inverse_one_minus(&self) -> Result<TruncatedSeries, SeriesError> {
        if !self
            .coeffs
            .get(&vec![0; self.num_vars])
            .map_or(true, |c| c.is_zero())
        {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let mut out = Self::one(self.num_vars, self.max_degree);
        let mut power = Self::one(self.num_vars, self.max_degree);
        for _ in 1..=self.max_degree {
            power = power.mul(self)?;
            if power.coeffs.is_empty() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(out)
    }

    /// ∏_{k=1}^{D} factor(k), requiring factor(k) = 1 + O(total degree k) so
    /// the infinite product is coefficient-wise finite.
    pub fn product_over_k<F>(
        num_vars: usize,
        max_degree: u32,
        factor: F,
    ) -> Result<TruncatedSeries, SeriesError>
    where
        F: Fn(u32) -> Result<TruncatedSeries, SeriesError>,
    {
        let mut out = Self::one(num_vars, max_degree);
        for k in 1..=max_degree.max(1) {
            if k > max_degree {
                break;
            }
            let f = factor(k)?;
            out.same_shape(&f)?;
            let mut probe = f.clone();
            probe.add_to(vec![0; num_vars], &BigInt::from(-1));
            if probe
                .coeffs
                .keys()
                .any(|e| e.iter().sum::<u32>() < k)
            {
                return Err(SeriesError::FactorBelowDegree { k });
            }
            out = out.mul(&f)?;
        }
        Ok(out)
    }

    /// Substitute variable i ↦ the monomial `images[i]` (in the target
    /// variable set), truncating exactly at `target_degree`.
    pub fn substitute(
        &self,
        images: &[Vec<u32>],
        target_vars: usize,
        target_degree: u32,
    ) -> Result<TruncatedSeries, SeriesError> {
        assert_eq!(images.len(), self.num_vars);
        // soundness: images have positive degree, so source terms of total
        // degree > target_degree can never land within the target truncation
        assert!(
            target_degree <= self.max_degree,
            "substitution cannot extend the truncation degree"
        );
        for img in images {
            assert_eq!(img.len(), target_vars);
            if img.iter().sum::<u32>() == 0 {
                return Err(SeriesError::ZeroDegreeImage);
            }
        }
        let mut out = Self::zero(target_vars, target_degree);
        for (e, c) in &self.coeffs {
            let mut img = vec![0u32; target_vars];
            for (i, &pow) in e.iter().enumerate() {
                for (t, &base) in images[i].iter().enumerate() {
                    img[t] += pow * base;
                }
            }
            out.add_to(img, c);
        }
        Ok(out)
    }

    /// Serializable form: coefficients as decimal strings so arbitrary
    /// precision survives JSON.
    pub fn to_json(&self, var_names: &[&str]) -> SeriesJson {
        assert_eq!(var_names.len(), self.num_vars);
        SeriesJson {
            vars: var_names.iter().map(|s| s.to_string()).collect(),
            max_degree: self.max_degree,
            terms: self
                .coeffs
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesJson {
    pub vars: Vec<String>,
    pub max_degree: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

/// Comparison of two independently computed series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub lhs: TruncatedSeries,
    pub rhs: TruncatedSeries,
    pub equal: bool,
    /// Lexicographically first exponent vector where the sides differ.
    pub first_discrepancy: Option<Vec<u32>>,
}

impl IdentityReport {
    pub fn compare(lhs: TruncatedSeries, rhs: TruncatedSeries) -> IdentityReport {
        let mut first = None;
        let mut keys: Vec<&Vec<u32>> = lhs.coeffs.keys().chain(rhs.coeffs.keys()).collect();
        keys.sort();
        keys.dedup();
        for e in keys {
            let a = lhs.coeffs.get(e).cloned().unwrap_or_else(BigInt::zero);
            let b = rhs.coeffs.get(e).cloned().unwrap_or_else(BigInt::zero);
            if a != b {
                first = Some(e.clone());
                break;
            }
        }
        IdentityReport {
            equal: first.is_none(),
            first_discrepancy: first,
            lhs,
            rhs,
        }
    }
}

/// 1/(1−c·t^k) as a univariate factor, handy for ∏-style products.
pub fn geometric_factor(max_degree: u32, k: u32, c: &BigInt) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(1, max_degree);
    let mut pow = BigInt::one();
    let mut deg = 0;
    while deg <= max_degree {
        s.set_coefficient(vec![deg], pow.clone());
        pow *= c;
        deg += k;
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(max: u32, coeffs: &[i64]) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(1, max);
        for (i, &c) in coeffs.iter().enumerate() {
            s.set_coefficient(vec![i as u32], BigInt::from(c));
        }
        s
    }

    #[test]
    fn mul_basics() {
        let a = uni(2, &[1, 1]); // 1+t
        let b = uni(2, &[1, -1]); // 1−t
        assert_eq!(a.mul(&b).unwrap(), uni(2, &[1, 0, -1]));
        let f = uni(2, &[1, 1, 1]);
        assert_eq!(f.mul(&uni(2, &[1, 1])).unwrap(), uni(2, &[1, 2, 2]));
        let one = TruncatedSeries::one(1, 2);
        assert_eq!(one.mul(&f).unwrap(), f);
    }

    #[test]
    fn mul_shape_mismatch() {
        let a = uni(2, &[1]);
        let b = uni(3, &[1]);
        assert!(matches!(a.mul(&b), Err(SeriesError::ShapeMismatch(..))));
    }

    #[test]
    fn geometric_inverse() {
        let t = uni(3, &[0, 1]);
        assert_eq!(t.inverse_one_minus().unwrap(), uni(3, &[1, 1, 1, 1]));
        let two_t = uni(2, &[0, 2]);
        assert_eq!(two_t.inverse_one_minus().unwrap(), uni(2, &[1, 2, 4]));
        assert!(matches!(
            uni(2, &[1, 1]).inverse_one_minus(),
            Err(SeriesError::NonzeroConstantTerm)
        ));
    }

    #[test]
    fn geometric_inverse_two_vars() {
        // 1/(1−(t₁+t₂)) to total degree 2
        let mut f = TruncatedSeries::zero(2, 2);
        f.set_coefficient(vec![1, 0], BigInt::one());
        f.set_coefficient(vec![0, 1], BigInt::one());
        let inv = f.inverse_one_minus().unwrap();
        assert_eq!(inv.coefficient(&[0, 0]).unwrap(), BigInt::from(1));
        assert_eq!(inv.coefficient(&[1, 0]).unwrap(), BigInt::from(1));
        assert_eq!(inv.coefficient(&[2, 0]).unwrap(), BigInt::from(1));
        assert_eq!(inv.coefficient(&[1, 1]).unwrap(), BigInt::from(2));
    }

    #[test]
    fn inverse_is_exact_inverse() {
        let mut f = TruncatedSeries::zero(2, 6);
        f.set_coefficient(vec![1, 0], BigInt::from(3));
        f.set_coefficient(vec![1, 1], BigInt::from(-2));
        f.set_coefficient(vec![0, 2], BigInt::from(5));
        let inv = f.inverse_one_minus().unwrap();
        let one_minus = TruncatedSeries::one(2, 6).sub(&f).unwrap();
        assert_eq!(inv.mul(&one_minus).unwrap(), TruncatedSeries::one(2, 6));
    }

    #[test]
    fn product_partition_counts() {
        // ∏ 1/(1−t^k) counts partitions
        let s = TruncatedSeries::product_over_k(1, 4, |k| {
            Ok(geometric_factor(4, k, &BigInt::one()))
        })
        .unwrap();
        assert_eq!(s, uni(4, &[1, 1, 2, 3, 5]));
        let s2 = TruncatedSeries::product_over_k(1, 4, |k| {
            Ok(geometric_factor(4, k, &BigInt::from(2)))
        })
        .unwrap();
        assert_eq!(s2, uni(4, &[1, 2, 6, 14, 34]));
        let c = TruncatedSeries::product_over_k(1, 0, |k| {
            Ok(geometric_factor(0, k, &BigInt::one()))
        })
        .unwrap();
        assert_eq!(c, TruncatedSeries::one(1, 0));
    }

    #[test]
    fn product_precondition() {
        // factor(k) = 1/(1−t) for all k violates the degree-k condition at k=2
        let r = TruncatedSeries::product_over_k(1, 4, |_| {
            Ok(geometric_factor(4, 1, &BigInt::one()))
        });
        assert!(matches!(r, Err(SeriesError::FactorBelowDegree { k: 2 })));
    }

    #[test]
    fn substitution() {
        let mut f = TruncatedSeries::zero(2, 4);
        f.set_coefficient(vec![1, 1], BigInt::one());
        let got = f.substitute(&[vec![1], vec![2]], 1, 4).unwrap();
        assert_eq!(got, uni(4, &[0, 0, 0, 1]));
        let mut g = TruncatedSeries::zero(1, 4);
        g.set_coefficient(vec![2], BigInt::one());
        // t₁ ↦ q·t: t₁² ↦ q²t²
        let qt = g.substitute(&[vec![1, 1]], 2, 4).unwrap();
        assert_eq!(qt.coefficient(&[2, 2]).unwrap(), BigInt::one());
        assert!(matches!(
            g.substitute(&[vec![0, 0]], 2, 4),
            Err(SeriesError::ZeroDegreeImage)
        ));
    }

    #[test]
    fn coefficient_contract() {
        let s = uni(3, &[1, 1]);
        assert_eq!(s.coefficient(&[2]).unwrap(), BigInt::zero());
        assert!(matches!(
            s.coefficient(&[4]),
            Err(SeriesError::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn identity_report_discrepancy() {
        let a = uni(3, &[1, 2, 3]);
        let b = uni(3, &[1, 2, 4]);
        let r = IdentityReport::compare(a.clone(), b);
        assert!(!r.equal);
        assert_eq!(r.first_discrepancy, Some(vec![2]));
        let r2 = IdentityReport::compare(a.clone(), a);
        assert!(r2.equal);
    }
}
