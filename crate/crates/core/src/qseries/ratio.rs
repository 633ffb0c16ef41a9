use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::cyclotomic::{mul_by_cyclotomic, totient};
use super::{DensePoly, QError};
use crate::divisibility::factorial_ratio_value;
use crate::valuation::LinearForm;

/// A product of q-factorials `[f(n)]! = (1-q)(1-q^2)...(1-q^f(n))` and single
/// factors `(1-q^g(n))`, divided by another such product.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QRatioSpec {
    pub qfact_numerator: Vec<LinearForm>,
    pub qfact_denominator: Vec<LinearForm>,
    pub single_numerator: Vec<LinearForm>,
    pub single_denominator: Vec<LinearForm>,
}

impl QRatioSpec {
    pub fn instantiate(&self, n: u64) -> Result<QRatioInstance, QError> {
        let eval = |forms: &[LinearForm]| -> Result<Vec<u64>, QError> {
            forms
                .iter()
                .map(|f| f.eval_nonneg(n).map_err(|_| QError::NegativeArgument { form: *f, n }))
                .collect()
        };
        QRatioInstance::new(
            eval(&self.qfact_numerator)?,
            eval(&self.qfact_denominator)?,
            eval(&self.single_numerator)?,
            eval(&self.single_denominator)?,
        )
    }
}

/// A [`QRatioSpec`] with all arguments fixed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct QRatioInstance {
    pub qfact_numerator: Vec<u64>,
    pub qfact_denominator: Vec<u64>,
    pub single_numerator: Vec<u64>,
    pub single_denominator: Vec<u64>,
}

impl QRatioInstance {
    /// Rejects `(1 - q^0)` factors and sign-unbalanced expressions.
    pub fn new(
        qfact_numerator: Vec<u64>,
        qfact_denominator: Vec<u64>,
        single_numerator: Vec<u64>,
        single_denominator: Vec<u64>,
    ) -> Result<Self, QError> {
        if single_numerator.iter().chain(&single_denominator).any(|&g| g == 0) {
            return Err(QError::ZeroFactor);
        }
        let up: u64 = qfact_numerator.iter().sum::<u64>() + single_numerator.len() as u64;
        let down: u64 = qfact_denominator.iter().sum::<u64>() + single_denominator.len() as u64;
        if up != down {
            return Err(QError::SignImbalance {
                numerator: up,
                denominator: down,
            });
        }
        Ok(QRatioInstance {
            qfact_numerator,
            qfact_denominator,
            single_numerator,
            single_denominator,
        })
    }

    pub fn max_argument(&self) -> u64 {
        self.qfact_numerator
            .iter()
            .chain(&self.qfact_denominator)
            .chain(&self.single_numerator)
            .chain(&self.single_denominator)
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Degree of the numerator product, a bound on every intermediate of the
    /// naive expansion.
    pub fn numerator_degree(&self) -> u64 {
        self.qfact_numerator.iter().map(|&m| m * (m + 1) / 2).sum::<u64>()
            + self.single_numerator.iter().sum::<u64>()
    }

    /// Value at `q = 1`: each `[m]!` tends to `m!` and each `(1-q^g)` to `g`
    /// once the balanced `(1-q)` powers cancel.
    pub fn value_at_one(&self) -> BigRational {
        let singles = BigRational::new(
            self.single_numerator.iter().map(|&g| BigInt::from(g)).product(),
            self.single_denominator.iter().map(|&g| BigInt::from(g)).product(),
        );
        singles * factorial_ratio_value(&self.qfact_numerator, &self.qfact_denominator)
    }
}

/// `d -> e_d` with the expression equal to `prod Φ_d(q)^{e_d}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycloExponentVector {
    /// Nonzero exponents only.
    pub exponents: BTreeMap<u64, i64>,
}

impl CycloExponentVector {
    pub fn get(&self, d: u64) -> i64 {
        self.exponents.get(&d).copied().unwrap_or(0)
    }

    /// Smallest `d` with a negative exponent.
    pub fn first_negative(&self) -> Option<(u64, i64)> {
        self.exponents
            .iter()
            .find(|(_, &e)| e < 0)
            .map(|(&d, &e)| (d, e))
    }

    pub fn is_polynomial(&self) -> bool {
        self.first_negative().is_none()
    }

    /// `sum e_d φ(d)`: the degree of the represented polynomial.
    pub fn degree(&self) -> i64 {
        self.exponents
            .iter()
            .map(|(&d, &e)| e * totient(d) as i64)
            .sum()
    }
}

/// Floor sums and divisibility indicators only; no polynomial arithmetic.
pub fn exponent_vector_of(instance: &QRatioInstance) -> CycloExponentVector {
    let max = instance.max_argument();
    let mut exponents = BTreeMap::new();
    for d in 1..=max {
        let floors = |ms: &[u64]| ms.iter().map(|&m| (m / d) as i64).sum::<i64>();
        let hits = |gs: &[u64]| gs.iter().filter(|&&g| g % d == 0).count() as i64;
        let e = floors(&instance.qfact_numerator) - floors(&instance.qfact_denominator)
            + hits(&instance.single_numerator)
            - hits(&instance.single_denominator);
        if e != 0 {
            exponents.insert(d, e);
        }
    }
    CycloExponentVector { exponents }
}

pub fn exponent_vector(spec: &QRatioSpec, n: u64) -> Result<CycloExponentVector, QError> {
    Ok(exponent_vector_of(&spec.instantiate(n)?))
}

/// Multiplies out `prod Φ_d^{e_d}` in ascending `d`.
pub fn expand(v: &CycloExponentVector) -> Result<DensePoly, QError> {
    if let Some((d, exponent)) = v.first_negative() {
        return Err(QError::NotPolynomial { d, exponent });
    }
    let mut poly = DensePoly::one();
    for (&d, &e) in &v.exponents {
        for _ in 0..e {
            poly = mul_by_cyclotomic(&poly, d);
        }
    }
    Ok(poly)
}

/// Independent route: multiply every numerator `(1-q^k)`, then divide out
/// each denominator factor, failing on the first inexact division.
pub fn direct_expansion(instance: &QRatioInstance) -> Result<DensePoly, QError> {
    let mut poly = DensePoly::one();
    for &m in &instance.qfact_numerator {
        for k in 1..=m {
            poly.mul_one_minus_q_pow(k as usize);
        }
    }
    for &g in &instance.single_numerator {
        poly.mul_one_minus_q_pow(g as usize);
    }
    for &m in &instance.qfact_denominator {
        for k in 1..=m {
            poly.div_one_minus_q_pow(k as usize)?;
        }
    }
    for &g in &instance.single_denominator {
        poly.div_one_minus_q_pow(g as usize)?;
    }
    Ok(poly)
}

/// Gaussian binomial by the q-Pascal rule `[n,k] = [n-1,k-1] + q^k [n-1,k]`;
/// zero outside `0 <= k <= n`.
pub fn qbinomial(n: u64, k: i64) -> DensePoly {
    if k < 0 || k as u64 > n {
        return DensePoly::zero();
    }
    let k = k as usize;
    let n = n as usize;
    // row[j] = [i, j] for the current i
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let top = i.min(k);
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(top + 1);
        for j in 0..=top {
            let deg = j * (i - j);
            let mut c = vec![BigInt::default(); deg + 1];
            if j >= 1 {
                for (t, a) in row[j - 1].iter().enumerate() {
                    c[t] += a;
                }
            }
            if j < i && j < row.len() {
                for (t, a) in row[j].iter().enumerate() {
                    c[t + j] += a;
                }
            }
            next.push(c);
        }
        row = next;
    }
    DensePoly::new(row.swap_remove(k))
}

/// `[n,k]` as a q-ratio spec instance: `[n]! / ([k]! [n-k]!)`.
pub fn qbinomial_instance(n: u64, k: u64) -> QRatioInstance {
    assert!(k <= n);
    QRatioInstance::new(vec![n], vec![k, n - k], vec![], vec![]).expect("balanced")
}

/// `(1-q^m)/(1-q^n) * p` for reciprocal unimodal `p` and `m <= n`; the result
/// must come out with non-negative coefficients.
pub fn rsw_filter(p: &DensePoly, m: u64, n: u64) -> Result<DensePoly, QError> {
    if m == 0 || m > n {
        return Err(QError::Precondition(format!("need 1 <= m <= n, got m = {m}, n = {n}")));
    }
    if !p.is_reciprocal() {
        return Err(QError::Precondition("input polynomial is not reciprocal".into()));
    }
    if let Some(i) = p.unimodality_violation() {
        return Err(QError::Precondition(format!("input polynomial is not unimodal at index {i}")));
    }
    let mut out = p.clone();
    out.mul_one_minus_q_pow(m as usize);
    out.div_one_minus_q_pow(n as usize)
        .map_err(|_| QError::NotPolynomialQuotient { m, n })?;
    if let Some(index) = out.first_negative() {
        return Err(QError::NegativeCoefficient { index });
    }
    Ok(out)
}
