//! p-adic valuations of factorials and factorial ratios.
//!
//! Everything here is driven by Legendre's formula
//! `ord_p(n!) = sum_{i >= 1} floor(n / p^i)`, which turns questions about huge
//! factorial products into sums of small machine integers.

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValuationError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("factorial argument {form} is negative at n = {n}")]
    NegativeArgument { form: LinearForm, n: u64 },
    #[error("unbalanced factorial ratio: numerator coefficients sum to {numerator}, denominator to {denominator}")]
    Unbalanced { numerator: u64, denominator: u64 },
}

/// An affine form `coeff * n + offset` in the sweep variable `n`.
///
/// Coefficient zero is allowed and yields a constant, e.g. the `2!` hiding in
/// the `2(2n+1)` denominator of `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinearForm {
    pub coeff: u64,
    pub offset: i64,
}

impl LinearForm {
    pub const fn new(coeff: u64, offset: i64) -> Self {
        LinearForm { coeff, offset }
    }

    pub const fn constant(value: i64) -> Self {
        LinearForm { coeff: 0, offset: value }
    }

    pub fn eval(&self, n: u64) -> i64 {
        self.coeff as i64 * n as i64 + self.offset
    }

    /// Evaluates the form as a factorial argument, rejecting negative values.
    pub fn eval_nonneg(&self, n: u64) -> Result<u64, ValuationError> {
        let v = self.eval(n);
        u64::try_from(v).map_err(|_| ValuationError::NegativeArgument { form: *self, n })
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coeff, self.offset) {
            (0, d) => write!(f, "{d}"),
            (c, 0) => write!(f, "{}n", coeff_str(c)),
            (c, d) if d > 0 => write!(f, "{}n+{d}", coeff_str(c)),
            (c, d) => write!(f, "{}n-{}", coeff_str(c), -d),
        }
    }
}

fn coeff_str(c: u64) -> String {
    if c == 1 {
        String::new()
    } else {
        c.to_string()
    }
}

/// `prod (a_i n + d_i)! / prod (b_j n + e_j)!` with balanced `n`-coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorialRatioSpec {
    numerator: Vec<LinearForm>,
    denominator: Vec<LinearForm>,
}

impl FactorialRatioSpec {
    pub fn new(
        numerator: Vec<LinearForm>,
        denominator: Vec<LinearForm>,
    ) -> Result<Self, ValuationError> {
        let num: u64 = numerator.iter().map(|f| f.coeff).sum();
        let den: u64 = denominator.iter().map(|f| f.coeff).sum();
        if num != den {
            return Err(ValuationError::Unbalanced {
                numerator: num,
                denominator: den,
            });
        }
        Ok(FactorialRatioSpec {
            numerator,
            denominator,
        })
    }

    /// `n! / n!`, the identity ratio.
    pub fn identity() -> Self {
        let n = LinearForm::new(1, 0);
        FactorialRatioSpec {
            numerator: vec![n],
            denominator: vec![n],
        }
    }

    pub fn numerator(&self) -> &[LinearForm] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[LinearForm] {
        &self.denominator
    }

    /// Factorial arguments at `n`, numerator first.
    pub fn arguments(&self, n: u64) -> Result<(Vec<u64>, Vec<u64>), ValuationError> {
        let num = self
            .numerator
            .iter()
            .map(|f| f.eval_nonneg(n))
            .collect::<Result<Vec<_>, _>>()?;
        let den = self
            .denominator
            .iter()
            .map(|f| f.eval_nonneg(n))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((num, den))
    }

    pub fn max_argument(&self, n: u64) -> Result<u64, ValuationError> {
        let (num, den) = self.arguments(n)?;
        Ok(num.into_iter().chain(den).max().unwrap_or(0))
    }
}

impl fmt::Display for FactorialRatioSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |forms: &[LinearForm]| {
            if forms.is_empty() {
                "1".to_string()
            } else {
                forms
                    .iter()
                    .map(|l| format!("({l})!"))
                    .collect::<Vec<_>>()
                    .join("")
            }
        };
        write!(f, "{} / {}", side(&self.numerator), side(&self.denominator))
    }
}

/// Prime orders of a factorial ratio at a fixed `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PadicProfile {
    pub n: u64,
    /// Every prime up to the largest factorial argument, including zero orders.
    pub orders: BTreeMap<u64, i64>,
}

impl PadicProfile {
    pub fn order(&self, p: u64) -> i64 {
        self.orders.get(&p).copied().unwrap_or(0)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.orders
            .iter()
            .filter(|(_, &e)| e != 0)
            .map(|(&p, &e)| (p, e))
    }

    /// `prod p^order` as an exact rational.
    pub fn value(&self) -> BigRational {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (p, e) in self.nonzero() {
            let pow = BigUint::from(p).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num *= pow;
            } else {
                den *= pow;
            }
        }
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

/// Sieve of Eratosthenes.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    composite: Vec<bool>,
    primes: Vec<u64>,
}

impl PrimeSieve {
    pub fn new(limit: u64) -> Self {
        let limit = limit as usize;
        let mut composite = vec![false; limit + 1];
        composite[0] = true;
        if limit >= 1 {
            composite[1] = true;
        }
        let mut i = 2;
        while i * i <= limit {
            if !composite[i] {
                let mut j = i * i;
                while j <= limit {
                    composite[j] = true;
                    j += i;
                }
            }
            i += 1;
        }
        let primes = (2..=limit as u64)
            .filter(|&k| !composite[k as usize])
            .collect();
        PrimeSieve { composite, primes }
    }

    pub fn limit(&self) -> u64 {
        (self.composite.len() - 1) as u64
    }

    pub fn is_prime(&self, p: u64) -> Option<bool> {
        self.composite.get(p as usize).map(|c| !c)
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn primes_up_to(&self, n: u64) -> &[u64] {
        let end = self.primes.partition_point(|&p| p <= n);
        &self.primes[..end]
    }
}

const SHARED_SIEVE_LIMIT: u64 = 1 << 21;

fn shared_sieve() -> &'static PrimeSieve {
    static SIEVE: OnceLock<PrimeSieve> = OnceLock::new();
    SIEVE.get_or_init(|| PrimeSieve::new(SHARED_SIEVE_LIMIT))
}

pub fn is_prime(p: u64) -> bool {
    match shared_sieve().is_prime(p) {
        Some(v) => v,
        None => {
            let mut d = 2;
            while d * d <= p {
                if p.is_multiple_of(d) {
                    return false;
                }
                d += 1;
            }
            true
        }
    }
}

pub fn primes_up_to(n: u64) -> Cow<'static, [u64]> {
    if n <= SHARED_SIEVE_LIMIT {
        Cow::Borrowed(shared_sieve().primes_up_to(n))
    } else {
        Cow::Owned(PrimeSieve::new(n).primes)
    }
}

/// Legendre's sum without the primality check.
pub(crate) fn legendre_unchecked(p: u64, n: u64) -> u64 {
    let mut total = 0;
    let mut q = n;
    while q >= p {
        q /= p;
        total += q;
    }
    total
}

/// `ord_p(n!)`.
pub fn legendre_ord(p: u64, n: u64) -> Result<u64, ValuationError> {
    if !is_prime(p) {
        return Err(ValuationError::NotPrime(p));
    }
    Ok(legendre_unchecked(p, n))
}

/// `ord_p` of the ratio at `n`; negative when `p` survives in the denominator.
pub fn ratio_ord(p: u64, spec: &FactorialRatioSpec, n: u64) -> Result<i64, ValuationError> {
    if !is_prime(p) {
        return Err(ValuationError::NotPrime(p));
    }
    let (num, den) = spec.arguments(n)?;
    Ok(ratio_ord_of_arguments(p, &num, &den))
}

pub(crate) fn ratio_ord_of_arguments(p: u64, num: &[u64], den: &[u64]) -> i64 {
    let up: u64 = num.iter().map(|&a| legendre_unchecked(p, a)).sum();
    let down: u64 = den.iter().map(|&a| legendre_unchecked(p, a)).sum();
    up as i64 - down as i64
}

pub fn padic_profile(spec: &FactorialRatioSpec, n: u64) -> Result<PadicProfile, ValuationError> {
    let (num, den) = spec.arguments(n)?;
    let max = num.iter().chain(&den).copied().max().unwrap_or(0);
    let orders = primes_up_to(max)
        .iter()
        .map(|&p| (p, ratio_ord_of_arguments(p, &num, &den)))
        .collect();
    Ok(PadicProfile { n, orders })
}

pub fn binary_digit_sum(n: u64) -> u32 {
    n.count_ones()
}

/// Sum of the base-`base` digits of `n`.
pub fn digit_sum(mut n: u64, base: u64) -> u64 {
    assert!(base >= 2, "digit_sum: base must be at least 2");
    let mut s = 0;
    while n > 0 {
        s += n % base;
        n /= base;
    }
    s
}

/// Exponent of `p` in `m`, by repeated division. `m` must be nonzero.
pub fn ord_of_integer(p: u64, mut m: u64) -> u32 {
    debug_assert!(m != 0 && p >= 2);
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    e
}

/// Trial-division factorization, ascending primes.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s_n_spec() -> FactorialRatioSpec {
        FactorialRatioSpec::new(
            vec![LinearForm::new(6, 0), LinearForm::new(1, 0)],
            vec![
                LinearForm::new(3, 0),
                LinearForm::new(2, 0),
                LinearForm::new(2, 1),
                LinearForm::constant(2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_ord(2, 0), Ok(0));
        assert_eq!(legendre_ord(2, 4), Ok(3));
        assert_eq!(legendre_ord(3, 9), Ok(4));
    }

    #[test]
    fn legendre_rejects_non_primes() {
        assert_eq!(legendre_ord(1, 5), Err(ValuationError::NotPrime(1)));
        assert_eq!(legendre_ord(0, 5), Err(ValuationError::NotPrime(0)));
        assert_eq!(legendre_ord(9, 5), Err(ValuationError::NotPrime(9)));
    }

    #[test]
    fn ratio_ord_of_s1() {
        // S_1 = 5
        let spec = s_n_spec();
        assert_eq!(ratio_ord(5, &spec, 1), Ok(1));
        assert_eq!(ratio_ord(7, &spec, 1), Ok(0));
        assert_eq!(ratio_ord(2, &spec, 1), Ok(0));
    }

    #[test]
    fn profile_of_s1_and_s2() {
        let spec = s_n_spec();
        let p1 = padic_profile(&spec, 1).unwrap();
        assert_eq!(p1.nonzero().collect::<Vec<_>>(), vec![(5, 1)]);
        let p2 = padic_profile(&spec, 2).unwrap();
        assert_eq!(p2.nonzero().collect::<Vec<_>>(), vec![(3, 1), (7, 1), (11, 1)]);
        assert_eq!(p2.value(), BigRational::from_integer(231.into()));
        // all primes up to 12 = 6n are listed
        assert_eq!(p2.orders.keys().copied().collect::<Vec<_>>(), vec![2, 3, 5, 7, 11]);
    }

    #[test]
    fn identity_profile_is_trivial() {
        let spec = FactorialRatioSpec::identity();
        for n in [0, 1, 17, 100] {
            assert_eq!(padic_profile(&spec, n).unwrap().nonzero().count(), 0);
        }
    }

    #[test]
    fn unbalanced_spec_rejected() {
        let err = FactorialRatioSpec::new(vec![LinearForm::new(2, 0)], vec![LinearForm::new(1, 0)]);
        assert_eq!(
            err,
            Err(ValuationError::Unbalanced {
                numerator: 2,
                denominator: 1
            })
        );
    }

    #[test]
    fn negative_argument_rejected() {
        let spec =
            FactorialRatioSpec::new(vec![LinearForm::new(1, -1)], vec![LinearForm::new(1, 0)]).unwrap();
        assert!(matches!(
            ratio_ord(2, &spec, 0),
            Err(ValuationError::NegativeArgument { n: 0, .. })
        ));
        assert_eq!(ratio_ord(2, &spec, 4), Ok(-2));
    }

    #[test]
    fn digit_sums() {
        assert_eq!(binary_digit_sum(0), 0);
        assert_eq!(binary_digit_sum(8), 1);
        assert_eq!(binary_digit_sum(11), 3);
        assert_eq!(digit_sum(100, 10), 1);
        assert_eq!(digit_sum(26, 3), 6);
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(43263), vec![(3, 2), (11, 1), (19, 1), (23, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }

    #[test]
    fn linear_form_display() {
        assert_eq!(LinearForm::new(2, 3).to_string(), "2n+3");
        assert_eq!(LinearForm::new(5, -1).to_string(), "5n-1");
        assert_eq!(LinearForm::new(1, 0).to_string(), "n");
        assert_eq!(LinearForm::constant(2).to_string(), "2");
    }
}
