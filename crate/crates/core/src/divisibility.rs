//! Exact big-integer evaluation of factorial ratios and the divisibility
//! claims built on them.
//!
//! Two independent routes decide every divisibility verdict: exact division
//! of big integers, and prime-by-prime valuations from [`crate::valuation`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::valuation::{
    self, binary_digit_sum, factorize, ord_of_integer, padic_profile, ratio_ord, FactorialRatioSpec,
    LinearForm, ValuationError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisibilityError {
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error("{what} is not an integer at n = {n}")]
    NotIntegral { what: String, n: u64 },
    #[error("parameter domain violated: {0}")]
    Domain(String),
}

/// Product of the integers in `(lo, hi]`.
pub fn range_product(lo: u64, hi: u64) -> BigUint {
    if hi <= lo {
        return BigUint::one();
    }
    if hi - lo <= 16 {
        let mut acc = BigUint::one();
        let mut small: u64 = 1;
        for k in lo + 1..=hi {
            match small.checked_mul(k) {
                Some(v) => small = v,
                None => {
                    acc *= small;
                    small = k;
                }
            }
        }
        return acc * small;
    }
    let mid = lo + (hi - lo) / 2;
    range_product(lo, mid) * range_product(mid, hi)
}

pub fn factorial(n: u64) -> BigUint {
    range_product(0, n)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    range_product(n - k, n) / range_product(0, k)
}

/// Factorials of the given arguments, built by one ascending pass of
/// incremental range products.
pub fn factorial_table(args: &[u64]) -> BTreeMap<u64, BigUint> {
    let mut sorted: Vec<u64> = args.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut table = BTreeMap::new();
    let mut prev = 0;
    let mut acc = BigUint::one();
    for a in sorted {
        acc *= range_product(prev, a);
        prev = a;
        table.insert(a, acc.clone());
    }
    table
}

/// `prod num! / prod den!` as an exact rational.
pub fn factorial_ratio_value(num: &[u64], den: &[u64]) -> BigRational {
    let all: Vec<u64> = num.iter().chain(den).copied().collect();
    let table = factorial_table(&all);
    let top: BigUint = num.iter().map(|a| &table[a]).product();
    let bottom: BigUint = den.iter().map(|a| &table[a]).product();
    let (q, r) = top.div_rem(&bottom);
    if r.is_zero() {
        BigRational::from_integer(BigInt::from(q))
    } else {
        BigRational::new(BigInt::from(top), BigInt::from(bottom))
    }
}

pub fn eval_ratio(spec: &FactorialRatioSpec, n: u64) -> Result<BigRational, DivisibilityError> {
    let (num, den) = spec.arguments(n)?;
    Ok(factorial_ratio_value(&num, &den))
}

pub fn eval_integer_ratio(spec: &FactorialRatioSpec, n: u64) -> Result<BigUint, DivisibilityError> {
    let v = eval_ratio(spec, n)?;
    if !v.is_integer() {
        return Err(DivisibilityError::NotIntegral {
            what: spec.to_string(),
            n,
        });
    }
    Ok(v.to_integer().to_biguint().expect("factorial ratios are positive"))
}

fn multiply_factors(acc: &mut BigUint, factors: impl Iterator<Item = u64>) {
    let mut small: u64 = 1;
    for k in factors {
        match small.checked_mul(k) {
            Some(v) => small = v,
            None => {
                *acc *= small;
                small = k;
            }
        }
    }
    *acc *= small;
}

/// Walks an integral factorial ratio `R(n), R(n+1), ...` using the
/// hypergeometric step `R(n+1)/R(n)`, a product of small integers.
#[derive(Debug, Clone)]
pub struct RatioSequence {
    spec: FactorialRatioSpec,
    n: u64,
    value: BigUint,
}

impl RatioSequence {
    pub fn starting_at(spec: FactorialRatioSpec, n: u64) -> Result<Self, DivisibilityError> {
        let value = eval_integer_ratio(&spec, n)?;
        Ok(RatioSequence { spec, n, value })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn advance(&mut self) -> Result<(), DivisibilityError> {
        let n = self.n;
        let steps = |forms: &[LinearForm]| -> Result<Vec<u64>, DivisibilityError> {
            let mut out = Vec::new();
            for f in forms {
                let base = f.eval_nonneg(n)?;
                out.extend((1..=f.coeff).map(|k| base + k));
            }
            Ok(out)
        };
        let up = steps(self.spec.numerator())?;
        let down = steps(self.spec.denominator())?;
        multiply_factors(&mut self.value, up.into_iter());
        let mut divisor = BigUint::one();
        multiply_factors(&mut divisor, down.into_iter());
        let (q, r) = self.value.div_rem(&divisor);
        if !r.is_zero() {
            return Err(DivisibilityError::NotIntegral {
                what: self.spec.to_string(),
                n: n + 1,
            });
        }
        self.value = q;
        self.n += 1;
        Ok(())
    }
}

/// The two sequences the main congruences are stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sequence {
    /// `C(6n,3n) C(3n,n) / (2(2n+1) C(2n,n))`
    S,
    /// `C(15n,5n) C(5n-1,n-1) / ((10n+1) C(3n,n))`
    T,
}

impl Sequence {
    pub fn spec(self) -> FactorialRatioSpec {
        let f = LinearForm::new;
        match self {
            Sequence::S => FactorialRatioSpec::new(
                vec![f(6, 0), f(1, 0)],
                vec![f(3, 0), f(2, 0), f(2, 1), LinearForm::constant(2)],
            ),
            Sequence::T => FactorialRatioSpec::new(
                vec![f(15, 0), f(5, -1), f(1, 0), f(2, 0)],
                vec![f(5, 0), f(1, -1), f(4, 0), f(3, 0), f(10, 1)],
            ),
        }
        .expect("balanced by construction")
    }

    pub fn name(self) -> &'static str {
        match self {
            Sequence::S => "S_n",
            Sequence::T => "t_n",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceValue {
    pub n: u64,
    pub value: BigUint,
}

fn sequence_value(seq: Sequence, n: u64) -> Result<SequenceValue, DivisibilityError> {
    if n == 0 {
        return Err(DivisibilityError::Domain(format!("{} needs n >= 1", seq.name())));
    }
    let value = eval_integer_ratio(&seq.spec(), n)?;
    Ok(SequenceValue { n, value })
}

pub fn s_n(n: u64) -> Result<SequenceValue, DivisibilityError> {
    sequence_value(Sequence::S, n)
}

pub fn t_n(n: u64) -> Result<SequenceValue, DivisibilityError> {
    sequence_value(Sequence::T, n)
}

/// `modulus_form(n) | multiplier * sequence(n)` for every `n >= n_min`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityClaim {
    pub label: &'static str,
    pub multiplier: u64,
    pub multiplier_factors: &'static [(u64, u32)],
    pub sequence: Sequence,
    pub modulus_form: LinearForm,
    pub n_min: u64,
}

impl DivisibilityClaim {
    pub fn ratio(&self) -> FactorialRatioSpec {
        self.sequence.spec()
    }
}

impl fmt::Display for DivisibilityClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label)
    }
}

const fn claim(
    label: &'static str,
    multiplier: u64,
    multiplier_factors: &'static [(u64, u32)],
    sequence: Sequence,
    c: u64,
    d: i64,
) -> DivisibilityClaim {
    DivisibilityClaim {
        label,
        multiplier,
        multiplier_factors,
        sequence,
        modulus_form: LinearForm::new(c, d),
        n_min: 1,
    }
}

pub const THEOREM_1_1: DivisibilityClaim =
    claim("3 S_n = 0 (mod 2n+3)", 3, &[(3, 1)], Sequence::S, 2, 3);

pub const THEOREM_1_2: DivisibilityClaim =
    claim("21 t_n = 0 (mod 10n+3)", 21, &[(3, 1), (7, 1)], Sequence::T, 10, 3);

/// The six congruences, in the order they are stated.
pub const THEOREM_1_3: [DivisibilityClaim; 6] = [
    claim("105 S_n = 0 (mod 2n+5)", 105, &[(3, 1), (5, 1), (7, 1)], Sequence::S, 2, 5),
    claim("315 S_n = 0 (mod 2n+7)", 315, &[(3, 2), (5, 1), (7, 1)], Sequence::S, 2, 7),
    claim(
        "6435 S_n = 0 (mod 2n+9)",
        6435,
        &[(3, 2), (5, 1), (11, 1), (13, 1)],
        Sequence::S,
        2,
        9,
    ),
    // Encoded as printed; fails whenever 5 | 2n+1.
    claim(
        "3003 t_n = 0 (mod 2n+1)",
        3003,
        &[(3, 1), (7, 1), (11, 1), (13, 1)],
        Sequence::T,
        2,
        1,
    ),
    claim(
        "88179 t_n = 0 (mod 10n+7)",
        88179,
        &[(3, 1), (7, 1), (13, 1), (17, 1), (19, 1)],
        Sequence::T,
        10,
        7,
    ),
    claim(
        "43263 t_n = 0 (mod 10n+9)",
        43263,
        &[(3, 2), (11, 1), (19, 1), (23, 1)],
        Sequence::T,
        10,
        9,
    ),
];

/// Divisibility verdict given the already-computed sequence value.
pub fn check_claim_value(claim: &DivisibilityClaim, n: u64, value: &BigUint) -> bool {
    let modulus = claim.modulus_form.eval(n);
    debug_assert!(modulus > 0);
    ((value * claim.multiplier) % modulus as u64).is_zero()
}

pub fn check_claim(claim: &DivisibilityClaim, n: u64) -> Result<bool, DivisibilityError> {
    if n < claim.n_min {
        return Err(DivisibilityError::Domain(format!("{claim} needs n >= {}", claim.n_min)));
    }
    let value = eval_integer_ratio(&claim.ratio(), n)?;
    Ok(check_claim_value(claim, n, &value))
}

/// The same verdict from prime orders alone: every prime must have
/// non-negative order in `multiplier * ratio / modulus`.
pub fn check_claim_by_valuation(claim: &DivisibilityClaim, n: u64) -> Result<bool, DivisibilityError> {
    let profile = padic_profile(&claim.ratio(), n)?;
    let modulus = claim.modulus_form.eval(n) as u64;
    let modulus_primes = factorize(modulus);
    let primes = profile
        .orders
        .keys()
        .copied()
        .chain(modulus_primes.iter().map(|&(p, _)| p));
    for p in primes {
        let order = ord_of_integer(p, claim.multiplier) as i64 + profile.order(p)
            - ord_of_integer(p, modulus) as i64;
        if order < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both sides of `abm/((a+b)(m+n)) C(am+bm,am) C(an+bn,an)
/// = am/(m+n) C(am+bm-1,am) C(an+bn,an)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem14Forms {
    pub first: BigRational,
    pub second: BigRational,
}

impl Theorem14Forms {
    pub fn holds(&self) -> bool {
        self.first == self.second && self.second.is_integer()
    }
}

fn require_positive(values: &[(&str, u64)]) -> Result<(), DivisibilityError> {
    for (name, v) in values {
        if *v == 0 {
            return Err(DivisibilityError::Domain(format!("{name} must be positive")));
        }
    }
    Ok(())
}

fn ratio_of(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn theorem_1_4_forms(a: u64, b: u64, m: u64, n: u64) -> Result<Theorem14Forms, DivisibilityError> {
    require_positive(&[("a", a), ("b", b), ("m", m), ("n", n)])?;
    let right = binomial(a * n + b * n, a * n);
    let first = ratio_of(
        BigUint::from(a * b * m) * binomial(a * m + b * m, a * m) * &right,
        BigUint::from((a + b) * (m + n)),
    );
    let second = ratio_of(
        BigUint::from(a * m) * binomial(a * m + b * m - 1, a * m) * &right,
        BigUint::from(m + n),
    );
    Ok(Theorem14Forms { first, second })
}

pub fn check_theorem_1_4(a: u64, b: u64, m: u64, n: u64) -> Result<bool, DivisibilityError> {
    Ok(theorem_1_4_forms(a, b, m, n)?.holds())
}

/// `m / (2(m+n)) C(2m,m) C(2n,n)`.
pub fn corollary_1_5_value(m: u64, n: u64) -> Result<BigRational, DivisibilityError> {
    require_positive(&[("m", m), ("n", n)])?;
    Ok(ratio_of(
        BigUint::from(m) * binomial(2 * m, m) * binomial(2 * n, n),
        BigUint::from(2 * (m + n)),
    ))
}

/// `(k, j)` such that `k/(n+j) C(2n,n)` is claimed integral.
pub const COROLLARY_1_5_SPECIALIZATIONS: [(u64, u64); 4] = [(6, 2), (30, 3), (140, 4), (630, 5)];

pub fn central_binomial_spec() -> FactorialRatioSpec {
    FactorialRatioSpec::new(
        vec![LinearForm::new(2, 0)],
        vec![LinearForm::new(1, 0), LinearForm::new(1, 0)],
    )
    .expect("balanced")
}

/// Failures `(n, k, j)` of the four specializations for `lo <= n <= hi`.
pub fn corollary_1_5_specializations(lo: u64, hi: u64) -> Result<Vec<(u64, u64, u64)>, DivisibilityError> {
    let mut failures = Vec::new();
    if lo > hi {
        return Ok(failures);
    }
    let mut seq = RatioSequence::starting_at(central_binomial_spec(), lo.max(1))?;
    loop {
        let n = seq.n();
        for (k, j) in COROLLARY_1_5_SPECIALIZATIONS {
            if !((seq.value() * k) % (n + j)).is_zero() {
                failures.push((n, k, j));
            }
        }
        if n >= hi {
            break;
        }
        seq.advance()?;
    }
    Ok(failures)
}

/// Auxiliary ratios whose odd-prime orders are bounded case by case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AuxiliaryRatio {
    /// `C(6n,3n)C(3n,n)/((2n+3)C(2n,n))`
    SForm,
    /// `C(15n,5n)C(5n,n)/((10n+3)C(3n,n))`
    TForm,
    /// `C(6n,3n)C(3n,n)/((2n+7)C(2n,n))`
    XForm,
    /// `C(15n,5n)C(5n,n)/((10n+9)C(3n,n))`
    YForm,
}

impl AuxiliaryRatio {
    pub const ALL: [AuxiliaryRatio; 4] = [
        AuxiliaryRatio::SForm,
        AuxiliaryRatio::TForm,
        AuxiliaryRatio::XForm,
        AuxiliaryRatio::YForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AuxiliaryRatio::SForm => "S-form",
            AuxiliaryRatio::TForm => "t-form",
            AuxiliaryRatio::XForm => "X_n",
            AuxiliaryRatio::YForm => "Y_n",
        }
    }

    pub fn spec(self) -> FactorialRatioSpec {
        let f = LinearForm::new;
        let (num, den) = match self {
            AuxiliaryRatio::SForm => (
                vec![f(2, 2), f(6, 0), f(1, 0)],
                vec![f(2, 3), f(3, 0), f(2, 0), f(2, 0)],
            ),
            AuxiliaryRatio::XForm => (
                vec![f(2, 6), f(6, 0), f(1, 0)],
                vec![f(2, 7), f(3, 0), f(2, 0), f(2, 0)],
            ),
            AuxiliaryRatio::TForm => (
                vec![f(10, 2), f(15, 0), f(2, 0)],
                vec![f(10, 3), f(10, 0), f(4, 0), f(3, 0)],
            ),
            AuxiliaryRatio::YForm => (
                vec![f(10, 8), f(15, 0), f(2, 0)],
                vec![f(10, 9), f(10, 0), f(4, 0), f(3, 0)],
            ),
        };
        FactorialRatioSpec::new(num, den).expect("balanced")
    }

    /// The constant whose prime factors must absorb every negative order.
    pub fn constant(self) -> u64 {
        match self {
            AuxiliaryRatio::SForm => 3,
            AuxiliaryRatio::TForm => 21,
            AuxiliaryRatio::XForm => 105,
            AuxiliaryRatio::YForm => 43263,
        }
    }

    /// Lower bound on `ord_p` for an odd prime `p`.
    pub fn lower_bound(self, p: u64) -> i64 {
        match (self, p) {
            (AuxiliaryRatio::SForm, 3) => -1,
            (AuxiliaryRatio::TForm, 3 | 7) => -1,
            (AuxiliaryRatio::XForm, 3 | 5 | 7) => -1,
            (AuxiliaryRatio::YForm, 3) => -2,
            (AuxiliaryRatio::YForm, 11 | 19 | 23) => -1,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseBounds {
    pub ratio: AuxiliaryRatio,
    pub n: u64,
    /// Nonzero orders at odd primes.
    pub orders: BTreeMap<u64, i64>,
    /// `(p, order, bound)` with `order < bound`.
    pub violations: Vec<(u64, i64, i64)>,
    /// `prod p^(-order)` over odd primes with negative order.
    pub clearing_multiplier: BigUint,
}

impl CaseBounds {
    pub fn order(&self, p: u64) -> i64 {
        self.orders.get(&p).copied().unwrap_or(0)
    }

    pub fn cleared_by_constant(&self) -> bool {
        (BigUint::from(self.ratio.constant()) % &self.clearing_multiplier).is_zero()
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.cleared_by_constant()
    }
}

pub fn valuation_case_bounds(ratio: AuxiliaryRatio, n: u64) -> Result<CaseBounds, DivisibilityError> {
    require_positive(&[("n", n)])?;
    let profile = padic_profile(&ratio.spec(), n)?;
    let mut orders = BTreeMap::new();
    let mut violations = Vec::new();
    let mut clearing = BigUint::one();
    for (p, e) in profile.nonzero().filter(|&(p, _)| p != 2) {
        orders.insert(p, e);
        let bound = ratio.lower_bound(p);
        if e < bound {
            violations.push((p, e, bound));
        }
        if e < 0 {
            clearing *= BigUint::from(p).pow(e.unsigned_abs() as u32);
        }
    }
    Ok(CaseBounds {
        ratio,
        n,
        orders,
        violations,
        clearing_multiplier: clearing,
    })
}

/// `(2bn+1)(2bn+3) C(2bn,bn) | 3(a-b)(3a-b) C(2an,an) C(an,bn)` for `a > b`.
pub fn check_conjecture_7_1(a: u64, b: u64, n: u64) -> Result<bool, DivisibilityError> {
    require_positive(&[("a", a), ("b", b), ("n", n)])?;
    if a <= b {
        return Err(DivisibilityError::Domain(format!("need a > b, got a = {a}, b = {b}")));
    }
    let divisor = BigUint::from((2 * b * n + 1) * (2 * b * n + 3)) * binomial(2 * b * n, b * n);
    let dividend = BigUint::from(3 * (a - b) * (3 * a - b))
        * binomial(2 * a * n, a * n)
        * binomial(a * n, b * n);
    Ok((dividend % divisor).is_zero())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConjectureScan {
    pub checked: u64,
    /// `(a, b, n)`, ascending.
    pub counterexamples: Vec<(u64, u64, u64)>,
}

pub fn scan_conjecture_7_1(a_max: u64, b_max: u64, n_max: u64) -> ConjectureScan {
    let mut scan = ConjectureScan::default();
    for a in 2..=a_max {
        for b in 1..a.min(b_max + 1) {
            for n in 1..=n_max {
                scan.checked += 1;
                if !check_conjecture_7_1(a, b, n).expect("domain enforced by loop bounds") {
                    scan.counterexamples.push((a, b, n));
                }
            }
        }
    }
    scan
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityMismatch {
    pub n: u64,
    /// Trailing zero bits of the exact `S_n`.
    pub direct: u64,
    /// `ord_2 S_n` from Legendre sums.
    pub valuation: i64,
    /// `binary_digit_sum(n) - 1`.
    pub expected: i64,
}

/// Checks `ord_2 S_n = s_2(n) - 1` (hence `S_n` odd iff `n` is a power of
/// two) on `lo..=hi` by both the exact value and Legendre sums.
pub fn parity_range(lo: u64, hi: u64) -> Result<Vec<ParityMismatch>, DivisibilityError> {
    let mut out = Vec::new();
    if lo > hi {
        return Ok(out);
    }
    let spec = Sequence::S.spec();
    let mut seq = RatioSequence::starting_at(spec.clone(), lo.max(1))?;
    loop {
        let n = seq.n();
        let direct = seq.value().trailing_zeros().unwrap_or(0);
        let valuation = ratio_ord(2, &spec, n)?;
        let expected = binary_digit_sum(n) as i64 - 1;
        let parity_ok = (direct == 0) == n.is_power_of_two();
        if direct as i64 != expected || valuation != expected || !parity_ok {
            out.push(ParityMismatch {
                n,
                direct,
                valuation,
                expected,
            });
        }
        if n >= hi {
            break;
        }
        seq.advance()?;
    }
    Ok(out)
}

pub fn parity_power_of_two(n_max: u64) -> Result<Vec<ParityMismatch>, DivisibilityError> {
    parity_range(1, n_max)
}

/// `(6n)! n! / ((3n)! (2n)!^2)`.
pub fn sextuple_base_spec() -> FactorialRatioSpec {
    let f = LinearForm::new;
    FactorialRatioSpec::new(vec![f(6, 0), f(1, 0)], vec![f(3, 0), f(2, 0), f(2, 0)]).expect("balanced")
}

/// `n` in `lo..=hi` where `ord_2((6n)! n!/((3n)!(2n)!^2))` differs from the
/// binary digit sum of `n`, with both values.
pub fn ord2_digit_sum_range(lo: u64, hi: u64) -> Vec<(u64, i64, u32)> {
    let spec = sextuple_base_spec();
    (lo..=hi)
        .filter_map(|n| {
            let (num, den) = spec.arguments(n).expect("nonnegative");
            let ord = valuation::ratio_ord_of_arguments(2, &num, &den);
            let digits = binary_digit_sum(n);
            (ord != digits as i64).then_some((n, ord, digits))
        })
        .collect()
}

/// Small helper for reports: decimal rendering of an exact rational.
pub fn rational_to_string(v: &BigRational) -> String {
    if v.is_integer() {
        v.to_integer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}
