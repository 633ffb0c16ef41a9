//! Floor-function step functions and congruence-conditioned floor identities.
//!
//! A balanced step function `f(x) = sum floor(a_i x) - sum floor(b_j x)` is
//! 1-periodic and constant on every interval `[k/L, (k+1)/L)` where `L` is the
//! lcm of all coefficients, so its minimum is found by scanning `k = 0..L`.
//! A non-negative minimum is exactly Landau's criterion for the factorial
//! ratio `prod (a_i n)! / prod (b_j n)!` to be integral for every `n`.

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::valuation::LinearForm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FloorError {
    #[error("step function is unbalanced: {numerator} vs {denominator}")]
    Unbalanced { numerator: u64, denominator: u64 },
    #[error("step function coefficients must be positive")]
    ZeroCoefficient,
    #[error("m = {m} does not divide {form} = {value} at n = {n}")]
    NotADivisor { m: u64, n: u64, form: LinearForm, value: i64 },
    #[error("m = {m} lies outside the identity's modulus domain ({domain})")]
    OutsideDomain { m: u64, domain: ModulusDomain },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepFunctionSpec {
    numerator: Vec<u64>,
    denominator: Vec<u64>,
}

impl StepFunctionSpec {
    pub fn new(numerator: Vec<u64>, denominator: Vec<u64>) -> Result<Self, FloorError> {
        if numerator.iter().chain(&denominator).any(|&c| c == 0) {
            return Err(FloorError::ZeroCoefficient);
        }
        let num: u64 = numerator.iter().sum();
        let den: u64 = denominator.iter().sum();
        if num != den {
            return Err(FloorError::Unbalanced {
                numerator: num,
                denominator: den,
            });
        }
        Ok(StepFunctionSpec {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &[u64] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[u64] {
        &self.denominator
    }

    /// Same spec with every coefficient multiplied by `t`.
    pub fn scaled(&self, t: u64) -> Self {
        StepFunctionSpec {
            numerator: self.numerator.iter().map(|c| c * t).collect(),
            denominator: self.denominator.iter().map(|c| c * t).collect(),
        }
    }

    /// lcm of all coefficients; every jump of `f` sits on a multiple of `1/L`.
    pub fn period_denominator(&self) -> u64 {
        self.numerator
            .iter()
            .chain(&self.denominator)
            .fold(1, |acc, &c| acc.lcm(&c))
    }

    /// `f(k / l)`.
    pub fn value_at(&self, k: u64, l: u64) -> i64 {
        let side = |cs: &[u64]| cs.iter().map(|&a| ((a as u128 * k as u128) / l as u128) as i64).sum::<i64>();
        side(&self.numerator) - side(&self.denominator)
    }

    fn scan(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        let l = self.period_denominator();
        (0..l).map(move |k| (k, self.value_at(k, l)))
    }
}

/// Global minimum of the step function over the reals.
pub fn landau_min(spec: &StepFunctionSpec) -> i64 {
    spec.scan().map(|(_, v)| v).min().unwrap_or(0)
}

/// Breakpoints `x = k/L` in `[0, 1)` attaining the minimum, ascending.
pub fn landau_witnesses(spec: &StepFunctionSpec) -> Vec<(Ratio<u64>, i64)> {
    let l = spec.period_denominator();
    let min = landau_min(spec);
    spec.scan()
        .filter(|&(_, v)| v == min)
        .map(|(k, v)| (Ratio::new(k, l), v))
        .collect()
}

/// Which moduli `m` an identity speaks about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModulusDomain {
    AtLeast(u64),
    OneOf(Vec<u64>),
}

impl ModulusDomain {
    pub fn contains(&self, m: u64) -> bool {
        match self {
            ModulusDomain::AtLeast(lo) => m >= *lo,
            ModulusDomain::OneOf(ms) => ms.contains(&m),
        }
    }

    pub fn m_min(&self) -> u64 {
        match self {
            ModulusDomain::AtLeast(lo) => *lo,
            ModulusDomain::OneOf(ms) => ms.iter().copied().min().unwrap_or(0),
        }
    }
}

impl std::fmt::Display for ModulusDomain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModulusDomain::AtLeast(lo) => write!(f, "m >= {lo}"),
            ModulusDomain::OneOf(ms) => {
                let list: Vec<String> = ms.iter().map(u64::to_string).collect();
                write!(f, "m in {{{}}}", list.join(","))
            }
        }
    }
}

/// `sum floor(a_i n/m) = sum floor(b_j n/m) + surplus` whenever
/// `m | divisor_form(n)` and `m` is in `moduli`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceIdentity {
    pub label: String,
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
    pub surplus: i64,
    pub divisor_form: LinearForm,
    pub moduli: ModulusDomain,
}

impl CongruenceIdentity {
    pub fn m_min(&self) -> u64 {
        self.moduli.m_min()
    }

    fn precondition(&self, m: u64, n: u64) -> Result<(), FloorError> {
        let value = self.divisor_form.eval(n);
        if m == 0 || value % m as i64 != 0 {
            return Err(FloorError::NotADivisor {
                m,
                n,
                form: self.divisor_form,
                value,
            });
        }
        if !self.moduli.contains(m) {
            return Err(FloorError::OutsideDomain {
                m,
                domain: self.moduli.clone(),
            });
        }
        Ok(())
    }
}

/// Checks the identity at `(m, n)` with integer floors.
pub fn check_congruence_identity(
    id: &CongruenceIdentity,
    m: u64,
    n: u64,
) -> Result<bool, FloorError> {
    id.precondition(m, n)?;
    let side = |cs: &[u64]| cs.iter().map(|&a| (a * n / m) as i64).sum::<i64>();
    Ok(side(&id.lhs) == side(&id.rhs) + id.surplus)
}

/// The same identity restated with fractional parts `{x} = x - floor(x)`,
/// evaluated in exact rationals: `sum {a_i n/m} = sum {b_j n/m} - surplus`.
pub fn check_via_fractional_parts(
    id: &CongruenceIdentity,
    m: u64,
    n: u64,
) -> Result<bool, FloorError> {
    id.precondition(m, n)?;
    let frac = |a: u64| {
        let x = Ratio::new(a as i64 * n as i64, m as i64);
        x - x.floor()
    };
    let lhs: Ratio<i64> = id.lhs.iter().map(|&a| frac(a)).sum();
    let rhs: Ratio<i64> = id.rhs.iter().map(|&a| frac(a)).sum();
    Ok(lhs == rhs - Ratio::from_integer(id.surplus))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IdentitySweep {
    /// Pairs `(n, m)` with `m | divisor_form(n)` and `m` in the domain.
    pub checked: u64,
    /// Divisors of `divisor_form(n)` outside the domain (not failures).
    pub out_of_domain: u64,
    /// `(n, m)` pairs where the identity is false, ascending.
    pub failures: Vec<(u64, u64)>,
}

impl IdentitySweep {
    pub fn merge(&mut self, other: IdentitySweep) {
        self.checked += other.checked;
        self.out_of_domain += other.out_of_domain;
        self.failures.extend(other.failures);
    }
}

fn divisors(v: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if v.is_multiple_of(d) {
            small.push(d);
            if d * d != v {
                large.push(v / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Checks every `(n, m)` with `lo <= n <= hi`, `m | divisor_form(n)`.
pub fn sweep_identity_range(id: &CongruenceIdentity, lo: u64, hi: u64) -> IdentitySweep {
    let mut out = IdentitySweep::default();
    for n in lo.max(1)..=hi {
        let value = id.divisor_form.eval(n);
        if value <= 0 {
            continue;
        }
        for m in divisors(value as u64) {
            match check_congruence_identity(id, m, n) {
                Ok(true) => out.checked += 1,
                Ok(false) => {
                    out.checked += 1;
                    out.failures.push((n, m));
                }
                Err(FloorError::OutsideDomain { .. }) => out.out_of_domain += 1,
                Err(e) => unreachable!("divisor enumeration produced {e}"),
            }
        }
    }
    out
}

pub fn sweep_congruence_identity(id: &CongruenceIdentity, n_max: u64) -> IdentitySweep {
    sweep_identity_range(id, 1, n_max)
}

/// The two step functions whose non-negativity drives the main theorems.
pub fn landau_specs() -> [StepFunctionSpec; 2] {
    [
        StepFunctionSpec::new(vec![6, 1], vec![3, 2, 2]).unwrap(),
        StepFunctionSpec::new(vec![15, 2], vec![10, 4, 3]).unwrap(),
    ]
}

fn identity(
    label: &str,
    six: bool,
    divisor_form: LinearForm,
    moduli: ModulusDomain,
) -> CongruenceIdentity {
    let (lhs, rhs) = if six {
        (vec![6, 1], vec![3, 2, 2])
    } else {
        (vec![15, 2], vec![10, 4, 3])
    };
    CongruenceIdentity {
        label: label.to_string(),
        lhs,
        rhs,
        surplus: 1,
        divisor_form,
        moduli,
    }
}

/// Registry of the congruence-conditioned identities, grouped by claim id.
pub fn identity_family(claim: &str) -> Option<Vec<CongruenceIdentity>> {
    use ModulusDomain::*;
    let f = LinearForm::new;
    let family = match claim {
        "lem-2.2" => vec![identity("m|2n+3, m>=5", true, f(2, 3), AtLeast(5))],
        "lem-2.3" => vec![identity("m|10n+3, m>=9", false, f(10, 3), AtLeast(9))],
        "lem-5.1" => vec![
            identity("m|2n+5, m>=9", true, f(2, 5), AtLeast(9)),
            identity("m|2n+7, m>=11", true, f(2, 7), AtLeast(11)),
            identity("m|2n+9, m>=15", true, f(2, 9), AtLeast(15)),
        ],
        // 3 | 2n+7 exactly when n = 1 (mod 3)
        "lem-5.1-ext" => vec![identity("m=3, m|2n+7", true, f(2, 7), OneOf(vec![3]))],
        "lem-5.2" => vec![
            identity("m|2n+1, m>=15", false, f(2, 1), AtLeast(15)),
            identity("m|10n+7, m>=21", false, f(10, 7), AtLeast(21)),
            identity("m|10n+9, m>=27", false, f(10, 9), AtLeast(27)),
        ],
        "lem-5.2-ext" => vec![identity(
            "m in {7,13,17}, m|10n+7",
            false,
            f(10, 7),
            OneOf(vec![7, 13, 17]),
        )],
        "lem-5.2-ext-10n+9" => vec![identity(
            "m in {7,13,17}, m|10n+9",
            false,
            f(10, 9),
            OneOf(vec![7, 13, 17]),
        )],
        _ => return None,
    };
    Some(family)
}
