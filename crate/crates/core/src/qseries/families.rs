//! Named q-expressions and the checks run against them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use super::ratio::{direct_expansion, expand, exponent_vector_of, qbinomial, rsw_filter};
use super::{CycloExponentVector, DensePoly, QError, QRatioInstance, QRatioSpec};
use crate::divisibility::{rational_to_string, theorem_1_4_forms};
use crate::valuation::LinearForm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QFamily {
    /// `[6n]![n]! / ([3n]![2n]!^2)`
    Wz6n,
    /// `(1-q)/(1-q^{2n+1})` times the base
    Thm72A,
    /// `(1-q^3)/(1-q^{2n+3})` times the base
    Thm72B,
    /// `(1-q)(1-q^3)/((1-q^{2n+1})(1-q^{2n+3}))` times the base
    Thm72C,
    /// `(1-q^3)(1-q^5)(1-q^7)/((1-q^{2n+3})(1-q^{2n+5})(1-q^{2n+7}))`, `n >= 2`
    Thm72D,
    /// `(1-q^3)^2(1-q^5)(1-q^7)/((1-q^{2n+1})...(1-q^{2n+7}))`, `n >= 2`
    Thm72E,
    /// `(1-q)[15n]![2n]! / ((1-q^{10n+1})[10n]![4n]![3n]!)`
    Thm74A,
    /// `(1-q^3)(1-q^7)[15n]![2n]! / ((1-q)(1-q^{10n+3})[10n]![4n]![3n]!)`
    Thm74B,
    /// `(1-q)/(1-q^{n+1}) [2n choose n]`
    QCatalan,
}

impl QFamily {
    pub const ALL: [QFamily; 9] = [
        QFamily::Wz6n,
        QFamily::Thm72A,
        QFamily::Thm72B,
        QFamily::Thm72C,
        QFamily::Thm72D,
        QFamily::Thm72E,
        QFamily::Thm74A,
        QFamily::Thm74B,
        QFamily::QCatalan,
    ];

    pub const THEOREM_7_2: [QFamily; 5] = [
        QFamily::Thm72A,
        QFamily::Thm72B,
        QFamily::Thm72C,
        QFamily::Thm72D,
        QFamily::Thm72E,
    ];

    pub const THEOREM_7_4: [QFamily; 2] = [QFamily::Thm74A, QFamily::Thm74B];

    pub fn id(self) -> &'static str {
        match self {
            QFamily::Wz6n => "wz-6n",
            QFamily::Thm72A => "thm-7.2a",
            QFamily::Thm72B => "thm-7.2b",
            QFamily::Thm72C => "thm-7.2c",
            QFamily::Thm72D => "thm-7.2d",
            QFamily::Thm72E => "thm-7.2e",
            QFamily::Thm74A => "thm-7.4a",
            QFamily::Thm74B => "thm-7.4b",
            QFamily::QCatalan => "q-catalan",
        }
    }

    pub fn from_id(id: &str) -> Option<QFamily> {
        QFamily::ALL.into_iter().find(|f| f.id() == id)
    }

    pub fn n_min(self) -> u64 {
        match self {
            QFamily::Thm72D | QFamily::Thm72E => 2,
            _ => 1,
        }
    }

    pub fn spec(self) -> QRatioSpec {
        let f = LinearForm::new;
        let c = LinearForm::constant;
        let sextuple = || (vec![f(6, 0), f(1, 0)], vec![f(3, 0), f(2, 0), f(2, 0)]);
        let fifteen = || (vec![f(15, 0), f(2, 0)], vec![f(10, 0), f(4, 0), f(3, 0)]);
        let ((qn, qd), sn, sd) = match self {
            QFamily::Wz6n => (sextuple(), vec![], vec![]),
            QFamily::Thm72A => (sextuple(), vec![c(1)], vec![f(2, 1)]),
            QFamily::Thm72B => (sextuple(), vec![c(3)], vec![f(2, 3)]),
            QFamily::Thm72C => (sextuple(), vec![c(1), c(3)], vec![f(2, 1), f(2, 3)]),
            QFamily::Thm72D => (
                sextuple(),
                vec![c(3), c(5), c(7)],
                vec![f(2, 3), f(2, 5), f(2, 7)],
            ),
            QFamily::Thm72E => (
                sextuple(),
                vec![c(3), c(3), c(5), c(7)],
                vec![f(2, 1), f(2, 3), f(2, 5), f(2, 7)],
            ),
            QFamily::Thm74A => (fifteen(), vec![c(1)], vec![f(10, 1)]),
            QFamily::Thm74B => (fifteen(), vec![c(3), c(7)], vec![c(1), f(10, 3)]),
            QFamily::QCatalan => (
                (vec![f(2, 0)], vec![f(1, 0), f(1, 0)]),
                vec![c(1)],
                vec![f(1, 1)],
            ),
        };
        QRatioSpec {
            qfact_numerator: qn,
            qfact_denominator: qd,
            single_numerator: sn,
            single_denominator: sd,
        }
    }

    pub fn instance(self, n: u64) -> Result<QRatioInstance, QError> {
        if n < self.n_min() {
            return Err(QError::Domain(format!("{} needs n >= {}", self.id(), self.n_min())));
        }
        self.spec().instantiate(n)
    }
}

/// Polynomiality, positivity and shape of one family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family: QFamily,
    pub n: u64,
    pub exponents: CycloExponentVector,
    /// `None` when some exponent is negative.
    pub polynomial: Option<DensePoly>,
}

impl FamilyReport {
    pub fn not_polynomial_at(&self) -> Option<(u64, i64)> {
        self.exponents.first_negative()
    }

    pub fn first_negative_coefficient(&self) -> Option<usize> {
        self.polynomial.as_ref().and_then(DensePoly::first_negative)
    }

    pub fn unimodality_violation(&self) -> Option<usize> {
        self.polynomial.as_ref().and_then(DensePoly::unimodality_violation)
    }

    pub fn is_reciprocal(&self) -> bool {
        self.polynomial.as_ref().is_some_and(DensePoly::is_reciprocal)
    }
}

/// Exponent vector only; no expansion.
pub fn family_exponents(family: QFamily, n: u64) -> Result<CycloExponentVector, QError> {
    Ok(exponent_vector_of(&family.instance(n)?))
}

/// Exponents plus the expanded polynomial (when it is one).
pub fn check_family(family: QFamily, n: u64) -> Result<FamilyReport, QError> {
    let exponents = family_exponents(family, n)?;
    let polynomial = match expand(&exponents) {
        Ok(p) => Some(p),
        Err(QError::NotPolynomial { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(FamilyReport {
        family,
        n,
        exponents,
        polynomial,
    })
}

/// One of the two expressions checked for each `(a, b, m, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpressionOutcome {
    pub exponents: CycloExponentVector,
    pub polynomial: Option<DensePoly>,
    /// Expected value at `q = 1` from the integer side.
    #[serde(serialize_with = "as_decimal")]
    pub expected_at_one: BigRational,
}

fn as_decimal<S: serde::Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_to_string(v))
}

impl ExpressionOutcome {
    fn from_instance(instance: &QRatioInstance, expected_at_one: BigRational) -> Result<Self, QError> {
        let exponents = exponent_vector_of(instance);
        let polynomial = match expand(&exponents) {
            Ok(p) => Some(p),
            Err(QError::NotPolynomial { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(ExpressionOutcome {
            exponents,
            polynomial,
            expected_at_one,
        })
    }

    pub fn value_at_one_matches(&self) -> bool {
        self.polynomial
            .as_ref()
            .is_some_and(|p| BigRational::from_integer(p.eval_at_one()) == self.expected_at_one)
    }

    pub fn holds(&self) -> bool {
        self.polynomial
            .as_ref()
            .is_some_and(|p| p.is_nonnegative() && p.is_reciprocal())
            && self.value_at_one_matches()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem61Report {
    pub params: (u64, u64, u64, u64),
    /// `(1-q^{gcd(am,m+n)})/(1-q^{m+n}) [am+bm-1, am] [an+bn, an]`
    pub gcd_form: ExpressionOutcome,
    /// `(1-q^{am})/(1-q^{m+n}) [am+bm-1, am] [an+bn, an]`
    pub am_form: ExpressionOutcome,
    /// The gcd form recomputed from the q-binomial product by the
    /// reciprocal-unimodal filter; `None` when that route rejects it.
    pub filtered_gcd_form: Option<DensePoly>,
}

impl Theorem61Report {
    pub fn holds(&self) -> bool {
        self.gcd_form.holds()
            && self.am_form.holds()
            && self.filtered_gcd_form.is_some()
            && self.filtered_gcd_form == self.gcd_form.polynomial
    }
}

fn theorem_6_1_instance(a: u64, b: u64, m: u64, n: u64, top: u64) -> Result<QRatioInstance, QError> {
    QRatioInstance::new(
        vec![a * m + b * m - 1, a * n + b * n],
        vec![a * m, b * m - 1, a * n, b * n],
        vec![top],
        vec![m + n],
    )
}

pub fn check_theorem_6_1(a: u64, b: u64, m: u64, n: u64) -> Result<Theorem61Report, QError> {
    if [a, b, m, n].contains(&0) {
        return Err(QError::Domain("a, b, m, n must be positive".into()));
    }
    let g = (a * m).gcd(&(m + n));
    let integer = theorem_1_4_forms(a, b, m, n)
        .map_err(|e| QError::Domain(e.to_string()))?
        .second;
    // the am-form is the gcd-form times [am]/[g], i.e. am/g at q = 1
    let gcd_expected = integer.clone() * BigRational::new(BigInt::from(g), BigInt::from(a * m));
    let gcd_form = ExpressionOutcome::from_instance(&theorem_6_1_instance(a, b, m, n, g)?, gcd_expected)?;
    let am_form = ExpressionOutcome::from_instance(&theorem_6_1_instance(a, b, m, n, a * m)?, integer)?;
    let product = &qbinomial(a * m + b * m - 1, (a * m) as i64) * &qbinomial(a * n + b * n, (a * n) as i64);
    let filtered_gcd_form = rsw_filter(&product, g, m + n).ok();
    Ok(Theorem61Report {
        params: (a, b, m, n),
        gcd_form,
        am_form,
        filtered_gcd_form,
    })
}

/// Naive-route expansion of a family member, for cross-checks.
pub fn family_direct_expansion(family: QFamily, n: u64) -> Result<DensePoly, QError> {
    direct_expansion(&family.instance(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn ids_round_trip() {
        for f in QFamily::ALL {
            assert_eq!(QFamily::from_id(f.id()), Some(f));
        }
        assert_eq!(QFamily::from_id("nope"), None);
    }

    #[test]
    fn wz_at_one_is_nonnegative() {
        let r = check_family(QFamily::Wz6n, 1).unwrap();
        let p = r.polynomial.unwrap();
        assert!(p.is_nonnegative());
        assert_eq!(p.eval_at_one(), BigInt::from(30));
        assert_eq!(p, family_direct_expansion(QFamily::Wz6n, 1).unwrap());
    }

    #[test]
    fn first_members_are_polynomials() {
        for f in [QFamily::Thm72A, QFamily::Thm74A, QFamily::Thm74B] {
            let r = check_family(f, 1).unwrap();
            assert!(r.polynomial.is_some(), "{}", f.id());
            assert_eq!(r.polynomial.unwrap(), family_direct_expansion(f, 1).unwrap());
        }
    }

    #[test]
    fn domain_enforced() {
        assert!(matches!(check_family(QFamily::Thm72D, 1), Err(QError::Domain(_))));
        assert!(check_family(QFamily::Thm72D, 2).is_ok());
    }

    #[test]
    fn theorem_6_1_examples() {
        let r = check_theorem_6_1(1, 1, 1, 2).unwrap();
        assert!(r.holds());
        assert_eq!(r.gcd_form.polynomial, Some(DensePoly::from_i64s(&[1, 0, 1])));
        let r = check_theorem_6_1(2, 3, 1, 1).unwrap();
        assert!(r.holds());
        assert_eq!(r.am_form.polynomial.unwrap().eval_at_one(), BigInt::from(60));
        assert!(check_theorem_6_1(0, 1, 1, 1).is_err());
    }

    #[test]
    fn corollary_1_5_at_q_equals_one() {
        for (m, n) in [(1, 1), (2, 3), (4, 1), (3, 3)] {
            let r = check_theorem_6_1(1, 1, m, n).unwrap();
            let at_one = r.am_form.polynomial.unwrap().eval_at_one();
            let expected = crate::divisibility::corollary_1_5_value(m, n).unwrap();
            assert_eq!(BigRational::from_integer(at_one), expected);
        }
    }

    #[test]
    fn q_catalan_family() {
        // C_3 = 5
        let r = check_family(QFamily::QCatalan, 3).unwrap();
        assert_eq!(r.polynomial.unwrap().eval_at_one(), BigInt::from(5));
    }
}
