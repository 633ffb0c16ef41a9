//! Exact q-analogues: integer polynomials, cyclotomic factors, q-binomials
//! and ratios of `(1 - q^k)` products.

use thiserror::Error;

use crate::valuation::LinearForm;

pub mod cyclotomic;
pub mod families;
mod poly;
mod ratio;

pub use cyclotomic::cyclotomic;
pub use families::{check_family, check_theorem_6_1, FamilyReport, QFamily, Theorem61Report};
pub use poly::DensePoly;
pub use ratio::{
    direct_expansion, expand, exponent_vector, exponent_vector_of, qbinomial, qbinomial_instance,
    rsw_filter, CycloExponentVector, QRatioInstance, QRatioSpec,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("not a polynomial: cyclotomic factor Φ_{d} has exponent {exponent}")]
    NotPolynomial { d: u64, exponent: i64 },
    #[error("not divisible by 1 - q^{factor}")]
    InexactDivision { factor: u64 },
    #[error("polynomial long division leaves a remainder")]
    InexactPolynomialDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("sign imbalance: {numerator} numerator factors against {denominator} denominator factors")]
    SignImbalance { numerator: u64, denominator: u64 },
    #[error("a factor 1 - q^0 = 0 appears")]
    ZeroFactor,
    #[error("q-factorial argument {form} is negative at n = {n}")]
    NegativeArgument { form: LinearForm, n: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("(1 - q^{m})/(1 - q^{n}) times the input is not a polynomial")]
    NotPolynomialQuotient { m: u64, n: u64 },
    #[error("negative coefficient at q^{index}")]
    NegativeCoefficient { index: usize },
    #[error("{0}")]
    Domain(String),
}
