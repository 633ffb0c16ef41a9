use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::QError;

/// Integer polynomial in `q`, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DensePoly {
    coeffs: Vec<BigInt>,
}

impl DensePoly {
    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DensePoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = DensePoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 - q^k` (zero when `k = 0`).
    pub fn one_minus_q_pow(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] += 1;
        c[k] -= 1;
        Self::new(c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies in place by `1 - q^k`.
    pub fn mul_one_minus_q_pow(&mut self, k: usize) {
        if self.is_zero() {
            return;
        }
        if k == 0 {
            self.coeffs.clear();
            return;
        }
        let len = self.coeffs.len();
        self.coeffs.resize(len + k, BigInt::zero());
        for i in (0..len).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i + k);
            hi[0] -= &lo[i];
        }
        self.trim();
    }

    /// Divides in place by `1 - q^k`; fails (leaving `self` unspecified)
    /// unless the division is exact.
    pub fn div_one_minus_q_pow(&mut self, k: usize) -> Result<(), QError> {
        if k == 0 {
            return Err(QError::InexactDivision { factor: 0 });
        }
        if self.is_zero() {
            return Ok(());
        }
        let len = self.coeffs.len();
        if len <= k {
            return Err(QError::InexactDivision { factor: k as u64 });
        }
        // quotient r satisfies r_i = p_i + r_{i-k}
        for i in k..len {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - k];
        }
        if self.coeffs[len - k..].iter().any(|c| !c.is_zero()) {
            return Err(QError::InexactDivision { factor: k as u64 });
        }
        self.coeffs.truncate(len - k);
        self.trim();
        Ok(())
    }

    /// Exact long division by `divisor`, whose leading coefficient must
    /// divide every intermediate leading term.
    pub fn div_exact(&self, divisor: &DensePoly) -> Result<DensePoly, QError> {
        let Some(dd) = divisor.degree() else {
            return Err(QError::DivisionByZero);
        };
        if self.is_zero() {
            return Ok(DensePoly::zero());
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Err(QError::InexactPolynomialDivision);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(QError::InexactPolynomialDivision);
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    rem[i + j] -= &q * c;
                }
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(QError::InexactPolynomialDivision);
        }
        Ok(DensePoly::new(quot))
    }

    /// `p_i = p_{d-i}` for all `i`.
    pub fn is_reciprocal(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(Signed::is_negative)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }

    /// First index breaking `0 <= p_0 <= ... <= p_r >= ... >= p_d >= 0`.
    pub fn unimodality_violation(&self) -> Option<usize> {
        if let Some(i) = self.first_negative() {
            return Some(i);
        }
        let c = &self.coeffs;
        let mut i = 0;
        while i + 1 < c.len() && c[i] <= c[i + 1] {
            i += 1;
        }
        while i + 1 < c.len() && c[i] >= c[i + 1] {
            i += 1;
        }
        (i + 1 < c.len()).then_some(i + 1)
    }

    pub fn is_unimodal(&self) -> bool {
        self.unimodality_violation().is_none()
    }

    /// Coefficients as decimal strings, the wire format for polynomials.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;

    fn mul(self, rhs: &DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::new(out)
    }
}

impl Mul for DensePoly {
    type Output = DensePoly;

    fn mul(self, rhs: DensePoly) -> DensePoly {
        &self * &rhs
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for DensePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(BigInt::to_string))
    }
}

impl<'de> Deserialize<'de> for DensePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DensePoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> DensePoly {
        DensePoly::from_i64s(c)
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[]).is_zero());
    }

    #[test]
    fn predicates() {
        let gauss = p(&[1, 1, 2, 1, 1]);
        assert!(gauss.is_reciprocal() && gauss.is_unimodal() && gauss.is_nonnegative());
        let dip = p(&[1, 0, 1]);
        assert!(dip.is_reciprocal());
        assert!(!dip.is_unimodal());
        assert_eq!(dip.unimodality_violation(), Some(2));
        let zero = DensePoly::zero();
        assert!(zero.is_reciprocal() && zero.is_unimodal() && zero.is_nonnegative());
        let neg = p(&[1, -1, 1]);
        assert_eq!(neg.first_negative(), Some(1));
        assert_eq!(neg.unimodality_violation(), Some(1));
        assert!(!p(&[1, 2]).is_reciprocal());
        assert!(p(&[0, 1, 1]).is_unimodal());
    }

    #[test]
    fn one_minus_q_pow_roundtrip() {
        let mut a = p(&[1, 2, 1]);
        a.mul_one_minus_q_pow(3);
        assert_eq!(a, p(&[1, 2, 1, -1, -2, -1]));
        a.div_one_minus_q_pow(3).unwrap();
        assert_eq!(a, p(&[1, 2, 1]));
        let mut b = p(&[1, 1]);
        assert_eq!(
            b.div_one_minus_q_pow(2),
            Err(QError::InexactDivision { factor: 2 })
        );
    }

    #[test]
    fn long_division() {
        let a = p(&[-1, 0, 0, 0, 1]);
        let b = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), p(&[1, 0, 1]));
        assert_eq!(
            p(&[1, 0, 1]).div_exact(&p(&[1, 1])),
            Err(QError::InexactPolynomialDivision)
        );
        assert_eq!(a.div_exact(&DensePoly::zero()), Err(QError::DivisionByZero));
    }

    #[test]
    fn product_and_display() {
        let a = p(&[1, 1]);
        assert_eq!(&a * &a, p(&[1, 2, 1]));
        assert_eq!(p(&[1, -1, 2]).to_string(), "1 - q + 2q^2");
        assert_eq!(p(&[0, 0, 1]).to_string(), "q^2");
        assert_eq!(p(&[-3]).to_string(), "-3");
    }

    #[test]
    fn json_is_decimal_strings() {
        let a = p(&[1, -2, 3]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"["1","-2","3"]"#);
        let back: DensePoly = serde_json::from_str(r#"["1","-2","3","0"]"#).unwrap();
        assert_eq!(back, a);
    }
}
