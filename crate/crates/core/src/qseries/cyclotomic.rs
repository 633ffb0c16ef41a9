//! Cyclotomic polynomials `Φ_d`, via `q^d - 1 = prod_{e | d} Φ_e(q)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::DensePoly;

/// `Φ_d` in dense and sparse (index, coefficient) form.
#[derive(Debug)]
pub struct Cyclotomic {
    pub dense: DensePoly,
    pub sparse: Vec<(usize, i64)>,
}

fn memo() -> &'static RwLock<HashMap<u64, Arc<Cyclotomic>>> {
    static MEMO: OnceLock<RwLock<HashMap<u64, Arc<Cyclotomic>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

pub(crate) fn divisors(d: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= d {
        if d.is_multiple_of(i) {
            small.push(i);
            if i * i != d {
                large.push(d / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn compute(d: u64) -> Cyclotomic {
    let mut c = vec![BigInt::zero(); d as usize + 1];
    c[0] = BigInt::from(-1);
    c[d as usize] = BigInt::from(1);
    let mut poly = DensePoly::new(c);
    for e in divisors(d) {
        if e < d {
            poly = poly
                .div_exact(&entry(e).dense)
                .expect("proper cyclotomic factors divide q^d - 1");
        }
    }
    let sparse = poly
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.to_i64().expect("cyclotomic coefficient fits in i64")))
        .collect();
    Cyclotomic {
        dense: poly,
        sparse,
    }
}

/// Memoized `Φ_d` (shared, computed at most once per process).
pub fn entry(d: u64) -> Arc<Cyclotomic> {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(hit) = memo().read().expect("memo lock").get(&d) {
        return hit.clone();
    }
    let fresh = Arc::new(compute(d));
    memo()
        .write()
        .expect("memo lock")
        .entry(d)
        .or_insert(fresh)
        .clone()
}

pub fn cyclotomic(d: u64) -> DensePoly {
    entry(d).dense.clone()
}

/// Euler's totient, the degree of `Φ_d`.
pub fn totient(mut d: u64) -> u64 {
    let mut result = d;
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            while d.is_multiple_of(p) {
                d /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if d > 1 {
        result -= result / d;
    }
    result
}

/// `poly * Φ_d`, schoolbook against the sparse form.
pub fn mul_by_cyclotomic(poly: &DensePoly, d: u64) -> DensePoly {
    if poly.is_zero() {
        return DensePoly::zero();
    }
    let phi = entry(d);
    let src = poly.coeffs();
    let mut out = vec![BigInt::zero(); src.len() + phi.dense.coeffs().len() - 1];
    for &(j, c) in &phi.sparse {
        match c {
            1 => {
                for (i, a) in src.iter().enumerate() {
                    out[i + j] += a;
                }
            }
            -1 => {
                for (i, a) in src.iter().enumerate() {
                    out[i + j] -= a;
                }
            }
            _ => {
                for (i, a) in src.iter().enumerate() {
                    out[i + j] += a * c;
                }
            }
        }
    }
    DensePoly::new(out)
}
