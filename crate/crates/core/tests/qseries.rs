use binodiv::divisibility::{eval_ratio, theorem_1_4_forms};
use binodiv::qseries::cyclotomic::cyclotomic;
use binodiv::qseries::families::family_direct_expansion;
use binodiv::qseries::{
    check_family, check_theorem_6_1, direct_expansion, expand, exponent_vector_of, qbinomial,
    qbinomial_instance, rsw_filter, DensePoly, QFamily,
};
use binodiv::valuation::{FactorialRatioSpec, LinearForm};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// `prod_k (1 - q^k)` over `factors`, times nothing else.
fn naive_product(factors: impl IntoIterator<Item = u64>) -> DensePoly {
    let mut p = DensePoly::one();
    for k in factors {
        p.mul_one_minus_q_pow(k as usize);
    }
    p
}

#[test]
fn cyclotomic_products_give_q_k_minus_1() {
    for k in 1..=200u64 {
        let mut product = DensePoly::one();
        for d in (1..=k).filter(|d| k % d == 0) {
            product = &product * &cyclotomic(d);
        }
        let mut expected = vec![0i64; k as usize + 1];
        expected[0] = -1;
        expected[k as usize] = 1;
        assert_eq!(product, DensePoly::from_i64s(&expected), "k = {k}");
    }
}

#[test]
fn families_match_long_division_to_6() {
    for f in QFamily::ALL {
        for n in f.n_min()..=6 {
            let instance = f.instance(n).unwrap();
            let via_exponents = expand(&exponent_vector_of(&instance));
            let naive = family_direct_expansion(f, n);
            match (via_exponents, naive) {
                (Ok(a), Ok(b)) => assert_eq!(a, b, "{} at n = {n}", f.id()),
                (Err(_), Err(_)) => {}
                (a, b) => panic!("{} at n = {n}: paths disagree ({a:?} vs {b:?})", f.id()),
            }
        }
    }
}

#[test]
fn qbinomials_match_long_division_to_16() {
    for n in 0..=16 {
        for k in 0..=n {
            let instance = qbinomial_instance(n, k);
            let a = expand(&exponent_vector_of(&instance)).unwrap();
            assert_eq!(a, direct_expansion(&instance).unwrap(), "[{n}, {k}]");
            assert_eq!(a, qbinomial(n, k as i64), "[{n}, {k}]");
        }
    }
}

#[test]
fn qbinomials_are_reciprocal_and_unimodal_to_30() {
    for n in 0..=30 {
        for k in -1..=(n as i64 + 1) {
            let p = qbinomial(n, k);
            assert!(p.is_reciprocal() && p.is_unimodal() && p.is_nonnegative(), "[{n}, {k}]");
            if (0..=n as i64).contains(&k) {
                assert_eq!(p.degree(), Some((k * (n as i64 - k)) as usize));
            } else {
                assert!(p.is_zero());
            }
        }
    }
}

#[test]
fn theorem_6_1_to_5() {
    for a in 1..=5 {
        for b in 1..=5 {
            for m in 1..=5 {
                for n in 1..=5 {
                    let r = check_theorem_6_1(a, b, m, n).unwrap();
                    assert!(r.holds(), "({a},{b},{m},{n})");
                    let integer = theorem_1_4_forms(a, b, m, n).unwrap().second;
                    let at_one = r.am_form.polynomial.as_ref().unwrap().eval_at_one();
                    assert_eq!(BigRational::from_integer(at_one), integer);
                    assert!(r.gcd_form.polynomial.as_ref().unwrap().is_reciprocal());
                }
            }
        }
    }
}

#[test]
fn families_at_q_equals_one() {
    let f = LinearForm::new;
    let base = FactorialRatioSpec::new(vec![f(6, 0), f(1, 0)], vec![f(3, 0), f(2, 0), f(2, 0)]).unwrap();
    for n in 1..=8 {
        let p = check_family(QFamily::Wz6n, n).unwrap().polynomial.unwrap();
        assert_eq!(BigRational::from_integer(p.eval_at_one()), eval_ratio(&base, n).unwrap());
        // (1-q)/(1-q^{2n+1}) contributes 1/(2n+1) at q = 1
        let a = check_family(QFamily::Thm72A, n).unwrap().polynomial.unwrap();
        let expected = eval_ratio(&base, n).unwrap() / BigRational::from_integer(BigInt::from(2 * n + 1));
        assert_eq!(BigRational::from_integer(a.eval_at_one()), expected);
    }
}

#[test]
fn q_catalan_by_filter() {
    for n in 1..=12u64 {
        let c = rsw_filter(&qbinomial(2 * n, n as i64), 1, n + 1).unwrap();
        assert_eq!(Some(&c), check_family(QFamily::QCatalan, n).unwrap().polynomial.as_ref());
    }
    // the (1-q)/(1-q^{2n+1}) variant is not a polynomial at n = 2
    assert!(rsw_filter(&qbinomial(4, 2), 1, 5).is_err());
}

/// Reciprocal unimodal polynomials of the form `q^s (palindrome)`,
/// built from a random nondecreasing half.
fn reciprocal_unimodal() -> impl Strategy<Value = DensePoly> {
    (prop::collection::vec(0i64..5, 1..20), any::<bool>()).prop_map(|(steps, odd)| {
        let mut half = Vec::new();
        let mut acc = 0;
        for s in steps {
            acc += s;
            half.push(acc);
        }
        let mut coeffs = half.clone();
        let tail = if odd { &half[..half.len() - 1] } else { &half[..] };
        coeffs.extend(tail.iter().rev());
        DensePoly::from_i64s(&coeffs)
    })
}

proptest! {
    #[test]
    fn product_closure(p in reciprocal_unimodal(), r in reciprocal_unimodal()) {
        prop_assume!(!p.is_zero() && !r.is_zero() && p.coeff(0) > BigInt::from(0) && r.coeff(0) > BigInt::from(0));
        let pr = &p * &r;
        prop_assert!(pr.is_reciprocal());
        prop_assert!(pr.is_unimodal());
    }

    #[test]
    fn random_q_ratios_agree(
        fact_num in prop::collection::vec(0u64..12, 0..4),
        fact_den in prop::collection::vec(0u64..12, 0..4),
        singles in prop::collection::vec(1u64..20, 0..3),
    ) {
        // balance the factor count with single factors on the short side
        let count = |v: &[u64]| v.iter().sum::<u64>();
        let (up, down) = (count(&fact_num), count(&fact_den));
        let mut sn: Vec<u64> = Vec::new();
        let mut sd: Vec<u64> = singles.clone();
        let target = down + sd.len() as u64;
        while up + (sn.len() as u64) < target {
            sn.push(1 + sn.len() as u64);
        }
        while up + (sn.len() as u64) > down + sd.len() as u64 {
            sd.push(1 + sd.len() as u64);
        }
        let instance = binodiv::qseries::QRatioInstance::new(fact_num, fact_den, sn, sd).unwrap();
        let degree = instance.numerator_degree();
        prop_assume!(degree <= 300);
        let via = expand(&exponent_vector_of(&instance));
        let naive = direct_expansion(&instance);
        match (via, naive) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "paths disagree: {:?} vs {:?}", a, b),
        }
    }

    #[test]
    fn one_minus_q_pow_round_trip(c in prop::collection::vec(-9i64..10, 0..30), k in 1usize..25) {
        let p = DensePoly::from_i64s(&c);
        let mut q = p.clone();
        q.mul_one_minus_q_pow(k);
        prop_assert_eq!(&q, &(&p * &naive_product([k as u64])));
        q.div_one_minus_q_pow(k).unwrap();
        prop_assert_eq!(q, p);
    }

    #[test]
    fn polynomial_json_round_trip(c in prop::collection::vec(any::<i64>(), 0..30)) {
        let p = DensePoly::from_i64s(&c);
        let text = serde_json::to_string(&p).unwrap();
        let back: DensePoly = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }
}
