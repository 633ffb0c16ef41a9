use binodiv::divisibility::{
    binomial, check_claim, check_claim_by_valuation, corollary_1_5_specializations,
    eval_integer_ratio, s_n, t_n, theorem_1_4_forms, valuation_case_bounds, AuxiliaryRatio,
    RatioSequence, Sequence, THEOREM_1_1, THEOREM_1_2, THEOREM_1_3,
};
use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;

#[test]
fn frozen_values() {
    let s: Vec<BigUint> = (1..=4).map(|n| s_n(n).unwrap().value).collect();
    assert_eq!(s, [5u32, 231, 14586, 1062347].map(BigUint::from));
    assert_eq!(t_n(1).unwrap().value, BigUint::from(91u32));
    assert_eq!(BigUint::from(3u32) * &s[0] % 5u32, BigUint::from(0u32));
    assert_eq!(BigUint::from(21u32) * t_n(1).unwrap().value, BigUint::from(1911u32));
}

#[test]
fn both_paths_agree_to_200() {
    let claims = [THEOREM_1_1, THEOREM_1_2].into_iter().chain(THEOREM_1_3);
    for claim in claims {
        for n in 1..=200 {
            assert_eq!(
                check_claim(&claim, n).unwrap(),
                check_claim_by_valuation(&claim, n).unwrap(),
                "{claim} at n = {n}"
            );
        }
    }
}

#[test]
fn gcd_reductions() {
    for n in 1..=10_000u64 {
        assert_eq!((2 * n + 3).gcd(&(4 * n + 2)), 1);
        assert_eq!((10 * n + 1).gcd(&(10 * n + 3)), 1);
    }
    for n in 1..=10_000u64 {
        if n % 97 == 0 || n < 50 {
            assert_eq!(binomial(5 * n, n), binomial(5 * n - 1, n - 1) * 5u32, "n = {n}");
        }
    }
}

#[test]
fn binomial_identity_by_recurrence() {
    // C(5n,n) n = 5n C(5n-1,n-1), stepped across the whole range
    let mut c = BigUint::from(5u32);
    let mut d = BigUint::from(1u32);
    for n in 1..=10_000u64 {
        if n > 1 {
            // C(5n,n) from C(5n-5,n-1); C(5n-1,n-1) from C(5n-6,n-2)
            let up: BigUint = (5 * n - 4..=5 * n).map(BigUint::from).product();
            let down: BigUint = BigUint::from(n) * (4 * n - 3..=4 * n).map(BigUint::from).product::<BigUint>();
            c = c * up / down;
            let up: BigUint = (5 * n - 5..=5 * n - 1).map(BigUint::from).product();
            let down: BigUint = BigUint::from(n - 1) * (4 * n - 3..=4 * n).map(BigUint::from).product::<BigUint>();
            d = d * up / down;
        }
        assert_eq!(c, &d * 5u32, "n = {n}");
    }
}

#[test]
fn theorem_1_4_forms_to_10() {
    for a in 1..=10 {
        for b in 1..=10 {
            for m in 1..=10 {
                for n in 1..=10 {
                    let forms = theorem_1_4_forms(a, b, m, n).unwrap();
                    assert_eq!(forms.first, forms.second, "({a},{b},{m},{n})");
                    assert!(forms.second.is_integer(), "({a},{b},{m},{n})");
                }
            }
        }
    }
}

#[test]
fn corollary_specializations_to_5000() {
    assert!(corollary_1_5_specializations(1, 5000).unwrap().is_empty());
}

#[test]
fn case_bounds_to_300() {
    for ratio in AuxiliaryRatio::ALL {
        for n in 1..=300 {
            let b = valuation_case_bounds(ratio, n).unwrap();
            assert!(b.holds(), "{} at n = {n}: {:?}", ratio.name(), b.violations);
        }
    }
}

proptest! {
    #[test]
    fn recurrence_matches_direct(start in 1u64..150, steps in 0u64..20, which in 0usize..2) {
        let seq = [Sequence::S, Sequence::T][which];
        let mut walker = RatioSequence::starting_at(seq.spec(), start).unwrap();
        for _ in 0..steps {
            walker.advance().unwrap();
        }
        prop_assert_eq!(walker.n(), start + steps);
        prop_assert_eq!(walker.value(), &eval_integer_ratio(&seq.spec(), start + steps).unwrap());
    }
}
