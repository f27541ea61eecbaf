//! Property tests for the algebraic invariants of the engine and the laws.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use proptest::prelude::*;

use ztt::dist::{bernstein_pgf, marginal_pmf, s_pmf, sum_theorem_pgf, sum_theorem_pmf};
use ztt::exact::{int, pow_rational, rat};
use ztt::oracle::{theta_bruteforce, weight_by_shape, Refinement, DEFAULT_BUDGET};
use ztt::theta::{
    complete_symmetric, compute_theta, elementary_symmetric, multiple_harmonic, theta_infinite_zeta, theta_multi_eval,
    theta_partial_fraction, theta_product, theta_qt, GradedValue, InfiniteMode, InfiniteZeta,
};
use ztt::{Algorithm, Rational, WeightSequence};

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..20, 1i64..8).prop_map(|(p, q)| rat(p, q))
}

fn custom_weights(max_len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(positive_rational(), 1..=max_len)
}

fn distinct_weights(max_len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set(positive_rational(), 1..=max_len).prop_map(|s: BTreeSet<_>| s.into_iter().collect())
}

fn builtin() -> impl Strategy<Value = WeightSequence> {
    prop_oneof![
        Just(WeightSequence::ones()),
        Just(WeightSequence::linear()),
        Just(WeightSequence::zeta(1).unwrap()),
        Just(WeightSequence::zeta(2).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn five_algorithms_agree(values in custom_weights(6), k in 0usize..7) {
        let n = values.len();
        let seq = WeightSequence::custom(values).unwrap();
        let reference = theta_product(&seq, n, k).unwrap();
        for algo in Algorithm::ALL {
            prop_assert_eq!(&compute_theta(&seq, n, k, algo).unwrap().into_poly(), reference.poly(), "{}", algo.name());
        }
    }

    #[test]
    fn product_matches_enumeration(values in custom_weights(5), k in 0usize..5) {
        let n = values.len();
        let seq = WeightSequence::custom(values).unwrap();
        let brute = theta_bruteforce(&seq, n, k, &Refinement::ScalarT, DEFAULT_BUDGET).unwrap().into_poly().unwrap();
        prop_assert_eq!(brute.into_poly(), theta_product(&seq, n, k).unwrap().into_poly());
    }

    #[test]
    fn support_is_exact(values in custom_weights(6), k in 1usize..8) {
        let n = values.len();
        let theta = theta_product(&WeightSequence::custom(values).unwrap(), n, k).unwrap();
        let lo = k.saturating_sub(n);
        prop_assert!(theta.poly().degree() < k as i64);
        for j in 0..k {
            let c = theta.poly().coeff(j);
            if j < lo {
                prop_assert!(c.is_zero(), "coefficient {} should vanish", j);
            } else {
                prop_assert!(c > Rational::zero(), "coefficient {} should be positive", j);
            }
        }
    }

    #[test]
    fn endpoints_are_symmetric_functions(seq in builtin(), n in 1usize..9, k in 0usize..9) {
        let theta = theta_product(&seq, n, k).unwrap();
        prop_assert_eq!(theta.eval(&int(0)), elementary_symmetric(&seq, n, k).unwrap()[k].clone());
        prop_assert_eq!(theta.eval(&int(1)), complete_symmetric(&seq, n, k).unwrap()[k].clone());
    }

    #[test]
    fn scaling_leaves_law_unchanged(values in custom_weights(5), c in positive_rational(), k in 1usize..7) {
        let n = values.len();
        let scaled: Vec<Rational> = values.iter().map(|a| a * &c).collect();
        let base = WeightSequence::custom(values).unwrap();
        let scaled = WeightSequence::custom(scaled).unwrap();
        let factor = pow_rational(&c, k as i64).unwrap();
        prop_assert_eq!(
            theta_product(&scaled, n, k).unwrap().into_poly(),
            theta_product(&base, n, k).unwrap().poly().scale(&factor)
        );
        prop_assert_eq!(s_pmf(&scaled, n, k).unwrap(), s_pmf(&base, n, k).unwrap());
    }

    #[test]
    fn ones_multi_eval_is_permutation_invariant(
        tvec in prop::collection::vec(positive_rational(), 1..6).prop_shuffle(),
        k in 0usize..6,
        rot in 0usize..6,
    ) {
        let ones = WeightSequence::ones();
        let n = tvec.len();
        let mut rotated = tvec.clone();
        rotated.rotate_left(rot % n);
        let mut reversed = tvec.clone();
        reversed.reverse();
        let v = theta_multi_eval(&ones, n, k, &tvec).unwrap();
        prop_assert_eq!(&v, &theta_multi_eval(&ones, n, k, &rotated).unwrap());
        prop_assert_eq!(&v, &theta_multi_eval(&ones, n, k, &reversed).unwrap());
    }

    #[test]
    fn multi_eval_collapses_to_scalar(seq in builtin(), n in 1usize..7, k in 0usize..7, t in positive_rational()) {
        let tvec = vec![t.clone(); n];
        prop_assert_eq!(theta_multi_eval(&seq, n, k, &tvec).unwrap(), theta_product(&seq, n, k).unwrap().eval(&t));
    }

    #[test]
    fn q_refinement_is_consistent(seq in builtin(), q in positive_rational(), n in 1usize..7, k in 0usize..7) {
        let modified = WeightSequence::q_modified(seq.clone(), q.clone()).unwrap();
        prop_assert_eq!(theta_qt(&seq, n, k, &q).unwrap().into_poly(), theta_product(&modified, n, k).unwrap().into_poly());
    }

    #[test]
    fn partial_fraction_matches_polynomial(values in distinct_weights(6), k in 1usize..8, t in positive_rational()) {
        let n = values.len();
        let seq = WeightSequence::custom(values).unwrap();
        let theta = theta_product(&seq, n, k).unwrap();
        prop_assert_eq!(theta_partial_fraction(&seq, n, k, &t).unwrap(), theta.eval(&t));
    }

    #[test]
    fn laws_are_normalized(seq in builtin(), n in 1usize..12, k in 1usize..12) {
        let pmf = s_pmf(&seq, n, k).unwrap();
        prop_assert_eq!(pmf.total(), Rational::one());
        let mean = pmf.mean();
        let var = pmf.variance();
        prop_assert!(var >= Rational::zero());
        prop_assert_eq!(var, pmf.power_moment(2) - &mean * &mean);
        prop_assert_eq!(pmf.factorial_moment(1), mean);
    }

    #[test]
    fn marginal_mean_is_exchangeable(n in 2usize..15, k in 1usize..15) {
        let marginal = marginal_pmf(n, k).unwrap();
        prop_assert_eq!(marginal.total(), Rational::one());
        let total = s_pmf(&WeightSequence::ones(), n, k).unwrap().mean();
        prop_assert_eq!(marginal.mean() * int(n as i64), total);
    }

    #[test]
    fn sum_theorem_forms_agree(n in 2usize..25, gap in 1usize..15) {
        let k = n + gap;
        let pmf = sum_theorem_pmf(n, k).unwrap();
        prop_assert_eq!(pmf.total(), Rational::one());
        let pgf = pmf.pgf().unwrap();
        prop_assert_eq!(&pgf, &bernstein_pgf(n, k).unwrap());
        prop_assert_eq!(&pgf, &sum_theorem_pgf(n, k).unwrap());
    }

    #[test]
    fn shape_fibres_are_multiple_harmonic_sums(m in 1u32..3, n in 1usize..6, k in 1usize..6) {
        let seq = WeightSequence::zeta(m).unwrap();
        for (p, mass) in weight_by_shape(&seq, n, k, DEFAULT_BUDGET).unwrap() {
            let indices: Vec<u32> = p.parts().iter().map(|&x| m * x).collect();
            prop_assert_eq!(mass, multiple_harmonic(n, &indices));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn graded_values_are_homogeneous(j in 1u32..6, k in 1usize..7, t in positive_rational()) {
        let m = 2 * j;
        let expected = j * k as u32;
        match theta_infinite_zeta(m, k, InfiniteMode::Graded).unwrap() {
            InfiniteZeta::Graded(g) => {
                prop_assert_eq!(g.weight(), expected);
                prop_assert_eq!(g.eval(&t).weight(), expected);
            }
            InfiniteZeta::Value(_) => prop_assert!(false, "graded mode returned a value"),
        }
        let a = GradedValue::zeta_even(j);
        let b = GradedValue::zeta_even(j + 1);
        prop_assert!(a.try_add(&b).is_err());
        prop_assert_eq!(a.mul(&b).weight(), 2 * j + 1);
    }
}
