//! Frozen reference values for the public API.

use num_bigint::BigUint;
use num_traits::Zero;

use ztt::dist::{
    bernoulli_sum_pmf, bezier_coeffs, d_n_pmf, expected_sigma_zeta, hypergeom_pmf, marginal_moments, marginal_pmf,
    marginal_zeta_pgf, moments, s_pmf, sum_theorem_pmf, tv_distance, FloatPmf, Pmf,
};
use ztt::exact::{
    bell_complete, det_exact, gen_binomial, harmonic, int, rat, rational_arith, series_mul, ArithOp, Series,
};
use ztt::oracle::{
    compositions, enumerate_multisets, p_norm, shape, sigma, sigma_refined, theta_bruteforce, Multiset, Refinement,
    DEFAULT_BUDGET,
};
use ztt::theta::{
    closed_form_ones_bivariate, compute_theta, multiple_harmonic, partition_series, theta_infinite_zeta,
    theta_multi_eval, theta_partial_fraction, theta_qt, zeta_t_ones, GradedValue, InfiniteMode, InfiniteZeta,
};
use ztt::weights::parse_weight_config;
use ztt::{Algorithm, Poly, Rational, WeightSequence};

fn zeta(m: u32) -> WeightSequence {
    WeightSequence::zeta(m).unwrap()
}

fn poly(coeffs: &[Rational]) -> Poly {
    Poly::from_coeffs(coeffs.to_vec())
}

fn ms(entries: &[u32]) -> Multiset {
    Multiset::from_unordered(entries.to_vec()).unwrap()
}

#[test]
fn rational_arithmetic() {
    assert_eq!(rational_arith(&rat(1, 2), &rat(1, 3), ArithOp::Add).unwrap(), rat(5, 6));
    assert_eq!(rational_arith(&rat(7, 4), &int(1), ArithOp::Mul).unwrap(), rat(7, 4));
    assert!(rational_arith(&rat(1, 2), &int(0), ArithOp::Div).is_err());
    assert_eq!(gen_binomial(&rat(5, 2), 2), rat(15, 8));
    assert_eq!(harmonic(3, 1), rat(11, 6));
}

#[test]
fn series_product_of_first_factors() {
    let one_plus_z = Series::from_coeffs(2, vec![Poly::one(), Poly::one()]);
    let sq = series_mul(&one_plus_z, &one_plus_z).unwrap();
    assert_eq!(sq.coeffs(), &[Poly::one(), Poly::from_i64(&[2]), Poly::one()]);
}

#[test]
fn bell_and_determinant() {
    assert_eq!(bell_complete(&[int(1), int(1)], 2).unwrap(), int(2));
    assert_eq!(bell_complete(&[int(1), int(1), int(1)], 3).unwrap(), int(5));
    assert_eq!(bell_complete::<Rational>(&[], 0).unwrap(), int(1));
    let m = vec![vec![int(3), int(-1)], vec![int(5), int(3)]];
    assert_eq!(det_exact(&m).unwrap(), int(14));
}

#[test]
fn weight_sequences() {
    assert_eq!(zeta(1).weight_at(3).unwrap(), rat(1, 3));
    assert_eq!(WeightSequence::linear().weight_at(5).unwrap(), int(5));
    let q = WeightSequence::q_modified(WeightSequence::ones(), rat(1, 2)).unwrap();
    assert_eq!(q.weight_at(3).unwrap(), rat(1, 8));
    assert_eq!(WeightSequence::ones().power_sum(7, 3).unwrap(), int(7));
    assert_eq!(zeta(1).power_sum(2, 2).unwrap(), rat(5, 4));
    assert_eq!(WeightSequence::linear().power_sum(3, 1).unwrap(), int(6));
    assert_eq!(parse_weight_config(r#"{"kind":"zeta","m":2}"#).unwrap(), zeta(2));
    let custom = parse_weight_config(r#"{"kind":"custom","values":["1","1/2","1/3"]}"#).unwrap();
    assert_eq!(custom.weights(3).unwrap(), vec![int(1), rat(1, 2), rat(1, 3)]);
    assert!(parse_weight_config(r#"{"kind":"zeta","m":0}"#).is_err());
}

#[test]
fn theta_reference_polynomials() {
    let cases = [
        (WeightSequence::ones(), 3, 2, poly(&[int(3), int(3)])),
        (zeta(1), 2, 2, poly(&[rat(1, 2), rat(5, 4)])),
        (WeightSequence::linear(), 2, 2, poly(&[int(2), int(5)])),
        (zeta(1), 2, 1, poly(&[rat(3, 2)])),
        (zeta(2), 4, 0, Poly::one()),
    ];
    for (seq, n, k, expected) in cases {
        for algo in Algorithm::ALL {
            let theta = compute_theta(&seq, n, k, algo).unwrap();
            assert_eq!(theta.poly(), &expected, "{} via {}", seq, algo.name());
        }
        let brute = theta_bruteforce(&seq, n, k, &Refinement::ScalarT, DEFAULT_BUDGET).unwrap();
        assert_eq!(brute.into_poly().unwrap().poly(), &expected);
    }
}

#[test]
fn partial_fraction_values() {
    let custom = WeightSequence::custom(vec![int(1), rat(1, 2)]).unwrap();
    for t in [rat(1, 3), int(1), int(5)] {
        assert_eq!(theta_partial_fraction(&custom, 2, 1, &t).unwrap(), rat(3, 2));
    }
    assert_eq!(theta_partial_fraction(&zeta(1), 2, 2, &int(1)).unwrap(), rat(7, 4));
    assert!(theta_partial_fraction(&WeightSequence::ones(), 3, 2, &int(1)).is_err());
}

#[test]
fn zeta_values() {
    assert_eq!(multiple_harmonic(3, &[1, 1]), int(1));
    assert_eq!(multiple_harmonic(2, &[1, 1, 1]), int(0));
    assert_eq!(multiple_harmonic(4, &[3]), harmonic(4, 3));
    assert_eq!(zeta_t_ones(2, 2, &int(1)).unwrap(), rat(7, 4));
    assert_eq!(zeta_t_ones(2, 2, &rat(1, 2)).unwrap(), rat(9, 8));
    // a single multiset (1,...,1) with sigma = k-1
    for k in 1..6 {
        let t = rat(2, 3);
        assert_eq!(zeta_t_ones(1, k, &t).unwrap(), ztt::exact::pow_rational(&t, k as i64 - 1).unwrap());
    }
}

#[test]
fn refined_evaluations() {
    let ones = WeightSequence::ones();
    assert_eq!(theta_multi_eval(&ones, 2, 2, &[int(2), int(3)]).unwrap(), int(6));
    assert_eq!(theta_multi_eval(&zeta(1), 2, 2, &[int(1), int(0)]).unwrap(), rat(3, 2));
    let q = rat(1, 3);
    let qt = theta_qt(&ones, 2, 2, &q).unwrap();
    let q2 = &q * &q;
    assert_eq!(qt.eval(&int(1)), &q2 + &q2 * &q + &q2 * &q2);
    assert_eq!(theta_qt(&ones, 3, 1, &rat(1, 2)).unwrap().poly(), &poly(&[rat(7, 8)]));
}

#[test]
fn partitions() {
    let as_u32 = |v: Vec<BigUint>| v.into_iter().map(|x| u32::try_from(x).unwrap()).collect::<Vec<_>>();
    assert_eq!(as_u32(partition_series(3, 4)), vec![1, 1, 2, 3, 4]);
    assert_eq!(as_u32(partition_series(1, 5)), vec![1; 6]);
    assert_eq!(as_u32(partition_series(10, 7)), vec![1, 1, 2, 3, 5, 7, 11, 15]);
}

#[test]
fn graded_infinite_values() {
    let at = |k, t| match theta_infinite_zeta(2, k, InfiniteMode::AtT(t)).unwrap() {
        InfiniteZeta::Value(v) => v,
        InfiniteZeta::Graded(_) => panic!("expected a value"),
    };
    assert_eq!(at(2, int(0)), GradedValue::new(2, rat(1, 120)));
    assert_eq!(at(2, int(1)), GradedValue::new(2, rat(7, 360)));
    for k in 1..=6usize {
        let fact: Rational = (1..=2 * k as i64 + 1).map(int).product();
        assert_eq!(at(k, int(0)), GradedValue::new(k as u32, fact.recip()));
    }
    assert!(theta_infinite_zeta(3, 2, InfiniteMode::Graded).is_err());
}

#[test]
fn bivariate_closed_form() {
    assert_eq!(closed_form_ones_bivariate(3, 2).unwrap().poly(), &Poly::from_i64(&[3, 3]));
    assert_eq!(closed_form_ones_bivariate(5, 0).unwrap().poly(), &Poly::one());
    for k in 1..6 {
        assert_eq!(closed_form_ones_bivariate(1, k).unwrap().poly(), &Poly::monomial(int(1), k - 1));
    }
}

#[test]
fn multiset_statistics() {
    assert_eq!(enumerate_multisets(3, 2).unwrap().count(), 6);
    assert_eq!(enumerate_multisets(4, 0).unwrap().count(), 1);
    let all: Vec<Vec<u32>> = enumerate_multisets(2, 3).unwrap().map(|m| m.entries().to_vec()).collect();
    assert_eq!(all.len(), 4);
    for e in [vec![1, 1, 1], vec![2, 1, 1], vec![2, 2, 1], vec![2, 2, 2]] {
        assert!(all.contains(&e));
    }
    let example = ms(&[1, 1, 2, 2, 2, 4, 6]);
    assert_eq!(sigma(&example), 3);
    assert_eq!(sigma_refined(&example, 6), vec![1, 2, 0, 0, 0, 0]);
    assert_eq!(sigma(&ms(&[5, 5, 5, 5])), 3);
    assert_eq!(sigma(&ms(&[7, 4, 1])), 0);
    assert_eq!(sigma_refined(&ms(&[2, 2, 2]), 2), vec![0, 2]);
    assert_eq!(p_norm(&ms(&[3, 2, 2])), 7);
    assert_eq!(shape(&ms(&[3, 3, 1])).unwrap().parts(), &[2, 1]);
    assert_eq!(shape(&ms(&[4, 4, 4])).unwrap().parts(), &[3]);
}

#[test]
fn composition_lists() {
    let parts = |k| compositions(k).unwrap().into_iter().map(|c| c.parts().to_vec()).collect::<Vec<_>>();
    let three = parts(3);
    assert_eq!(three.len(), 4);
    for c in [vec![1, 1, 1], vec![2, 1], vec![1, 2], vec![3]] {
        assert!(three.contains(&c));
    }
    assert_eq!(parts(1), vec![vec![1]]);
    let four = parts(4);
    assert_eq!(four.len(), 8);
    assert!(four.contains(&vec![2, 2]));
}

#[test]
fn sigma_laws() {
    let ones = WeightSequence::ones();
    assert_eq!(s_pmf(&ones, 3, 2).unwrap().probs(), &[rat(1, 2), rat(1, 2)]);
    assert_eq!(s_pmf(&zeta(1), 2, 2).unwrap().probs(), &[rat(2, 7), rat(5, 7)]);
    assert_eq!(s_pmf(&zeta(2), 6, 1).unwrap(), Pmf::point_mass(0));
    let m = moments(&ones, 3, 2, 2).unwrap();
    assert_eq!((m.mean, m.variance), (rat(1, 2), rat(1, 4)));
    assert_eq!(moments(&zeta(1), 2, 2, 1).unwrap().mean, rat(5, 7));
    assert_eq!(hypergeom_pmf(4, 1, 2).unwrap(), s_pmf(&ones, 3, 2).unwrap());
    assert_eq!(hypergeom_pmf(7, 0, 3).unwrap(), Pmf::point_mass(0));
    assert_eq!(hypergeom_pmf(5, 2, 2).unwrap().probs(), &[rat(3, 10), rat(6, 10), rat(1, 10)]);
    assert_eq!(expected_sigma_zeta(2, 2).unwrap(), rat(5, 7));
    assert_eq!(expected_sigma_zeta(3, 3).unwrap(), moments(&zeta(1), 3, 3, 1).unwrap().mean);
}

#[test]
fn marginal_laws() {
    assert_eq!(marginal_pmf(3, 2).unwrap().probs(), &[rat(5, 6), rat(1, 6)]);
    assert_eq!(marginal_pmf(6, 1).unwrap(), Pmf::point_mass(0));
    let m = marginal_moments(3, 2, 2).unwrap();
    assert_eq!(m.factorial_moments, vec![rat(1, 6), int(0)]);
    for t in [int(0), rat(1, 2), int(3)] {
        let expected = (&t + rat(3, 4)) / rat(7, 4);
        assert_eq!(marginal_zeta_pgf(2, 2, 1, &t).unwrap(), expected);
        assert_eq!(marginal_zeta_pgf(4, 1, 2, &t).unwrap(), int(1));
    }
    assert_eq!(marginal_zeta_pgf(2, 2, 2, &int(0)).unwrap(), rat(6, 7));
}

#[test]
fn bernoulli_laws() {
    let p = bernoulli_sum_pmf(&[int(1), rat(1, 2), rat(1, 3)]).unwrap();
    assert_eq!((p.offset(), p.probs()), (1, &[rat(1, 3), rat(1, 2), rat(1, 6)][..]));
    assert_eq!(p, d_n_pmf(3, 1).unwrap());
    assert_eq!(bernoulli_sum_pmf(&[int(0), int(0)]).unwrap(), Pmf::point_mass(0));
    assert_eq!(bernoulli_sum_pmf(&[rat(1, 4)]).unwrap().probs(), &[rat(3, 4), rat(1, 4)]);
    assert_eq!(d_n_pmf(1, 2).unwrap(), Pmf::point_mass(1));
}

#[test]
fn sum_theorem_values() {
    assert_eq!(sum_theorem_pmf(3, 5).unwrap().probs(), &[rat(1, 6), rat(1, 3), rat(1, 2)]);
    assert_eq!(bezier_coeffs(3, 5).unwrap(), vec![rat(1, 6), rat(1, 3), int(1)]);
}

#[test]
fn distances() {
    let p = FloatPmf::new(0, vec![0.25, 0.75]);
    assert!(tv_distance(&p, &p).is_zero());
    assert_eq!(tv_distance(&FloatPmf::new(0, vec![1.0]), &FloatPmf::new(1, vec![1.0])), 1.0);
}

#[test]
fn algorithm_names_round_trip() {
    for algo in Algorithm::ALL {
        assert_eq!(algo.name().parse::<Algorithm>().unwrap(), algo);
    }
}
