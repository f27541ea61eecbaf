use num_traits::{One, Zero};

use super::ThetaPoly;
use crate::error::{invalid, Result};
use crate::exact::{binomial_int, gen_binomial, int, pow_rational, Poly, Rational};
use crate::oracle::compositions;
use crate::weights::WeightSequence;

/// Truncated multiple zeta value
/// `zeta_n(i_1..i_d) = sum_{n >= l_1 > ... > l_d >= 1} prod l_r^(-i_r)`.
/// The empty index list gives 1.
pub fn multiple_harmonic(n: usize, indices: &[u32]) -> Rational {
    // g[l] = value of the inner tail summed over its outermost variable <= l
    let mut g: Vec<Rational> = vec![Rational::one(); n + 1];
    for &i in indices.iter().rev() {
        let mut next = vec![Rational::zero(); n + 1];
        for l in 1..=n {
            let term = &g[l - 1] * pow_rational(&int(l as i64), -(i as i64)).expect("l >= 1");
            next[l] = &next[l - 1] + term;
        }
        g = next;
    }
    g[n].clone()
}

/// `sum over compositions p of k of zeta_n(m p) t^(k - len p)`.
pub fn theta_ordered_partitions(m: u32, n: usize, k: usize) -> Result<ThetaPoly> {
    let seq = WeightSequence::zeta(m)?;
    if n == 0 {
        return Err(invalid("n must be >= 1"));
    }
    if k == 0 {
        return Ok(ThetaPoly::new(&seq, n, 0, Poly::one()));
    }
    let mut coeffs = vec![Rational::zero(); k];
    for p in compositions(k as u32)? {
        let idx: Vec<u32> = p.parts().iter().map(|&x| x * m).collect();
        coeffs[k - p.len()] += multiple_harmonic(n, &idx);
    }
    Ok(ThetaPoly::new(&seq, n, k, Poly::from_coeffs(coeffs)))
}

/// `zeta*_n({1}_k) = h_k(1, 1/2, ..., 1/n)`.
pub fn zeta_star_ones(n: usize, k: usize) -> Rational {
    let mut h = vec![Rational::zero(); k + 1];
    h[0] = Rational::one();
    for m in 1..=n {
        let a = Rational::new(1.into(), (m as i64).into());
        for j in 1..=k {
            let add = &h[j - 1] * &a;
            h[j] += add;
        }
    }
    h[k].clone()
}

/// `theta_{n;k}(t0)` for `a_m = 1/m` as
/// `t0^k sum_{j=1..n} C(n + j (1-t0)/t0, n) C(n, j) (-1)^(j-1) / j^k`.
pub fn zeta_t_ones(n: usize, k: usize, t0: &Rational) -> Result<Rational> {
    if t0.is_zero() {
        return Err(invalid("zeta_t_ones needs t0 != 0"));
    }
    if n == 0 {
        return Err(invalid("n must be >= 1"));
    }
    let c = (Rational::one() - t0) / t0;
    let nn = int(n as i64);
    let mut total = Rational::zero();
    for j in 1..=n {
        let jr = int(j as i64);
        let mut term = gen_binomial(&(&nn + &jr * &c), n as u32)
            * Rational::from_integer(binomial_int(n as u64, j as u64))
            / pow_rational(&jr, k as i64)?;
        if j % 2 == 0 {
            term = -term;
        }
        total += term;
    }
    Ok(total * pow_rational(t0, k as i64)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{harmonic, rat};
    use crate::theta::theta_product;

    #[test]
    fn multiple_harmonic_examples() {
        assert_eq!(multiple_harmonic(3, &[1, 1]), int(1));
        assert_eq!(multiple_harmonic(7, &[3]), harmonic(7, 3));
        assert_eq!(multiple_harmonic(2, &[1, 1, 1]), int(0));
        assert_eq!(multiple_harmonic(2, &[1, 1]), rat(1, 2));
        assert_eq!(multiple_harmonic(2, &[2]), rat(5, 4));
        assert_eq!(multiple_harmonic(4, &[]), int(1));
    }

    #[test]
    fn ordered_partitions_examples() {
        let p = theta_ordered_partitions(1, 2, 2).unwrap();
        assert_eq!(p.poly(), &Poly::from_coeffs(vec![rat(1, 2), rat(5, 4)]));
        assert_eq!(theta_ordered_partitions(1, 5, 1).unwrap().poly(), &Poly::constant(harmonic(5, 1)));
        let z2 = WeightSequence::zeta(2).unwrap();
        assert_eq!(theta_ordered_partitions(2, 10, 3).unwrap().poly(), theta_product(&z2, 10, 3).unwrap().poly());
    }

    #[test]
    fn zeta_t_ones_examples() {
        assert_eq!(zeta_t_ones(2, 2, &int(1)).unwrap(), rat(7, 4));
        assert_eq!(zeta_t_ones(2, 2, &rat(1, 2)).unwrap(), rat(9, 8));
        assert_eq!(zeta_t_ones(1, 3, &rat(2, 3)).unwrap(), rat(4, 9));
        assert_eq!(zeta_t_ones(1, 1, &rat(2, 3)).unwrap(), int(1));
        assert!(zeta_t_ones(3, 2, &int(0)).is_err());
        let z = WeightSequence::zeta(1).unwrap();
        for t0 in [rat(1, 3), rat(3, 2), int(-2)] {
            assert_eq!(zeta_t_ones(6, 4, &t0).unwrap(), theta_product(&z, 6, 4).unwrap().eval(&t0));
        }
    }

    #[test]
    fn zeta_star_matches_t_one() {
        assert_eq!(zeta_star_ones(2, 2), rat(7, 4));
        assert_eq!(zeta_star_ones(5, 3), zeta_t_ones(5, 3, &int(1)).unwrap());
    }
}
