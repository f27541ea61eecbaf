use num_traits::{One, Zero};

use super::check_nk;
use crate::error::{invalid, Error, Result};
use crate::exact::{pow_rational, Rational};
use crate::weights::WeightSequence;

/// `theta_{n;k}(t0)` for pairwise distinct weights and `t0 != 0`, as
/// `(-1)^(n-1) sum_j prod_m((1-t)/(a_j t) + 1/a_m) / prod_(l!=j)(1/a_j - 1/a_l) * a_j^(k+1) t^k`.
pub fn theta_partial_fraction(seq: &WeightSequence, n: usize, k: usize, t0: &Rational) -> Result<Rational> {
    check_nk(seq, n)?;
    if t0.is_zero() {
        return Err(invalid("partial-fraction evaluation needs t0 != 0"));
    }
    if !seq.is_distinct(n)? {
        return Err(Error::NotDistinct(n));
    }
    if k == 0 {
        return Ok(Rational::one());
    }
    let a = seq.weights(n)?;
    let inv: Vec<Rational> = a.iter().map(|x| Rational::one() / x).collect();
    let one_minus_t = Rational::one() - t0;
    let tk = pow_rational(t0, k as i64)?;
    let mut total = Rational::zero();
    for j in 0..n {
        let shift = &one_minus_t / (&a[j] * t0);
        let num: Rational = inv.iter().map(|im| &shift + im).product();
        let den: Rational = (0..n).filter(|&l| l != j).map(|l| &inv[j] - &inv[l]).product();
        total += num / den * pow_rational(&a[j], k as i64 + 1)? * &tk;
    }
    if n.is_multiple_of(2) {
        total = -total;
    }
    Ok(total)
}
