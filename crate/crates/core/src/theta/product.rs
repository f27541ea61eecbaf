use num_traits::Zero;

use super::{check_nk, ThetaPoly};
use crate::error::{invalid, Result};
use crate::exact::{series_mul, Poly, Rational, Series};
use crate::weights::WeightSequence;

/// `B_m(z) = 1 + sum_{j=1..order} a^j t^(j-1) z^j`.
fn factor(a: &Rational, order: usize) -> Series {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Poly::one());
    for j in 1..=order {
        coeffs.push(Poly::scaled_monomial(a, j as u64, j - 1));
    }
    Series::from_coeffs(order, coeffs)
}

/// `Theta_n(z, t)` up to `z^k`; entry `j` is `theta_{n;j}(t)`.
pub fn theta_product_all(seq: &WeightSequence, n: usize, k: usize) -> Result<Vec<Poly>> {
    check_nk(seq, n)?;
    let mut acc = Series::one(k);
    for a in seq.weights(n)? {
        acc = series_mul(&acc, &factor(&a, k))?;
    }
    Ok(acc.into_coeffs())
}

pub fn theta_product(seq: &WeightSequence, n: usize, k: usize) -> Result<ThetaPoly> {
    let mut all = theta_product_all(seq, n, k)?;
    Ok(ThetaPoly::new(seq, n, k, all.swap_remove(k)))
}

/// `[z^k] prod_m (1 + a_m z / (1 - a_m t_m z))` at a rational vector `t`.
pub fn theta_multi_eval(seq: &WeightSequence, n: usize, k: usize, tvec: &[Rational]) -> Result<Rational> {
    check_nk(seq, n)?;
    if tvec.len() != n {
        return Err(invalid(format!("t-vector has {} entries, expected {n}", tvec.len())));
    }
    let mut acc = Series::one(k);
    for (a, t) in seq.weights(n)?.iter().zip(tvec) {
        let mut coeffs = vec![Poly::one()];
        let mut at = a.clone();
        for _ in 1..=k {
            coeffs.push(Poly::constant(at.clone()));
            at = at * a * t;
        }
        acc = series_mul(&acc, &Series::from_coeffs(k, coeffs))?;
    }
    Ok(acc.coeff(k).coeff(0))
}

/// `theta_{n;k}(t, q)` for a rational `q`: the product with `a_m -> a_m q^m`.
pub fn theta_qt(seq: &WeightSequence, n: usize, k: usize, q: &Rational) -> Result<ThetaPoly> {
    if *q <= Rational::zero() {
        return Err(invalid("q must be positive"));
    }
    let modified = WeightSequence::q_modified(seq.clone(), q.clone())?;
    let poly = theta_product(&modified, n, k)?.into_poly();
    Ok(ThetaPoly::new(seq, n, k, poly))
}
