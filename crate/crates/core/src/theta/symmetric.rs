use num_traits::{One, Zero};

use super::{check_nk, ThetaPoly};
use crate::error::Result;
use crate::exact::{Poly, Rational};
use crate::weights::WeightSequence;

/// `e_0..=e_k` of `a_1..a_n`.
pub fn elementary_symmetric(seq: &WeightSequence, n: usize, k: usize) -> Result<Vec<Rational>> {
    check_nk(seq, n)?;
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for a in seq.weights(n)? {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * &a;
            e[j] += add;
        }
    }
    Ok(e)
}

/// `h_0..=h_k` of `a_1..a_n`.
pub fn complete_symmetric(seq: &WeightSequence, n: usize, k: usize) -> Result<Vec<Rational>> {
    check_nk(seq, n)?;
    let mut h = vec![Rational::zero(); k + 1];
    h[0] = Rational::one();
    for a in seq.weights(n)? {
        for j in 1..=k {
            let add = &h[j - 1] * &a;
            h[j] += add;
        }
    }
    Ok(h)
}

/// `sum_{j=0..k} t^j h_j (1-t)^(k-j) e_(k-j)`.
pub fn theta_convolution(seq: &WeightSequence, n: usize, k: usize) -> Result<ThetaPoly> {
    let e = elementary_symmetric(seq, n, k)?;
    let h = complete_symmetric(seq, n, k)?;
    let mut acc = Poly::zero();
    for j in 0..=k {
        let c = &h[j] * &e[k - j];
        if c.is_zero() {
            continue;
        }
        acc = acc + Poly::one_minus_t_pow((k - j) as u32).shift(j).scale(&c);
    }
    Ok(ThetaPoly::new(seq, n, k, acc))
}
