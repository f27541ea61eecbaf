use super::ThetaPoly;
use crate::error::{invalid, Result};
use crate::exact::Poly;
use crate::weights::WeightSequence;

/// `[x^n z^k] (1 - z t) / ((1 - z t)(1 - x) - z x)` by expanding the inverse of
/// the denominator `1 - x - z t + x z (t - 1)` as a bivariate series.
pub fn closed_form_ones_bivariate(n: usize, k: usize) -> Result<ThetaPoly> {
    if n == 0 {
        return Err(invalid("n must be >= 1"));
    }
    let t = Poly::t();
    let t_minus_one = Poly::from_i64(&[-1, 1]);
    let mut f: Vec<Vec<Poly>> = vec![vec![Poly::zero(); k + 1]; n + 1];
    for i in 0..=n {
        for j in 0..=k {
            let mut v = if i == 0 && j == 0 { Poly::one() } else { Poly::zero() };
            if i > 0 {
                v = v + &f[i - 1][j];
            }
            if j > 0 {
                v = v + &t * &f[i][j - 1];
            }
            if i > 0 && j > 0 {
                v = v - &t_minus_one * &f[i - 1][j - 1];
            }
            f[i][j] = v;
        }
    }
    let mut poly = f[n][k].clone();
    if k > 0 {
        poly = poly - &t * &f[n][k - 1];
    }
    Ok(ThetaPoly::new(&WeightSequence::ones(), n, k, poly))
}
