use num_traits::One;

use super::{check_nk, ThetaPoly};
use crate::error::Result;
use crate::exact::{bell_complete, det_exact, int, Poly, Rational};
use crate::weights::WeightSequence;

/// `alpha_j(t) = A_n(j) (t^j - (t-1)^j)` for `j = 1..=k`.
pub fn alphas(seq: &WeightSequence, n: usize, k: usize) -> Result<Vec<Poly>> {
    check_nk(seq, n)?;
    let sums = seq.power_sums(n, k)?;
    Ok(sums.iter().enumerate().map(|(i, a)| Poly::power_gap(i as u32 + 1).scale(a)).collect())
}

/// `theta_{n;0..=k}` from `j theta_j = sum_{i=1..j} alpha_i theta_(j-i)`.
pub fn theta_newton_all(seq: &WeightSequence, n: usize, k: usize) -> Result<Vec<Poly>> {
    let alpha = alphas(seq, n, k)?;
    let mut out: Vec<Poly> = Vec::with_capacity(k + 1);
    out.push(Poly::one());
    for j in 1..=k {
        let mut acc = Poly::zero();
        for i in 1..=j {
            acc = acc + &alpha[i - 1] * &out[j - i];
        }
        out.push(acc.scale(&Rational::new(1.into(), (j as i64).into())));
    }
    Ok(out)
}

pub fn theta_newton(seq: &WeightSequence, n: usize, k: usize) -> Result<ThetaPoly> {
    let mut all = theta_newton_all(seq, n, k)?;
    Ok(ThetaPoly::new(seq, n, k, all.swap_remove(k)))
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, i| acc * int(i))
}

/// `B_k(x_1..x_k) / k!` with `x_l = (l-1)! alpha_l`.
pub fn theta_bell(seq: &WeightSequence, n: usize, k: usize) -> Result<ThetaPoly> {
    let alpha = alphas(seq, n, k)?;
    let x: Vec<Poly> = alpha.iter().enumerate().map(|(i, a)| a.scale(&factorial(i))).collect();
    let b = bell_complete(&x, k)?;
    Ok(ThetaPoly::new(seq, n, k, b.scale(&(Rational::one() / factorial(k)))))
}

/// `det(M) / k!` where `M` carries `alpha_(i-j+1)` on and below the diagonal
/// and `-i` on the superdiagonal.
pub fn theta_det(seq: &WeightSequence, n: usize, k: usize) -> Result<ThetaPoly> {
    if k == 0 {
        check_nk(seq, n)?;
        return Ok(ThetaPoly::new(seq, n, 0, Poly::one()));
    }
    let alpha = alphas(seq, n, k)?;
    let m: Vec<Vec<Poly>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if j <= i {
                        alpha[i - j].clone()
                    } else if j == i + 1 {
                        Poly::constant(int(-(i as i64 + 1)))
                    } else {
                        Poly::zero()
                    }
                })
                .collect()
        })
        .collect();
    let d = det_exact(&m)?;
    Ok(ThetaPoly::new(seq, n, k, d.scale(&(Rational::one() / factorial(k)))))
}
