use super::Scalar;
use crate::error::{invalid, Error, Result};

/// Exact determinant by Bareiss fraction-free elimination. Every division
/// performed is exact in the ring, so polynomial entries stay polynomial.
pub fn det_exact<T: Scalar>(m: &[Vec<T>]) -> Result<T> {
    let n = m.len();
    if n == 0 || m.iter().any(|row| row.len() != n) {
        return Err(invalid("det_exact needs a non-empty square matrix"));
    }
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev).ok_or(Error::DivisionByZero)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign_flip { T::zero().sub(&d) } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, Poly, Rational};

    #[test]
    fn two_by_two_polynomial() {
        // [[a1, -1], [a2, a1]] with a1 = t, a2 = 3
        let a1 = Poly::t();
        let a2 = Poly::from_i64(&[3]);
        let m = vec![vec![a1.clone(), Poly::from_i64(&[-1])], vec![a2, a1]];
        assert_eq!(det_exact(&m).unwrap(), Poly::from_i64(&[3, 0, 1]));
    }

    #[test]
    fn identity_and_scalar() {
        let id: Vec<Vec<Rational>> = (0..3).map(|i| (0..3).map(|j| int((i == j) as i64)).collect()).collect();
        assert_eq!(det_exact(&id).unwrap(), int(1));
        assert_eq!(det_exact(&[vec![rat(2, 3)]]).unwrap(), rat(2, 3));
    }

    #[test]
    fn pivoting_and_singular() {
        let m = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(det_exact(&m).unwrap(), int(-1));
        let s = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(det_exact(&s).unwrap(), int(0));
        let m3 = vec![vec![int(2), int(-1), int(0)], vec![int(-1), int(2), int(-1)], vec![int(0), int(-1), int(2)]];
        assert_eq!(det_exact(&m3).unwrap(), int(4));
        assert!(det_exact::<Rational>(&[]).is_err());
    }
}
