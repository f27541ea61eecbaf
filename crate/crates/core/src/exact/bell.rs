use super::{binomial_int, Rational, Scalar};
use crate::error::{invalid, Result};

/// Complete Bell polynomial `B_k(x_1, ..., x_k)` through
/// `B_k = sum_{j=1}^{k} C(k-1, j-1) x_j B_{k-j}`, `B_0 = 1`.
pub fn bell_complete<T: Scalar>(x: &[T], k: usize) -> Result<T> {
    if x.len() < k {
        return Err(invalid(format!("bell_complete needs {k} arguments, got {}", x.len())));
    }
    let mut b: Vec<T> = Vec::with_capacity(k + 1);
    b.push(T::one());
    for m in 1..=k {
        let mut acc = T::zero();
        for j in 1..=m {
            let c = Rational::from_integer(binomial_int(m as u64 - 1, j as u64 - 1));
            acc = acc.add(&x[j - 1].mul(&b[m - j]).scale(&c));
        }
        b.push(acc);
    }
    Ok(b.pop().expect("non-empty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Poly};

    #[test]
    fn small_values() {
        let ones = vec![int(1); 3];
        assert_eq!(bell_complete(&ones, 2).unwrap(), int(2));
        assert_eq!(bell_complete(&ones, 3).unwrap(), int(5));
        assert_eq!(bell_complete::<Rational>(&[], 0).unwrap(), int(1));
        assert!(bell_complete(&ones, 4).is_err());
    }

    #[test]
    fn polynomial_arguments() {
        // B_2(x1, x2) = x1^2 + x2 with x1 = t, x2 = 1
        let x = vec![Poly::t(), Poly::one()];
        assert_eq!(bell_complete(&x, 2).unwrap(), Poly::from_i64(&[1, 0, 1]));
    }
}
