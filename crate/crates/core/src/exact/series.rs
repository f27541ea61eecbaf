use super::Poly;
use crate::error::{Error, Result};

/// Power series in `z` with polynomial coefficients, truncated after `z^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Poly>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Poly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = Poly::one();
        s
    }

    /// Builds a series from its leading coefficients; missing ones are zero,
    /// anything above `z^order` is dropped.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Poly>) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &Poly {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Poly> {
        self.coeffs
    }
}

/// Truncated Cauchy product; both operands must share the same order.
pub fn series_mul(a: &Series, b: &Series) -> Result<Series> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch { left: a.order(), right: b.order() });
    }
    let order = a.order();
    let mut out = Series::zero(order);
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs[..=order - i].iter().enumerate() {
            if !bj.is_zero() {
                out.coeffs[i + j] = &out.coeffs[i + j] + &(ai * bj);
            }
        }
    }
    Ok(out)
}
