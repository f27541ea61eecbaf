use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{format_rational, zeta_even_coeff, Poly, Rational};

/// `coeff * pi^(2 weight)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedValue {
    weight: u32,
    coeff: Rational,
}

impl GradedValue {
    pub fn new(weight: u32, coeff: Rational) -> Self {
        GradedValue { weight, coeff }
    }

    /// `zeta(2j)` for `j >= 1`.
    pub fn zeta_even(j: u32) -> Self {
        GradedValue::new(j, zeta_even_coeff(j as usize))
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn try_add(&self, other: &GradedValue) -> Result<GradedValue> {
        if self.weight != other.weight {
            return Err(Error::GradeMismatch { left: self.weight, right: other.weight });
        }
        Ok(GradedValue::new(self.weight, &self.coeff + &other.coeff))
    }

    pub fn mul(&self, other: &GradedValue) -> GradedValue {
        GradedValue::new(self.weight + other.weight, &self.coeff * &other.coeff)
    }

    pub fn scale(&self, c: &Rational) -> GradedValue {
        GradedValue::new(self.weight, &self.coeff * c)
    }

    pub fn to_f64(&self) -> f64 {
        crate::exact::to_f64(&self.coeff) * std::f64::consts::PI.powi(2 * self.weight as i32)
    }
}

impl fmt::Display for GradedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*pi^{}", format_rational(&self.coeff), 2 * self.weight)
    }
}

/// A polynomial in `t` whose every coefficient carries `pi^(2 weight)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoly {
    weight: u32,
    poly: Poly,
}

impl GradedPoly {
    pub fn new(weight: u32, poly: Poly) -> Self {
        GradedPoly { weight, poly }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn coeff(&self, j: usize) -> GradedValue {
        GradedValue::new(self.weight, self.poly.coeff(j))
    }

    pub fn eval(&self, t0: &Rational) -> GradedValue {
        GradedValue::new(self.weight, self.poly.eval(t0))
    }

    pub fn try_add(&self, other: &GradedPoly) -> Result<GradedPoly> {
        if self.weight != other.weight {
            return Err(Error::GradeMismatch { left: self.weight, right: other.weight });
        }
        Ok(GradedPoly::new(self.weight, &self.poly + &other.poly))
    }

    pub fn mul(&self, other: &GradedPoly) -> GradedPoly {
        GradedPoly::new(self.weight + other.weight, &self.poly * &other.poly)
    }

    pub fn scale(&self, c: &Rational) -> GradedPoly {
        GradedPoly::new(self.weight, self.poly.scale(c))
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi^{} * {}", 2 * self.weight, self.poly)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfiniteMode {
    Graded,
    AtT(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfiniteZeta {
    Graded(GradedPoly),
    Value(GradedValue),
}

impl InfiniteZeta {
    pub fn weight(&self) -> u32 {
        match self {
            InfiniteZeta::Graded(p) => p.weight(),
            InfiniteZeta::Value(v) => v.weight(),
        }
    }
}

/// `theta_{inf;k}(t)` for `a_m = m^-m_exp` with `m_exp` even, using
/// `A_inf(j) = zeta(m_exp j)` in graded arithmetic.
pub fn theta_infinite_zeta(m: u32, k: usize, mode: InfiniteMode) -> Result<InfiniteZeta> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::Unsupported(format!("infinite zeta weights need an even exponent m >= 2, got {m}")));
    }
    let half = m / 2;
    let alpha: Vec<GradedPoly> = (1..=k as u32)
        .map(|j| GradedPoly::new(half * j, Poly::power_gap(j).scale(&zeta_even_coeff((half * j) as usize))))
        .collect();
    let mut theta: Vec<GradedPoly> = vec![GradedPoly::new(0, Poly::one())];
    for j in 1..=k {
        let mut acc = GradedPoly::new(half * j as u32, Poly::zero());
        for i in 1..=j {
            acc = acc.try_add(&alpha[i - 1].mul(&theta[j - i]))?;
        }
        theta.push(acc.scale(&Rational::new(1.into(), (j as i64).into())));
    }
    let top = theta.swap_remove(k);
    Ok(match mode {
        InfiniteMode::Graded => InfiniteZeta::Graded(top),
        InfiniteMode::AtT(t0) => InfiniteZeta::Value(top.eval(&t0)),
    })
}
