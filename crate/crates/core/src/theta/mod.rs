//! `theta_{n;k}(t) = sum over k-multisets l of [n] of w(l) t^sigma(l)`,
//! computed by several independent routes that must agree exactly.
//!
//! * [`theta_product`]: truncated product of the per-value factors
//!   `1 + a z / (1 - a z t)`.
//! * [`theta_newton`]: the log-derivative recurrence on
//!   `alpha_j(t) = A_n(j) (t^j - (t-1)^j)`.
//! * [`theta_bell`]: complete Bell polynomial of the scaled `alpha_j`.
//! * [`theta_det`]: the almost-triangular determinant in the `alpha_j`.
//! * [`theta_convolution`]: `sum_j t^j h_j (1-t)^(k-j) e_(k-j)`.
//! * [`theta_partial_fraction`]: pointwise combinatorial sum for distinct weights.

mod bivariate;
mod graded;
mod newton;
mod partial_fraction;
mod partitions;
mod product;
mod symmetric;
mod zeta;

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::exact::{Poly, Rational};
use crate::weights::WeightSequence;

pub use bivariate::closed_form_ones_bivariate;
pub use graded::{theta_infinite_zeta, GradedPoly, GradedValue, InfiniteMode, InfiniteZeta};
pub use newton::{alphas, theta_bell, theta_det, theta_newton, theta_newton_all};
pub use partial_fraction::theta_partial_fraction;
pub use partitions::partition_series;
pub use product::{theta_multi_eval, theta_product, theta_product_all, theta_qt};
pub use symmetric::{complete_symmetric, elementary_symmetric, theta_convolution};
pub use zeta::{multiple_harmonic, theta_ordered_partitions, zeta_star_ones, zeta_t_ones};

/// `theta_{n;k}(t)` together with the data it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPoly {
    n: usize,
    k: usize,
    seq: WeightSequence,
    poly: Poly,
}

impl ThetaPoly {
    pub fn new(seq: &WeightSequence, n: usize, k: usize, poly: Poly) -> Self {
        ThetaPoly { n, k, seq: seq.clone(), poly }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn seq(&self) -> &WeightSequence {
        &self.seq
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn eval(&self, t0: &Rational) -> Rational {
        self.poly.eval(t0)
    }

    /// `e_k(a_1..a_n)`.
    pub fn at_zero(&self) -> Rational {
        self.poly.coeff(0)
    }

    /// `h_k(a_1..a_n)`.
    pub fn at_one(&self) -> Rational {
        self.poly.coeffs().iter().sum()
    }
}

impl fmt::Display for ThetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta[{}; n={}, k={}] = {}", self.seq, self.n, self.k, self.poly)
    }
}

/// The five polynomial-valued algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Product,
    Newton,
    Bell,
    Determinant,
    Convolution,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] =
        [Algorithm::Product, Algorithm::Newton, Algorithm::Bell, Algorithm::Determinant, Algorithm::Convolution];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Product => "product",
            Algorithm::Newton => "newton",
            Algorithm::Bell => "bell",
            Algorithm::Determinant => "det",
            Algorithm::Convolution => "convolution",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| invalid(format!("unknown algorithm {s:?}")))
    }
}

pub fn compute_theta(seq: &WeightSequence, n: usize, k: usize, algo: Algorithm) -> Result<ThetaPoly> {
    match algo {
        Algorithm::Product => theta_product(seq, n, k),
        Algorithm::Newton => theta_newton(seq, n, k),
        Algorithm::Bell => theta_bell(seq, n, k),
        Algorithm::Determinant => theta_det(seq, n, k),
        Algorithm::Convolution => theta_convolution(seq, n, k),
    }
}

pub(crate) fn check_nk(seq: &WeightSequence, n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("n must be >= 1"));
    }
    seq.check_range(n)
}
