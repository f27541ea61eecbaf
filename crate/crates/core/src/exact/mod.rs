//! Exact arithmetic kernels: rationals, dense polynomials in `t`, power
//! series in `z` over those polynomials, and the classical number tables.

mod bell;
mod det;
mod poly;
mod rational;
mod scalar;
mod series;
mod tables;

pub use bell::bell_complete;
pub use det::det_exact;
pub use poly::Poly;
pub use rational::{
    falling_rational, format_rational, int, parse_rational, pow_rational, rat, rational_arith, to_f64, ArithOp,
    Rational,
};
pub use scalar::Scalar;
pub use series::{series_mul, Series};
pub use tables::{
    bernoulli, binomial, binomial_int, falling_int, gen_binomial, harmonic, stirling_first_unsigned, stirling_second,
    zeta_even_coeff,
};
