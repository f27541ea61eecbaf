use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Coefficients of `prod_{m=1..n} 1/(1 - q^m)` up to `q^big_n`.
pub fn partition_series(n: usize, big_n: usize) -> Vec<BigUint> {
    let mut p = vec![BigUint::zero(); big_n + 1];
    p[0] = BigUint::one();
    for m in 1..=n.min(big_n) {
        for i in m..=big_n {
            let add = p[i - m].clone();
            p[i] += add;
        }
    }
    p
}
