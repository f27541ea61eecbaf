use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::rational::{pow_unsigned, Rational};

/// `C(n, k)` for non-negative arguments as an exact integer.
pub fn binomial_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Falling-factorial binomial `n (n-1) ... (n-k+1) / k!`, valid for every
/// integer `n`; zero for negative `k`.
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    if n >= 0 {
        return Rational::from_integer(binomial_int(n as u64, k as u64));
    }
    gen_binomial(&Rational::from_integer(n.into()), k as u32)
}

/// `x (x-1) ... (x-j+1) / j!` for rational `x`.
pub fn gen_binomial(x: &Rational, j: u32) -> Rational {
    let mut acc = Rational::one();
    let mut cur = x.clone();
    for i in 1..=j {
        acc = acc * &cur / Rational::from_integer(i.into());
        cur -= Rational::one();
    }
    acc
}

/// Integer falling factorial `x^(s)`; may be negative for negative `x`.
pub fn falling_int(x: i64, s: u32) -> BigInt {
    (0..s as i64).map(|i| BigInt::from(x - i)).product()
}

/// Unsigned Stirling numbers of the first kind via
/// `c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)`.
pub fn stirling_first_unsigned(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m + 1];
        for j in 1..=m {
            let mut v = row[j - 1].clone();
            if j < m {
                v += &row[j] * BigUint::from(m - 1);
            }
            next[j] = v;
        }
        row = next;
    }
    row[k].clone()
}

/// Stirling numbers of the second kind via `S(n,k) = S(n-1,k-1) + k S(n-1,k)`.
pub fn stirling_second(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m + 1];
        for j in 1..=m {
            let mut v = row[j - 1].clone();
            if j < m {
                v += &row[j] * BigUint::from(j);
            }
            next[j] = v;
        }
        row = next;
    }
    row[k].clone()
}

/// Generalized harmonic number `H_n^(j) = sum_{m<=n} m^-j`.
pub fn harmonic(n: u64, j: u32) -> Rational {
    (1..=n)
        .map(|m| pow_unsigned(&Rational::from_integer(m.into()), j as u64).recip())
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// Bernoulli numbers with `B_1 = -1/2`, from
/// `sum_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli(n: usize) -> Rational {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += Rational::from_integer(binomial_int(m as u64 + 1, j as u64)) * bj;
        }
        b.push(-acc / Rational::from_integer((m as u64 + 1).into()));
    }
    b[n].clone()
}

/// Rational `c_j` with `zeta(2j) = c_j * pi^(2j)`.
pub fn zeta_even_coeff(j: usize) -> Rational {
    assert!(j >= 1, "zeta_even_coeff needs j >= 1");
    let b = bernoulli(2 * j);
    let two_pow = Rational::from_integer(BigInt::one() << (2 * j - 1));
    let fact: BigInt = (1..=2 * j as u64).map(BigInt::from).product();
    let v = b * two_pow / Rational::from_integer(fact);
    if j % 2 == 1 {
        v
    } else {
        -v
    }
}
