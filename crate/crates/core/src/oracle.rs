//! Brute-force enumeration of `k`-multisets of `[n]`: the ground truth that
//! every fast algorithm in [`crate::theta`] is checked against.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};
use crate::exact::{binomial_int, pow_rational, Poly, Rational};
use crate::theta::ThetaPoly;
use crate::weights::WeightSequence;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A `k`-multiset of `[n]` stored as its weakly decreasing representative
/// `l_1 >= l_2 >= ... >= l_k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multiset {
    entries: Vec<u32>,
}

impl Multiset {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) || entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(format!("{entries:?} is not weakly decreasing over positive integers")));
        }
        Ok(Multiset { entries })
    }

    /// Sorts arbitrary positive entries into the decreasing representative.
    pub fn from_unordered(mut entries: Vec<u32>) -> Result<Self> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weight(&self, weights: &[Rational]) -> Rational {
        self.entries.iter().map(|&e| &weights[e as usize - 1]).product()
    }
}

/// Ordered partition of `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(invalid("composition parts must be a non-empty list of positive integers"));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }
}

/// Streams `M_{n,k}` in lexicographic order of `(l_1, ..., l_k)`, starting
/// from `(1, ..., 1)` and ending at `(n, ..., n)`.
pub struct MultisetIter {
    n: u32,
    current: Option<Vec<u32>>,
}

impl Iterator for MultisetIter {
    type Item = Multiset;

    fn next(&mut self) -> Option<Multiset> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        let k = next.len();
        let pos = (0..k).rev().find(|&i| {
            let cap = if i == 0 { self.n } else { next[i - 1] };
            next[i] < cap
        });
        if let Some(i) = pos {
            next[i] += 1;
            next[i + 1..].iter_mut().for_each(|e| *e = 1);
            self.current = Some(next);
        }
        Some(Multiset { entries: cur })
    }
}

pub fn enumerate_multisets(n: u32, k: usize) -> Result<MultisetIter> {
    if n == 0 {
        return Err(invalid("enumerate_multisets needs n >= 1"));
    }
    Ok(MultisetIter { n, current: Some(vec![1; k]) })
}

/// Number of adjacent equal pairs.
pub fn sigma(ms: &Multiset) -> usize {
    ms.entries.windows(2).filter(|w| w[0] == w[1]).count()
}

/// `sigma^(i)` for `i = 1..n`: adjacent equal pairs whose common value is `i`.
pub fn sigma_refined(ms: &Multiset, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for w in ms.entries.windows(2) {
        if w[0] == w[1] && (w[0] as usize) <= n {
            out[w[0] as usize - 1] += 1;
        }
    }
    out
}

/// One-norm of the entries.
pub fn p_norm(ms: &Multiset) -> u64 {
    ms.entries.iter().map(|&e| e as u64).sum()
}

/// Multiplicities of the distinct values, largest value first.
pub fn shape(ms: &Multiset) -> Result<Composition> {
    if ms.is_empty() {
        return Err(invalid("shape of the empty multiset is undefined"));
    }
    let mut parts = Vec::new();
    let mut run = 1u32;
    for w in ms.entries.windows(2) {
        if w[0] == w[1] {
            run += 1;
        } else {
            parts.push(run);
            run = 1;
        }
    }
    parts.push(run);
    Composition::new(parts)
}

/// All `2^(k-1)` compositions of `k` in lexicographic order.
pub fn compositions(k: u32) -> Result<Vec<Composition>> {
    if k == 0 {
        return Err(invalid("compositions needs k >= 1"));
    }
    if k > 30 {
        return Err(invalid("compositions beyond k = 30 are not enumerated"));
    }
    let mut out = Vec::with_capacity(1 << (k - 1));
    let mut stack = Vec::new();
    fn rec(rest: u32, stack: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition { parts: stack.clone() });
            return;
        }
        for first in 1..=rest {
            stack.push(first);
            rec(rest - first, stack, out);
            stack.pop();
        }
    }
    rec(k, &mut stack, &mut out);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refinement {
    /// `sum w(l) t^sigma(l)` as a polynomial in `t`.
    ScalarT,
    /// `sum w(l) prod_i t_i^sigma^(i)(l)` at the given rational vector.
    MultiT(Vec<Rational>),
    /// `sum w(l) q^p(l) t^sigma(l)` at the given rational `q`.
    Qt(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BruteForceValue {
    Poly(ThetaPoly),
    Value(Rational),
}

impl BruteForceValue {
    pub fn into_poly(self) -> Option<ThetaPoly> {
        match self {
            BruteForceValue::Poly(p) => Some(p),
            BruteForceValue::Value(_) => None,
        }
    }

    pub fn into_value(self) -> Option<Rational> {
        match self {
            BruteForceValue::Value(v) => Some(v),
            BruteForceValue::Poly(_) => None,
        }
    }
}

/// Refuses enumerations larger than `budget` multisets.
pub fn check_budget(n: usize, k: usize, budget: u64) -> Result<()> {
    let count = binomial_int((n + k).saturating_sub(1) as u64, k as u64);
    if count > BigInt::from(budget) {
        return Err(Error::BudgetExceeded { count: count.to_string(), budget });
    }
    Ok(())
}

/// Direct accumulation of `theta_{n;k}` over `M_{n,k}`.
pub fn theta_bruteforce(
    seq: &WeightSequence,
    n: usize,
    k: usize,
    refinement: &Refinement,
    budget: u64,
) -> Result<BruteForceValue> {
    if n == 0 {
        return Err(invalid("theta_bruteforce needs n >= 1"));
    }
    check_budget(n, k, budget)?;
    let weights = seq.weights(n)?;
    match refinement {
        Refinement::ScalarT => {
            let mut coeffs = vec![Rational::zero(); k.max(1)];
            for ms in enumerate_multisets(n as u32, k)? {
                coeffs[sigma(&ms)] += ms.weight(&weights);
            }
            Ok(BruteForceValue::Poly(ThetaPoly::new(seq, n, k, Poly::from_coeffs(coeffs))))
        }
        Refinement::MultiT(tvec) => {
            if tvec.len() != n {
                return Err(invalid(format!("t-vector has {} entries, expected {n}", tvec.len())));
            }
            let mut acc = Rational::zero();
            for ms in enumerate_multisets(n as u32, k)? {
                let mut term = ms.weight(&weights);
                for (t, s) in tvec.iter().zip(sigma_refined(&ms, n)) {
                    if s > 0 {
                        term *= pow_rational(t, s as i64)?;
                    }
                }
                acc += term;
            }
            Ok(BruteForceValue::Value(acc))
        }
        Refinement::Qt(q) => {
            let mut coeffs = vec![Rational::zero(); k.max(1)];
            for ms in enumerate_multisets(n as u32, k)? {
                let p = p_norm(&ms).to_i64().ok_or_else(|| invalid("one-norm overflow"))?;
                coeffs[sigma(&ms)] += ms.weight(&weights) * pow_rational(q, p)?;
            }
            Ok(BruteForceValue::Poly(ThetaPoly::new(seq, n, k, Poly::from_coeffs(coeffs))))
        }
    }
}

/// Weighted mass of each value of `sigma^(i)` over `M_{n,k}`, unnormalized.
pub fn sigma_refined_masses(seq: &WeightSequence, n: usize, k: usize, i: usize, budget: u64) -> Result<Vec<Rational>> {
    if i == 0 || i > n {
        return Err(invalid(format!("marginal index {i} outside 1..={n}")));
    }
    check_budget(n, k, budget)?;
    let weights = seq.weights(n)?;
    let mut masses = vec![Rational::zero(); k.max(1)];
    for ms in enumerate_multisets(n as u32, k)? {
        masses[sigma_refined(&ms, n)[i - 1]] += ms.weight(&weights);
    }
    Ok(masses)
}

/// Groups `M_{n,k}` by shape and sums the weights of each fibre.
pub fn weight_by_shape(seq: &WeightSequence, n: usize, k: usize, budget: u64) -> Result<Vec<(Composition, Rational)>> {
    check_budget(n, k, budget)?;
    let weights = seq.weights(n)?;
    let mut fibres: std::collections::BTreeMap<Composition, Rational> = Default::default();
    for ms in enumerate_multisets(n as u32, k)? {
        *fibres.entry(shape(&ms)?).or_insert_with(Rational::zero) += ms.weight(&weights);
    }
    Ok(fibres.into_iter().collect())
}
