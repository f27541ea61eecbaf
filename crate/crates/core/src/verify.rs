//! Programmatic verification suites backing `ztt verify`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::dist::{
    bernstein_pgf, bezier_coeffs, d_n_pmf, expected_sigma_zeta, geometric_modified_pmf, hypergeom_moments,
    hypergeom_pmf, kolmogorov_distance_to_normal, limit_scan, marginal_moments, marginal_p0_corrected,
    marginal_p0_paper, marginal_pmf, moments, s_infinity_2_pmf, s_pmf, sum_theorem_pgf, sum_theorem_pmf, LimitRegime,
    Pmf,
};
use crate::error::{invalid, Error, Result};
use crate::exact::{binomial, binomial_int, int, rat, stirling_first_unsigned, stirling_second, to_f64, Rational};
use crate::oracle::{sigma_refined_masses, theta_bruteforce, Refinement, DEFAULT_BUDGET};
use crate::theta::{
    closed_form_ones_bivariate, compute_theta, multiple_harmonic, partition_series, theta_ordered_partitions,
    theta_partial_fraction, theta_product, zeta_star_ones, zeta_t_ones, Algorithm,
};
use crate::weights::WeightSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Marginals,
    SumTheorem,
    Limits,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Marginals => "marginals",
            Suite::SumTheorem => "sumtheorem",
            Suite::Limits => "limits",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Suite::Identities, Suite::Marginals, Suite::SumTheorem, Suite::Limits, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| invalid(format!("unknown suite {s:?}")))
    }
}

/// Grid bounds for the exact suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub max_k: usize,
    pub budget: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: 8, max_k: 8, budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Outcome = std::result::Result<String, String>;

fn run(name: &str, f: impl FnOnce() -> Result<Outcome>) -> Check {
    let (passed, detail) = match f() {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    Check { name: name.to_string(), passed, detail }
}

fn builtins() -> Result<Vec<WeightSequence>> {
    Ok(vec![WeightSequence::ones(), WeightSequence::linear(), WeightSequence::zeta(1)?, WeightSequence::zeta(2)?])
}

/// `e_k(1..n)`, the unsigned Stirling number `[n+1, n+1-k]`.
fn stirling_e(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::from_integer(0.into());
    }
    Rational::from_integer(stirling_first_unsigned(n + 1, n + 1 - k).into())
}

fn expect_eq<T: PartialEq + fmt::Display>(what: String, left: &T, right: &T) -> std::result::Result<(), String> {
    if left == right {
        Ok(())
    } else {
        Err(format!("{what}: {left} != {right}"))
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<Check> {
    match suite {
        Suite::Identities => identities(cfg),
        Suite::Marginals => marginals(cfg),
        Suite::SumTheorem => sum_theorem(),
        Suite::Limits => limits(),
        Suite::All => {
            let mut all = identities(cfg);
            all.extend(marginals(cfg));
            all.extend(sum_theorem());
            all.extend(limits());
            all
        }
    }
}

fn identities(cfg: &VerifyConfig) -> Vec<Check> {
    let (max_n, max_k) = (cfg.max_n, cfg.max_k);
    vec![
        run("five_way_agreement", || {
            for seq in builtins()? {
                for n in 1..=max_n {
                    for k in 0..=max_k {
                        let base = compute_theta(&seq, n, k, Algorithm::Product)?;
                        for algo in &Algorithm::ALL[1..] {
                            let other = compute_theta(&seq, n, k, *algo)?;
                            if let Err(e) = expect_eq(format!("{seq} n={n} k={k} {algo}"), other.poly(), base.poly()) {
                                return Ok(Err(e));
                            }
                        }
                    }
                }
            }
            Ok(Ok(format!("4 sequences, n<={max_n}, k<={max_k}")))
        }),
        run("partial_fraction", || {
            let seq = WeightSequence::zeta(1)?;
            for n in 1..=max_n {
                for k in 0..=max_k {
                    let theta = theta_product(&seq, n, k)?;
                    for t0 in [rat(1, 3), rat(1, 2), int(1), int(2)] {
                        let v = theta_partial_fraction(&seq, n, k, &t0)?;
                        if let Err(e) = expect_eq(format!("n={n} k={k} t={t0}"), &v, &theta.eval(&t0)) {
                            return Ok(Err(e));
                        }
                    }
                }
            }
            Ok(Ok("zeta:1 at t in {1/3, 1/2, 1, 2}".into()))
        }),
        run("oracle_bruteforce", || {
            for seq in builtins()? {
                for n in 1..=max_n.min(8) {
                    for k in 0..=max_k.min(8) {
                        let brute = theta_bruteforce(&seq, n, k, &Refinement::ScalarT, cfg.budget)?
                            .into_poly()
                            .ok_or_else(|| invalid("expected a polynomial"))?;
                        let fast = theta_product(&seq, n, k)?;
                        if let Err(e) = expect_eq(format!("{seq} n={n} k={k}"), brute.poly(), fast.poly()) {
                            return Ok(Err(e));
                        }
                    }
                }
            }
            Ok(Ok("enumeration equals product".into()))
        }),
        run("specializations", || {
            let ones = WeightSequence::ones();
            let lin = WeightSequence::linear();
            for n in 1..=max_n {
                for k in 0..=max_k {
                    let o = theta_product(&ones, n, k)?;
                    let l = theta_product(&lin, n, k)?;
                    let checks = [
                        (o.at_zero(), binomial(n as i64, k as i64)),
                        (o.at_one(), binomial((n + k) as i64 - 1, k as i64)),
                        (l.at_zero(), stirling_e(n, k)),
                        (l.at_one(), Rational::from_integer(stirling_second(n + k, n).into())),
                    ];
                    for (i, (a, b)) in checks.iter().enumerate() {
                        if let Err(e) = expect_eq(format!("n={n} k={k} case {i}"), a, b) {
                            return Ok(Err(e));
                        }
                    }
                }
            }
            Ok(Ok("e_k and h_k of ones and linear".into()))
        }),
        run("bivariate_closed_form", || {
            let ones = WeightSequence::ones();
            for n in 1..=max_n {
                for k in 0..=max_k {
                    let a = closed_form_ones_bivariate(n, k)?;
                    if let Err(e) = expect_eq(format!("n={n} k={k}"), a.poly(), theta_product(&ones, n, k)?.poly()) {
                        return Ok(Err(e));
                    }
                }
            }
            Ok(Ok("ones".into()))
        }),
        run("zeta_t_ones", || {
            let seq = WeightSequence::zeta(1)?;
            for n in 1..=max_n {
                for k in 1..=max_k {
                    let theta = theta_product(&seq, n, k)?;
                    if let Err(e) =
                        expect_eq(format!("t=1 n={n} k={k}"), &zeta_t_ones(n, k, &int(1))?, &zeta_star_ones(n, k))
                    {
                        return Ok(Err(e));
                    }
                    let half = rat(1, 2);
                    if let Err(e) =
                        expect_eq(format!("t=1/2 n={n} k={k}"), &zeta_t_ones(n, k, &half)?, &theta.eval(&half))
                    {
                        return Ok(Err(e));
                    }
                    if k >= 2 {
                        let mean = moments(&seq, n, k, 1)?.mean;
                        if let Err(e) = expect_eq(format!("mean n={n} k={k}"), &expected_sigma_zeta(n, k)?, &mean) {
                            return Ok(Err(e));
                        }
                    }
                }
            }
            Ok(Ok("t in {1, 1/2} and expected sigma".into()))
        }),
        run("hypergeometric_law", || {
            let ones = WeightSequence::ones();
            for n in 1..=max_n {
                for k in 1..=max_k {
                    let (big_n, big_k) = ((n + k - 1) as u64, (k - 1) as u64);
                    let s = s_pmf(&ones, n, k)?;
                    if let Err(e) = expect_eq(format!("pmf n={n} k={k}"), &s, &hypergeom_pmf(big_n, big_k, k as u64)?) {
                        return Ok(Err(e));
                    }
                    let a = moments(&ones, n, k, 3)?;
                    let b = hypergeom_moments(big_n, big_k, k as u64, 3)?;
                    if a != b {
                        return Ok(Err(format!("moments n={n} k={k}")));
                    }
                }
            }
            Ok(Ok("S_{n,k} ~ Hy(n+k-1, k-1, k)".into()))
        }),
        run("ordered_partitions", || {
            for m in [1u32, 2] {
                let seq = WeightSequence::zeta(m)?;
                for n in 1..=max_n {
                    for k in 1..=max_k {
                        let a = theta_ordered_partitions(m, n, k)?;
                        if let Err(e) =
                            expect_eq(format!("m={m} n={n} k={k}"), a.poly(), theta_product(&seq, n, k)?.poly())
                        {
                            return Ok(Err(e));
                        }
                    }
                }
            }
            Ok(Ok("zeta:1 and zeta:2".into()))
        }),
        run("partition_numbers", || {
            let expect = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627];
            let got: Vec<u64> = partition_series(20, 20).iter().map(|x| x.to_u64().unwrap_or(u64::MAX)).collect();
            Ok(if got == expect { Ok("p(0..=20)".into()) } else { Err(format!("{got:?}")) })
        }),
    ]
}

fn marginals(cfg: &VerifyConfig) -> Vec<Check> {
    let (max_n, max_k) = (cfg.max_n.max(2), cfg.max_k);
    vec![
        run("marginal_bruteforce", || {
            let ones = WeightSequence::ones();
            for n in 2..=max_n.min(8) {
                for k in 1..=max_k.min(8) {
                    let masses = sigma_refined_masses(&ones, n, k, 1, cfg.budget)?;
                    let brute = Pmf::from_weights(0, masses)?;
                    if let Err(e) = expect_eq(format!("n={n} k={k}"), &marginal_pmf(n, k)?, &brute) {
                        return Ok(Err(e));
                    }
                }
            }
            Ok(Ok("pgf extraction equals enumeration".into()))
        }),
        run("marginal_moments", || {
            for n in 2..=max_n {
                for k in 1..=max_k {
                    let closed = marginal_moments(n, k, 3)?;
                    let direct = marginal_pmf(n, k)?.moment_report(3);
                    if closed != direct {
                        return Ok(Err(format!("n={n} k={k}")));
                    }
                    let whole = moments(&WeightSequence::ones(), n, k, 1)?.mean;
                    if let Err(e) =
                        expect_eq(format!("exchangeability n={n} k={k}"), &(closed.mean * int(n as i64)), &whole)
                    {
                        return Ok(Err(e));
                    }
                }
            }
            Ok(Ok("closed form equals pmf moments".into()))
        }),
        run("marginal_p0_discrepancy", || {
            let paper = marginal_p0_paper(3, 2)?;
            let truth = marginal_pmf(3, 2)?.prob(0);
            let corrected = marginal_p0_corrected(3, 2)?;
            Ok(if paper == rat(2, 3) && truth == rat(5, 6) && corrected == truth {
                Ok(format!("displayed form {paper}, pgf {truth}"))
            } else {
                Err(format!("displayed {paper}, pgf {truth}, corrected {corrected}"))
            })
        }),
        run("geometric_regime", || {
            let law = marginal_pmf(400, 400)?;
            let g = geometric_modified_pmf(&Rational::one(), 5)?;
            let worst = g
                .iter()
                .enumerate()
                .map(|(j, gj)| (to_f64(&(law.prob(j as i64) / gj)) - 1.0).abs())
                .fold(0.0, f64::max);
            Ok(if worst < 0.05 {
                Ok(format!("max rel err {worst:.4}"))
            } else {
                Err(format!("max rel err {worst:.4}"))
            })
        }),
    ]
}

fn sum_theorem() -> Vec<Check> {
    vec![run("sum_theorem_law", || {
        for k in 3..=40usize {
            for n in 2..k {
                let pmf = sum_theorem_pmf(n, k)?;
                if !pmf.total().is_one() {
                    return Ok(Err(format!("mass n={n} k={k}")));
                }
                let pgf = sum_theorem_pgf(n, k)?;
                if pmf.pgf()? != pgf || bernstein_pgf(n, k)? != pgf {
                    return Ok(Err(format!("pgf n={n} k={k}")));
                }
                let beta = bezier_coeffs(n, k)?;
                for (j, b) in beta.iter().enumerate() {
                    let c = binomial_int((k - 1 - j) as u64, (k - n) as u64);
                    if b * Rational::from_integer(c) != Rational::one() {
                        return Ok(Err(format!("bezier n={n} k={k} j={j}")));
                    }
                }
            }
        }
        let spot = sum_theorem_pmf(3, 5)?;
        Ok(if spot.probs() == [rat(1, 6), rat(1, 3), rat(1, 2)] {
            Ok("2 <= n < k <= 40".into())
        } else {
            Err(format!("spot (3,5) = {spot}"))
        })
    })]
}

fn decreasing(regime: LimitRegime) -> Check {
    run(&format!("limit_{}", regime.name()), || {
        let rows = limit_scan(regime, &regime.default_grid())?;
        let d: Vec<String> = rows.iter().map(|r| format!("{}:{:.3e}", r.param, r.distance)).collect();
        Ok(if rows.windows(2).all(|w| w[1].distance < w[0].distance) {
            Ok(d.join(" "))
        } else {
            Err(format!("not decreasing: {}", d.join(" ")))
        })
    })
}

fn limits() -> Vec<Check> {
    let mut out: Vec<Check> = LimitRegime::ALL.into_iter().map(decreasing).collect();
    out.push(run("poisson_factorial_moments", || {
        let n: u64 = 1_000_000;
        let k: u64 = 1000;
        let m = hypergeom_moments(n + k - 1, k - 1, k, 3)?;
        let worst = m.factorial_moments.iter().map(|f| (to_f64(f) - 1.0).abs()).fold(0.0, f64::max);
        Ok(if worst < 0.02 { Ok(format!("max |fm_s - 1| = {worst:.5}")) } else { Err(format!("{worst}")) })
    }));
    out.push(run("normal_kolmogorov", || {
        let law = hypergeom_pmf(399, 199, 200)?;
        let m = hypergeom_moments(399, 199, 200, 2)?;
        let d = kolmogorov_distance_to_normal(&law.to_float(), to_f64(&m.mean), to_f64(&m.variance).sqrt())?;
        Ok(if d < 0.05 { Ok(format!("{d:.5}")) } else { Err(format!("{d:.5}")) })
    }));
    out.push(run("dn_identity", || {
        for n in 1..=12usize {
            let p = d_n_pmf(n, 1)?;
            for l in 1..=n {
                let expect = multiple_harmonic(n - 1, &vec![1; l - 1]) / int(n as i64);
                if p.prob(l as i64) != expect {
                    return Ok(Err(format!("n={n} l={l}")));
                }
            }
        }
        Ok(Ok("n <= 12".into()))
    }));
    out.push(run("s_infinity_2", || {
        let p = s_infinity_2_pmf(2, 100_000)?;
        let exact = [3.0 / 7.0, 4.0 / 7.0];
        let worst = p.probs.iter().zip(exact).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        Ok(if worst <= p.error_bound && p.error_bound <= 1e-8 {
            Ok(format!("err {worst:.2e} <= bound {:.2e}", p.error_bound))
        } else {
            Err(format!("err {worst:.2e}, bound {:.2e}", p.error_bound))
        })
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig { max_n: 4, max_k: 4, budget: DEFAULT_BUDGET };
        for suite in [Suite::Identities, Suite::Marginals, Suite::SumTheorem] {
            for c in run_suite(suite, &cfg) {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn suite_names() {
        assert_eq!("sumtheorem".parse::<Suite>().unwrap(), Suite::SumTheorem);
        assert!("x".parse::<Suite>().is_err());
    }
}
