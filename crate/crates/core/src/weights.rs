//! Weight sequences `a = (a_m)` and their power sums `A_n(j)`.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::pow_rational;
use crate::exact::{format_rational, harmonic, int, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightKind {
    /// `a_m = 1`
    Ones,
    /// `a_m = m`
    Linear,
    /// `a_m = m^-s`
    Zeta(u32),
    /// `a_m = base_m q^m`
    QModified { base: Box<WeightSequence>, q: Rational },
    /// A finite user-supplied list `a_1, a_2, ...`.
    Custom(Vec<Rational>),
}

/// A positive rational weight rule `m -> a_m` with a display label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSequence {
    kind: WeightKind,
    description: String,
}

impl WeightSequence {
    pub fn ones() -> Self {
        Self::from_kind(WeightKind::Ones)
    }

    pub fn linear() -> Self {
        Self::from_kind(WeightKind::Linear)
    }

    pub fn zeta(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::WeightConfig("zeta exponent m must be >= 1".into()));
        }
        Ok(Self::from_kind(WeightKind::Zeta(m)))
    }

    pub fn q_modified(base: WeightSequence, q: Rational) -> Result<Self> {
        if q <= Rational::zero() {
            return Err(Error::WeightConfig(format!("q must be positive, got {q}")));
        }
        Ok(Self::from_kind(WeightKind::QModified { base: Box::new(base), q }))
    }

    pub fn custom(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::WeightConfig("custom sequence needs at least one value".into()));
        }
        if let Some(v) = values.iter().find(|v| **v <= Rational::zero()) {
            return Err(Error::WeightConfig(format!("weights must be positive, got {v}")));
        }
        Ok(Self::from_kind(WeightKind::Custom(values)))
    }

    fn from_kind(kind: WeightKind) -> Self {
        let description = describe(&kind);
        WeightSequence { kind, description }
    }

    pub fn with_description(mut self, description: impl Into<String>) -> Self {
        self.description = description.into();
        self
    }

    pub fn kind(&self) -> &WeightKind {
        &self.kind
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// Number of terms available, `None` for unbounded rules.
    pub fn len_limit(&self) -> Option<usize> {
        match &self.kind {
            WeightKind::Custom(v) => Some(v.len()),
            WeightKind::QModified { base, .. } => base.len_limit(),
            _ => None,
        }
    }

    /// Fails unless `a_1..a_n` are all available.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.len_limit() {
            Some(len) if n > len => Err(Error::IndexOutOfRange { index: n, len }),
            _ => Ok(()),
        }
    }

    pub fn weight_at(&self, m: usize) -> Result<Rational> {
        if m == 0 {
            return Err(Error::InvalidParameter("weight index starts at 1".into()));
        }
        Ok(match &self.kind {
            WeightKind::Ones => Rational::one(),
            WeightKind::Linear => int(m as i64),
            WeightKind::Zeta(s) => pow_rational(&int(m as i64), -(*s as i64))?,
            WeightKind::QModified { base, q } => base.weight_at(m)? * pow_rational(q, m as i64)?,
            WeightKind::Custom(v) => v.get(m - 1).cloned().ok_or(Error::IndexOutOfRange { index: m, len: v.len() })?,
        })
    }

    /// `a_1, ..., a_n`.
    pub fn weights(&self, n: usize) -> Result<Vec<Rational>> {
        self.check_range(n)?;
        (1..=n).map(|m| self.weight_at(m)).collect()
    }

    /// Power sum `A_n(j) = sum_{m<=n} a_m^j`.
    pub fn power_sum(&self, n: usize, j: u32) -> Result<Rational> {
        if n == 0 || j == 0 {
            return Err(Error::InvalidParameter("power_sum needs n, j >= 1".into()));
        }
        self.check_range(n)?;
        Ok(match &self.kind {
            WeightKind::Ones => int(n as i64),
            WeightKind::Zeta(s) => harmonic(n as u64, s * j),
            _ => {
                let mut acc = Rational::zero();
                for m in 1..=n {
                    acc += pow_rational(&self.weight_at(m)?, j as i64)?;
                }
                acc
            }
        })
    }

    /// `A_n(1), ..., A_n(k)`.
    pub fn power_sums(&self, n: usize, k: usize) -> Result<Vec<Rational>> {
        (1..=k as u32).map(|j| self.power_sum(n, j)).collect()
    }

    /// Whether `a_1..a_n` are pairwise distinct.
    pub fn is_distinct(&self, n: usize) -> Result<bool> {
        let mut w = self.weights(n)?;
        w.sort();
        Ok(w.windows(2).all(|p| p[0] != p[1]))
    }

    /// Parses a builtin name (`ones`, `linear`, `zeta:<m>`).
    pub fn builtin(name: &str) -> Result<Self> {
        match name.trim() {
            "ones" => Ok(Self::ones()),
            "linear" => Ok(Self::linear()),
            other => match other.strip_prefix("zeta:") {
                Some(m) => {
                    let m: u32 =
                        m.parse().map_err(|_| Error::WeightConfig(format!("bad zeta exponent in {other:?}")))?;
                    Self::zeta(m)
                }
                None => Err(Error::WeightConfig(format!("unknown builtin weights {other:?}"))),
            },
        }
    }

    pub fn to_json(&self) -> Value {
        match &self.kind {
            WeightKind::Ones => json!({"kind": "ones"}),
            WeightKind::Linear => json!({"kind": "linear"}),
            WeightKind::Zeta(m) => json!({"kind": "zeta", "m": m}),
            WeightKind::QModified { base, q } => {
                json!({"kind": "q_modified", "q": format_rational(q), "base": base.to_json()})
            }
            WeightKind::Custom(v) => {
                json!({"kind": "custom", "values": v.iter().map(format_rational).collect::<Vec<_>>()})
            }
        }
    }
}

impl fmt::Display for WeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description)
    }
}

fn describe(kind: &WeightKind) -> String {
    match kind {
        WeightKind::Ones => "ones".into(),
        WeightKind::Linear => "linear".into(),
        WeightKind::Zeta(m) => format!("zeta:{m}"),
        WeightKind::QModified { base, q } => format!("q_modified({}, {})", base.description, q),
        WeightKind::Custom(v) => format!("custom[{}]", v.len()),
    }
}

/// Parses a weight configuration document:
///
/// ```json
/// {"kind": "ones" | "linear" | "zeta" | "custom" | "q_modified",
///  "m": 2,                       // zeta only
///  "values": ["1", "1/2"],       // custom only
///  "q": "1/2", "base": {...}}    // q_modified only
/// ```
pub fn parse_weight_config(document: &str) -> Result<WeightSequence> {
    let v: Value = serde_json::from_str(document).map_err(|e| Error::WeightConfig(format!("malformed JSON: {e}")))?;
    from_json(&v)
}

pub fn from_json(v: &Value) -> Result<WeightSequence> {
    let cfg = |msg: String| Error::WeightConfig(msg);
    let obj = v.as_object().ok_or_else(|| cfg("expected a JSON object".into()))?;
    let kind = obj.get("kind").and_then(Value::as_str).ok_or_else(|| cfg("missing string field \"kind\"".into()))?;
    match kind {
        "ones" => Ok(WeightSequence::ones()),
        "linear" => Ok(WeightSequence::linear()),
        "zeta" => {
            let m = obj
                .get("m")
                .and_then(Value::as_u64)
                .ok_or_else(|| cfg("zeta needs a non-negative integer field \"m\"".into()))?;
            let m = u32::try_from(m).map_err(|_| cfg(format!("zeta exponent {m} too large")))?;
            WeightSequence::zeta(m)
        }
        "custom" => {
            let values = obj
                .get("values")
                .and_then(Value::as_array)
                .ok_or_else(|| cfg("custom needs an array field \"values\"".into()))?;
            let values = values
                .iter()
                .map(|x| {
                    x.as_str()
                        .ok_or_else(|| cfg(format!("custom values must be rational strings, got {x}")))
                        .and_then(|s| parse_rational(s).map_err(|e| cfg(e.to_string())))
                })
                .collect::<Result<Vec<_>>>()?;
            WeightSequence::custom(values)
        }
        "q_modified" => {
            let q = obj
                .get("q")
                .and_then(Value::as_str)
                .ok_or_else(|| cfg("q_modified needs a rational string field \"q\"".into()))?;
            let q = parse_rational(q).map_err(|e| cfg(e.to_string()))?;
            let base = obj.get("base").ok_or_else(|| cfg("q_modified needs a \"base\" object".into()))?;
            WeightSequence::q_modified(from_json(base)?, q)
        }
        other => Err(cfg(format!("unknown kind {other:?}"))),
    }
}
