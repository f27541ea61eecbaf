use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};
use crate::weights::{parse_weight_config, WeightSequence};

/// Parses `a..b` (inclusive), a comma list `a,b,c`, or a single value.
pub fn parse_range(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidParameter(format!("bad range {s:?}; expected a, a..b or a,b,c"));
    let s = s.trim();
    let values: Vec<usize> = if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        (lo..=hi).collect()
    } else {
        s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
    };
    if values.is_empty() {
        return Err(bad());
    }
    Ok(values)
}

pub fn parse_rationals(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|x| parse_rational(x.trim())).collect()
}

/// A builtin name (`ones`, `linear`, `zeta:<m>`) or the path of a JSON weight file.
pub fn load_weights(spec: &str) -> Result<WeightSequence> {
    if let Ok(seq) = WeightSequence::builtin(spec) {
        return Ok(seq);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(Error::WeightConfig(format!(
            "{spec:?} is neither a builtin (ones, linear, zeta:<m>) nor an existing file"
        )));
    }
    let text =
        fs::read_to_string(path).map_err(|e| Error::WeightConfig(format!("cannot read {}: {e}", path.display())))?;
    parse_weight_config(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_range("7").unwrap(), vec![7]);
        assert_eq!(parse_range("1, 5,9").unwrap(), vec![1, 5, 9]);
        assert!(parse_range("4..2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn rationals_and_weights() {
        assert_eq!(parse_rationals("1/2,3").unwrap(), vec![rat(1, 2), rat(3, 1)]);
        assert_eq!(load_weights("zeta:2").unwrap(), WeightSequence::zeta(2).unwrap());
        assert!(load_weights("/no/such/file.json").is_err());
    }
}
