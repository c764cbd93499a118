use std::ops::RangeInclusive;

/// Parses `a..b` (inclusive) or a single integer `a`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|e| format!("bad integer {t:?}: {e}"))
    };
    match s.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if lo > hi {
                return Err(format!("empty range {lo}..{hi}"));
            }
            Ok(lo..=hi)
        }
        None => {
            let v = parse(s)?;
            Ok(v..=v)
        }
    }
}

/// A comma-separated list of evaluation points.
#[derive(Debug, Clone, PartialEq)]
pub struct Points(pub Vec<f64>);

/// Parses a comma-separated list of finite reals.
pub fn parse_reals(s: &str) -> Result<Points, String> {
    s.split(',')
        .map(|t| {
            let v = t
                .trim()
                .parse::<f64>()
                .map_err(|e| format!("bad number {t:?}: {e}"))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("{t:?} is not finite"))
            }
        })
        .collect::<Result<_, _>>()
        .map(Points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..50").unwrap(), 2..=50);
        assert_eq!(parse_range("-20..-3").unwrap(), -20..=-3);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("a..2").is_err());
        assert!(parse_range("1...2").is_err());
    }

    #[test]
    fn reals() {
        assert_eq!(parse_reals("0.5, 1,2").unwrap().0, vec![0.5, 1.0, 2.0]);
        assert!(parse_reals("1,inf").is_err());
        assert!(parse_reals("").is_err());
    }
}
