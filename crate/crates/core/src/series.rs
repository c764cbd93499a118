//! Rational generating functions in `z` with polynomial-in-`x` coefficients.
//!
//! A [`RationalSeries`] is `N(z) / D(z)` with `D(0) = 1`, so the quotient is
//! a formal power series whose coefficients satisfy
//! `c(k) = N(k) - sum_{i>=1} D(i) c(k-i)`. [`RationalSeries::coefficients`]
//! streams them in that order.

use std::collections::VecDeque;

use num_bigint::BigInt;
use thiserror::Error;

use crate::polyint::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("denominator constant term must be 1, got {0}")]
    NonUnitDenominator(String),
}

/// `numerator(z) / denominator(z)`, each stored as ascending `z`-coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: Vec<IntPoly>,
    denominator: Vec<IntPoly>,
}

impl RationalSeries {
    pub fn new(numerator: Vec<IntPoly>, denominator: Vec<IntPoly>) -> Result<Self, SeriesError> {
        match denominator.first() {
            Some(c) if *c == IntPoly::one() => Ok(RationalSeries {
                numerator,
                denominator,
            }),
            Some(c) => Err(SeriesError::NonUnitDenominator(c.to_string())),
            None => Err(SeriesError::NonUnitDenominator("0".into())),
        }
    }

    pub fn numerator(&self) -> &[IntPoly] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[IntPoly] {
        &self.denominator
    }

    /// Streams `c(0), c(1), ...` without bound.
    pub fn coefficients(&self) -> Coefficients<'_> {
        Coefficients {
            series: self,
            k: 0,
            recent: VecDeque::with_capacity(self.denominator.len()),
        }
    }

    /// The first `count` coefficients.
    pub fn expand(&self, count: usize) -> Vec<IntPoly> {
        self.coefficients().take(count).collect()
    }

    /// Substitutes an integer for `x` in every numerator and denominator
    /// coefficient.
    pub fn specialize(&self, x0: &BigInt) -> RationalSeries {
        let at = |v: &[IntPoly]| v.iter().map(|p| IntPoly::from(p.eval_int(x0))).collect();
        RationalSeries {
            numerator: at(&self.numerator),
            denominator: at(&self.denominator),
        }
    }
}

/// Iterator returned by [`RationalSeries::coefficients`].
#[derive(Debug, Clone)]
pub struct Coefficients<'a> {
    series: &'a RationalSeries,
    k: usize,
    // Most recent coefficients, newest first, at most deg D of them.
    recent: VecDeque<IntPoly>,
}

impl Iterator for Coefficients<'_> {
    type Item = IntPoly;

    fn next(&mut self) -> Option<IntPoly> {
        let den = &self.series.denominator;
        let mut c = self
            .series
            .numerator
            .get(self.k)
            .cloned()
            .unwrap_or_default();
        for (d, prev) in den.iter().skip(1).zip(self.recent.iter()) {
            if !d.is_zero() {
                c -= &(d * prev);
            }
        }
        self.k += 1;
        if den.len() > 1 {
            self.recent.push_front(c.clone());
            self.recent.truncate(den.len() - 1);
        }
        Some(c)
    }
}

/// Truncated product `a(z) * b(z) mod z^len`.
pub fn truncated_product(a: &[IntPoly], b: &[IntPoly], len: usize) -> Vec<IntPoly> {
    (0..len)
        .map(|k| {
            (0..=k)
                .filter_map(|i| Some(a.get(i)? * b.get(k - i)?))
                .sum()
        })
        .collect()
}

fn recurrence_denominator() -> Vec<IntPoly> {
    vec![
        IntPoly::one(),
        -IntPoly::monomial(1, 2),
        -IntPoly::x(),
        IntPoly::constant(-1),
    ]
}

/// The generating function of the sequence obeying
/// `P(n+3) = x^2 P(n+2) + x P(n+1) + P(n)` with initial values
/// `initial = [P(0), P(1), P(2)]`: numerator
/// `P(0) + (P(1) - x^2 P(0)) z + (P(2) - x^2 P(1) - x P(0)) z^2`
/// over `1 - x^2 z - x z^2 - z^3`.
pub fn gf_from_recurrence(initial: [IntPoly; 3]) -> RationalSeries {
    let [p0, p1, p2] = initial;
    let x2 = IntPoly::monomial(1, 2);
    let x = IntPoly::x();
    let n1 = &p1 - &(&x2 * &p0);
    let n2 = &p2 - &(&x2 * &p1) - &x * &p0;
    RationalSeries {
        numerator: vec![p0, n1, n2],
        denominator: recurrence_denominator(),
    }
}

/// `(3 - 2x^2 z - x z^2) / (1 - x^2 z - x z^2 - z^3)`.
pub fn tribonacci_lucas_gf() -> RationalSeries {
    gf_from_recurrence([
        IntPoly::constant(3),
        IntPoly::monomial(1, 2),
        IntPoly::from_i64s(&[0, 2, 0, 0, 1]),
    ])
}

/// `(3 - 2z - z^2) / (1 - z - z^2 - z^3)`, the number case.
pub fn tribonacci_lucas_number_gf() -> RationalSeries {
    tribonacci_lucas_gf().specialize(&BigInt::from(1))
}

/// `z / (1 - x^2 z - x z^2 - z^3)`.
pub fn tribonacci_gf() -> RationalSeries {
    gf_from_recurrence([IntPoly::zero(), IntPoly::one(), IntPoly::monomial(1, 2)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn lucas_gf_shape() {
        let g = tribonacci_lucas_gf();
        assert_eq!(g.numerator(), &[p("3"), p("-2x^2"), p("-x")]);
        assert_eq!(g.denominator(), &[p("1"), p("-x^2"), p("-x"), p("-1")]);
        assert_eq!(g.expand(3), [p("3"), p("x^2"), p("x^4+2x")]);
    }

    #[test]
    fn number_gf() {
        let g = tribonacci_lucas_number_gf();
        assert_eq!(g.numerator(), &[p("3"), p("-2"), p("-1")]);
        let got: Vec<String> = g.expand(8).iter().map(ToString::to_string).collect();
        assert_eq!(got, ["3", "1", "3", "7", "11", "21", "39", "71"]);
    }

    #[test]
    fn constant_series() {
        let s = RationalSeries::new(vec![p("5")], vec![p("1")]).unwrap();
        assert_eq!(s.expand(3), [p("5"), IntPoly::zero(), IntPoly::zero()]);
        assert!(s.expand(0).is_empty());
    }

    #[test]
    fn non_unit_denominator_rejected() {
        assert!(RationalSeries::new(vec![p("1")], vec![p("2"), p("x")]).is_err());
        assert!(RationalSeries::new(vec![p("1")], vec![p("x+1")]).is_err());
        assert!(RationalSeries::new(vec![p("1")], vec![]).is_err());
    }

    #[test]
    fn from_recurrence_examples() {
        let g = gf_from_recurrence([p("3"), p("x^2"), p("x^4+2x")]);
        assert_eq!(g.numerator(), &[p("3"), p("-2x^2"), p("-x")]);
        let t = gf_from_recurrence([IntPoly::zero(), p("1"), p("x^2")]);
        assert_eq!(t.numerator(), &[IntPoly::zero(), p("1"), IntPoly::zero()]);
        let z = gf_from_recurrence([IntPoly::zero(), IntPoly::zero(), IntPoly::zero()]);
        assert!(z.numerator().iter().all(IntPoly::is_zero));
        assert!(z.expand(10).iter().all(IntPoly::is_zero));
    }

    #[test]
    fn product_recovers_numerator() {
        let g = tribonacci_lucas_gf();
        let c = g.expand(12);
        let back = truncated_product(&c, g.denominator(), 12);
        assert_eq!(&back[..3], g.numerator());
        assert!(back[3..].iter().all(IntPoly::is_zero));
    }
}
