//! Binomial and trinomial coefficients, the explicit closed forms of the
//! Fibonacci and Tribonacci polynomials, and the incomplete
//! Tribonacci-Lucas numbers and polynomials.
//!
//! The incomplete polynomial `K(n, s)(x)` is the partial double sum
//!
//! ```text
//! sum_{i=0..=s} sum_{j=0..=i} n/(n-i-j) * C(i,j) * C(n-i-j, i) * x^(2n - 3(i+j))
//! ```
//!
//! which becomes `K(n)(x)` once `s` reaches `floor(n/2)`. Each term is
//! formed as an exact rational and must divide out to an integer; a term
//! whose factor `n - i - j` is not positive, or whose exponent would be
//! negative, contributes nothing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::polyint::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncompleteError {
    #[error("{what} requires {requirement}, got {got}")]
    Domain {
        what: &'static str,
        requirement: &'static str,
        got: String,
    },
    #[error("term (i={i}, j={j}) of K({n}, s) is not an integer")]
    NonIntegral { n: i64, i: i64, j: i64 },
}

fn domain(what: &'static str, requirement: &'static str, got: impl ToString) -> IncompleteError {
    IncompleteError::Domain {
        what,
        requirement,
        got: got.to_string(),
    }
}

/// `C(n, k)` by the multiplicative formula; zero for `k < 0`, `k > n` or
/// `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact.
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Rows of coefficients of `(1 + x + x^2)^n`; row `n` spans columns `0..=2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl TrinomialTable {
    /// Rows `0..=max_row`, each built from the previous one as
    /// `row[n][j] = row[n-1][j-2] + row[n-1][j-1] + row[n-1][j]`.
    pub fn new(max_row: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_row + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=max_row {
            let prev = &rows[n - 1];
            let at = |j: isize| {
                usize::try_from(j)
                    .ok()
                    .and_then(|j| prev.get(j))
                    .cloned()
                    .unwrap_or_default()
            };
            let row = (0..=(2 * n) as isize)
                .map(|j| at(j - 2) + at(j - 1) + at(j))
                .collect();
            rows.push(row);
        }
        TrinomialTable { rows }
    }

    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.rows.iter().map(Vec::as_slice)
    }

    /// Entry `(n, j)`; zero outside `0..=2n`. Panics past the last row.
    pub fn get(&self, n: usize, j: i64) -> BigInt {
        let row = &self.rows[n];
        usize::try_from(j)
            .ok()
            .and_then(|j| row.get(j))
            .cloned()
            .unwrap_or_default()
    }
}

/// Coefficient of `x^j` in `(1 + x + x^2)^n`.
pub fn trinomial(n: i64, j: i64) -> Result<BigInt, IncompleteError> {
    let rows = usize::try_from(n).map_err(|_| domain("trinomial", "n >= 0", n))?;
    if j < 0 || j > 2 * n {
        return Ok(BigInt::zero());
    }
    Ok(TrinomialTable::new(rows).get(rows, j))
}

/// `T(n)(x) = sum_j C(n-j-1, j)_3 x^(2n-3j-2)` over all `j >= 0` with a
/// nonnegative row index and exponent.
pub fn tribonacci_poly_closed(n: i64) -> Result<IntPoly, IncompleteError> {
    if n < 1 {
        return Err(domain("tribonacci_poly_closed", "n >= 1", n));
    }
    let table = TrinomialTable::new((n - 1) as usize);
    let mut coeffs = vec![BigInt::zero(); (2 * n - 1) as usize];
    for j in 0..n {
        let row = n - j - 1;
        let exp = 2 * n - 3 * j - 2;
        if row < 0 || exp < 0 {
            break;
        }
        coeffs[exp as usize] += table.get(row as usize, j);
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// The Fibonacci polynomials by their recurrence
/// `F(n+2) = x F(n+1) + F(n)`, `F(0) = 0`, `F(1) = 1`.
pub fn fibonacci_poly(n: usize) -> IntPoly {
    let (mut prev, mut cur) = (IntPoly::zero(), IntPoly::one());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = cur.shift(1) + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `F(n)(x) = sum_{j=0..=floor((n-1)/2)} C(n-j-1, j) x^(n-2j-1)`.
pub fn fibonacci_poly_closed(n: i64) -> Result<IntPoly, IncompleteError> {
    if n < 1 {
        return Err(domain("fibonacci_poly_closed", "n >= 1", n));
    }
    let mut coeffs = vec![BigInt::zero(); n as usize];
    for j in 0..=(n - 1) / 2 {
        coeffs[(n - 2 * j - 1) as usize] += binomial(n - j - 1, j);
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// One term of the incomplete sum: `(coefficient, exponent of x)`, or
/// `None` when the term is skipped.
pub fn incomplete_term(n: i64, i: i64, j: i64) -> Result<Option<(BigInt, usize)>, IncompleteError> {
    let rest = n - i - j;
    let exp = 2 * n - 3 * (i + j);
    if rest <= 0 || exp < 0 {
        return Ok(None);
    }
    let numer = BigInt::from(n) * binomial(i, j) * binomial(rest, i);
    let (q, r) = numer.div_rem(&BigInt::from(rest));
    if !r.is_zero() {
        return Err(IncompleteError::NonIntegral { n, i, j });
    }
    Ok(Some((q, exp as usize)))
}

fn check_incomplete_domain(n: i64, s: i64) -> Result<(), IncompleteError> {
    if n < 1 {
        return Err(domain("incomplete Tribonacci-Lucas", "n >= 1", n));
    }
    if s < 0 || s > n / 2 {
        return Err(domain("incomplete Tribonacci-Lucas", "0 <= s <= floor(n/2)", s));
    }
    Ok(())
}

/// `K(n, s)(x)`, the incomplete Tribonacci-Lucas polynomial.
pub fn incomplete_tl_poly(n: i64, s: i64) -> Result<IntPoly, IncompleteError> {
    check_incomplete_domain(n, s)?;
    let mut coeffs = vec![BigInt::zero(); (2 * n + 1) as usize];
    for i in 0..=s {
        for j in 0..=i {
            if let Some((c, exp)) = incomplete_term(n, i, j)? {
                coeffs[exp] += c;
            }
        }
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// `K(n, s)`, the incomplete Tribonacci-Lucas number.
pub fn incomplete_tl_number(n: i64, s: i64) -> Result<BigInt, IncompleteError> {
    check_incomplete_domain(n, s)?;
    let mut total = BigInt::zero();
    for i in 0..=s {
        for j in 0..=i {
            if let Some((c, _)) = incomplete_term(n, i, j)? {
                total += c;
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(3, -1), big(0));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn trinomial_examples() {
        assert_eq!(trinomial(0, 0).unwrap(), big(1));
        assert_eq!(trinomial(2, 2).unwrap(), big(3));
        assert_eq!(trinomial(1, 5).unwrap(), big(0));
        assert_eq!(trinomial(3, -1).unwrap(), big(0));
        let row2: Vec<_> = (0..5).map(|j| trinomial(2, j).unwrap()).collect();
        assert_eq!(row2, [1, 2, 3, 2, 1].map(big));
        assert!(trinomial(-1, 0).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(tribonacci_poly_closed(1).unwrap(), IntPoly::one());
        assert_eq!(tribonacci_poly_closed(2).unwrap(), p("x^2"));
        assert_eq!(tribonacci_poly_closed(3).unwrap(), p("x^4+x"));
        assert!(tribonacci_poly_closed(0).is_err());
        assert_eq!(fibonacci_poly_closed(1).unwrap(), IntPoly::one());
        assert_eq!(fibonacci_poly_closed(2).unwrap(), p("x"));
        assert_eq!(fibonacci_poly_closed(4).unwrap(), p("x^3+2x"));
        assert_eq!(fibonacci_poly(4), p("x^3+2x"));
        assert_eq!(fibonacci_poly(0), IntPoly::zero());
        assert!(fibonacci_poly_closed(0).is_err());
    }

    #[test]
    fn incomplete_examples() {
        assert_eq!(incomplete_tl_poly(1, 0).unwrap(), p("x^2"));
        assert_eq!(incomplete_tl_poly(3, 1).unwrap(), p("x^6+3x^3+3"));
        assert_eq!(incomplete_tl_poly(2, 0).unwrap(), p("x^4"));
        assert_eq!(incomplete_tl_poly(2, 1).unwrap(), p("x^4+2x"));
        assert_eq!(incomplete_tl_number(2, 1).unwrap(), big(3));
        assert_eq!(incomplete_tl_number(2, 0).unwrap(), big(1));
        assert_eq!(incomplete_tl_number(5, 2).unwrap(), big(21));
    }

    #[test]
    fn incomplete_domain_errors() {
        assert!(matches!(incomplete_tl_poly(0, 0), Err(IncompleteError::Domain { .. })));
        assert!(matches!(incomplete_tl_poly(4, 3), Err(IncompleteError::Domain { .. })));
        assert!(matches!(incomplete_tl_number(4, -1), Err(IncompleteError::Domain { .. })));
    }

    #[test]
    fn degenerate_term_is_skipped() {
        // n - i - j = 0 for (n, i, j) = (2, 1, 1).
        assert_eq!(incomplete_term(2, 1, 1).unwrap(), None);
        assert_eq!(incomplete_term(3, 1, 0).unwrap(), Some((big(3), 3)));
    }
}
