//! Exact checks of the Tribonacci-Lucas polynomial identities.
//!
//! Every identity is evaluated as a difference of two polynomials, so a
//! check passes only when the residual is literally the zero polynomial.
//!
//! * [`k_from_t`]: `K(n) = x^2 T(n) + 2x T(n-1) + 3 T(n-2)` for `n >= 2`.
//! * [`binomial_k3n`]: `K(3n) = sum_i sum_j C(n,i) C(i,j) x^(i+j) K(i+j)`.
//! * [`arith_prog_sum_closed`]: the closed form of
//!   `sum_{i<n} K(mi+j)` as a numerator/denominator pair, with
//!   `X(-m) = K(m)` and `X(m) = K(-m)`:
//!
//!   ```text
//!   numerator   = K(mn+j+m) + K(mn+j-m) + (1 - X(-m)) K(mn+j)
//!               - K(j+m) - K(j-m) - (1 - X(-m)) K(j)
//!   denominator = X(-m) - X(m)
//!   ```
//!
//!   The quotient is never formed. At `x = 0` the denominator vanishes for
//!   every `m`, so the identity is only meaningful multiplied through.
//! * [`arith_prog_sum_as_printed`]: the widely reproduced variant that has
//!   `K(m-j)` where `K(j-m)` belongs. It is wrong: at `j = 0` it undercounts
//!   the sum by exactly one.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::incomplete::binomial;
use crate::polyint::IntPoly;
use crate::seq::{number_table, poly_table, Family, Table};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("{identity} requires {requirement}, got {params}")]
    Domain {
        identity: &'static str,
        requirement: &'static str,
        params: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    KFromT,
    BinomialK3n,
    ArithProgSumCorrected,
    ArithProgSumAsPrinted,
}

impl IdentityId {
    /// The name used on the command line and in JSON reports.
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::KFromT => "thm2",
            IdentityId::BinomialK3n => "thm4",
            IdentityId::ArithProgSumCorrected => "thm6-corrected",
            IdentityId::ArithProgSumAsPrinted => "thm6-as-printed",
        }
    }
}

/// One identity at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityInstance {
    KFromT { n: i64 },
    BinomialK3n { n: i64 },
    ArithProgSumCorrected { m: i64, j: i64, n: i64 },
    ArithProgSumAsPrinted { m: i64, j: i64, n: i64 },
}

impl IdentityInstance {
    pub fn id(&self) -> IdentityId {
        match self {
            IdentityInstance::KFromT { .. } => IdentityId::KFromT,
            IdentityInstance::BinomialK3n { .. } => IdentityId::BinomialK3n,
            IdentityInstance::ArithProgSumCorrected { .. } => IdentityId::ArithProgSumCorrected,
            IdentityInstance::ArithProgSumAsPrinted { .. } => IdentityId::ArithProgSumAsPrinted,
        }
    }

    pub fn params(&self) -> Vec<(&'static str, i64)> {
        match *self {
            IdentityInstance::KFromT { n } | IdentityInstance::BinomialK3n { n } => vec![("n", n)],
            IdentityInstance::ArithProgSumCorrected { m, j, n }
            | IdentityInstance::ArithProgSumAsPrinted { m, j, n } => {
                vec![("m", m), ("j", j), ("n", n)]
            }
        }
    }

    pub fn params_json(&self) -> Value {
        Value::Object(
            self.params()
                .into_iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect(),
        )
    }
}

impl std::fmt::Display for IdentityInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id().name())?;
        for (k, v) in self.params() {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

/// Outcome of [`verify`]. `pass` holds exactly when `residual` is zero and
/// no domain error occurred.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub instance: IdentityInstance,
    pub lhs: IntPoly,
    pub rhs: IntPoly,
    pub residual: IntPoly,
    pub pass: bool,
    pub error: Option<IdentityError>,
}

impl VerificationReport {
    fn from_sides(instance: IdentityInstance, lhs: IntPoly, rhs: IntPoly) -> Self {
        let residual = &lhs - &rhs;
        VerificationReport {
            instance,
            pass: residual.is_zero(),
            lhs,
            rhs,
            residual,
            error: None,
        }
    }

    fn from_error(instance: IdentityInstance, error: IdentityError) -> Self {
        VerificationReport {
            instance,
            lhs: IntPoly::zero(),
            rhs: IntPoly::zero(),
            residual: IntPoly::zero(),
            pass: false,
            error: Some(error),
        }
    }

    /// `{"identity": ..., "params": {...}, "pass": bool, "residual": "<poly>"}`,
    /// plus `"error"` when the parameters were out of domain.
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "identity": self.instance.id().name(),
            "params": self.instance.params_json(),
            "pass": self.pass,
            "residual": self.residual.to_string(),
        });
        if let Some(e) = &self.error {
            v["error"] = json!(e.to_string());
        }
        v
    }
}

fn domain_err(identity: &'static str, requirement: &'static str, params: String) -> IdentityError {
    IdentityError::Domain {
        identity,
        requirement,
        params,
    }
}

/// `x^2 T(n) + 2x T(n-1) + 3 T(n-2)`.
pub fn k_from_t(n: i64) -> Result<IntPoly, IdentityError> {
    if n < 2 {
        return Err(domain_err("thm2", "n >= 2", format!("n={n}")));
    }
    let t = poly_table(Family::Tribonacci, n - 2, n);
    let x = IntPoly::x();
    Ok(t[n].shift(2) + (&x * &t[n - 1]).scale(&BigInt::from(2)) + t[n - 2].scale(&BigInt::from(3)))
}

/// `T(n) + 2T(n-1) + 3T(n-2)`, computed on numbers directly.
pub fn k_from_t_number(n: i64) -> Result<BigInt, IdentityError> {
    if n < 2 {
        return Err(domain_err("thm2", "n >= 2", format!("n={n}")));
    }
    let t = number_table(Family::Tribonacci, n - 2, n);
    Ok(&t[n] + 2 * &t[n - 1] + 3 * &t[n - 2])
}

/// `sum_{i=0..=n} sum_{j=0..=i} C(n,i) C(i,j) x^(i+j) K(i+j)`.
pub fn binomial_k3n(n: i64) -> Result<IntPoly, IdentityError> {
    if n < 0 {
        return Err(domain_err("thm4", "n >= 0", format!("n={n}")));
    }
    let k = poly_table(Family::TribonacciLucas, 0, 2 * n);
    let mut total = IntPoly::zero();
    for i in 0..=n {
        let cni = binomial(n, i);
        for j in 0..=i {
            let c = &cni * binomial(i, j);
            total += &k[i + j].shift((i + j) as usize).scale(&c);
        }
    }
    Ok(total)
}

/// The same double sum on numbers (`x = 1`).
pub fn binomial_k3n_number(n: i64) -> Result<BigInt, IdentityError> {
    if n < 0 {
        return Err(domain_err("thm4", "n >= 0", format!("n={n}")));
    }
    let k = number_table(Family::TribonacciLucas, 0, 2 * n);
    let mut total = BigInt::from(0);
    for i in 0..=n {
        for j in 0..=i {
            total += binomial(n, i) * binomial(i, j) * &k[i + j];
        }
    }
    Ok(total)
}

fn check_arith_domain(identity: &'static str, m: i64, j: i64, n: i64) -> Result<(), IdentityError> {
    if n > 0 && m > j && j >= 0 {
        Ok(())
    } else {
        Err(domain_err(identity, "n > 0 and m > j >= 0", format!("m={m} j={j} n={n}")))
    }
}

/// Tribonacci-Lucas polynomials covering every index the arithmetic
/// progression identities touch.
fn arith_table(m: i64, j: i64, n: i64) -> Table<IntPoly> {
    poly_table(Family::TribonacciLucas, (j - m).min(m - j).min(-m), m * n + j + m)
}

/// `sum_{i=0..n-1} K(mi+j)`, term by term.
pub fn arith_prog_sum_bruteforce(m: i64, j: i64, n: i64) -> Result<IntPoly, IdentityError> {
    check_arith_domain("thm6", m, j, n)?;
    let k = arith_table(m, j, n);
    Ok((0..n).map(|i| &k[m * i + j]).sum())
}

/// Numerator and denominator of a closed-form sum. The identity asserted is
/// `numerator = denominator * sum`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub numerator: IntPoly,
    pub denominator: IntPoly,
}

/// `K(mn+j+m) + K(mn+j-m) + (1 - K(m)) K(mn+j)`: the `n`-dependent part of
/// the numerator.
fn varying_part(k: &Table<IntPoly>, m: i64, j: i64, n: i64) -> IntPoly {
    let top = m * n + j;
    let one_minus = IntPoly::one() - &k[m];
    &k[top + m] + &k[top - m] + &one_minus * &k[top]
}

fn denominator(k: &Table<IntPoly>, m: i64) -> IntPoly {
    &k[m] - &k[-m]
}

/// `-(K(j+m) + K(j-m) + (1 - K(m)) K(j))`.
fn corrected_constant(k: &Table<IntPoly>, m: i64, j: i64) -> IntPoly {
    let one_minus = IntPoly::one() - &k[m];
    -(&k[j + m] + &k[j - m] + &one_minus * &k[j])
}

/// `-(K(j+m) + K(m-j) + (1 - K(m)) K(j))`.
fn printed_constant(k: &Table<IntPoly>, m: i64, j: i64) -> IntPoly {
    let one_minus = IntPoly::one() - &k[m];
    -(&k[j + m] + &k[m - j] + &one_minus * &k[j])
}

/// Closed form of `sum_{i<n} K(mi+j)`, correct for all `n > 0`, `m > j >= 0`.
pub fn arith_prog_sum_closed(m: i64, j: i64, n: i64) -> Result<ClosedForm, IdentityError> {
    check_arith_domain("thm6-corrected", m, j, n)?;
    let k = arith_table(m, j, n);
    Ok(ClosedForm {
        numerator: varying_part(&k, m, j, n) + corrected_constant(&k, m, j),
        denominator: denominator(&k, m),
    })
}

/// The variant with `K(m-j)` in the constant block.
pub fn arith_prog_sum_as_printed(m: i64, j: i64, n: i64) -> Result<ClosedForm, IdentityError> {
    check_arith_domain("thm6-as-printed", m, j, n)?;
    let k = arith_table(m, j, n);
    Ok(ClosedForm {
        numerator: varying_part(&k, m, j, n) + printed_constant(&k, m, j),
        denominator: denominator(&k, m),
    })
}

/// The `n`-independent block of the corrected numerator.
pub fn closed_form_constant(m: i64, j: i64) -> Result<IntPoly, IdentityError> {
    check_arith_domain("thm6-corrected", m, j, 1)?;
    Ok(corrected_constant(&arith_table(m, j, 1), m, j))
}

/// The `n`-independent block of the misprinted numerator.
pub fn as_printed_constant(m: i64, j: i64) -> Result<IntPoly, IdentityError> {
    check_arith_domain("thm6-as-printed", m, j, 1)?;
    Ok(printed_constant(&arith_table(m, j, 1), m, j))
}

/// The constants as they appear in the published special cases
/// `(m, j) = (1, 0), (2, 0), (2, 1)`, with `X(-2) = x^4 + 2x` substituted:
///
/// * `(1, 0)`: `2x^2 + x - 3`
/// * `(2, 0)`: `3 X(-2) - 2x^4 - 4x - 3`
/// * `(2, 1)`: `x^2 X(-2) - x^6 - 3x^3 - 2x^2 - 3`
pub fn published_special_case_constant(m: i64, j: i64) -> Option<IntPoly> {
    let x_minus_2 = IntPoly::from_i64s(&[0, 2, 0, 0, 1]);
    let x2 = IntPoly::monomial(1, 2);
    match (m, j) {
        (1, 0) => Some(IntPoly::from_i64s(&[-3, 1, 2])),
        (2, 0) => Some(x_minus_2.scale(&BigInt::from(3)) + IntPoly::from_i64s(&[-3, -4, 0, 0, -2])),
        (2, 1) => Some(&x2 * &x_minus_2 + IntPoly::from_i64s(&[-3, 0, -2, -3, 0, 0, -1])),
        _ => None,
    }
}

/// Whether `varying_part(m, j, n) + constant` equals `denominator * sum` at
/// the given `n`.
pub fn constant_matches_bruteforce(
    m: i64,
    j: i64,
    n: i64,
    constant: &IntPoly,
) -> Result<bool, IdentityError> {
    check_arith_domain("thm6", m, j, n)?;
    let k = arith_table(m, j, n);
    let sum: IntPoly = (0..n).map(|i| &k[m * i + j]).sum();
    let lhs = varying_part(&k, m, j, n) + constant;
    Ok(lhs == &denominator(&k, m) * &sum)
}

/// The residual the misprinted form leaves against the true sum:
/// `K(j-m) - K(m-j)`, independent of `n`. At `j = 0` this is minus the
/// denominator.
pub fn as_printed_expected_residual(m: i64, j: i64) -> Result<IntPoly, IdentityError> {
    check_arith_domain("thm6-as-printed", m, j, 1)?;
    let k = arith_table(m, j, 1);
    Ok(&k[j - m] - &k[m - j])
}

fn verify_inner(instance: IdentityInstance) -> Result<VerificationReport, IdentityError> {
    use crate::seq::tribonacci_lucas_poly;
    Ok(match instance {
        IdentityInstance::KFromT { n } => {
            let rhs = k_from_t(n)?;
            VerificationReport::from_sides(instance, tribonacci_lucas_poly(n), rhs)
        }
        IdentityInstance::BinomialK3n { n } => {
            let rhs = binomial_k3n(n)?;
            VerificationReport::from_sides(instance, tribonacci_lucas_poly(3 * n), rhs)
        }
        IdentityInstance::ArithProgSumCorrected { m, j, n } => {
            let cf = arith_prog_sum_closed(m, j, n)?;
            let sum = arith_prog_sum_bruteforce(m, j, n)?;
            VerificationReport::from_sides(instance, cf.numerator, &cf.denominator * &sum)
        }
        IdentityInstance::ArithProgSumAsPrinted { m, j, n } => {
            let cf = arith_prog_sum_as_printed(m, j, n)?;
            let sum = arith_prog_sum_bruteforce(m, j, n)?;
            VerificationReport::from_sides(instance, cf.numerator, &cf.denominator * &sum)
        }
    })
}

/// Evaluates both sides of `instance` and their exact residual. Domain
/// errors are reported, not returned.
pub fn verify(instance: IdentityInstance) -> VerificationReport {
    verify_inner(instance).unwrap_or_else(|e| VerificationReport::from_error(instance, e))
}

/// [`verify`] over many instances in parallel; output order matches input.
pub fn verify_all(instances: &[IdentityInstance]) -> Vec<VerificationReport> {
    instances.par_iter().map(|&i| verify(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn k_from_t_examples() {
        assert_eq!(k_from_t(2).unwrap(), p("x^4+2x"));
        assert_eq!(k_from_t(3).unwrap(), p("x^6+3x^3+3"));
        assert_eq!(k_from_t_number(2).unwrap(), BigInt::from(3));
        assert!(k_from_t(1).is_err());
        assert!(k_from_t_number(0).is_err());
    }

    #[test]
    fn binomial_k3n_examples() {
        assert_eq!(binomial_k3n(0).unwrap(), p("3"));
        assert_eq!(binomial_k3n(1).unwrap(), p("x^6+3x^3+3"));
        assert_eq!(binomial_k3n_number(1).unwrap(), BigInt::from(7));
        assert!(binomial_k3n(-1).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(arith_prog_sum_bruteforce(1, 0, 3).unwrap(), p("x^4+x^2+2x+3"));
        assert_eq!(arith_prog_sum_bruteforce(2, 0, 1).unwrap(), p("3"));
        assert_eq!(arith_prog_sum_bruteforce(2, 1, 1).unwrap(), p("x^2"));
        assert!(arith_prog_sum_bruteforce(1, 1, 3).is_err());
        assert!(arith_prog_sum_bruteforce(2, 0, 0).is_err());
        assert!(arith_prog_sum_bruteforce(2, -1, 1).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let cf = arith_prog_sum_closed(1, 0, 1).unwrap();
        assert_eq!(cf.denominator, p("x^2+x"));
        assert_eq!(cf.numerator, p("3x^2+3x"));
        assert_eq!(closed_form_constant(1, 0).unwrap(), p("2x^2+x-3"));
        assert_eq!(closed_form_constant(2, 0).unwrap(), p("2x^4+x^2+4x-3"));
        assert_eq!(closed_form_constant(2, 1).unwrap(), p("-x^3-x^2+x-3"));
    }

    #[test]
    fn as_printed_examples() {
        let cf = arith_prog_sum_as_printed(1, 0, 1).unwrap();
        assert_eq!(cf.numerator, p("2x^2+2x"));
        let cf = arith_prog_sum_as_printed(2, 0, 1).unwrap();
        assert_eq!(cf.numerator, p("2x^4+2x^2+4x"));
        assert_eq!(cf.numerator, cf.denominator.scale(&BigInt::from(2)));
        let cf = arith_prog_sum_as_printed(1, 0, 2).unwrap();
        // Quotient x^2+2 against the true sum K(0) + K(1) = x^2+3.
        assert_eq!(cf.numerator, &cf.denominator * &p("x^2+2"));
        assert_eq!(arith_prog_sum_bruteforce(1, 0, 2).unwrap(), p("x^2+3"));
    }

    #[test]
    fn published_constants() {
        assert_eq!(published_special_case_constant(1, 0).unwrap(), p("2x^2+x-3"));
        assert_eq!(published_special_case_constant(2, 0).unwrap(), as_printed_constant(2, 0).unwrap());
        assert_eq!(published_special_case_constant(2, 1).unwrap(), as_printed_constant(2, 1).unwrap());
        assert_eq!(published_special_case_constant(3, 0), None);
    }

    #[test]
    fn verify_examples() {
        let r = verify(IdentityInstance::KFromT { n: 10 });
        assert!(r.pass && r.residual.is_zero());
        let r = verify(IdentityInstance::ArithProgSumCorrected { m: 3, j: 2, n: 5 });
        assert!(r.pass);
        let r = verify(IdentityInstance::ArithProgSumAsPrinted { m: 1, j: 0, n: 1 });
        assert!(!r.pass);
        assert_eq!(r.residual, p("-x^2-x"));
        assert_eq!(r.residual, as_printed_expected_residual(1, 0).unwrap());
    }

    #[test]
    fn verify_reports_domain_errors() {
        let r = verify(IdentityInstance::KFromT { n: 1 });
        assert!(!r.pass);
        assert!(r.error.is_some());
        let js = r.to_json();
        assert_eq!(js["identity"], "thm2");
        assert_eq!(js["params"]["n"], 1);
        assert!(js["error"].as_str().unwrap().contains("n >= 2"));
    }

    #[test]
    fn report_json_shape() {
        let r = verify(IdentityInstance::ArithProgSumAsPrinted { m: 1, j: 0, n: 1 });
        let js = r.to_json();
        assert_eq!(js["identity"], "thm6-as-printed");
        assert_eq!(js["params"], serde_json::json!({"m": 1, "j": 0, "n": 1}));
        assert_eq!(js["pass"], false);
        assert_eq!(js["residual"], "-x^2-x");
        assert!(js.get("error").is_none());
    }

    #[test]
    fn verify_all_preserves_order() {
        let grid: Vec<_> = (2..20).map(|n| IdentityInstance::KFromT { n }).collect();
        let reports = verify_all(&grid);
        assert_eq!(reports.len(), grid.len());
        for (r, i) in reports.iter().zip(&grid) {
            assert_eq!(r.instance, *i);
            assert!(r.pass);
        }
    }
}
