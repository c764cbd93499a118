//! Characteristic roots and the Binet form of the Tribonacci-Lucas
//! polynomials.
//!
//! At a real point `x0` the recurrence's characteristic cubic is
//! `λ^3 - x0^2 λ^2 - x0 λ - 1`. Its roots `λ1, λ2, λ3` have sum `x0^2` and
//! product 1, and `K(n)(x0) = A λ1^n + B λ2^n + C λ3^n` with coefficients
//! fixed by the three initial values. Because `K(n)(x)` is exactly the
//! `n`-th power sum of the roots, all three coefficients come out as 1;
//! [`binet_coefficients`] computes them from the general quotient anyway so
//! that fact is checked rather than assumed.

use num_complex::Complex64;
use thiserror::Error;

use crate::polyint::IntPoly;
use crate::seq::tribonacci_lucas_poly;

/// Pairwise root separation below which the Binet quotients are refused.
pub const MIN_ROOT_SEPARATION: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BinetError {
    #[error("characteristic roots at x = {x0} are (nearly) repeated: separation {separation:e}")]
    DegenerateRoots { x0: f64, separation: f64 },
    #[error("evaluation point must be finite, got {0}")]
    NonFinite(f64),
    #[error("index {0} is too large for floating-point powering")]
    IndexTooLarge(i64),
}

/// The three complex roots of `λ^3 - x0^2 λ^2 - x0 λ - 1`.
///
/// `lambda1` is always real. When the other two form a conjugate pair,
/// `lambda2` is the one with positive imaginary part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicRoots {
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    pub lambda3: Complex64,
    pub x0: f64,
}

impl CubicRoots {
    pub fn as_array(&self) -> [Complex64; 3] {
        [self.lambda1, self.lambda2, self.lambda3]
    }

    /// `|f(λ)| / max(1, |λ|^3)` for each root.
    pub fn relative_residuals(&self) -> [f64; 3] {
        self.as_array().map(|l| {
            let f = characteristic(self.x0, l);
            f.norm() / l.norm().powi(3).max(1.0)
        })
    }

    pub fn sum(&self) -> Complex64 {
        self.lambda1 + self.lambda2 + self.lambda3
    }

    pub fn product(&self) -> Complex64 {
        self.lambda1 * self.lambda2 * self.lambda3
    }

    pub fn min_separation(&self) -> f64 {
        let [a, b, c] = self.as_array();
        (a - b).norm().min((a - c).norm()).min((b - c).norm())
    }

    /// `λ1^m + λ2^m + λ3^m` in floating point.
    pub fn power_sum(&self, m: i32) -> Complex64 {
        self.as_array().iter().map(|l| l.powi(m)).sum()
    }
}

fn characteristic(x0: f64, l: Complex64) -> Complex64 {
    l * l * l - x0 * x0 * l * l - x0 * l - 1.0
}

fn polish_real(x0: f64, mut r: f64) -> f64 {
    let (a, b) = (x0 * x0, x0);
    for _ in 0..3 {
        let f = ((r - a) * r - b) * r - 1.0;
        let df = (3.0 * r - 2.0 * a) * r - b;
        if df == 0.0 {
            break;
        }
        let step = f / df;
        r -= step;
        if step.abs() <= f64::EPSILON * r.abs() {
            break;
        }
    }
    r
}

/// Roots of the characteristic cubic at `x0`, by Cardano's formula (or the
/// trigonometric form when all three roots are real), a Newton polish of
/// the real root, and deflation to a quadratic for the remaining pair.
pub fn characteristic_roots(x0: f64) -> Result<CubicRoots, BinetError> {
    if !x0.is_finite() {
        return Err(BinetError::NonFinite(x0));
    }
    let (a, b) = (x0 * x0, x0);
    // λ = t + a/3 gives t^3 + p t + q = 0.
    let p = -b - a * a / 3.0;
    let q = -2.0 * a * a * a / 27.0 - a * b / 3.0 - 1.0;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    let t = if disc > 0.0 {
        let s = disc.sqrt();
        (-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt()
    } else {
        // Three real roots, p < 0 here; take the largest.
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        m * (arg.acos() / 3.0).cos()
    };
    let r = polish_real(x0, t + a / 3.0);

    // The other two roots have sum a - r and product 1/r.
    let s = Complex64::new(a - r, 0.0);
    let prod = Complex64::new(1.0 / r, 0.0);
    let d = (s * s - 4.0 * prod).sqrt();
    let big = if (s + d).norm() >= (s - d).norm() {
        (s + d) / 2.0
    } else {
        (s - d) / 2.0
    };
    let small = if big.norm() > 0.0 { prod / big } else { s - big };
    let (mut l2, mut l3) = (big, small);
    if l2.im.abs() > 0.0 && (l2.im + l3.im).abs() < 1e-12 * (1.0 + l2.norm()) {
        // Conjugate pair: force exact symmetry, positive imaginary first.
        let re = (l2.re + l3.re) / 2.0;
        let im = (l2.im.abs() + l3.im.abs()) / 2.0;
        l2 = Complex64::new(re, im);
        l3 = Complex64::new(re, -im);
    }
    Ok(CubicRoots {
        lambda1: Complex64::new(r, 0.0),
        lambda2: l2,
        lambda3: l3,
        x0,
    })
}

/// The Binet coefficients `A`, `B`, `C` attached to `λ1`, `λ2`, `λ3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinetCoefficients {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
}

impl BinetCoefficients {
    pub fn as_array(&self) -> [Complex64; 3] {
        [self.a, self.b, self.c]
    }

    /// `|A-1| + |B-1| + |C-1|`.
    pub fn distance_from_unit(&self) -> f64 {
        self.as_array().iter().map(|v| (v - 1.0).norm()).sum()
    }
}

/// Roots plus coefficients: everything needed to evaluate `K(n)(x0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinetForm {
    pub roots: CubicRoots,
    pub coefficients: BinetCoefficients,
}

impl BinetForm {
    pub fn new(x0: f64) -> Result<Self, BinetError> {
        let roots = characteristic_roots(x0)?;
        let separation = roots.min_separation();
        if separation < MIN_ROOT_SEPARATION {
            return Err(BinetError::DegenerateRoots { x0, separation });
        }
        let k0 = Complex64::from(tribonacci_lucas_poly(0).eval_real(x0));
        let k1 = Complex64::from(tribonacci_lucas_poly(1).eval_real(x0));
        let k2 = Complex64::from(tribonacci_lucas_poly(2).eval_real(x0));
        let [l1, l2, l3] = roots.as_array();
        // Coefficient of the root `own`, the other two being `u` and `v`.
        let quotient = |own: Complex64, u: Complex64, v: Complex64| {
            (k2 - (u + v) * k1 + u * v * k0) / ((own - u) * (own - v))
        };
        let coefficients = BinetCoefficients {
            a: quotient(l1, l2, l3),
            b: quotient(l2, l1, l3),
            c: quotient(l3, l1, l2),
        };
        Ok(BinetForm {
            roots,
            coefficients,
        })
    }

    pub fn eval(&self, n: i64) -> Result<Complex64, BinetError> {
        let e = i32::try_from(n).map_err(|_| BinetError::IndexTooLarge(n))?;
        let [l1, l2, l3] = self.roots.as_array();
        let BinetCoefficients { a, b, c } = self.coefficients;
        Ok(a * l1.powi(e) + b * l2.powi(e) + c * l3.powi(e))
    }
}

pub fn binet_coefficients(x0: f64) -> Result<BinetCoefficients, BinetError> {
    BinetForm::new(x0).map(|f| f.coefficients)
}

/// `A λ1^n + B λ2^n + C λ3^n` at `x0`. For real `x0` the imaginary part is
/// rounding noise.
pub fn binet_eval(x0: f64, n: i64) -> Result<Complex64, BinetError> {
    BinetForm::new(x0)?.eval(n)
}

/// The exact power sum `λ1^m + λ2^m + λ3^m` as a polynomial in `x`.
///
/// This is `K(m)(x)` for every signed `m`; negative `m` gives the power sums
/// of the inverse roots.
pub fn power_sum(m: i64) -> IntPoly {
    tribonacci_lucas_poly(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: f64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn roots_at_one() {
        let r = characteristic_roots(1.0).unwrap();
        assert!((r.lambda1.re - 1.839_286_755_2).abs() < 1e-9);
        assert!((r.lambda2.norm() - 0.737_352_705_7).abs() < 1e-9);
        assert!((r.lambda3.norm() - 0.737_352_705_7).abs() < 1e-9);
        assert_eq!(r.lambda2, r.lambda3.conj());
        assert!(r.lambda2.im > 0.0);
        assert!(close(r.sum(), 1.0, 1e-9));
    }

    #[test]
    fn vieta_at_two() {
        let r = characteristic_roots(2.0).unwrap();
        assert!(close(r.product(), 1.0, 1e-9));
        assert!(close(r.sum(), 4.0, 1e-9));
        assert!(r.relative_residuals().iter().all(|&e| e < 1e-9));
    }

    #[test]
    fn roots_at_zero_are_cube_roots_of_unity() {
        let r = characteristic_roots(0.0).unwrap();
        for l in r.as_array() {
            assert!((l.norm() - 1.0).abs() < 1e-12);
        }
        assert!(close(r.lambda1, 1.0, 1e-12));
    }

    #[test]
    fn coefficients_examples() {
        let c = binet_coefficients(1.0).unwrap();
        for v in c.as_array() {
            assert!(close(v, 1.0, 1e-7));
        }
        let c = binet_coefficients(2.0).unwrap();
        assert!(close(c.a + c.b + c.c, 3.0, 1e-7));
        let f = BinetForm::new(1.5).unwrap();
        let [l1, l2, l3] = f.roots.as_array();
        let k1 = f.coefficients.a * l1 + f.coefficients.b * l2 + f.coefficients.c * l3;
        assert!(close(k1, 2.25, 1e-7));
    }

    #[test]
    fn eval_examples() {
        assert!((binet_eval(1.0, 5).unwrap() - 21.0).norm() / 21.0 < 1e-6);
        assert!(close(binet_eval(1.0, 0).unwrap(), 3.0, 1e-9));
        assert!((binet_eval(2.0, 3).unwrap() - 91.0).norm() / 91.0 < 1e-6);
        assert!(matches!(
            BinetForm::new(1.0).unwrap().eval(1 << 40),
            Err(BinetError::IndexTooLarge(_))
        ));
        assert!(matches!(binet_eval(f64::NAN, 1), Err(BinetError::NonFinite(_))));
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(1).to_string(), "x^2");
        assert_eq!(power_sum(2).to_string(), "x^4+2x");
        assert_eq!(power_sum(-1).to_string(), "-x");
    }
}
