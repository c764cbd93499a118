//! Tribonacci and Tribonacci-Lucas numbers and polynomials.
//!
//! All four families obey the third-order recurrence
//! `P(n+3) = a·P(n+2) + b·P(n+1) + P(n)` with `(a, b) = (x^2, x)` for the
//! polynomials and `(1, 1)` for the numbers. The constant coefficient is 1,
//! so the recurrence runs backwards as well, and every family is defined on
//! all of `Z`.
//!
//! Two evaluation routes are provided: a linear walk from the initial
//! conditions ([`tribonacci_lucas_poly`] and friends, plus [`poly_table`] /
//! [`number_table`] for ranges), and [`fast_eval`], which raises the
//! [`CompanionMatrix`] to the `n`-th power by repeated squaring.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::polyint::IntPoly;

/// The minimal ring interface the recurrence machinery needs.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Ring for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }
    fn one() -> Self {
        IntPoly::one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// Which of the two sequence families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Tribonacci,
    TribonacciLucas,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    TribonacciNumber,
    TribonacciLucasNumber,
    TribonacciPoly,
    TribonacciLucasPoly,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 4] = [
        SequenceKind::TribonacciNumber,
        SequenceKind::TribonacciLucasNumber,
        SequenceKind::TribonacciPoly,
        SequenceKind::TribonacciLucasPoly,
    ];

    pub fn family(self) -> Family {
        match self {
            SequenceKind::TribonacciNumber | SequenceKind::TribonacciPoly => Family::Tribonacci,
            SequenceKind::TribonacciLucasNumber | SequenceKind::TribonacciLucasPoly => {
                Family::TribonacciLucas
            }
        }
    }

    pub fn is_poly(self) -> bool {
        matches!(
            self,
            SequenceKind::TribonacciPoly | SequenceKind::TribonacciLucasPoly
        )
    }
}

/// A sequence value: an integer for the number kinds, a polynomial otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeqValue {
    Number(BigInt),
    Poly(IntPoly),
}

impl SeqValue {
    pub fn as_number(&self) -> Option<&BigInt> {
        match self {
            SeqValue::Number(v) => Some(v),
            SeqValue::Poly(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&IntPoly> {
        match self {
            SeqValue::Poly(p) => Some(p),
            SeqValue::Number(_) => None,
        }
    }
}

impl std::fmt::Display for SeqValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeqValue::Number(v) => write!(f, "{v}"),
            SeqValue::Poly(p) => write!(f, "{p}"),
        }
    }
}

/// Recurrence coefficients `(a, b)` and initial values `P(0), P(1), P(2)`.
#[derive(Debug, Clone)]
struct Recurrence<T> {
    a: T,
    b: T,
    init: [T; 3],
}

impl<T: Ring> Recurrence<T> {
    fn next(&self, p0: &T, p1: &T, p2: &T) -> T {
        self.a
            .mul_ref(p2)
            .add_ref(&self.b.mul_ref(p1))
            .add_ref(p0)
    }

    /// `P(k)` from `P(k+1), P(k+2), P(k+3)`.
    fn prev(&self, p1: &T, p2: &T, p3: &T) -> T {
        p3.sub_ref(&self.a.mul_ref(p2)).sub_ref(&self.b.mul_ref(p1))
    }

    fn term(&self, n: i64) -> T {
        let [p0, p1, p2] = self.init.clone();
        let (mut w0, mut w1, mut w2) = (p0, p1, p2);
        if n >= 0 {
            for _ in 0..n {
                let w3 = self.next(&w0, &w1, &w2);
                (w0, w1, w2) = (w1, w2, w3);
            }
            w0
        } else {
            for _ in 0..-n {
                let wm = self.prev(&w0, &w1, &w2);
                (w0, w1, w2) = (wm, w0, w1);
            }
            w0
        }
    }

    /// Values for `lo..=hi`.
    fn range(&self, lo: i64, hi: i64) -> Vec<T> {
        if lo > hi {
            return Vec::new();
        }
        let mut back: Vec<T> = Vec::new();
        if lo < 0 {
            let [p0, p1, p2] = self.init.clone();
            let (mut w0, mut w1, mut w2) = (p0, p1, p2);
            for _ in 0..-lo {
                let wm = self.prev(&w0, &w1, &w2);
                back.push(wm.clone());
                (w0, w1, w2) = (wm, w0, w1);
            }
            back.reverse();
        }
        let mut fwd: Vec<T> = self.init.to_vec();
        while (fwd.len() as i64) <= hi {
            let k = fwd.len();
            let v = self.next(&fwd[k - 3], &fwd[k - 2], &fwd[k - 1]);
            fwd.push(v);
        }
        let mut all = back;
        let offset = all.len() as i64;
        all.extend(fwd);
        let from = (lo + offset) as usize;
        let to = (hi + offset) as usize;
        all.drain(from..=to).collect()
    }
}

fn number_recurrence(family: Family) -> Recurrence<BigInt> {
    let one = BigInt::from(1);
    let init = match family {
        Family::Tribonacci => [0, 1, 1],
        Family::TribonacciLucas => [3, 1, 3],
    }
    .map(BigInt::from);
    Recurrence {
        a: one.clone(),
        b: one,
        init,
    }
}

fn poly_recurrence(family: Family) -> Recurrence<IntPoly> {
    let init = match family {
        Family::Tribonacci => [IntPoly::zero(), IntPoly::one(), IntPoly::monomial(1, 2)],
        Family::TribonacciLucas => [
            IntPoly::constant(3),
            IntPoly::monomial(1, 2),
            IntPoly::from_i64s(&[0, 2, 0, 0, 1]),
        ],
    };
    Recurrence {
        a: IntPoly::monomial(1, 2),
        b: IntPoly::x(),
        init,
    }
}

/// `T(n)`: 0, 1, 1, 2, 4, 7, ...
pub fn tribonacci_number(n: i64) -> BigInt {
    number_recurrence(Family::Tribonacci).term(n)
}

/// `K(n)`: 3, 1, 3, 7, 11, 21, ...
pub fn tribonacci_lucas_number(n: i64) -> BigInt {
    number_recurrence(Family::TribonacciLucas).term(n)
}

/// `T(n)(x)`: 0, 1, x^2, x^4+x, ...
pub fn tribonacci_poly(n: i64) -> IntPoly {
    poly_recurrence(Family::Tribonacci).term(n)
}

/// `K(n)(x)`: 3, x^2, x^4+2x, x^6+3x^3+3, ...
pub fn tribonacci_lucas_poly(n: i64) -> IntPoly {
    poly_recurrence(Family::TribonacciLucas).term(n)
}

/// Linear-walk evaluation of any kind.
pub fn eval(kind: SequenceKind, n: i64) -> SeqValue {
    if kind.is_poly() {
        SeqValue::Poly(poly_recurrence(kind.family()).term(n))
    } else {
        SeqValue::Number(number_recurrence(kind.family()).term(n))
    }
}

/// A contiguous run of sequence values indexed by signed `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Table<T> {
    start: i64,
    values: Vec<T>,
}

impl<T> Table<T> {
    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    pub fn get(&self, n: i64) -> Option<&T> {
        let idx = n.checked_sub(self.start)?;
        usize::try_from(idx).ok().and_then(|i| self.values.get(i))
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &T)> {
        (self.start..).zip(self.values.iter())
    }
}

impl<T> std::ops::Index<i64> for Table<T> {
    type Output = T;
    fn index(&self, n: i64) -> &T {
        self.get(n)
            .unwrap_or_else(|| panic!("index {n} outside table {}..={}", self.start, self.end()))
    }
}

/// Polynomials of `family` for `lo..=hi`, generated in one pass.
pub fn poly_table(family: Family, lo: i64, hi: i64) -> Table<IntPoly> {
    Table {
        start: lo,
        values: poly_recurrence(family).range(lo, hi),
    }
}

/// Numbers of `family` for `lo..=hi`, generated in one pass.
pub fn number_table(family: Family, lo: i64, hi: i64) -> Table<BigInt> {
    Table {
        start: lo,
        values: number_recurrence(family).range(lo, hi),
    }
}

/// A 3×3 matrix over a [`Ring`].
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix3<T> {
    pub rows: [[T; 3]; 3],
}

impl<T: Ring> Matrix3<T> {
    pub fn identity() -> Self {
        let o = T::one;
        let z = T::zero;
        Matrix3 {
            rows: [[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]],
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let cell = |i: usize, j: usize| {
            (0..3).fold(T::zero(), |acc, k| {
                acc.add_ref(&self.rows[i][k].mul_ref(&rhs.rows[k][j]))
            })
        };
        Matrix3 {
            rows: [
                [cell(0, 0), cell(0, 1), cell(0, 2)],
                [cell(1, 0), cell(1, 1), cell(1, 2)],
                [cell(2, 0), cell(2, 1), cell(2, 2)],
            ],
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn apply(&self, v: &[T; 3]) -> [T; 3] {
        let row = |i: usize| {
            (0..3).fold(T::zero(), |acc, k| acc.add_ref(&self.rows[i][k].mul_ref(&v[k])))
        };
        [row(0), row(1), row(2)]
    }

    pub fn determinant(&self) -> T {
        let m = &self.rows;
        let minor = |r1: usize, c1: usize, r2: usize, c2: usize| {
            m[r1][c1].mul_ref(&m[r2][c2]).sub_ref(&m[r1][c2].mul_ref(&m[r2][c1]))
        };
        m[0][0]
            .mul_ref(&minor(1, 1, 2, 2))
            .sub_ref(&m[0][1].mul_ref(&minor(1, 0, 2, 2)))
            .add_ref(&m[0][2].mul_ref(&minor(1, 0, 2, 1)))
    }
}

/// The companion matrix `[[a, b, 1], [1, 0, 0], [0, 1, 0]]` of the
/// recurrence. It maps the state `(P(n+2), P(n+1), P(n))` to the state one
/// step later, and has determinant 1, so it is invertible over the ring.
#[derive(Debug, Clone, PartialEq)]
pub struct CompanionMatrix<T> {
    a: T,
    b: T,
}

impl CompanionMatrix<IntPoly> {
    /// `a = x^2`, `b = x`: the polynomial recurrences.
    pub fn symbolic() -> Self {
        CompanionMatrix {
            a: IntPoly::monomial(1, 2),
            b: IntPoly::x(),
        }
    }
}

impl CompanionMatrix<BigInt> {
    /// The companion matrix specialized at `x = 1`: the number recurrences.
    pub fn at_one() -> Self {
        CompanionMatrix {
            a: BigInt::from(1),
            b: BigInt::from(1),
        }
    }
}

impl<T: Ring> CompanionMatrix<T> {
    pub fn forward(&self) -> Matrix3<T> {
        let (o, z) = (T::one, T::zero);
        Matrix3 {
            rows: [
                [self.a.clone(), self.b.clone(), o()],
                [o(), z(), z()],
                [z(), o(), z()],
            ],
        }
    }

    /// Inverse matrix `[[0, 1, 0], [0, 0, 1], [1, -a, -b]]`.
    pub fn inverse(&self) -> Matrix3<T> {
        let (o, z) = (T::one, T::zero);
        Matrix3 {
            rows: [
                [z(), o(), z()],
                [z(), z(), o()],
                [o(), z().sub_ref(&self.a), z().sub_ref(&self.b)],
            ],
        }
    }

    /// `M^n`, using the inverse for negative `n`.
    pub fn power(&self, n: i64) -> Matrix3<T> {
        if n >= 0 {
            self.forward().pow(n as u64)
        } else {
            self.inverse().pow(n.unsigned_abs())
        }
    }
}

fn fast_term<T: Ring>(matrix: &CompanionMatrix<T>, init: &[T; 3], n: i64) -> T {
    let state = [init[2].clone(), init[1].clone(), init[0].clone()];
    let [_, _, p_n] = matrix.power(n).apply(&state);
    p_n
}

/// `O(log |n|)` evaluation by powering the companion matrix. Agrees with
/// [`eval`] for every kind and every `n`.
pub fn fast_eval(kind: SequenceKind, n: i64) -> SeqValue {
    if kind.is_poly() {
        let rec = poly_recurrence(kind.family());
        SeqValue::Poly(fast_term(&CompanionMatrix::symbolic(), &rec.init, n))
    } else {
        let rec = number_recurrence(kind.family());
        SeqValue::Number(fast_term(&CompanionMatrix::at_one(), &rec.init, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn number_examples() {
        let t: Vec<_> = (0..6).map(tribonacci_number).collect();
        assert_eq!(t, [0, 1, 1, 2, 4, 7].map(big));
        assert_eq!(tribonacci_number(-1), big(0));
        let k: Vec<_> = (0..6).map(tribonacci_lucas_number).collect();
        assert_eq!(k, [3, 1, 3, 7, 11, 21].map(big));
        assert_eq!(tribonacci_lucas_number(-1), big(-1));
    }

    #[test]
    fn poly_examples() {
        assert_eq!(tribonacci_poly(0), IntPoly::zero());
        assert_eq!(tribonacci_poly(2), p("x^2"));
        assert_eq!(tribonacci_poly(3), p("x^4+x"));
        assert_eq!(tribonacci_poly(4), p("x^6+2x^3+1"));
        assert_eq!(tribonacci_lucas_poly(2), p("x^4+2x"));
        assert_eq!(tribonacci_lucas_poly(3), p("x^6+3x^3+3"));
        assert_eq!(tribonacci_lucas_poly(-1), p("-x"));
        assert_eq!(tribonacci_lucas_poly(-2), p("-x^2"));
        assert_eq!(tribonacci_lucas_poly(-1).eval_int(&big(1)), tribonacci_lucas_number(-1));
    }

    #[test]
    fn fast_eval_examples() {
        assert_eq!(
            fast_eval(SequenceKind::TribonacciLucasNumber, 5),
            SeqValue::Number(big(21))
        );
        assert_eq!(
            fast_eval(SequenceKind::TribonacciLucasPoly, 0),
            SeqValue::Poly(IntPoly::constant(3))
        );
        assert_eq!(
            fast_eval(SequenceKind::TribonacciNumber, 50),
            SeqValue::Number(tribonacci_number(50))
        );
        assert_eq!(
            fast_eval(SequenceKind::TribonacciLucasPoly, -2),
            SeqValue::Poly(p("-x^2"))
        );
    }

    #[test]
    fn companion_determinant_is_one() {
        assert_eq!(CompanionMatrix::symbolic().forward().determinant(), IntPoly::one());
        assert_eq!(CompanionMatrix::at_one().forward().determinant(), big(1));
        let m = CompanionMatrix::symbolic();
        assert_eq!(m.forward().mul(&m.inverse()), Matrix3::identity());
        assert_eq!(m.inverse().mul(&m.forward()), Matrix3::identity());
    }

    #[test]
    fn tables_match_single_terms() {
        let t = poly_table(Family::TribonacciLucas, -7, 9);
        assert_eq!(t.start(), -7);
        assert_eq!(t.end(), 9);
        for n in -7..=9 {
            assert_eq!(t[n], tribonacci_lucas_poly(n), "n={n}");
        }
        assert!(t.get(10).is_none());
        let only_negative = number_table(Family::Tribonacci, -5, -3);
        assert_eq!(only_negative.values().len(), 3);
        for (n, v) in only_negative.iter() {
            assert_eq!(*v, tribonacci_number(n));
        }
        assert!(number_table(Family::Tribonacci, 3, 2).values().is_empty());
    }
}
