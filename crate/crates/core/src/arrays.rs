//! The triangular array `A(s, r, j)` and its condensed form
//! `B(s, r, n) = A(s, r, r − 2n)`.
//!
//! Entries are integers for a fixed size `s`, or polynomials in the
//! falling-factorial basis when `s` is left symbolic. Both arrays are
//! produced by their own recurrences; `condense`/`expand` convert between
//! them so the two routes can be compared.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::Mismatch;
use crate::ffpoly::FFPoly;
use crate::numbers::{pow_int, Integer};

/// Entry type of a triangle: an exact integer or a symbolic polynomial in `s`.
pub trait Entry: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, c: i64) -> Self;
}

impl Entry for Integer {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, c: i64) -> Self {
        self * c
    }
}

impl Entry for FFPoly {
    fn zero() -> Self {
        FFPoly::zero()
    }
    fn one() -> Self {
        FFPoly::one()
    }
    fn is_zero(&self) -> bool {
        FFPoly::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }
    fn times(&self, c: i64) -> Self {
        self.scale(&Integer::from(c))
    }
}

/// How the size parameter `s` enters the recurrences.
pub trait Size {
    type Value: Entry;
    /// `(s − c) · v`
    fn s_minus(&self, v: &Self::Value, c: i64) -> Self::Value;
}

/// A concrete size `s ≥ 0`.
#[derive(Debug, Clone, Copy)]
pub struct Fixed(pub i64);

/// `s` kept as a free symbol.
#[derive(Debug, Clone, Copy)]
pub struct Symbolic;

impl Size for Fixed {
    type Value = Integer;
    fn s_minus(&self, v: &Integer, c: i64) -> Integer {
        v * (self.0 - c)
    }
}

impl Size for Symbolic {
    type Value = FFPoly;
    fn s_minus(&self, v: &FFPoly, c: i64) -> FFPoly {
        v.mul_s_minus(c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    /// Rows `r`, entries `j = 0..=r`.
    Full,
    /// Rows `r`, entries `n = 0..=⌊r/2⌋`.
    Condensed,
}

impl Form {
    pub fn row_len(self, r: u32) -> usize {
        match self {
            Form::Full => r as usize + 1,
            Form::Condensed => r as usize / 2 + 1,
        }
    }
}

/// Dense triangle; zero entries are kept.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangle<T> {
    form: Form,
    rows: Vec<Vec<T>>,
}

impl<T: Entry> Triangle<T> {
    /// Wraps rows after checking their lengths against `form`.
    pub fn from_rows(form: Form, rows: Vec<Vec<T>>) -> Option<Self> {
        if rows.is_empty() {
            return None;
        }
        let shaped = rows
            .iter()
            .enumerate()
            .all(|(r, row)| row.len() == form.row_len(r as u32));
        shaped.then_some(Self { form, rows })
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn r_max(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row(&self, r: u32) -> &[T] {
        &self.rows[r as usize]
    }

    /// Entry at `(r, index)`; zero outside the support.
    pub fn get(&self, r: i64, index: i64) -> T {
        if r < 0 || index < 0 || r > i64::from(self.r_max()) {
            return T::zero();
        }
        self.rows[r as usize]
            .get(index as usize)
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn row_sum(&self, r: u32) -> T {
        self.row(r).iter().fold(T::zero(), |acc, v| acc.plus(v))
    }

    /// `B(r, n) = A(r, r − 2n)`.
    pub fn condense(&self) -> Self {
        assert_eq!(self.form, Form::Full, "condense expects the full array");
        let rows = (0..=self.r_max())
            .map(|r| {
                (0..Form::Condensed.row_len(r))
                    .map(|n| self.get(i64::from(r), i64::from(r) - 2 * n as i64))
                    .collect()
            })
            .collect();
        Self {
            form: Form::Condensed,
            rows,
        }
    }

    /// Inverse of [`condense`](Self::condense); the parity-zero entries are
    /// filled back in.
    pub fn expand(&self) -> Self {
        assert_eq!(self.form, Form::Condensed, "expand expects the condensed array");
        let rows = (0..=self.r_max())
            .map(|r| {
                (0..=i64::from(r))
                    .map(|j| {
                        let gap = i64::from(r) - j;
                        if gap % 2 == 0 {
                            self.get(i64::from(r), gap / 2)
                        } else {
                            T::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self {
            form: Form::Full,
            rows,
        }
    }

    /// `A(r, j) = 0` whenever `r − j` is odd.
    pub fn check_parity(&self) -> Result<(), Mismatch> {
        assert_eq!(self.form, Form::Full, "parity applies to the full array");
        for (r, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if (r - j) % 2 == 1 && !v.is_zero() {
                    return Err(Mismatch::new("parity of A", format!("r={r} j={j}"), v, 0));
                }
            }
        }
        Ok(())
    }
}

impl Triangle<Integer> {
    /// Every row sums to `s^r` (with `0^0 = 1`).
    pub fn check_row_sums(&self, s: i64) -> Result<(), Mismatch> {
        for r in 0..=self.r_max() {
            let sum = self.row_sum(r);
            let expected = pow_int(s, r);
            if sum != expected {
                return Err(Mismatch::new("row sum", format!("s={s} r={r}"), sum, expected));
            }
        }
        Ok(())
    }
}

impl Triangle<FFPoly> {
    /// Every row sums to the falling-factorial expansion of `s^r`.
    pub fn check_row_sums(&self) -> Result<(), Mismatch> {
        for r in 0..=self.r_max() {
            let sum = self.row_sum(r);
            let expected = FFPoly::power(r);
            if sum != expected {
                return Err(Mismatch::new("symbolic row sum", format!("r={r}"), sum, expected));
            }
        }
        Ok(())
    }

    /// Entrywise evaluation at a concrete size.
    pub fn eval(&self, s: i64) -> Triangle<Integer> {
        Triangle {
            form: self.form,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|p| p.eval(s)).collect())
                .collect(),
        }
    }
}

/// `A(r+1, j) = A(r, j−1)(s − (j−1)) + A(r, j+1)(j+1)`, seeded by `A(0,0) = 1`.
pub fn build_a<S: Size>(size: &S, r_max: u32) -> Triangle<S::Value> {
    let mut rows: Vec<Vec<S::Value>> = vec![vec![S::Value::one()]];
    for r in 0..r_max as usize {
        let prev = &rows[r];
        let at = |j: i64| {
            usize::try_from(j)
                .ok()
                .and_then(|j| prev.get(j))
                .cloned()
                .unwrap_or_else(S::Value::zero)
        };
        let next = (0..=r as i64 + 1)
            .map(|j| {
                let up = size.s_minus(&at(j - 1), j - 1);
                let down = at(j + 1).times(j + 1);
                up.plus(&down)
            })
            .collect();
        rows.push(next);
    }
    Triangle {
        form: Form::Full,
        rows,
    }
}

/// `B(r+1, n) = B(r, n)(s − (r − 2n)) + B(r, n−1)(r − 2(n−1))`, seeded by
/// `B(0,0) = 1`.
pub fn build_b<S: Size>(size: &S, r_max: u32) -> Triangle<S::Value> {
    let mut rows: Vec<Vec<S::Value>> = vec![vec![S::Value::one()]];
    for r in 0..r_max as usize {
        let prev = &rows[r];
        let at = |n: i64| {
            usize::try_from(n)
                .ok()
                .and_then(|n| prev.get(n))
                .cloned()
                .unwrap_or_else(S::Value::zero)
        };
        let r = r as i64;
        let next = (0..=(r + 1) / 2)
            .map(|n| {
                let same = size.s_minus(&at(n), r - 2 * n);
                let shifted = at(n - 1).times(r - 2 * (n - 1));
                same.plus(&shifted)
            })
            .collect();
        rows.push(next);
    }
    Triangle {
        form: Form::Condensed,
        rows,
    }
}

pub fn build_a_numeric(s: i64, r_max: u32) -> Triangle<Integer> {
    build_a(&Fixed(s), r_max)
}

pub fn build_a_symbolic(r_max: u32) -> Triangle<FFPoly> {
    build_a(&Symbolic, r_max)
}

pub fn build_b_numeric(s: i64, r_max: u32) -> Triangle<Integer> {
    build_b(&Fixed(s), r_max)
}

pub fn build_b_symbolic(r_max: u32) -> Triangle<FFPoly> {
    build_b(&Symbolic, r_max)
}

/// `A(s, r, 0)`, the even moments of the centered binomial distribution.
pub fn a0_column(s: i64, r: u32) -> Integer {
    build_a_numeric(s, r).get(i64::from(r), 0)
}

pub fn a0_column_symbolic(r: u32) -> FFPoly {
    build_a_symbolic(r).get(i64::from(r), 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::int;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn ff(terms: &[(u32, i64)]) -> FFPoly {
        FFPoly::from_coeffs(terms.iter().map(|&(k, c)| (k, int(c))))
    }

    #[test]
    fn numeric_examples() {
        assert_eq!(build_a_numeric(2, 2).row(2), ints(&[2, 0, 2]).as_slice());
        assert_eq!(build_a_numeric(3, 3).get(3, 1), int(21));
        let zero_size = build_a_numeric(0, 4);
        assert_eq!(zero_size.row(0), ints(&[1]).as_slice());
        for r in 1..=4 {
            assert!(zero_size.row(r).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn symbolic_examples() {
        let a = build_a_symbolic(6);
        assert_eq!(a.get(4, 0), ff(&[(2, 3), (1, 1)]));
        assert_eq!(a.get(6, 2), ff(&[(4, 45), (3, 75), (2, 16)]));
        assert_eq!(a.get(1, 1), FFPoly::falling(1));
        assert!(a.get(6, 7).is_zero());
        assert!(a.get(-1, 0).is_zero());
    }

    #[test]
    fn b_examples() {
        let b = build_b_numeric(2, 2);
        assert_eq!(b.row(2), ints(&[2, 2]).as_slice());
        assert_eq!(build_b_numeric(7, 0).row(0), ints(&[1]).as_slice());
        assert_eq!(build_b_numeric(4, 4).get(4, 2), int(40));
        assert_eq!(build_b_symbolic(0).row(0), &[FFPoly::one()]);
    }

    #[test]
    fn b_recurrence_matches_condensed_a() {
        for s in 0..=8 {
            let a = build_a_numeric(s, 12);
            let b = build_b_numeric(s, 12);
            assert_eq!(a.condense(), b, "s={s}");
            assert_eq!(b.expand(), a, "s={s}");
        }
        assert_eq!(build_a_symbolic(12).condense(), build_b_symbolic(12));
    }

    #[test]
    fn row_sum_examples() {
        let a = build_a_numeric(3, 5);
        assert_eq!(a.row_sum(3), int(27));
        assert!(a.check_row_sums(3).is_ok());
        let zero = build_a_numeric(0, 3);
        assert_eq!((0..=3).map(|r| zero.row_sum(r)).collect::<Vec<_>>(), ints(&[1, 0, 0, 0]));
        assert!(zero.check_row_sums(0).is_ok());
        let sym = build_a_symbolic(2);
        assert_eq!(sym.row_sum(2), FFPoly::power(2));
        assert!(sym.check_row_sums().is_ok());
        assert!(build_b_symbolic(9).check_row_sums().is_ok());
    }

    #[test]
    fn row_sum_reports_first_bad_row() {
        let mut rows = build_a_numeric(2, 3).rows().to_vec();
        rows[2][1] = int(1);
        let bad = Triangle::from_rows(Form::Full, rows).unwrap();
        let err = bad.check_row_sums(2).unwrap_err();
        assert_eq!(err.at, "s=2 r=2");
        assert!(bad.check_parity().is_err());
    }

    #[test]
    fn from_rows_checks_shape() {
        assert!(Triangle::from_rows(Form::Full, vec![ints(&[1]), ints(&[0])]).is_none());
        assert!(Triangle::from_rows(Form::Condensed, vec![ints(&[1]), ints(&[0])]).is_some());
        assert!(Triangle::<Integer>::from_rows(Form::Full, vec![]).is_none());
    }

    #[test]
    fn symbolic_matches_numeric() {
        let sym = build_a_symbolic(12);
        for s in 0..=10 {
            assert_eq!(sym.eval(s), build_a_numeric(s, 12), "s={s}");
        }
    }

    #[test]
    fn parity_holds() {
        for s in 0..=6 {
            build_a_numeric(s, 12).check_parity().unwrap();
        }
        build_a_symbolic(12).check_parity().unwrap();
    }

    #[test]
    fn a0_examples() {
        assert_eq!(a0_column(5, 6), int(1205));
        assert_eq!(a0_column(3, 1), int(0));
        assert_eq!(a0_column(2, 4), int(8));
        assert_eq!(a0_column_symbolic(8), ff(&[(4, 105), (3, 210), (2, 63), (1, 1)]));
    }
}
