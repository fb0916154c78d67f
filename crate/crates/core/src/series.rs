//! Truncated formal power series in `t` with rational coefficients.

use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::error::{Error, Mismatch, Result};
use crate::numbers::{binomial, factorial, pow_int, rat, Integer, Rational};

/// Coefficients of `t^0 ..= t^order`; everything above is discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut p = Self::zero(order);
        p.coeffs[0] = Rational::one();
        p
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `e^(a t)`
    pub fn exp_linear(a: i64, order: usize) -> Self {
        let coeffs = (0..=order as u32)
            .map(|m| Rational::new(pow_int(a, m), factorial(m)))
            .collect();
        Self { coeffs }
    }

    pub fn cosh(order: usize) -> Self {
        let coeffs = (0..=order as u32)
            .map(|m| {
                if m % 2 == 0 {
                    Rational::new(Integer::one(), factorial(m))
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Self { coeffs }
    }

    pub fn sinh(order: usize) -> Self {
        let coeffs = (0..=order as u32)
            .map(|m| {
                if m % 2 == 1 {
                    Rational::new(Integer::one(), factorial(m))
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Self { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(self.order()), |acc, _| &acc * self)
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Domain("series with zero constant term has no inverse".into()));
        }
        let mut inv = vec![c0.recip()];
        for n in 1..=self.order() {
            let acc: Rational = (1..=n)
                .map(|i| &self.coeffs[i] * &inv[n - i])
                .fold(Rational::zero(), |a, b| a + b);
            inv.push(-acc / c0);
        }
        Ok(Self { coeffs: inv })
    }

    /// Formal `d/dt`; the order drops by one.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c * rat(i as i64 + 1))
            .collect();
        Self { coeffs }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().take(order + 1).cloned().collect())
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect();
        PowerSeries { coeffs }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = PowerSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

/// `cosh(t)^s` through the finite exponential sum
/// `Σ_k 2^(−s) C(s,k) e^((2k−s) t)`.
pub fn cosh_pow_series(s: u32, order: usize) -> PowerSeries {
    let scale = Rational::new(Integer::one(), pow_int(2, s));
    (0..=s).fold(PowerSeries::zero(order), |acc, k| {
        let weight = Rational::from_integer(binomial(s, k)) * &scale;
        let rate = 2 * i64::from(k) - i64::from(s);
        &acc + &PowerSeries::exp_linear(rate, order).scale(&weight)
    })
}

/// `cosh(t)^s` by repeated multiplication of the cosh series.
pub fn cosh_pow_series_by_powering(s: u32, order: usize) -> PowerSeries {
    PowerSeries::cosh(order).pow(s)
}

/// `[d^r/dt^r cosh(t)^s]` at `t = 0`.
pub fn cosh_pow_derivative(s: u32, r: u32) -> Rational {
    cosh_pow_series(s, r as usize).coeff(r as usize) * Rational::from_integer(factorial(r))
}

/// Checks `(cosh^s)^(r) = Σ_j A(s,r,j) cosh^(s−j) sinh^j` on power series
/// through `t^order`. Negative powers of cosh come from the series inverse.
pub fn verify_hyperbolic_expansion(s: u32, r: u32, a_row: &[Integer], order: usize) -> Result<()> {
    let wide = order + r as usize;
    let mut lhs = cosh_pow_series(s, wide);
    for _ in 0..r {
        lhs = lhs.derivative();
    }
    let lhs = lhs.truncate(order);

    let cosh = PowerSeries::cosh(order);
    let sech = cosh.inverse()?;
    let sinh = PowerSeries::sinh(order);
    let mut rhs = PowerSeries::zero(order);
    for (j, a) in a_row.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let shift = i64::from(s) - j as i64;
        let c_part = if shift >= 0 {
            cosh.pow(shift as u32)
        } else {
            sech.pow((-shift) as u32)
        };
        let term = &c_part * &sinh.pow(j as u32);
        rhs = &rhs + &term.scale(&Rational::from_integer(a.clone()));
    }
    if let Some(k) = (0..=order).find(|&k| lhs.coeff(k) != rhs.coeff(k)) {
        return Err(Mismatch::new(
            "hyperbolic expansion of cosh^s",
            format!("s={s} r={r} t^{k}"),
            lhs.coeff(k),
            rhs.coeff(k),
        )
        .into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{frac, int};

    #[test]
    fn cosh_pow_derivative_examples() {
        assert_eq!(cosh_pow_derivative(2, 2), rat(2));
        assert_eq!(cosh_pow_derivative(5, 6), rat(1205));
        assert_eq!(cosh_pow_derivative(3, 0), rat(1));
        assert_eq!(cosh_pow_derivative(0, 0), rat(1));
        assert_eq!(cosh_pow_derivative(0, 3), rat(0));
    }

    #[test]
    fn both_cosh_power_routes_agree() {
        for s in 0..=8 {
            assert_eq!(cosh_pow_series(s, 13), cosh_pow_series_by_powering(s, 13), "s={s}");
        }
    }

    #[test]
    fn odd_coefficients_vanish() {
        for s in 0..=8 {
            let p = cosh_pow_series(s, 13);
            for k in (1..=13).step_by(2) {
                assert!(p.coeff(k).is_zero(), "s={s} k={k}");
            }
        }
    }

    #[test]
    fn inverse_and_identities() {
        let c = PowerSeries::cosh(10);
        let prod = &c * &c.inverse().unwrap();
        assert_eq!(prod, PowerSeries::one(10));
        // cosh² − sinh² = 1
        let s = PowerSeries::sinh(10);
        let diff = &(&c * &c) + &(&s * &s).scale(&rat(-1));
        assert_eq!(diff, PowerSeries::one(10));
        assert_eq!(c.derivative(), s.truncate(9));
        assert!(PowerSeries::sinh(4).inverse().is_err());
    }

    #[test]
    fn sech_coefficients() {
        // sech t = 1 − t²/2 + 5t⁴/24 − …
        let sech = PowerSeries::cosh(4).inverse().unwrap();
        assert_eq!(sech.coeff(2), frac(-1, 2));
        assert_eq!(sech.coeff(4), frac(5, 24));
    }

    #[test]
    fn hyperbolic_expansion_small_rows() {
        // s=0: (cosh^0)'' = 0 while row r=2 of A at s=0 is all zero.
        assert!(verify_hyperbolic_expansion(0, 2, &[int(0), int(0), int(0)], 8).is_ok());
        // s=2, r=2: 2 cosh² + 2 sinh² = (cosh²)''
        assert!(verify_hyperbolic_expansion(2, 2, &[int(2), int(0), int(2)], 8).is_ok());
        assert!(verify_hyperbolic_expansion(2, 2, &[int(2), int(1), int(2)], 8).is_err());
    }
}
