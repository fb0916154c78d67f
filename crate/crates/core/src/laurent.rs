//! Finite Laurent polynomials in `x` over the rationals.
//!
//! `g = (x + 1/x)/2` and `h = (x - 1/x)/2` live here together with their
//! products `G(s, j) = g^(s-j) h^j` and the Euler operator `x d/dx`,
//! which acts diagonally on monomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Mismatch, Result};
use crate::numbers::{binomial, frac, pow_int, rat, Integer, Rational};
use crate::series;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::one())
    }

    pub fn monomial(exp: i64, c: Rational) -> Self {
        Self::from_terms([(exp, c)])
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(e, v)| (*e, v * c)))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `(x d/dx)^r`: the coefficient at `x^j` picks up a factor `j^r`.
    pub fn euler_op(&self, r: u32) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .map(|(&e, c)| (e, c * Rational::from_integer(pow_int(e, r)))),
        )
    }

    /// First exponent where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<i64> {
        self.coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .filter(|&e| self.coeff(e) != other.coeff(e))
            .min()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(e, c)| match e {
                0 => format!("{c}"),
                e => format!("({c})x^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// `g(x) = (x + x⁻¹)/2`
pub fn g_poly() -> LaurentPoly {
    LaurentPoly::from_terms([(-1, frac(1, 2)), (1, frac(1, 2))])
}

/// `h(x) = (x − x⁻¹)/2`
pub fn h_poly() -> LaurentPoly {
    LaurentPoly::from_terms([(-1, frac(-1, 2)), (1, frac(1, 2))])
}

/// `G(s, j) = g^(s-j) h^j`, restricted to `0 ≤ j ≤ s` where it is a
/// Laurent polynomial.
pub fn big_g(s: u32, j: i64) -> Result<LaurentPoly> {
    if j < 0 || j > i64::from(s) {
        return Err(Error::Domain(format!(
            "G({s}, {j}) has poles; need 0 <= j <= s"
        )));
    }
    Ok(gh_product(s - j as u32, j as u32))
}

fn gh_product(g_exp: u32, h_exp: u32) -> LaurentPoly {
    &g_poly().pow(g_exp) * &h_poly().pow(h_exp)
}

/// Checks `[r] G(s,0) = Σ_j A(s,r,j) G(s,j)` exactly.
///
/// For `r > s` the right side contains negative powers of `g`; both sides
/// are then multiplied by `g^(r-s)`, which keeps every term polynomial,
/// and the hyperbolic form of the same identity is also checked on power
/// series as an independent route.
pub fn verify_g_expansion(s: u32, r: u32, a_row: &[Integer]) -> Result<()> {
    if a_row.len() != r as usize + 1 {
        return Err(Error::Domain(format!(
            "row r={r} needs {} entries, got {}",
            r + 1,
            a_row.len()
        )));
    }
    let lift = r.saturating_sub(s);
    let lhs = &g_poly().pow(lift) * &big_g(s, 0)?.euler_op(r);
    let mut rhs = LaurentPoly::zero();
    for (j, a) in a_row.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = gh_product(s + lift - j as u32, j as u32);
        rhs = &rhs + &term.scale(&Rational::from_integer(a.clone()));
    }
    if let Some(e) = lhs.first_difference(&rhs) {
        return Err(Mismatch::new(
            "euler expansion of G(s,0)",
            format!("s={s} r={r} exponent {e}"),
            lhs.coeff(e),
            rhs.coeff(e),
        )
        .into());
    }
    if r > s {
        series::verify_hyperbolic_expansion(s, r, a_row, 2 * r as usize + 2)?;
    }
    Ok(())
}

/// Laurent coefficients of `G(s, 0) = g^s`, keyed by event `v = 2k − s`.
pub fn centered_binomial_coeffs(s: u32) -> BTreeMap<i64, Rational> {
    g_poly()
        .pow(s)
        .terms()
        .map(|(e, c)| (e, c.clone()))
        .collect()
}

/// `2^(−s) C(s, (v+s)/2)` for an event `v`, zero off the lattice `2k − s`.
pub fn centered_binomial_weight(s: u32, v: i64) -> Rational {
    let shifted = v + i64::from(s);
    if shifted < 0 || shifted % 2 != 0 || shifted / 2 > i64::from(s) {
        return Rational::zero();
    }
    Rational::new(binomial(s, (shifted / 2) as u32), pow_int(2, s))
}

/// `μ(s, r) = Σ_v b(s, v) v^r`, summed directly over the events.
pub fn moment_bruteforce(s: u32, r: u32) -> Rational {
    (0..=i64::from(s))
        .map(|k| {
            let v = 2 * k - i64::from(s);
            centered_binomial_weight(s, v) * Rational::from_integer(pow_int(v, r))
        })
        .fold(rat(0), |acc, t| acc + t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::int;

    fn lp(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, n, d)| (e, frac(n, d))))
    }

    #[test]
    fn g_and_h() {
        assert_eq!(g_poly(), lp(&[(-1, 1, 2), (1, 1, 2)]));
        assert_eq!(h_poly(), lp(&[(-1, -1, 2), (1, 1, 2)]));
        assert_eq!(g_poly() + h_poly(), lp(&[(1, 1, 1)]));
    }

    #[test]
    fn big_g_examples() {
        assert_eq!(big_g(2, 0).unwrap(), lp(&[(-2, 1, 4), (0, 1, 2), (2, 1, 4)]));
        assert_eq!(big_g(1, 1).unwrap(), h_poly());
        assert_eq!(big_g(0, 0).unwrap(), LaurentPoly::one());
        assert!(big_g(2, 3).is_err());
        assert!(big_g(2, -1).is_err());
    }

    #[test]
    fn euler_op_examples() {
        let p = lp(&[(1, 1, 1), (-1, 1, 1)]);
        assert_eq!(p.euler_op(1), lp(&[(1, 1, 1), (-1, -1, 1)]));
        assert_eq!(big_g(1, 0).unwrap().euler_op(1), h_poly());
        assert_eq!(h_poly().euler_op(1), g_poly());
        assert_eq!(p.euler_op(0), p);
        // 0^0 = 1 keeps the constant term under r = 0.
        assert_eq!(LaurentPoly::one().euler_op(0), LaurentPoly::one());
        assert!(LaurentPoly::one().euler_op(1).is_zero());
    }

    #[test]
    fn g_expansion_examples() {
        assert!(verify_g_expansion(2, 2, &[int(2), int(0), int(2)]).is_ok());
        assert!(verify_g_expansion(1, 1, &[int(0), int(1)]).is_ok());
        assert!(verify_g_expansion(0, 0, &[int(1)]).is_ok());
    }

    #[test]
    fn g_expansion_reports_mismatch() {
        let err = verify_g_expansion(2, 2, &[int(2), int(0), int(3)]).unwrap_err();
        match err {
            Error::Mismatch(m) => assert!(m.at.contains("exponent -2"), "{m}"),
            other => panic!("unexpected {other}"),
        }
        assert!(matches!(
            verify_g_expansion(2, 2, &[int(2)]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn g_expansion_beyond_size() {
        // s = 1, r = 2: A row is [1, 0, 0]; s = 1, r = 3: [0, 1, 0, 0].
        assert!(verify_g_expansion(1, 2, &[int(1), int(0), int(0)]).is_ok());
        assert!(verify_g_expansion(1, 3, &[int(0), int(1), int(0), int(0)]).is_ok());
        assert!(verify_g_expansion(1, 3, &[int(0), int(1), int(0), int(1)]).is_err());
    }

    #[test]
    fn centered_binomial_examples() {
        let c2 = centered_binomial_coeffs(2);
        assert_eq!(c2, BTreeMap::from([(-2, frac(1, 4)), (0, frac(1, 2)), (2, frac(1, 4))]));
        assert_eq!(centered_binomial_coeffs(0), BTreeMap::from([(0, frac(1, 1))]));
        let c4 = centered_binomial_coeffs(4);
        let expected: BTreeMap<i64, Rational> = [(-4, 1), (-2, 4), (0, 6), (2, 4), (4, 1)]
            .into_iter()
            .map(|(v, n)| (v, frac(n, 16)))
            .collect();
        assert_eq!(c4, expected);
    }

    #[test]
    fn laurent_coefficients_match_binomial_weights() {
        for s in 0..=16u32 {
            let coeffs = centered_binomial_coeffs(s);
            let total: Rational = coeffs.values().cloned().fold(rat(0), |a, b| a + b);
            assert_eq!(total, rat(1));
            for v in -(s as i64) - 1..=s as i64 + 1 {
                let c = coeffs.get(&v).cloned().unwrap_or_else(Rational::zero);
                assert_eq!(c, centered_binomial_weight(s, v), "s={s} v={v}");
                assert_eq!(c, centered_binomial_weight(s, -v));
            }
        }
    }

    #[test]
    fn moment_examples() {
        assert_eq!(moment_bruteforce(2, 2), rat(2));
        assert_eq!(moment_bruteforce(4, 4), rat(40));
        assert_eq!(moment_bruteforce(5, 1), rat(0));
        assert_eq!(moment_bruteforce(0, 0), rat(1));
    }

    #[test]
    fn odd_moments_vanish() {
        for s in 0..=10 {
            for r in (1..=11).step_by(2) {
                assert!(moment_bruteforce(s, r).is_zero(), "s={s} r={r}");
            }
        }
    }

    #[test]
    fn g1_identity() {
        for s in 2..=8u32 {
            for j in 1..s as i64 {
                let lhs = big_g(s, j).unwrap().euler_op(1);
                let rhs = &big_g(s, j - 1).unwrap().scale(&rat(j))
                    + &big_g(s, j + 1).unwrap().scale(&rat(i64::from(s) - j));
                assert_eq!(lhs, rhs, "s={s} j={j}");
            }
        }
    }
}
