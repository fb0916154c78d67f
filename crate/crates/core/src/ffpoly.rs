//! Integer polynomials in the falling-factorial basis `(s)_k`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::numbers::{falling_factorial, Integer, StirlingTable};

/// `Σ c_k (s)_k` with integer coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FFPoly {
    coeffs: BTreeMap<u32, Integer>,
}

impl FFPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::falling(0)
    }

    /// The basis element `(s)_k`.
    pub fn falling(k: u32) -> Self {
        Self::term(k, Integer::one())
    }

    pub fn term(k: u32, c: Integer) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    pub fn from_coeffs<I: IntoIterator<Item = (u32, Integer)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, k: u32, c: Integer) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_insert_with(Integer::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: u32) -> Integer {
        self.coeffs.get(&k).cloned().unwrap_or_else(Integer::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Nonzero `(k, c_k)` pairs in ascending degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Integer)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &Integer) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// `s · p(s)`, using `s (s)_k = (s)_{k+1} + k (s)_k`.
    pub fn mul_by_s(&self) -> Self {
        let mut out = Self::zero();
        for (&k, c) in &self.coeffs {
            out.add_term(k + 1, c.clone());
            out.add_term(k, c * k);
        }
        out
    }

    /// `(s - c) · p(s)`.
    pub fn mul_s_minus(&self, c: i64) -> Self {
        self.mul_by_s() - self.scale(&Integer::from(c))
    }

    pub fn eval(&self, s: i64) -> Integer {
        self.coeffs
            .iter()
            .map(|(&k, c)| c * falling_factorial(s, k))
            .sum()
    }

    /// `s^r` expanded as `Σ_m S(r, m) (s)_m`.
    pub fn power(r: u32) -> Self {
        let table = StirlingTable::new(r);
        Self::from_coeffs((0..=r).map(|m| (m, table.get(r, m))))
    }

    /// Coefficients `c_lo, …, c_hi` over the occupied degree range, zeros
    /// included in between.
    pub fn dense_coeffs(&self) -> Vec<Integer> {
        match (self.coeffs.keys().next(), self.degree()) {
            (Some(&lo), Some(hi)) => (lo..=hi).map(|k| self.coeff(k)).collect(),
            _ => Vec::new(),
        }
    }

    /// Rendering in the style of printed tables: `3\,(s)_2 + s`.
    pub fn to_latex(&self) -> String {
        self.render(|k| match k {
            1 => "s".to_string(),
            k if k < 10 => format!("(s)_{k}"),
            k => format!("(s)_{{{k}}}"),
        }, "\\,")
    }

    fn render(&self, basis: impl Fn(u32) -> String, joiner: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&k, c)) in self.coeffs.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => out.push('-'),
                (0, _) => {}
                _ => {
                    out.push(' ');
                    out.push_str(sign);
                    out.push(' ');
                }
            }
            let mag = c.abs();
            if k == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&basis(k));
            } else {
                out.push_str(&format!("{mag}{joiner}{}", basis(k)));
            }
        }
        out
    }
}

impl fmt::Display for FFPoly {
    /// Plain text form: `3*(s)_3 + 7*(s)_2 + (s)_1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|k| format!("(s)_{k}"), "*"))
    }
}

impl FromStr for FFPoly {
    type Err = Error;

    /// Accepts both the plain and the LaTeX renderings.
    fn from_str(text: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not a falling-factorial polynomial: {text:?}"));
        let compact: String = text
            .replace("\\,", "*")
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut p = FFPoly::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            rest = tail;

            let digits = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
            let (num, basis) = term.split_at(digits);
            let mut coeff = if num.is_empty() {
                Integer::one()
            } else {
                num.parse::<Integer>().map_err(|_| bad())?
            };
            if negative {
                coeff = -coeff;
            }
            let basis = basis.strip_prefix('*').unwrap_or(basis);
            let degree = match basis {
                "" if !num.is_empty() => 0,
                "s" => 1,
                b => {
                    let k = b.strip_prefix("(s)_").ok_or_else(bad)?;
                    let k = k.trim_start_matches('{').trim_end_matches('}');
                    k.parse::<u32>().map_err(|_| bad())?
                }
            };
            p.add_term(degree, coeff);
        }
        Ok(p)
    }
}

impl Add for FFPoly {
    type Output = FFPoly;
    fn add(mut self, rhs: FFPoly) -> FFPoly {
        self += rhs;
        self
    }
}

impl AddAssign for FFPoly {
    fn add_assign(&mut self, rhs: FFPoly) {
        for (k, c) in rhs.coeffs {
            self.add_term(k, c);
        }
    }
}

impl Neg for FFPoly {
    type Output = FFPoly;
    fn neg(self) -> FFPoly {
        Self {
            coeffs: self.coeffs.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub for FFPoly {
    type Output = FFPoly;
    fn sub(self, rhs: FFPoly) -> FFPoly {
        self + (-rhs)
    }
}

impl std::iter::Sum for FFPoly {
    fn sum<I: Iterator<Item = FFPoly>>(iter: I) -> FFPoly {
        iter.fold(FFPoly::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{int, pow_int};

    fn ff(terms: &[(u32, i64)]) -> FFPoly {
        FFPoly::from_coeffs(terms.iter().map(|&(k, c)| (k, int(c))))
    }

    #[test]
    fn mul_by_s_examples() {
        assert_eq!(FFPoly::falling(1).mul_by_s(), ff(&[(2, 1), (1, 1)]));
        assert_eq!(FFPoly::one().mul_by_s(), FFPoly::falling(1));
        assert_eq!(
            ff(&[(2, 3), (1, 1)]).mul_by_s(),
            ff(&[(3, 3), (2, 7), (1, 1)])
        );
    }

    #[test]
    fn mul_by_s_matches_pointwise_product() {
        // 3(s)_3 + 7(s)_2 + s against s·(3(s)_2 + s), value by value.
        let p = ff(&[(2, 3), (1, 1)]);
        let q = p.mul_by_s();
        for s in 0..=6 {
            assert_eq!(q.eval(s), p.eval(s) * s);
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(ff(&[(2, 3), (1, 1)]).eval(2), int(8));
        assert_eq!(FFPoly::falling(4).eval(3), int(0));
        assert_eq!(FFPoly::one().eval(0), int(1));
    }

    #[test]
    fn power_examples() {
        assert_eq!(FFPoly::power(0), FFPoly::one());
        assert_eq!(FFPoly::power(2), ff(&[(2, 1), (1, 1)]));
        assert_eq!(FFPoly::power(3), ff(&[(3, 1), (2, 3), (1, 1)]));
        for r in 0..=12 {
            let p = FFPoly::power(r);
            for s in 0..=12 {
                assert_eq!(p.eval(s), pow_int(s, r), "s={s} r={r}");
            }
        }
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let p = ff(&[(2, 3), (1, 1)]) - ff(&[(2, 3)]);
        assert_eq!(p, FFPoly::falling(1));
        assert_eq!(p.terms().count(), 1);
        assert!((p.clone() - p).is_zero());
    }

    #[test]
    fn rendering() {
        let p = ff(&[(4, 105), (3, 210), (2, 63), (1, 1)]);
        assert_eq!(p.to_string(), "105*(s)_4 + 210*(s)_3 + 63*(s)_2 + (s)_1");
        assert_eq!(p.to_latex(), "105\\,(s)_4 + 210\\,(s)_3 + 63\\,(s)_2 + s");
        assert_eq!(ff(&[(0, -2), (1, 1)]).to_string(), "(s)_1 - 2");
        assert_eq!(FFPoly::zero().to_string(), "0");
        assert_eq!(p.dense_coeffs(), vec![int(1), int(63), int(210), int(105)]);
    }

    #[test]
    fn parse_both_renderings() {
        let p = ff(&[(12, -5), (3, 15), (1, 1), (0, 7)]);
        assert_eq!(p.to_string().parse::<FFPoly>().unwrap(), p);
        assert_eq!(p.to_latex().parse::<FFPoly>().unwrap(), p);
        assert_eq!("0".parse::<FFPoly>().unwrap(), FFPoly::zero());
        assert!("3*(t)_2".parse::<FFPoly>().is_err());
        assert!("".parse::<FFPoly>().is_err());
    }
}
