//! Generating polynomials built on the adjoint field.
//!
//! `F(n, λ)(z) = Σ_k φ̃(n, λ, k) z^k` is compared against its closed form
//! as a sum over partitions of `n` into `λ` parts of `Π_k f_k(z)^π(k) / π(k)!`
//! with `f_k(z) = (1 + z/(2k+1)) / (2k)!`. The bivariate sum over `λ` and
//! the trivariate sum over `n` are checked against their differential
//! equations, and the trivariate series is rebuilt as
//! `exp(y Σ_k f_k(z) x^k)` truncated in `x`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Mismatch;
use crate::numbers::{factorial, rat, Integer, Rational};
use crate::partitions::{enumerate, Partition};
use crate::phi::PhiAdjoint;

/// Dense polynomial in `z` without trailing zero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PolyZ {
    coeffs: Vec<Rational>,
}

impl PolyZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `z`
    pub fn var() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    /// First `z`-degree where the two polynomials differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&k| self.coeff(k) != other.coeff(k))
    }
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}*z"),
                k => format!("{c}*z^{k}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl Add for &PolyZ {
    type Output = PolyZ;
    fn add(self, rhs: &PolyZ) -> PolyZ {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolyZ::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Neg for &PolyZ {
    type Output = PolyZ;
    fn neg(self) -> PolyZ {
        PolyZ::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &PolyZ {
    type Output = PolyZ;
    fn sub(self, rhs: &PolyZ) -> PolyZ {
        self + &(-rhs)
    }
}

impl Mul for &PolyZ {
    type Output = PolyZ;
    fn mul(self, rhs: &PolyZ) -> PolyZ {
        if self.is_zero() || rhs.is_zero() {
            return PolyZ::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyZ::from_coeffs(out)
    }
}

/// Sparse polynomial in `N` variables; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly<const N: usize> {
    terms: BTreeMap<[u32; N], Rational>,
}

impl<const N: usize> Default for MultiPoly<N> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<const N: usize> MultiPoly<N> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial([0; N], Rational::one())
    }

    pub fn monomial(exps: [u32; N], c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    fn add_term(&mut self, exps: [u32; N], c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn coeff(&self, exps: [u32; N]) -> Rational {
        self.terms.get(&exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    /// Multiplies by the monomial with exponents `shift`.
    pub fn shift(&self, shift: [u32; N]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| {
                let mut moved = *e;
                for (m, s) in moved.iter_mut().zip(shift) {
                    *m += s;
                }
                (moved, v.clone())
            })
            .collect();
        Self { terms }
    }

    /// Formal partial derivative in variable `var`.
    pub fn partial(&self, var: usize) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut lowered = *e;
            lowered[var] -= 1;
            out.add_term(lowered, v * rat(i64::from(e[var])));
        }
        out
    }

    /// Drops every term whose degree in `var` exceeds `max_degree`.
    pub fn truncate(&self, var: usize, max_degree: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[var] <= max_degree)
                .map(|(e, v)| (*e, v.clone()))
                .collect(),
        }
    }

    /// Product truncated to degree `max_degree` in `var`.
    pub fn mul_truncated(&self, rhs: &Self, var: usize, max_degree: u32) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                if ea[var] + eb[var] > max_degree {
                    continue;
                }
                let mut e = *ea;
                for (m, b) in e.iter_mut().zip(eb) {
                    *m += b;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// First exponent tuple where the two polynomials differ.
    pub fn first_difference(&self, other: &Self) -> Option<[u32; N]> {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .filter(|e| self.coeff(*e) != other.coeff(*e))
            .min()
    }
}

impl<const N: usize> Add for &MultiPoly<N> {
    type Output = MultiPoly<N>;
    fn add(self, rhs: &MultiPoly<N>) -> MultiPoly<N> {
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(*e, v.clone());
        }
        out
    }
}

impl<const N: usize> Sub for &MultiPoly<N> {
    type Output = MultiPoly<N>;
    fn sub(self, rhs: &MultiPoly<N>) -> MultiPoly<N> {
        self + &rhs.scale(&rat(-1))
    }
}

impl<const N: usize> Mul for &MultiPoly<N> {
    type Output = MultiPoly<N>;
    fn mul(self, rhs: &MultiPoly<N>) -> MultiPoly<N> {
        self.mul_truncated(rhs, 0, u32::MAX)
    }
}

/// Polynomial in `(y, z)`.
pub type BiPoly = MultiPoly<2>;

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

/// Trivariate series in `(x, y, z)`, exact through `x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriSeries {
    order: u32,
    poly: MultiPoly<3>,
}

impl TriSeries {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn poly(&self) -> &MultiPoly<3> {
        &self.poly
    }

    pub fn coeff(&self, n: u32, lam: u32, k: u32) -> Rational {
        assert!(n <= self.order, "x^{n} lies beyond the truncation order {}", self.order);
        self.poly.coeff([n, lam, k])
    }

    /// The coefficient of `x^n y^λ` as a polynomial in `z`.
    pub fn coeff_poly(&self, n: u32, lam: u32) -> PolyZ {
        assert!(n <= self.order, "x^{n} lies beyond the truncation order {}", self.order);
        let top = self
            .poly
            .terms()
            .filter(|(e, _)| e[X] == n && e[Y] == lam)
            .map(|(e, _)| e[Z] as usize)
            .max();
        match top {
            None => PolyZ::zero(),
            Some(top) => PolyZ::from_coeffs(
                (0..=top as u32).map(|k| self.poly.coeff([n, lam, k])).collect(),
            ),
        }
    }
}

fn lift_z<const N: usize>(p: &PolyZ, z_var: usize, base: [u32; N]) -> MultiPoly<N> {
    let mut out = MultiPoly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        let mut e = base;
        e[z_var] += k as u32;
        out.add_term(e, c.clone());
    }
    out
}

/// `f_k(z) = 1/(2k)! + z/(2k+1)!`
pub fn f_component(k: u32) -> PolyZ {
    PolyZ::from_coeffs(vec![
        Rational::new(Integer::one(), factorial(2 * k)),
        Rational::new(Integer::one(), factorial(2 * k + 1)),
    ])
}

/// `F(n, λ)(z) = Σ_k φ̃(n, λ, k) z^k`; zero unless `n ≥ λ ≥ 0`.
pub fn fnl_from_phi(n: i64, lam: i64, adj: &PhiAdjoint) -> PolyZ {
    if n < 0 || lam < 0 || lam > n {
        return PolyZ::zero();
    }
    PolyZ::from_coeffs((0..=lam).map(|k| adj.get(n, lam, k)).collect())
}

/// `Π_k f_k(z)^π(k) / π(k)!` for one partition.
pub fn partition_term(p: &Partition) -> PolyZ {
    p.iter().fold(PolyZ::one(), |acc, (k, m)| {
        let factor = f_component(k)
            .pow(m)
            .scale(&Rational::new(Integer::one(), factorial(m)));
        &acc * &factor
    })
}

/// Closed form of `F(n, λ)` as a sum over partitions of `n` into `λ` parts.
pub fn fnl_closed(n: u32, lam: u32) -> PolyZ {
    enumerate(n, lam)
        .iter()
        .map(partition_term)
        .fold(PolyZ::zero(), |acc, t| &acc + &t)
}

/// `φ(n, n−λ, 0) = Σ_π 1 / Π_k π(k)! ((2k)!)^π(k)`
pub fn phi_from_partitions(n: u32, lam: u32) -> Rational {
    enumerate(n, lam)
        .iter()
        .map(|p| {
            let den = p.iter().fold(Integer::one(), |acc, (k, m)| {
                acc * factorial(m) * num_traits::pow(factorial(2 * k), m as usize)
            });
            Rational::new(Integer::one(), den)
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// `(2n − λz) F(n,λ) + z(z+1) F'(n,λ) = F(n−1,λ−1) + F'(n−1,λ)`
pub fn verify_ode(n: i64, lam: i64, adj: &PhiAdjoint) -> Result<(), Mismatch> {
    let f = fnl_from_phi(n, lam, adj);
    let linear = PolyZ::from_coeffs(vec![rat(2 * n), rat(-lam)]);
    let z_z1 = PolyZ::from_coeffs(vec![rat(0), rat(1), rat(1)]);
    let lhs = &(&linear * &f) + &(&z_z1 * &f.derivative());
    let rhs = &fnl_from_phi(n - 1, lam - 1, adj) + &fnl_from_phi(n - 1, lam, adj).derivative();
    if let Some(k) = lhs.first_difference(&rhs) {
        return Err(Mismatch::new(
            "F(n,lambda) differential equation",
            format!("n={n} lambda={lam} z^{k}"),
            lhs.coeff(k),
            rhs.coeff(k),
        ));
    }
    Ok(())
}

/// `F_n(y, z) = Σ_λ F(n, λ)(z) y^λ`
pub fn fn_bivariate(n: i64, adj: &PhiAdjoint) -> BiPoly {
    if n < 0 {
        return BiPoly::zero();
    }
    (0..=n).fold(BiPoly::zero(), |acc, lam| {
        &acc + &lift_z(&fnl_from_phi(n, lam, adj), 1, [lam as u32, 0])
    })
}

/// `2n F_n + z(z+1) ∂z F_n − zy ∂y F_n = y F_{n−1} + ∂z F_{n−1}`
pub fn verify_pde_n(n: i64, adj: &PhiAdjoint) -> Result<(), Mismatch> {
    const YV: usize = 0;
    const ZV: usize = 1;
    let f = fn_bivariate(n, adj);
    let prev = fn_bivariate(n - 1, adj);
    let dz = f.partial(ZV);
    let lhs = &(&f.scale(&rat(2 * n)) + &(&dz.shift([0, 2]) + &dz.shift([0, 1])))
        - &f.partial(YV).shift([1, 1]);
    let rhs = &prev.shift([1, 0]) + &prev.partial(ZV);
    if let Some(e) = lhs.first_difference(&rhs) {
        return Err(Mismatch::new(
            "F_n(y,z) differential equation",
            format!("n={n} y^{} z^{}", e[0], e[1]),
            lhs.coeff(e),
            rhs.coeff(e),
        ));
    }
    Ok(())
}

/// `u = y Σ_{k=1}^{order} f_k(z) x^k`
fn inner_sum(order: u32) -> MultiPoly<3> {
    (1..=order).fold(MultiPoly::zero(), |acc, k| {
        &acc + &lift_z(&f_component(k), Z, [k, 1, 0])
    })
}

/// `exp(y Σ_k f_k(z) x^k)` through `x^order`, as `Σ_{m ≤ order} u^m / m!`.
pub fn f_truncated(order: u32) -> TriSeries {
    let u = inner_sum(order);
    let mut term = MultiPoly::one();
    let mut total = MultiPoly::one();
    for m in 1..=order {
        term = term
            .mul_truncated(&u, X, order)
            .scale(&Rational::new(Integer::one(), Integer::from(m)));
        total = &total + &term;
    }
    TriSeries { order, poly: total }
}

/// The same series as a finite product over `k` of
/// `Σ_m (y f_k(z))^m x^(km) / m!`.
pub fn f_product_expansion(order: u32) -> TriSeries {
    let mut product = MultiPoly::one();
    for k in 1..=order {
        let base = lift_z(&f_component(k), Z, [k, 1, 0]);
        let mut power = MultiPoly::one();
        let mut row = MultiPoly::one();
        for m in 1..=order / k {
            power = power.mul_truncated(&base, X, order);
            row = &row + &power.scale(&Rational::new(Integer::one(), factorial(m)));
        }
        product = product.mul_truncated(&row, X, order);
    }
    TriSeries {
        order,
        poly: product,
    }
}

/// `2x ∂x F + z(z+1) ∂z F − zy ∂y F = yx F + x ∂z F` coefficientwise
/// through `x^order`.
pub fn verify_pde_full(series: &TriSeries) -> Result<(), Mismatch> {
    let order = series.order();
    let f = series.poly();
    let dz = f.partial(Z);
    let lhs = &(&f.partial(X).shift([1, 0, 0]).scale(&rat(2))
        + &(&dz.shift([0, 0, 2]) + &dz.shift([0, 0, 1])))
        - &f.partial(Y).shift([0, 1, 1]);
    let rhs = &f.shift([1, 1, 0]) + &dz.shift([1, 0, 0]);
    let (lhs, rhs) = (lhs.truncate(X, order), rhs.truncate(X, order));
    if let Some(e) = lhs.first_difference(&rhs) {
        return Err(Mismatch::new(
            "F(x,y,z) differential equation",
            format!("x^{} y^{} z^{}", e[0], e[1], e[2]),
            lhs.coeff(e),
            rhs.coeff(e),
        ));
    }
    Ok(())
}
