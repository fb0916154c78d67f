//! The three-dimensional triangular field `φ(n, j, k)`, supported on
//! `0 ≤ k ≤ j ≤ n`, and its adjoint `φ̃(n, λ, k) = φ(n, n − λ + k, k)`.
//!
//! For fixed `n` each layer is a lower-triangular matrix with row index
//! `j` and column index `k`. The adjoint turns diagonals of a layer into
//! rows and is its own inverse.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Mismatch, Result};
use crate::laurent::moment_bruteforce;
use crate::numbers::{factorial, falling_factorial, pow_int, rat, Integer, Rational, StirlingTable};
use crate::series::cosh_pow_derivative;

/// Layers `n = 0..=n_max` of lower-triangular rational matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularLayers {
    layers: Vec<Vec<Vec<Rational>>>,
}

impl TriangularLayers {
    pub fn from_layers(layers: Vec<Vec<Vec<Rational>>>) -> Option<Self> {
        let shaped = !layers.is_empty()
            && layers.iter().enumerate().all(|(n, layer)| {
                layer.len() == n + 1 && layer.iter().enumerate().all(|(j, row)| row.len() == j + 1)
            });
        shaped.then_some(Self { layers })
    }

    pub fn n_max(&self) -> u32 {
        (self.layers.len() - 1) as u32
    }

    pub fn layers(&self) -> &[Vec<Vec<Rational>>] {
        &self.layers
    }

    /// Entry `(n, row, k)`; zero outside `0 ≤ k ≤ row ≤ n`.
    ///
    /// Panics if `n` lies beyond the built layers.
    pub fn get(&self, n: i64, row: i64, k: i64) -> Rational {
        if n < 0 || k < 0 || k > row || row > n {
            return Rational::zero();
        }
        assert!(
            n <= i64::from(self.n_max()),
            "layer {n} requested but field built to {}",
            self.n_max()
        );
        self.layers[n as usize][row as usize][k as usize].clone()
    }

    /// Reindexes `(n, λ, k) ↦ (n, n − λ + k, k)`.
    fn reindexed(&self) -> Self {
        let layers = (0..=i64::from(self.n_max()))
            .map(|n| {
                (0..=n)
                    .map(|lam| (0..=lam).map(|k| self.get(n, n - lam + k, k)).collect())
                    .collect()
            })
            .collect();
        Self { layers }
    }
}

/// `φ(n, j, k)`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiField(TriangularLayers);

/// `φ̃(n, λ, k)`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiAdjoint(TriangularLayers);

impl PhiField {
    pub fn from_layers(layers: TriangularLayers) -> Self {
        Self(layers)
    }

    pub fn layers(&self) -> &TriangularLayers {
        &self.0
    }

    pub fn n_max(&self) -> u32 {
        self.0.n_max()
    }

    pub fn get(&self, n: i64, j: i64, k: i64) -> Rational {
        self.0.get(n, j, k)
    }

    pub fn adjoint(&self) -> PhiAdjoint {
        PhiAdjoint(self.0.reindexed())
    }
}

impl PhiAdjoint {
    pub fn from_layers(layers: TriangularLayers) -> Self {
        Self(layers)
    }

    pub fn layers(&self) -> &TriangularLayers {
        &self.0
    }

    pub fn n_max(&self) -> u32 {
        self.0.n_max()
    }

    pub fn get(&self, n: i64, lam: i64, k: i64) -> Rational {
        self.0.get(n, lam, k)
    }

    /// Applying the same reindexing again recovers `φ`.
    pub fn adjoint(&self) -> PhiField {
        PhiField(self.0.reindexed())
    }
}

/// Builds `φ` layer by layer from
/// `(2n + k) φ(n,j,k) = (n − (j−1)) φ(n,j−1,k−1) + (k+1) φ(n−1,j,k+1) + φ(n−1,j,k)`
/// with `φ(0,0,0) = 1`.
pub fn build_phi(n_max: u32) -> PhiField {
    let mut field = TriangularLayers {
        layers: vec![vec![vec![Rational::one()]]],
    };
    for n in 1..=i64::from(n_max) {
        let mut layer: Vec<Vec<Rational>> = Vec::with_capacity(n as usize + 1);
        for j in 0..=n {
            let mut row = Vec::with_capacity(j as usize + 1);
            for k in 0..=j {
                // Same-layer term lives one row up, already in `layer`.
                let diag = if k >= 1 {
                    layer[(j - 1) as usize][(k - 1) as usize].clone()
                } else {
                    Rational::zero()
                };
                let rhs = diag * rat(n - (j - 1))
                    + field.get(n - 1, j, k + 1) * rat(k + 1)
                    + field.get(n - 1, j, k);
                let divisor = 2 * n + k;
                assert!(divisor > 0, "zero divisor at ({n},{j},{k})");
                row.push(rhs / rat(divisor));
            }
            layer.push(row);
        }
        field.layers.push(layer);
    }
    PhiField(field)
}

/// `φ(n,k,k) = 1 / (2^n (n−k)! k! 3^k)`
pub fn closed_form_diag(n: u32, k: u32) -> Result<Rational> {
    if k > n {
        return Err(Error::Domain(format!("diagonal formula needs k <= n, got n={n} k={k}")));
    }
    let den = pow_int(2, n) * factorial(n - k) * factorial(k) * pow_int(3, k);
    Ok(Rational::new(Integer::one(), den))
}

/// `(φ(n,n−1,0), φ(n,n,1)) = (1/(2n)!, 1/(2n+1)!)`
pub fn closed_form_sub(n: u32) -> Result<(Rational, Rational)> {
    if n < 1 {
        return Err(Error::Domain("sub-diagonal formula needs n >= 1".into()));
    }
    Ok((
        Rational::new(Integer::one(), factorial(2 * n)),
        Rational::new(Integer::one(), factorial(2 * n + 1)),
    ))
}

/// Compares the built field against every closed-form special solution:
/// the main diagonal, the two `1/(2n)!`, `1/(2n+1)!` entries, and
/// `φ(n,n,0) = δ(n,0)`.
pub fn check_closed_forms(f: &PhiField) -> std::result::Result<usize, Mismatch> {
    let mut checked = 0;
    for n in 0..=f.n_max() {
        let ni = i64::from(n);
        for k in 0..=n {
            let built = f.get(ni, i64::from(k), i64::from(k));
            let closed = closed_form_diag(n, k).expect("k <= n");
            if built != closed {
                return Err(Mismatch::new("phi diagonal", format!("n={n} k={k}"), built, closed));
            }
            checked += 1;
        }
        if n >= 1 {
            let (sub, corner) = closed_form_sub(n).expect("n >= 1");
            let built = f.get(ni, ni - 1, 0);
            if built != sub {
                return Err(Mismatch::new("phi (n,n-1,0)", format!("n={n}"), built, sub));
            }
            let built = f.get(ni, ni, 1);
            if built != corner {
                return Err(Mismatch::new("phi (n,n,1)", format!("n={n}"), built, corner));
            }
            checked += 2;
        }
        let delta = if n == 0 { rat(1) } else { rat(0) };
        let built = f.get(ni, ni, 0);
        if built != delta {
            return Err(Mismatch::new("phi (n,n,0)", format!("n={n}"), built, delta));
        }
        checked += 1;
    }
    Ok(checked)
}

/// All entries are non-negative; for `n ≥ 1` every entry other than
/// `(n, n, 0)` is strictly positive.
pub fn check_positivity(f: &PhiField) -> std::result::Result<(), Mismatch> {
    for n in 0..=i64::from(f.n_max()) {
        for j in 0..=n {
            for k in 0..=j {
                let v = f.get(n, j, k);
                let must_be_positive = n >= 1 && (j < n || k >= 1);
                if v.is_negative() || (must_be_positive && v.is_zero()) {
                    return Err(Mismatch::new(
                        "phi positivity",
                        format!("n={n} j={j} k={k}"),
                        v,
                        if must_be_positive { "> 0" } else { ">= 0" },
                    ));
                }
            }
        }
    }
    Ok(())
}

fn falling(m: i64, depth: i64) -> Integer {
    match u32::try_from(depth) {
        Ok(d) => falling_factorial(m, d),
        Err(_) => Integer::zero(),
    }
}

/// `Σ_{0≤k≤j≤n} (s)_{r−n−j} (r)_{2n+k} φ(n,j,k)`, which reproduces
/// `B(s, r, n)`.
pub fn b_from_phi(s: i64, r: i64, n: i64, f: &PhiField) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    let mut total = Rational::zero();
    for j in 0..=n {
        for k in 0..=j {
            let r_part = falling(r, 2 * n + k);
            if r_part.is_zero() {
                continue;
            }
            let s_part = falling(s, r - n - j);
            if s_part.is_zero() {
                continue;
            }
            total += Rational::from_integer(s_part * r_part) * f.get(n, j, k);
        }
    }
    total
}

/// `Σ_j (r)_j Σ_n φ(n, i−n, j−2n)`
pub fn stirling_lhs(i: u32, r: u32, f: &PhiField) -> Rational {
    let (i, r) = (i64::from(i), i64::from(r));
    let mut total = Rational::zero();
    for j in 0..=r {
        let inner = (0..=i)
            .map(|n| f.get(n, i - n, j - 2 * n))
            .fold(Rational::zero(), |a, b| a + b);
        if !inner.is_zero() {
            total += Rational::from_integer(falling(r, j)) * inner;
        }
    }
    total
}

/// Left side of the Stirling relation against `S(r, r − i)` from `table`.
pub fn stirling_check_with(
    i: u32,
    r: u32,
    f: &PhiField,
    table: &StirlingTable,
) -> std::result::Result<(), Mismatch> {
    assert!(i <= r, "stirling relation needs i <= r");
    let lhs = stirling_lhs(i, r, f);
    let rhs = Rational::from_integer(table.get(r, r - i));
    if lhs != rhs {
        return Err(Mismatch::new("phi stirling relation", format!("i={i} r={r}"), lhs, rhs));
    }
    Ok(())
}

pub fn stirling_check(i: u32, r: u32, f: &PhiField) -> std::result::Result<(), Mismatch> {
    stirling_check_with(i, r, f, &StirlingTable::new(r))
}

/// `Σ_j (s)_{n−j} φ(n,j,0)`
pub fn cosh_relation_lhs(s: i64, n: u32, f: &PhiField) -> Rational {
    let n = i64::from(n);
    (0..=n)
        .map(|j| Rational::from_integer(falling(s, n - j)) * f.get(n, j, 0))
        .fold(Rational::zero(), |a, b| a + b)
}

/// Checks `Σ_j (s)_{n−j} φ(n,j,0) = μ(s, 2n) / (2n)!` with the moment taken
/// both from the binomial sum and from the `cosh(t)^s` series.
pub fn cosh_relation_check(s: u32, n: u32, f: &PhiField) -> std::result::Result<(), Mismatch> {
    let lhs = cosh_relation_lhs(i64::from(s), n, f);
    let scale = Rational::from_integer(factorial(2 * n));
    let by_moment = moment_bruteforce(s, 2 * n) / &scale;
    let by_series = cosh_pow_derivative(s, 2 * n) / &scale;
    if lhs != by_moment || by_moment != by_series {
        return Err(Mismatch::new(
            "phi cosh relation",
            format!("s={s} n={n}"),
            lhs,
            format!("{by_moment} (moment), {by_series} (series)"),
        ));
    }
    Ok(())
}
