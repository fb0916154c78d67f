//! Verification suites: every identity the crate knows about, swept over
//! configurable bounds and reported as PASS/FAIL lines.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::arrays::{a0_column, build_a_numeric, build_a_symbolic, build_b_numeric,
    build_b_symbolic, Entry, Triangle};
use crate::error::{Error, Mismatch};
use crate::export::oeis_rows;
use crate::ffpoly::FFPoly;
use crate::fixtures::{A0_EVEN_ROWS, TABLE_A_APEX};
use crate::genfunc::{f_product_expansion, f_truncated, fnl_closed, fnl_from_phi,
    phi_from_partitions, verify_ode, verify_pde_full, verify_pde_n};
use crate::laurent::{big_g, centered_binomial_coeffs, centered_binomial_weight, g_poly, h_poly,
    moment_bruteforce, verify_g_expansion, LaurentPoly};
use crate::numbers::{is_nonnegative_integer, rat, set_partition_counts, Integer, Rational,
    StirlingTable};
use crate::partitions::{count, enumerate};
use crate::phi::{b_from_phi, build_phi, check_closed_forms, check_positivity,
    cosh_relation_check, stirling_check_with};
use crate::series::{cosh_pow_derivative, cosh_pow_series, cosh_pow_series_by_powering};

/// Sweep limits: sizes `s ≤ s_max`, rows `r ≤ r_max`, layers `n ≤ n_max`
/// and truncation order `order` of the trivariate series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub s_max: u32,
    pub r_max: u32,
    pub n_max: u32,
    pub order: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            s_max: 8,
            r_max: 12,
            n_max: 10,
            order: 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Apex,
    RowSum,
    Arrays,
    Moments,
    Laurent,
    PhiClosed,
    PhiTransform,
    Stirling,
    Cosh,
    Partitions,
    GenfuncClosed,
    Ode,
    Pde,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const EACH: [Suite; 13] = [
        Suite::Apex,
        Suite::RowSum,
        Suite::Arrays,
        Suite::Moments,
        Suite::Laurent,
        Suite::PhiClosed,
        Suite::PhiTransform,
        Suite::Stirling,
        Suite::Cosh,
        Suite::Partitions,
        Suite::GenfuncClosed,
        Suite::Ode,
        Suite::Pde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Apex => "apex",
            Suite::RowSum => "rowsum",
            Suite::Arrays => "arrays",
            Suite::Moments => "moments",
            Suite::Laurent => "laurent",
            Suite::PhiClosed => "phi-closed",
            Suite::PhiTransform => "phi-transform",
            Suite::Stirling => "stirling",
            Suite::Cosh => "cosh",
            Suite::Partitions => "partitions",
            Suite::GenfuncClosed => "genfunc-closed",
            Suite::Ode => "ode",
            Suite::Pde => "pde",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one identity sweep.
#[derive(Debug, Clone)]
pub struct Check {
    pub suite: Suite,
    pub name: &'static str,
    pub unit: &'static str,
    pub count: usize,
    pub details: Vec<String>,
    pub failure: Option<Mismatch>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match &c.failure {
                None => out.push_str(&format!(
                    "PASS {}: {}, {} {} checked\n",
                    c.suite, c.name, c.count, c.unit
                )),
                Some(m) => out.push_str(&format!(
                    "FAIL {}: {}, after {} {}: {m}\n",
                    c.suite, c.name, c.count, c.unit
                )),
            }
            for d in &c.details {
                out.push_str(&format!("    {d}\n"));
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        if failed == 0 {
            out.push_str(&format!("{} identities checked, all passed\n", self.checks.len()));
        } else {
            out.push_str(&format!(
                "{failed} of {} identities FAILED\n",
                self.checks.len()
            ));
        }
        out
    }
}

#[derive(Default)]
struct Tally {
    count: usize,
    details: Vec<String>,
}

impl Tally {
    fn add(&mut self, n: usize) {
        self.count += n;
    }
}

struct Runner {
    suite: Suite,
    checks: Vec<Check>,
}

impl Runner {
    fn check(
        &mut self,
        name: &'static str,
        unit: &'static str,
        body: impl FnOnce(&mut Tally) -> Result<(), Mismatch>,
    ) {
        let mut tally = Tally::default();
        let failure = body(&mut tally).err();
        self.checks.push(Check {
            suite: self.suite,
            name,
            unit,
            count: tally.count,
            details: tally.details,
            failure,
        });
    }
}

fn expect_eq<T: PartialEq + fmt::Display>(
    identity: &'static str,
    at: impl FnOnce() -> String,
    left: &T,
    right: &T,
) -> Result<(), Mismatch> {
    if left == right {
        Ok(())
    } else {
        Err(Mismatch::new(identity, at(), left, right))
    }
}

fn as_mismatch(e: Error, identity: &'static str, at: String) -> Mismatch {
    match e {
        Error::Mismatch(m) => m,
        other => Mismatch::new(identity, at, other, "a valid input"),
    }
}

fn first_triangle_difference<T: Entry>(
    identity: &'static str,
    label: &str,
    left: &Triangle<T>,
    right: &Triangle<T>,
) -> Result<(), Mismatch> {
    for r in 0..=left.r_max().max(right.r_max()) {
        let len = left.form().row_len(r);
        for i in 0..len as i64 {
            let (a, b) = (left.get(i64::from(r), i), right.get(i64::from(r), i));
            if a != b {
                return Err(Mismatch::new(identity, format!("{label} r={r} index={i}"), a, b));
            }
        }
    }
    Ok(())
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run(suite: Suite, bounds: &Bounds) -> Report {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        one => vec![one],
    };
    let mut checks = Vec::new();
    for suite in suites {
        let mut runner = Runner {
            suite,
            checks: Vec::new(),
        };
        match suite {
            Suite::Apex => apex(&mut runner),
            Suite::RowSum => rowsum(&mut runner, bounds),
            Suite::Arrays => arrays(&mut runner, bounds),
            Suite::Moments => moments(&mut runner, bounds),
            Suite::Laurent => laurent(&mut runner, bounds),
            Suite::PhiClosed => phi_closed(&mut runner, bounds),
            Suite::PhiTransform => phi_transform(&mut runner, bounds),
            Suite::Stirling => stirling(&mut runner, bounds),
            Suite::Cosh => cosh(&mut runner, bounds),
            Suite::Partitions => partitions(&mut runner, bounds),
            Suite::GenfuncClosed => genfunc_closed(&mut runner, bounds),
            Suite::Ode => ode(&mut runner, bounds),
            Suite::Pde => pde(&mut runner, bounds),
            Suite::All => unreachable!("expanded above"),
        }
        checks.extend(runner.checks);
    }
    Report { checks }
}

fn apex(run: &mut Runner) {
    run.check("published apex of A", "cells", |t| {
        let r_top = TABLE_A_APEX.iter().map(|c| c.0).max().unwrap_or(0);
        let a = build_a_symbolic(r_top);
        for &(r, j, text) in TABLE_A_APEX {
            let want: FFPoly = text.parse().expect("fixture cells parse");
            let got = a.get(i64::from(r), i64::from(j));
            expect_eq("published apex of A", || format!("r={r} j={j}"), &got, &want)?;
            t.add(1);
        }
        Ok(())
    });
    run.check("A(s,r,0) coefficient rows for even r", "rows", |t| {
        let r_top = A0_EVEN_ROWS.iter().map(|c| c.0).max().unwrap_or(2);
        let rows = oeis_rows(r_top);
        for (i, &(r, want)) in A0_EVEN_ROWS.iter().enumerate() {
            let got = rows.get(i).map(String::as_str).unwrap_or("");
            expect_eq("even-row coefficients", || format!("r={r}"), &got, &want)?;
            t.add(1);
        }
        Ok(())
    });
}

fn rowsum(run: &mut Runner, b: &Bounds) {
    run.check("A row sums equal s^r", "rows", |t| {
        for s in 0..=i64::from(b.s_max) {
            build_a_numeric(s, b.r_max).check_row_sums(s)?;
            t.add(b.r_max as usize + 1);
        }
        Ok(())
    });
    run.check("B row sums equal s^r", "rows", |t| {
        for s in 0..=i64::from(b.s_max) {
            build_b_numeric(s, b.r_max).check_row_sums(s)?;
            t.add(b.r_max as usize + 1);
        }
        Ok(())
    });
    run.check("symbolic A row sums equal s^r", "rows", |t| {
        build_a_symbolic(b.r_max).check_row_sums()?;
        t.add(b.r_max as usize + 1);
        Ok(())
    });
    run.check("symbolic B row sums equal s^r", "rows", |t| {
        build_b_symbolic(b.r_max).check_row_sums()?;
        t.add(b.r_max as usize + 1);
        Ok(())
    });
}

fn arrays(run: &mut Runner, b: &Bounds) {
    run.check("A vanishes where r - j is odd", "triangles", |t| {
        for s in 0..=i64::from(b.s_max) {
            build_a_numeric(s, b.r_max).check_parity()?;
            t.add(1);
        }
        build_a_symbolic(b.r_max).check_parity()?;
        t.add(1);
        Ok(())
    });
    run.check("B recurrence equals condensed A", "triangles", |t| {
        for s in 0..=i64::from(b.s_max) {
            let a = build_a_numeric(s, b.r_max);
            let bb = build_b_numeric(s, b.r_max);
            first_triangle_difference("B = condense(A)", &format!("s={s}"), &a.condense(), &bb)?;
            first_triangle_difference("expand(B) = A", &format!("s={s}"), &bb.expand(), &a)?;
            t.add(1);
        }
        let a = build_a_symbolic(b.r_max);
        first_triangle_difference("B = condense(A)", "symbolic", &a.condense(), &build_b_symbolic(b.r_max))?;
        t.add(1);
        Ok(())
    });
    run.check("symbolic A evaluates to numeric A", "sizes", |t| {
        let sym = build_a_symbolic(b.r_max);
        for s in 0..=i64::from(b.s_max.max(10)) {
            first_triangle_difference("eval(symbolic A)", &format!("s={s}"), &sym.eval(s), &build_a_numeric(s, b.r_max))?;
            t.add(1);
        }
        Ok(())
    });
}

fn moments(run: &mut Runner, b: &Bounds) {
    run.check("A(s,r,0) = binomial moment = cosh^s derivative", "pairs", |t| {
        for s in 0..=b.s_max {
            for r in 0..=b.r_max {
                let a0 = Rational::from_integer(a0_column(i64::from(s), r));
                let mu = moment_bruteforce(s, r);
                let series = cosh_pow_derivative(s, r);
                let at = || format!("s={s} r={r}");
                expect_eq("A(s,r,0) = moment", at, &a0, &mu)?;
                expect_eq("moment = cosh^s derivative", at, &mu, &series)?;
                if !is_nonnegative_integer(&mu) {
                    return Err(Mismatch::new("moment is a non-negative integer", at(), mu, ">= 0"));
                }
                t.add(1);
            }
        }
        Ok(())
    });
    run.check("odd moments vanish", "pairs", |t| {
        for s in 0..=b.s_max.max(10) {
            for r in (1..=b.r_max.max(11)).step_by(2) {
                let mu = moment_bruteforce(s, r);
                expect_eq("odd moment", || format!("s={s} r={r}"), &mu, &rat(0))?;
                t.add(1);
            }
        }
        Ok(())
    });
    run.check("centered binomial weights from g^s", "sizes", |t| {
        for s in 0..=(2 * b.s_max).max(16) {
            let coeffs = centered_binomial_coeffs(s);
            let total = coeffs.values().fold(Rational::zero(), |a, c| a + c);
            expect_eq("weights sum to one", || format!("s={s}"), &total, &rat(1))?;
            let reach = i64::from(s) + 1;
            for v in -reach..=reach {
                let c = coeffs.get(&v).cloned().unwrap_or_else(Rational::zero);
                expect_eq("Laurent coefficient = 2^-s C(s,(v+s)/2)", || format!("s={s} v={v}"), &c, &centered_binomial_weight(s, v))?;
                let mirror = coeffs.get(&-v).cloned().unwrap_or_else(Rational::zero);
                expect_eq("symmetry v -> -v", || format!("s={s} v={v}"), &c, &mirror)?;
            }
            t.add(1);
        }
        Ok(())
    });
    run.check("cosh^s series by exponentials equals by powering", "sizes", |t| {
        let order = b.r_max as usize + 1;
        for s in 0..=b.s_max {
            let by_exp = cosh_pow_series(s, order);
            let by_pow = cosh_pow_series_by_powering(s, order);
            for k in 0..=order {
                expect_eq("cosh^s series", || format!("s={s} t^{k}"), &by_exp.coeff(k), &by_pow.coeff(k))?;
                if k % 2 == 1 {
                    expect_eq("odd cosh^s coefficient", || format!("s={s} t^{k}"), &by_exp.coeff(k), &rat(0))?;
                }
            }
            t.add(1);
        }
        Ok(())
    });
}

fn laurent(run: &mut Runner, b: &Bounds) {
    run.check("Euler expansion of G(s,0), r <= s", "pairs", |t| {
        for s in 0..=b.s_max {
            let a = build_a_numeric(i64::from(s), s);
            for r in 0..=s {
                verify_g_expansion(s, r, a.row(r))
                    .map_err(|e| as_mismatch(e, "Euler expansion", format!("s={s} r={r}")))?;
                t.add(1);
            }
        }
        Ok(())
    });
    run.check("Euler expansion of G(s,0), r > s (cleared and series routes)", "pairs", |t| {
        for s in 0..=b.s_max {
            if s >= b.r_max {
                continue;
            }
            let a = build_a_numeric(i64::from(s), b.r_max);
            for r in s + 1..=b.r_max {
                verify_g_expansion(s, r, a.row(r))
                    .map_err(|e| as_mismatch(e, "Euler expansion", format!("s={s} r={r}")))?;
                t.add(1);
            }
        }
        Ok(())
    });
    run.check("[1] G(s,j) = j G(s,j-1) + (s-j) G(s,j+1)", "pairs", |t| {
        expect_eq("g^[1] = h", String::new, &g_poly().euler_op(1), &h_poly())?;
        expect_eq("h^[1] = g", String::new, &h_poly().euler_op(1), &g_poly())?;
        for s in 2..=b.s_max {
            for j in 1..i64::from(s) {
                let g = |j| big_g(s, j).expect("0 <= j <= s");
                let lhs = g(j).euler_op(1);
                let rhs = &g(j - 1).scale(&rat(j)) + &g(j + 1).scale(&rat(i64::from(s) - j));
                expect_eq("G[1] recurrence", || format!("s={s} j={j}"), &lhs, &rhs)?;
                t.add(1);
            }
        }
        Ok(())
    });
    run.check("Euler operator is a derivation and composes additively", "polynomials", |t| {
        let mut family: Vec<LaurentPoly> = Vec::new();
        for s in 0..=b.s_max.min(6) {
            for j in 0..=i64::from(s) {
                family.push(big_g(s, j).expect("0 <= j <= s"));
            }
        }
        family.push(LaurentPoly::from_terms([(-3, rat(2)), (0, rat(-1)), (5, rat(7))]));
        for (i, p) in family.iter().enumerate() {
            for q in family.iter().skip(i).step_by(3) {
                let lhs = (p * q).euler_op(1);
                let rhs = &(&p.euler_op(1) * q) + &(p * &q.euler_op(1));
                expect_eq("product rule", || format!("{p} * {q}"), &lhs, &rhs)?;
            }
            for a in 0..=5 {
                for c in 0..=5 {
                    expect_eq("composition", || format!("{p} a={a} b={c}"), &p.euler_op(a).euler_op(c), &p.euler_op(a + c))?;
                }
            }
            t.add(1);
        }
        Ok(())
    });
}

fn phi_closed(run: &mut Runner, b: &Bounds) {
    let f = build_phi(b.n_max);
    run.check("phi special solutions", "entries", |t| {
        t.add(check_closed_forms(&f)?);
        Ok(())
    });
    run.check("phi entries positive off (n,n,0)", "layers", |t| {
        check_positivity(&f)?;
        t.add(b.n_max as usize + 1);
        Ok(())
    });
    run.check("adjoint is an involution", "layers", |t| {
        let adj = f.adjoint();
        for n in 0..=i64::from(b.n_max) {
            for lam in 0..=n {
                for k in 0..=lam {
                    let direct = f.get(n, n - lam + k, k);
                    expect_eq("adjoint reindexing", || format!("n={n} lambda={lam} k={k}"), &adj.get(n, lam, k), &direct)?;
                }
            }
        }
        if adj.adjoint() != f {
            return Err(Mismatch::new("involution", format!("n_max={}", b.n_max), "adjoint(adjoint(phi))", "phi"));
        }
        t.add(b.n_max as usize + 1);
        Ok(())
    });
}

fn phi_transform(run: &mut Runner, b: &Bounds) {
    run.check("B(s,r,n) from phi through falling factorials", "entries", |t| {
        let f = build_phi(b.r_max / 2 + 1);
        for s in 0..=i64::from(b.s_max) {
            let bb = build_b_numeric(s, b.r_max);
            for r in 0..=i64::from(b.r_max) {
                for n in 0..=r / 2 + 1 {
                    let got = b_from_phi(s, r, n, &f);
                    let want = Rational::from_integer(bb.get(r, n));
                    expect_eq("phi transform", || format!("s={s} r={r} n={n}"), &got, &want)?;
                    t.add(1);
                }
            }
        }
        Ok(())
    });
}

fn stirling(run: &mut Runner, b: &Bounds) {
    let table = StirlingTable::new(b.r_max);
    run.check("Stirling recurrence equals set-partition count", "rows", |t| {
        for r in 0..=b.r_max {
            for (m, brute) in set_partition_counts(r).into_iter().enumerate() {
                expect_eq("S(r,m)", || format!("r={r} m={m}"), &table.get(r, m as u32), &Integer::from(brute))?;
            }
            t.add(1);
        }
        Ok(())
    });
    run.check("phi sums give S(r, r-i)", "pairs", |t| {
        let f = build_phi(b.r_max);
        for r in 0..=b.r_max {
            let mut values = Vec::new();
            for i in 0..=r {
                stirling_check_with(i, r, &f, &table)?;
                values.push(table.get(r, r - i).to_string());
                t.add(1);
            }
            t.details.push(format!("r={r}: S(r, r-i) for i=0..r = {}", values.join(", ")));
        }
        Ok(())
    });
}

fn cosh(run: &mut Runner, b: &Bounds) {
    run.check("sum (s)_(n-j) phi(n,j,0) = mu(s,2n)/(2n)!", "pairs", |t| {
        let f = build_phi(b.n_max);
        for s in 0..=b.s_max {
            for n in 0..=b.n_max {
                cosh_relation_check(s, n, &f)?;
                t.add(1);
            }
        }
        Ok(())
    });
}

/// `p(n)` for `n ≤ n_max` from the product `Π_k 1/(1 − x^k)`.
fn partition_numbers(n_max: usize) -> Vec<u64> {
    let mut p = vec![0u64; n_max + 1];
    p[0] = 1;
    for part in 1..=n_max {
        for total in part..=n_max {
            p[total] += p[total - part];
        }
    }
    p
}

fn partitions(run: &mut Runner, b: &Bounds) {
    let top = (2 * b.n_max).max(20);
    run.check("partition frequency identities", "partitions", |t| {
        for n in 0..=top {
            for lam in 0..=n + 1 {
                for p in enumerate(n, lam) {
                    let at = || format!("n={n} lambda={lam} {p}");
                    expect_eq("sum of k pi(k) = n", at, &p.weight(), &n)?;
                    expect_eq("sum of pi(k) = lambda", at, &p.num_parts(), &lam)?;
                    t.add(1);
                }
            }
        }
        Ok(())
    });
    run.check("enumeration agrees with counting recurrence", "pairs", |t| {
        let totals = partition_numbers(top as usize);
        for n in 0..=top {
            let mut sum = 0u64;
            for lam in 0..=n {
                let all = enumerate(n, lam);
                let distinct: BTreeSet<_> = all.iter().collect();
                let at = || format!("n={n} lambda={lam}");
                expect_eq("no duplicates", at, &distinct.len(), &all.len())?;
                let counted = count(n, lam);
                expect_eq("enumerate length = count", at, &num_bigint::BigUint::from(all.len()), &counted)?;
                sum += all.len() as u64;
                t.add(1);
            }
            expect_eq("sum over lambda = p(n)", || format!("n={n}"), &sum, &totals[n as usize])?;
        }
        let empty = enumerate(0, 0);
        if empty.len() != 1 || !empty[0].is_empty() {
            return Err(Mismatch::new("empty partition", "n=0 lambda=0", empty.len(), 1));
        }
        Ok(())
    });
}

fn genfunc_closed(run: &mut Runner, b: &Bounds) {
    let adj = build_phi(b.n_max + 2).adjoint();
    run.check("F(n,lambda) from phi = partition product", "pairs", |t| {
        for n in 0..=i64::from(b.n_max) {
            for lam in 0..=n {
                let from_phi = fnl_from_phi(n, lam, &adj);
                let closed = fnl_closed(n as u32, lam as u32);
                let at = || format!("n={n} lambda={lam}");
                expect_eq("F(n,lambda)", at, &from_phi, &closed)?;
                if from_phi.degree().is_some_and(|d| d as i64 > lam)
                    || from_phi.coeffs().iter().any(Signed::is_negative)
                {
                    return Err(Mismatch::new("F(n,lambda) shape", at(), &from_phi, "degree <= lambda, coefficients >= 0"));
                }
                t.add(1);
            }
        }
        Ok(())
    });
    run.check("phi(n,n-lambda,0) = partition sum", "pairs", |t| {
        let phi = adj.adjoint();
        for n in 0..=b.n_max + 2 {
            for lam in 0..=n {
                let (ni, li) = (i64::from(n), i64::from(lam));
                let got = phi_from_partitions(n, lam);
                let want = phi.get(ni, ni - li, 0);
                expect_eq("constant term", || format!("n={n} lambda={lam}"), &got, &want)?;
                expect_eq("F(n,lambda)(0)", || format!("n={n} lambda={lam}"), &fnl_from_phi(ni, li, &adj).coeff(0), &want)?;
                t.add(1);
            }
        }
        Ok(())
    });
}

fn ode(run: &mut Runner, b: &Bounds) {
    run.check("(2n - lambda z) F + z(z+1) F' = F(n-1,lambda-1) + F'(n-1,lambda)", "pairs", |t| {
        let adj = build_phi(b.n_max).adjoint();
        for n in 0..=i64::from(b.n_max) {
            for lam in 0..=n {
                verify_ode(n, lam, &adj)?;
                t.add(1);
            }
        }
        Ok(())
    });
}

fn pde(run: &mut Runner, b: &Bounds) {
    run.check("F_n(y,z) partial differential equation", "layers", |t| {
        let adj = build_phi(b.n_max).adjoint();
        for n in 0..=i64::from(b.n_max) {
            verify_pde_n(n, &adj)?;
            t.add(1);
        }
        Ok(())
    });
    let series = f_truncated(b.order);
    run.check("F(x,y,z) partial differential equation", "orders", |t| {
        verify_pde_full(&series)?;
        expect_eq("F(0,0,0)", || "x^0 y^0 z^0".into(), &series.coeff(0, 0, 0), &rat(1))?;
        t.add(b.order as usize + 1);
        Ok(())
    });
    run.check("exp series equals product of per-part sums", "orders", |t| {
        let product = f_product_expansion(b.order);
        if let Some(e) = product.poly().first_difference(series.poly()) {
            return Err(Mismatch::new(
                "product expansion",
                format!("x^{} y^{} z^{}", e[0], e[1], e[2]),
                product.poly().coeff(e),
                series.poly().coeff(e),
            ));
        }
        t.add(b.order as usize + 1);
        Ok(())
    });
    run.check("x^n y^lambda coefficient of F = F(n,lambda)", "pairs", |t| {
        let adj = build_phi(b.order).adjoint();
        for n in 0..=b.order {
            for lam in 0..=n + 1 {
                let got = series.coeff_poly(n, lam);
                let want = fnl_from_phi(i64::from(n), i64::from(lam), &adj);
                expect_eq("coefficient extraction", || format!("n={n} lambda={lam}"), &got, &want)?;
                t.add(1);
            }
        }
        Ok(())
    });
}
