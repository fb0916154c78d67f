//! Exact scalars and the classical combinatorial numbers.
//!
//! Every quantity in this crate is an arbitrary-precision integer or a
//! normalized rational, so no computation can overflow or round.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Integer = BigInt;

/// Normalized exact rational; the denominator is always positive and
/// coprime to the numerator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

/// `s (s-1) ... (s-k+1)`, with the empty product for `k = 0`.
pub fn falling_factorial(s: i64, k: u32) -> Integer {
    (0..i64::from(k)).fold(Integer::one(), |acc, i| acc * (s - i))
}

pub fn factorial(n: u32) -> Integer {
    (2..=u64::from(n)).fold(Integer::one(), |acc, i| acc * i)
}

pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    // Partial products (n)_i / i! are integral at every step.
    (0..k).fold(Integer::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `base^exp` with `0^0 = 1`.
pub fn pow_int(base: i64, exp: u32) -> Integer {
    num_traits::pow(Integer::from(base), exp as usize)
}

/// Stirling numbers of the second kind, tabulated up to a fixed row.
///
/// Built with `S(n, k) = k S(n-1, k) + S(n-1, k-1)`; rows are stored
/// densely so lookups past the diagonal return zero.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<Integer>>,
}

impl StirlingTable {
    pub fn new(r_max: u32) -> Self {
        let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
        for n in 1..=r_max as usize {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let stay = prev.get(k).map_or_else(Integer::zero, |v| v * k);
                    let join = if k == 0 {
                        Integer::zero()
                    } else {
                        prev[k - 1].clone()
                    };
                    stay + join
                })
                .collect();
            rows.push(row);
        }
        Self { rows }
    }

    pub fn r_max(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    pub fn get(&self, r: u32, m: u32) -> Integer {
        assert!(r <= self.r_max(), "stirling table built only to row {}", self.r_max());
        self.rows[r as usize]
            .get(m as usize)
            .cloned()
            .unwrap_or_else(Integer::zero)
    }
}

/// Stirling number of the second kind `S(r, m)`.
pub fn stirling2(r: u32, m: u32) -> Integer {
    if m > r {
        return Integer::zero();
    }
    StirlingTable::new(r).get(r, m)
}

/// Number of set partitions of an `r`-element set into `m` blocks, for
/// every `m = 0..=r`, found by walking all restricted growth strings.
/// Exponential in `r`; meant as an independent check on small rows.
pub fn set_partition_counts(r: u32) -> Vec<u64> {
    fn walk(pos: u32, r: u32, blocks: u32, tally: &mut [u64]) {
        if pos == r {
            tally[blocks as usize] += 1;
            return;
        }
        for b in 0..=blocks {
            walk(pos + 1, r, blocks.max(b + 1), tally);
        }
    }
    let mut tally = vec![0; r as usize + 1];
    walk(0, r, 0, &mut tally);
    tally
}

pub(crate) fn is_nonnegative_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_negative()
}
