//! Independent oracles. Nothing here calls back into the crate's own
//! implementations of the quantity being checked.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn fact(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// S(r, m) by listing every set partition of {0..r} explicitly.
pub fn stirling_by_listing(r: u32) -> Vec<u64> {
    fn grow(next: u32, r: u32, blocks: &mut Vec<Vec<u32>>, out: &mut [u64]) {
        if next == r {
            debug_assert_eq!(blocks.iter().map(Vec::len).sum::<usize>(), r as usize);
            out[blocks.len()] += 1;
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(next);
            grow(next + 1, r, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![next]);
        grow(next + 1, r, blocks, out);
        blocks.pop();
    }
    let mut out = vec![0; r as usize + 1];
    grow(0, r, &mut Vec::new(), &mut out);
    out
}

/// `E[(ε_1 + … + ε_s)^r]` for independent fair signs, summed over all 2^s
/// sign patterns.
pub fn moment_by_signs(s: u32, r: u32) -> BigRational {
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << s) {
        let up = mask.count_ones() as i64;
        let walk = 2 * up - i64::from(s);
        total += num_traits::pow(BigInt::from(walk), r as usize);
    }
    BigRational::new(total, BigInt::one() << s)
}

/// `1 / (2^n (n−k)! k! 3^k)`.
pub fn phi_diagonal(n: u32, k: u32) -> BigRational {
    let den = (BigInt::one() << n) * fact(n - k) * fact(k) * num_traits::pow(BigInt::from(3), k as usize);
    BigRational::new(BigInt::one(), den)
}

pub fn inv_fact(n: u32) -> BigRational {
    BigRational::new(BigInt::one(), fact(n))
}

/// Non-increasing sequences of `lam` positive integers summing to `n`.
pub fn partitions_brute(n: u32, lam: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, slots: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for part in (1..=cap.min(left)).rev() {
            cur.push(part);
            go(left - part, slots - 1, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, lam, n, &mut Vec::new(), &mut out);
    out
}
