//! Integer partitions with a fixed number of parts, in frequency
//! representation: part `k` maps to its multiplicity `π(k)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// A partition as `part → frequency`; the empty map is the empty
/// partition of zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    freq: BTreeMap<u32, u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds from a list of parts in any order; zero parts are ignored.
    pub fn from_parts<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut freq = BTreeMap::new();
        for p in parts.into_iter().filter(|&p| p > 0) {
            *freq.entry(p).or_insert(0) += 1;
        }
        Self { freq }
    }

    /// `π(k)`, zero for parts that do not occur.
    pub fn frequency(&self, part: u32) -> u32 {
        self.freq.get(&part).copied().unwrap_or(0)
    }

    /// `(part, frequency)` pairs, ascending by part.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.freq.iter().map(|(k, m)| (*k, *m))
    }

    /// `Σ π(k) k`
    pub fn weight(&self) -> u32 {
        self.iter().map(|(k, m)| k * m).sum()
    }

    /// `Σ π(k)`
    pub fn num_parts(&self) -> u32 {
        self.iter().map(|(_, m)| m).sum()
    }

    pub fn largest_part(&self) -> Option<u32> {
        self.freq.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.freq.is_empty()
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> Vec<u32> {
        self.freq
            .iter()
            .rev()
            .flat_map(|(&k, &m)| std::iter::repeat_n(k, m as usize))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .freq
            .iter()
            .rev()
            .map(|(k, m)| format!("{k}:{m}"))
            .collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

/// All partitions of `n` into exactly `lam` parts.
///
/// Order: larger leading part first, and among equal leading parts the
/// remaining non-increasing part lists in descending lexicographic order.
/// `(0, 0)` yields the empty partition alone; `(n > 0, 0)` yields nothing.
pub fn enumerate(n: u32, lam: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(lam as usize);
    fill(n, lam, n, &mut parts, &mut out);
    out
}

fn fill(remaining: u32, slots: u32, cap: u32, parts: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Partition::from_parts(parts.iter().copied()));
        }
        return;
    }
    if remaining < slots {
        return;
    }
    // Every later part is at least 1 and at most `first`.
    let hi = cap.min(remaining - (slots - 1));
    let lo = remaining.div_ceil(slots);
    for first in (lo..=hi).rev() {
        parts.push(first);
        fill(remaining - first, slots - 1, first, parts, out);
        parts.pop();
    }
}

/// `|P(n, λ)|` from `p(n, λ) = p(n−1, λ−1) + p(n−λ, λ)`.
pub fn count(n: u32, lam: u32) -> BigUint {
    if lam > n {
        return BigUint::zero();
    }
    let (n, lam) = (n as usize, lam as usize);
    let mut table = vec![vec![BigUint::zero(); lam + 1]; n + 1];
    table[0][0] = BigUint::one();
    for m in 1..=n {
        for l in 1..=lam.min(m) {
            table[m][l] = &table[m - 1][l - 1] + &table[m - l][l];
        }
    }
    table[n][lam].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate(4, 2),
            vec![Partition::from_parts([3, 1]), Partition::from_parts([2, 2])]
        );
        assert_eq!(enumerate(0, 0), vec![Partition::empty()]);
        assert!(enumerate(3, 4).is_empty());
        assert!(enumerate(5, 0).is_empty());
        assert_eq!(enumerate(5, 5), vec![Partition::from_parts([1; 5])]);
    }

    #[test]
    fn canonical_order() {
        let listed: Vec<Vec<u32>> = enumerate(8, 3).iter().map(Partition::parts).collect();
        assert_eq!(
            listed,
            vec![
                vec![6, 1, 1],
                vec![5, 2, 1],
                vec![4, 3, 1],
                vec![4, 2, 2],
                vec![3, 3, 2],
            ]
        );
    }

    #[test]
    fn count_examples() {
        assert_eq!(count(5, 2), BigUint::from(2u32));
        assert_eq!(count(6, 3), BigUint::from(3u32));
        assert_eq!(count(9, 9), BigUint::one());
        assert_eq!(count(0, 0), BigUint::one());
        assert_eq!(count(4, 0), BigUint::zero());
    }

    #[test]
    fn frequency_identities_and_uniqueness() {
        for n in 0..=20 {
            for lam in 0..=n {
                let all = enumerate(n, lam);
                for p in &all {
                    assert_eq!(p.weight(), n);
                    assert_eq!(p.num_parts(), lam);
                    assert!(p.iter().all(|(k, m)| k >= 1 && m >= 1));
                }
                let distinct: BTreeSet<_> = all.iter().cloned().collect();
                assert_eq!(distinct.len(), all.len());
                assert_eq!(BigUint::from(all.len()), count(n, lam));
            }
        }
    }

    #[test]
    fn display_and_accessors() {
        let p = Partition::from_parts([2, 1, 2, 0]);
        assert_eq!(p.to_string(), "{2:2, 1:1}");
        assert_eq!(p.frequency(2), 2);
        assert_eq!(p.frequency(3), 0);
        assert_eq!(p.largest_part(), Some(2));
        assert_eq!(Partition::empty().to_string(), "{}");
    }
}
