//! Partitions of n into exactly lambda parts, in frequency notation.

use triarray::partitions::{count, enumerate};

fn main() {
    let n = 8;
    for lam in 0..=n {
        let all = enumerate(n, lam);
        println!("n={n} lambda={lam}: {} (recurrence says {})", all.len(), count(n, lam));
        for p in &all {
            println!("  {p}  parts {:?}", p.parts());
        }
    }
    // The empty partition is the single partition of 0.
    assert_eq!(enumerate(0, 0).len(), 1);
}
