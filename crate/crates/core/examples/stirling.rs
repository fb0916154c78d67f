//! S(r, r-i) as a weighted sum over phi, against counted set partitions.

use triarray::numbers::{set_partition_counts, stirling2};
use triarray::phi::{build_phi, stirling_lhs};

fn main() {
    let r_max = 8;
    let phi = build_phi(r_max);
    for r in 0..=r_max {
        let counted = set_partition_counts(r);
        for i in 0..=r {
            let via_phi = stirling_lhs(i, r, &phi);
            let m = r - i;
            assert_eq!(via_phi.to_integer(), stirling2(r, m));
            assert_eq!(stirling2(r, m), counted[m as usize].into());
        }
        println!("r={r}: {counted:?}");
    }
}
