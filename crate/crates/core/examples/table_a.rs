//! The apex of A(s, r, j) for symbolic s, then the same rows at s = 4.
//!
//!     cargo run --example table_a

use triarray::arrays::{build_a_numeric, build_a_symbolic, build_b_symbolic};

fn main() {
    let a = build_a_symbolic(8);
    for r in 0..=a.r_max() {
        let cells: Vec<String> = a.row(r).iter().map(ToString::to_string).collect();
        println!("r={r}: {}", cells.join(" | "));
    }

    // Only the nonzero half survives in the condensed form.
    let b = build_b_symbolic(8);
    println!("B(s,8,n) = {:?}", b.row(8).iter().map(ToString::to_string).collect::<Vec<_>>());

    let numeric = build_a_numeric(4, 8);
    for r in 0..=8 {
        println!("s=4 r={r}: {:?}  sum={}", numeric.row(r), numeric.row_sum(r));
    }
    assert_eq!(a.eval(4), numeric);
}
