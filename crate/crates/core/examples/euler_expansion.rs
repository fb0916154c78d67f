//! Repeated Euler operator applied to g^s, expanded back over g^(s-j) h^j.

use triarray::arrays::build_a_numeric;
use triarray::laurent::{big_g, g_poly, h_poly, verify_g_expansion};

fn main() {
    println!("g = {}", g_poly());
    println!("h = {}", h_poly());

    let s = 3;
    let a = build_a_numeric(s, 7);
    let g0 = big_g(s as u32, 0).unwrap();
    for r in 0..=7 {
        println!("(x d/dx)^{r} g^{s} = {}", g0.euler_op(r));
        println!("    weights over G({s}, j): {:?}", a.row(r));
        // r > s goes through the cleared form and the sech series.
        verify_g_expansion(s as u32, r, a.row(r)).unwrap();
    }
}
