//! F(n, lambda)(z) from the field, from partitions, and inside F(x, y, z).

use triarray::genfunc::{f_truncated, fnl_closed, fnl_from_phi, verify_ode, verify_pde_full};
use triarray::partitions::enumerate;
use triarray::genfunc::partition_term;
use triarray::phi::build_phi;

fn main() {
    let n_max = 6;
    let adj = build_phi(n_max).adjoint();
    for n in 0..=i64::from(n_max) {
        for lam in 0..=n {
            let f = fnl_from_phi(n, lam, &adj);
            assert_eq!(f, fnl_closed(n as u32, lam as u32));
            verify_ode(n, lam, &adj).unwrap();
            println!("F({n},{lam}) = {f}");
        }
    }

    println!("terms of F(6,3):");
    for p in enumerate(6, 3) {
        println!("  {p:<16} {}", partition_term(&p));
    }

    let series = f_truncated(6);
    verify_pde_full(&series).unwrap();
    println!("[x^4 y^2] F = {}", series.coeff_poly(4, 2));
}
