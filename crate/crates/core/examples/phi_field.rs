//! The triangular field phi(n, j, k), its adjoint, and B recovered from it.

use triarray::arrays::build_b_numeric;
use triarray::phi::{b_from_phi, build_phi, check_closed_forms};

fn main() {
    let phi = build_phi(4);
    for (n, layer) in phi.layers().layers().iter().enumerate() {
        println!("n = {n}");
        for (j, row) in layer.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            println!("  j={j}: {}", cells.join("  "));
        }
    }
    println!("closed-form entries agreeing: {}", check_closed_forms(&phi).unwrap());

    let adj = phi.adjoint();
    println!("phiT(3, 2, k) = {:?}", (0..=2).map(|k| adj.get(3, 2, k).to_string()).collect::<Vec<_>>());

    let s = 5;
    let b = build_b_numeric(s, 8);
    for n in 0..=4 {
        println!("B({s},8,{n}) = {} = {}", b.get(8, n), b_from_phi(s, 8, n, &phi));
    }
}
