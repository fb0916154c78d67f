//! Three routes to the even moments of a centered binomial walk of s steps.

use triarray::arrays::a0_column;
use triarray::laurent::{centered_binomial_coeffs, moment_bruteforce};
use triarray::numbers::Rational;
use triarray::series::cosh_pow_derivative;

fn main() {
    let s = 4;
    let weights = centered_binomial_coeffs(s);
    println!("weights for s={s}:");
    for (v, w) in &weights {
        println!("  {v:>3}  {w}");
    }

    for r in 0..=12 {
        let column = Rational::from_integer(a0_column(i64::from(s), r));
        let direct = moment_bruteforce(s, r);
        let series = cosh_pow_derivative(s, r);
        assert!(column == direct && direct == series);
        println!("mu({s},{r}) = {direct}");
    }
}
