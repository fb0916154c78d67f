//! Run verification suites from code with custom bounds.

use triarray::verify::{run, Bounds, Suite};

fn main() {
    let bounds = Bounds { s_max: 5, r_max: 9, n_max: 6, order: 5 };
    for suite in [Suite::Moments, Suite::Cosh, Suite::Ode] {
        print!("{}", run(suite, &bounds).render());
    }
    let report = run(Suite::All, &Bounds::default());
    assert!(report.passed());
    println!("default bounds: {} identities pass", report.checks.len());
}
