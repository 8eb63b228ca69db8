// Numerical check of the trilinear relations, the bilinear closure
// relations and, at order one, ordinary statistics.

use paralg::fock::{build_green_rep, ModeLayout};
use paralg::verify::{reduction_check_p1, suite_closure, suite_eq12, EvalOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let opts = EvalOptions::default();
    for (m, n, p, c) in [(1, 1, 1, 6), (1, 1, 2, 6), (2, 1, 2, 4)] {
        let rep = build_green_rep(&ModeLayout::new(m, n, p, c)?)?;
        let r = suite_eq12(&rep, &opts)?;
        println!(
            "trilinear  M={m} N={n} p={p} c={c}: {} instances, max residual {:.2e}",
            r.instances, r.max_relative_residual
        );
        if !r.passed {
            return Err("trilinear relations failed".into());
        }
    }

    let rep = build_green_rep(&ModeLayout::new(1, 1, 2, 5)?)?;
    let r = suite_closure(&rep, &opts)?;
    println!(
        "closure    M=1 N=1 p=2 c=5: {} instances, max residual {:.2e}",
        r.instances, r.max_relative_residual
    );

    let rep = build_green_rep(&ModeLayout::new(1, 1, 1, 4)?)?;
    let r = reduction_check_p1(&rep, &opts)?;
    println!(
        "order one: canonical relations {}",
        if r.passed { "hold" } else { "FAIL" }
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("relation example");
}
