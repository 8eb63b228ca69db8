// The para-Lie superalgebraic system of M parabosons and N parafermions as
// structure constants, checked and round-tripped through JSON.

use paralg::algebra::{check_axioms, AlgebraFile, CheckOptions};
use paralg::catalog::build_para_lie_super;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        let spec = build_para_lie_super(m, n)?;
        let suite = check_axioms(&spec, &CheckOptions::default());
        println!(
            "M={m} N={n}: dim {} {:?}, {} Jacobi classes, axioms {}",
            spec.dim(),
            spec.subspace_dims(),
            suite.jacobi_classes,
            if suite.passed { "hold" } else { "FAIL" }
        );
        if !suite.passed {
            return Err(format!("para_lie_super_{m}_{n} failed its axioms").into());
        }
        let text = AlgebraFile::from_spec(&spec).to_json();
        let (back, _) = AlgebraFile::from_json(&text)?.to_spec()?;
        if AlgebraFile::from_spec(&back).to_json() != text {
            return Err("JSON round trip changed the algebra".into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("para-Lie example");
}
