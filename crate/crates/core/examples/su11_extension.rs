// The eight-dimensional Z₂,₂ extension of su(1,1): axioms at the paraboson
// point, at another parameter choice, and with Q∘a forced to an
// anticommutator.

use paralg::algebra::{check_axioms, CheckOptions};
use paralg::catalog::{
    build_su11_extension, build_su11_extension_with, involution_scalars, QaKind, SU11ExtensionParams,
};
use paralg::scalar::Scalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let opts = CheckOptions::default();
    let params = SU11ExtensionParams::paraboson_point();
    let spec = build_su11_extension(&params);
    println!("{spec}");
    let (s1, s2, s3) = involution_scalars(&params);
    println!("involution scalars: {s1}, {s2}, {s3}");

    let suite = check_axioms(&spec, &opts);
    println!("λ = (−i, 0, 2): axioms {}", if suite.passed { "hold" } else { "FAIL" });
    if !suite.passed {
        return Err("su(1,1) extension failed its axioms".into());
    }

    let other = SU11ExtensionParams::new(Scalar::gauss(3, 4), Scalar::ratio(1, 2), Scalar::gauss(0, 5));
    let ok = check_axioms(&build_su11_extension(&other), &opts).passed;
    println!("λ = (3+4i, 1/2, 5i): axioms {}", if ok { "hold" } else { "FAIL" });

    let forced = check_axioms(&build_su11_extension_with(&params, QaKind::AsWritten), &opts);
    let jac = forced.jacobi.as_ref().map_or(0, |j| j.report.total_violations);
    println!("Q∘a as anticommutator: {jac} Jacobi violations");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("su(1,1) example");
}
