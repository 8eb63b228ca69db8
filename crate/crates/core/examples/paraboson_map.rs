// The su(1,1) extension maps onto the single-mode paraboson algebra.

use paralg::algebra::{verify_homomorphism, CheckOptions, Element};
use paralg::catalog::{build_paraboson_algebra, build_su11_to_paraboson_map};
use paralg::scalar::Scalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let opts = CheckOptions::default();
    let map = build_su11_to_paraboson_map();
    let report = verify_homomorphism(&map, &opts);
    println!("homomorphism: {}", if report.passed { "exact" } else { "FAIL" });
    if !report.passed {
        return Err("map is not a homomorphism".into());
    }

    let swapped = map.with_swapped("a1", "a2")?;
    let bad = verify_homomorphism(&swapped, &opts);
    println!("with a₁ and a₂ swapped: {} violations", bad.total_violations);

    // [{a†, a}, a] = −2a in the paraboson algebra.
    let pb = build_paraboson_algebra();
    let a = pb.elem("a")?;
    let anti = pb.bracket(&pb.elem("adag")?, &a);
    let lhs = pb.bracket(&anti, &a);
    let rhs: Element = a.scaled(&Scalar::int(-2));
    println!("[{{a†, a}}, a] = {}", pb.format_element(&lhs));
    if lhs != rhs {
        return Err("trilinear relation fails".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("paraboson example");
}
