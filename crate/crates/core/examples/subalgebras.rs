// Closure and dimension of the bilinear and statistics subalgebras.

use paralg::fock::{build_green_rep, ModeLayout};
use paralg::verify::{classify_subalgebras, EXTRACTION_TOL};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rep = build_green_rep(&ModeLayout::new(2, 1, 2, 6)?)?;
    let c = classify_subalgebras(&rep, EXTRACTION_TOL)?;
    for s in &c.subalgebras {
        println!(
            "{:<22} {:<18} dim {:>2}/{:<2} {}",
            s.name,
            s.identification,
            s.dimension,
            s.expected_dimension,
            if s.closed { "closed" } else { "open" }
        );
    }
    if !c.passed {
        return Err("classification failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("classification example");
}
