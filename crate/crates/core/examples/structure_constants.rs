// Recovering the structure constants of the para-Lie system from the
// matrices alone.

use paralg::algebra::{check_axioms, AlgebraFile, CheckOptions};
use paralg::catalog::build_para_lie_super;
use paralg::fock::{build_green_rep, ModeLayout};
use paralg::ops::{OpId, SYSTEM_FAMILIES};
use paralg::verify::{extract_structure_constants, EXTRACTION_TOL};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let rep = build_green_rep(&ModeLayout::new(1, 1, 2, 6)?)?;
    let basis = OpId::enumerate(1, 1, &SYSTEM_FAMILIES);
    let (spec, report) = extract_structure_constants(&rep, &basis, EXTRACTION_TOL)?;
    println!(
        "{} operators, {} brackets; residual {:.2e}, lattice distance {:.2e}",
        basis.len(),
        report.pairs,
        report.max_relative_residual,
        report.max_lattice_distance
    );
    let axioms = check_axioms(&spec, &CheckOptions::default()).passed;
    let expected = build_para_lie_super(1, 1)?;
    let equal = AlgebraFile::from_spec(&spec) == AlgebraFile::from_spec(&expected);
    println!(
        "axioms {}; equal to the catalog system: {equal}",
        if axioms { "hold" } else { "FAIL" }
    );
    if !(report.passed && axioms && equal) {
        return Err("extraction did not reproduce the para-Lie system".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("extraction example");
}
