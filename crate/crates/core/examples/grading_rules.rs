// The Z₂,₂ bracket rule and the search for generator degrees that make the
// displayed relations consistent.

use paralg::catalog::consistent_degree_assignments;
use paralg::grading::{bracket_kind, Degree};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("bracket kinds (row ∘ column):");
    for a in Degree::ALL {
        let row: Vec<String> = Degree::ALL
            .iter()
            .map(|&b| format!("{:>9}", bracket_kind(a, b).to_string()))
            .collect();
        println!("  {a}  {}", row.join(""));
    }

    let found = consistent_degree_assignments();
    println!("consistent degree choices for (a, a†, f, f†): {}", found.len());
    for g in &found {
        println!("  a={} a†={} f={} f†={}", g.a, g.adag, g.f, g.fdag);
    }
    if found.is_empty() {
        return Err("no consistent degree assignment".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("grading example");
}
