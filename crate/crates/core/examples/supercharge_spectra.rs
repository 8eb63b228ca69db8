// Spectra of H_Q = Σ{Q, Q†} and H_F = Σ{F, F†} on safe states.

use paralg::fock::{build_green_rep, ModeLayout};
use paralg::verify::supercharge_spectra;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in [1, 2] {
        let rep = build_green_rep(&ModeLayout::new(1, 1, p, 6)?)?;
        let s = supercharge_spectra(&rep)?;
        println!(
            "p={p}: {} safe states, H_Q in [{:.6}, {:.6}], H_F in [{:.6}, {:.6}]",
            s.safe_states, s.h_q.min, s.h_q.max, s.h_f.min, s.h_f.max
        );
        if !s.h_q_positive_semidefinite {
            return Err("H_Q has a negative eigenvalue".into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("spectra example");
}
