// Green-ansatz matrices for parabosons and parafermions of order p, and the
// manifest format that stores them.

use paralg::fock::{build_green_rep, Manifest, ModeLayout};
use paralg::ops::{Family, OpId};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let layout = ModeLayout::new(1, 1, 2, 4)?;
    let rep = build_green_rep(&layout)?;
    println!("M=1 N=1 p=2 cutoff 4: dimension {}", rep.dim());

    let v = rep.vacuum();
    let n_a = rep.op(&OpId::pair(Family::Ma, 1, 1))?;
    let n_f = rep.op(&OpId::pair(Family::Mf, 1, 1))?;
    println!("vacuum: ⟨Ma⟩ = {}, ⟨Mf⟩ = {}", n_a.get(v, v).re, n_f.get(v, v).re);

    let safe = rep.safe_projector(3);
    println!("states safe for three-factor words: {}", safe.len());

    let text = Manifest::from_rep(&rep).to_json();
    let again = Manifest::from_json(&text)?.to_rep()?;
    let same = Manifest::from_rep(&again).to_json() == text;
    println!(
        "manifest: {} bytes, round trip {}",
        text.len(),
        if same { "exact" } else { "CHANGED" }
    );
    if !same {
        return Err("manifest round trip changed the representation".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("Green representation example");
}
