use crate::algebra::{AlgebraSpec, LinearMap};
use crate::grading::Degree;
use crate::scalar::Scalar;

use super::su11::{build_su11_extension, SU11ExtensionParams};

/// Single-mode paraboson algebra: `M, B, Bdag` in `L₀₀` and `a, adag` in
/// `L₁₀`, with `M = {a†, a}/2` and `B = {a, a}/2`.
pub fn build_paraboson_algebra() -> AlgebraSpec {
    let s = Scalar::int;
    AlgebraSpec::builder()
        .element("M", Degree::ZERO)
        .element("B", Degree::ZERO)
        .element("Bdag", Degree::ZERO)
        .element("a", Degree::PARABOSE)
        .element("adag", Degree::PARABOSE)
        .bracket("M", "a", &[("a", s(-1))])
        .bracket("M", "adag", &[("adag", s(1))])
        .bracket("B", "a", &[])
        .bracket("B", "adag", &[("a", s(2))])
        .bracket("Bdag", "a", &[("adag", s(-2))])
        .bracket("Bdag", "adag", &[])
        .bracket("adag", "a", &[("M", s(2))])
        .bracket("a", "a", &[("B", s(2))])
        .bracket("adag", "adag", &[("Bdag", s(2))])
        // Closing the even part: the brackets among M, B, B† follow from
        // the ones above by the Jacobi identity.
        .bracket("M", "B", &[("B", s(-2))])
        .bracket("M", "Bdag", &[("Bdag", s(2))])
        .bracket("B", "Bdag", &[("M", s(4))])
        .involution("M", "M", Scalar::one())
        .involution("B", "Bdag", Scalar::one())
        .involution("a", "adag", Scalar::one())
        .build()
        .expect("paraboson algebra is well formed")
}

/// `τ₃ ↦ (i/2)M`, `τ₁ ↦ (B − B†)/4`, `τ₂ ↦ −i(B + B†)/4`, `a₁ ↦ a†`,
/// `a₂ ↦ a`, and the `Q`, `f` sector to zero.
pub fn build_su11_to_paraboson_map() -> LinearMap {
    let src = build_su11_extension(&SU11ExtensionParams::paraboson_point());
    let quarter = Scalar::ratio(1, 4);
    let mi_quarter = &Scalar::gauss(0, -1) * &quarter;
    LinearMap::new(
        src,
        build_paraboson_algebra(),
        &[
            ("tau1", vec![("B", quarter.clone()), ("Bdag", -quarter)]),
            ("tau2", vec![("B", mi_quarter.clone()), ("Bdag", mi_quarter)]),
            ("tau3", vec![("M", &Scalar::i() * &Scalar::ratio(1, 2))]),
            ("a1", vec![("adag", Scalar::one())]),
            ("a2", vec![("a", Scalar::one())]),
        ],
    )
    .expect("map names exist")
}
