use crate::algebra::{AlgebraBuilder, AlgebraSpec};
use crate::grading::{BracketKind, Degree};
use crate::scalar::Scalar;

pub type Mat2 = [[Scalar; 2]; 2];

/// The Pauli matrices and the 2×2 identity, with exact entries.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliConstants {
    pub sigma1: Mat2,
    pub sigma2: Mat2,
    pub sigma3: Mat2,
    pub identity: Mat2,
}

impl Default for PauliConstants {
    fn default() -> Self {
        let z = Scalar::zero;
        let o = Scalar::one;
        let i = Scalar::i;
        PauliConstants {
            sigma1: [[z(), o()], [o(), z()]],
            sigma2: [[z(), -i()], [i(), z()]],
            sigma3: [[o(), z()], [z(), -o()]],
            identity: [[o(), z()], [z(), o()]],
        }
    }
}

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |r: usize, c: usize| &(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn mat_scale(a: &Mat2, s: &Scalar) -> Mat2 {
    let e = |r: usize, c: usize| &a[r][c] * s;
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

impl PauliConstants {
    pub fn sigma(&self, k: usize) -> &Mat2 {
        match k {
            1 => &self.sigma1,
            2 => &self.sigma2,
            3 => &self.sigma3,
            _ => panic!("Pauli index {k} out of range 1..=3"),
        }
    }

    /// `t_i = c_i`: `(−σ₁/2, −σ₂/2, −iσ₃/2)`.
    pub fn t(&self) -> [Mat2; 3] {
        let h = Scalar::ratio(-1, 2);
        [
            mat_scale(&self.sigma1, &h),
            mat_scale(&self.sigma2, &h),
            mat_scale(&self.sigma3, &(&h * &Scalar::i())),
        ]
    }

    /// `(−2iμσ₃, −2μI, 2μσ₁)`; `h_i` with `μ = λ₁λ₂`, `d_i` with `μ = λ₁λ₃`.
    pub fn quadratic(&self, mu: &Scalar) -> [Mat2; 3] {
        let two_mu = mu * &Scalar::int(2);
        [
            mat_scale(&self.sigma3, &(&two_mu * &Scalar::gauss(0, -1))),
            mat_scale(&self.identity, &(-two_mu.clone())),
            mat_scale(&self.sigma1, &two_mu),
        ]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SU11ExtensionParams {
    pub lambda1: Scalar,
    pub lambda2: Scalar,
    pub lambda3: Scalar,
}

impl SU11ExtensionParams {
    pub fn new(lambda1: Scalar, lambda2: Scalar, lambda3: Scalar) -> Self {
        SU11ExtensionParams {
            lambda1,
            lambda2,
            lambda3,
        }
    }

    /// `λ = (−i, 0, 2)`, the values under which the algebra maps onto the
    /// single-mode paraboson algebra.
    pub fn paraboson_point() -> Self {
        Self::new(Scalar::gauss(0, -1), Scalar::zero(), Scalar::int(2))
    }
}

/// How the `Q ∘ a` bracket is realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QaKind {
    /// By the degree rule: `(0,1)·(1,0) = 0`, a commutator.
    DotRule,
    /// As displayed, `{Q_α, a_m}`: an anticommutator forced by an override.
    AsWritten,
}

pub const SU11_NAMES: [&str; 8] = ["tau1", "tau2", "tau3", "Q1", "Q2", "a1", "a2", "f"];

/// The Z₂,₂ extension of su(1,1) under the degree rule, with its involution.
pub fn build_su11_extension(params: &SU11ExtensionParams) -> AlgebraSpec {
    build_su11_extension_with(params, QaKind::DotRule)
}

/// The same structure constants with an explicit choice for the `Q ∘ a`
/// bracket kind. Only the degree-rule variant carries an involution.
pub fn build_su11_extension_with(params: &SU11ExtensionParams, qa: QaKind) -> AlgebraSpec {
    let pauli = PauliConstants::default();
    let SU11ExtensionParams {
        lambda1: l1,
        lambda2: l2,
        lambda3: l3,
    } = params;
    let t = pauli.t();
    let h = pauli.quadratic(&(l1 * l2));
    let d = pauli.quadratic(&(l1 * l3));
    let tau = ["tau1", "tau2", "tau3"];
    let q = ["Q1", "Q2"];
    let a = ["a1", "a2"];

    let mut b = AlgebraBuilder::default();
    for n in tau {
        b.push_element(n, Degree::ZERO);
    }
    for n in q {
        b.push_element(n, Degree::ODD);
    }
    for n in a {
        b.push_element(n, Degree::PARABOSE);
    }
    b.push_element("f", Degree::PARAFERMI);
    if qa == QaKind::AsWritten {
        b = b.kind_override(Degree::ODD, Degree::PARABOSE, BracketKind::Anticommutator);
    }

    let one = |n: &str, c: Scalar| vec![(n.to_string(), c)];
    b.push_bracket("tau1", "tau2", one("tau3", Scalar::int(-1)));
    b.push_bracket("tau2", "tau3", one("tau1", Scalar::one()));
    b.push_bracket("tau3", "tau1", one("tau2", Scalar::one()));
    for (i, ti) in tau.iter().enumerate() {
        for al in 0..2 {
            let row = |names: &[&str; 2]| -> Vec<(String, Scalar)> {
                (0..2)
                    .map(|be| (names[be].to_string(), -t[i][al][be].clone()))
                    .collect()
            };
            b.push_bracket(ti, q[al], row(&q));
            b.push_bracket(ti, a[al], row(&a));
        }
        b.push_bracket(ti, "f", vec![]);
    }
    for al in 0..2 {
        for be in 0..2 {
            let quad = |m: &[Mat2; 3]| -> Vec<(String, Scalar)> {
                (0..3).map(|i| (tau[i].to_string(), m[i][al][be].clone())).collect()
            };
            b.push_bracket(q[al], q[be], quad(&h));
            b.push_bracket(a[al], a[be], quad(&d));
            b.push_bracket(q[al], a[be], one("f", l1 * &pauli.sigma2[al][be]));
        }
        b.push_bracket(q[al], "f", one(a[al], l2.clone()));
        b.push_bracket(a[al], "f", one(q[al], l3.clone()));
    }

    if qa == QaKind::DotRule {
        let (s1, u1, w) = involution_scalars(params);
        let inv: [(&str, Scalar); 8] = [
            ("tau1", Scalar::one()),
            ("tau2", Scalar::int(-1)),
            ("tau3", Scalar::one()),
            ("Q1", u1.clone()),
            ("Q2", -u1),
            ("a1", s1.clone()),
            ("a2", -s1),
            ("f", w),
        ];
        for (n, s) in inv {
            b.push_involution(n, n, s);
        }
    }
    b.build().expect("su(1,1) extension is well formed")
}

/// `i·conj(μ)/|μ|`, or 1 when `μ = 0`.
fn phase(mu: &Scalar) -> Scalar {
    if mu.is_zero() {
        return Scalar::one();
    }
    (&Scalar::i() * &mu.conj()).div(&mu.modulus()).expect("nonzero modulus")
}

/// Scalars `(s, u, w)` of the conjugate-linear anti-automorphism
/// `a₁ ↦ s a₁, a₂ ↦ −s a₂, Q₁ ↦ u Q₁, Q₂ ↦ −u Q₂, f ↦ w f`,
/// `τ₁ ↦ τ₁, τ₂ ↦ −τ₂, τ₃ ↦ τ₃`. Exact when the moduli involved are rational.
pub fn involution_scalars(params: &SU11ExtensionParams) -> (Scalar, Scalar, Scalar) {
    let SU11ExtensionParams {
        lambda1: l1,
        lambda2: l2,
        lambda3: l3,
    } = params;
    let ratio = |x: &Scalar| x.div(&x.conj()).expect("nonzero");
    if !l1.is_zero() {
        let s = phase(&(l1 * l3));
        let u = phase(&(l1 * l2));
        let w = (&(&(-l1.clone()) * &s) * &u).div(&l1.conj()).expect("nonzero");
        return (s, u, w);
    }
    match (l2.is_zero(), l3.is_zero()) {
        (false, false) => {
            let k = l2 * l3;
            let w = ratio(&k.conj()).unit_sqrt().expect("unimodular");
            let s = &w * &ratio(l2);
            (s, Scalar::one(), w)
        }
        (false, true) => (ratio(l2), Scalar::one(), Scalar::one()),
        (true, false) => (Scalar::one(), ratio(l3), Scalar::one()),
        (true, true) => (Scalar::one(), Scalar::one(), Scalar::one()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        let p = PauliConstants::default();
        for k in 1..=3 {
            assert_eq!(mat_mul(p.sigma(k), p.sigma(k)), p.identity);
        }
        for (x, y, z) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
            assert_eq!(mat_mul(p.sigma(x), p.sigma(y)), mat_scale(p.sigma(z), &Scalar::i()));
        }
    }

    #[test]
    fn constants_land_where_expected() {
        let s = build_su11_extension(&SU11ExtensionParams::new(Scalar::one(), Scalar::one(), Scalar::one()));
        assert_eq!(s.subspace_dims(), [3, 2, 2, 1]);
        let (q1, tau2) = (s.index_of("Q1").unwrap(), s.index_of("tau2").unwrap());
        assert_eq!(s.structure(q1, q1).coeff(tau2), Scalar::int(-2));
        let z = build_su11_extension(&SU11ExtensionParams::new(Scalar::int(3), Scalar::zero(), Scalar::i()));
        for x in ["Q1", "Q2"] {
            for y in ["Q1", "Q2"] {
                let (i, j) = (z.index_of(x).unwrap(), z.index_of(y).unwrap());
                assert!(z.structure(i, j).is_zero());
            }
        }
    }

    #[test]
    fn paraboson_point_involution_is_exact() {
        let (s, u, w) = involution_scalars(&SU11ExtensionParams::paraboson_point());
        assert_eq!((s, u, w), (Scalar::int(-1), Scalar::one(), Scalar::int(-1)));
    }
}
