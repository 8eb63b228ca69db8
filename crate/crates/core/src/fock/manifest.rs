use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{from_generators, FockError, GreenRep, ModeLayout, SparseOperator};
use crate::ops::{Family, OpId};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestOperator {
    pub dim: usize,
    pub triplets: Vec<(usize, usize, f64, f64)>,
}

/// Generator matrices of a representation, keyed by name (`a_1`,
/// `adag_1`, `f_1`, …). Triplets are sorted by `(row, col)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub layout: ModeLayout,
    pub generators: BTreeMap<String, ManifestOperator>,
}

impl Manifest {
    pub fn from_rep(rep: &GreenRep) -> Manifest {
        let generators = rep
            .operators()
            .filter(|(id, _)| id.family.is_generator())
            .map(|(id, x)| {
                let triplets = x.triplets().map(|(r, c, v)| (r, c, v.re, v.im)).collect();
                (id.to_string(), ManifestOperator { dim: x.dim(), triplets })
            })
            .collect();
        Manifest {
            layout: *rep.layout(),
            generators,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }

    pub fn from_json(text: &str) -> Result<Manifest, FockError> {
        serde_json::from_str(text)
            .map_err(|e| FockError::Manifest(format!("line {}, column {}: {e}", e.line(), e.column())))
    }

    /// Rebuilds the representation. Raising operators must be the adjoints
    /// of the lowering ones.
    pub fn to_rep(&self) -> Result<GreenRep, FockError> {
        let l = &self.layout;
        l.validate()?;
        let dim = l.check_dimension(super::max_dim())?;
        let mut lowering = BTreeMap::new();
        for (name, m) in &self.generators {
            let id: OpId = name
                .parse()
                .map_err(|_| FockError::Manifest(format!("unknown generator {name:?}")))?;
            if !id.family.is_generator() || !id.in_range(l.parabosons, l.parafermions) {
                return Err(FockError::Manifest(format!(
                    "{name:?} is not a generator of this layout"
                )));
            }
            if m.dim != dim {
                return Err(FockError::Manifest(format!(
                    "{name}: dim {} but layout gives {dim}",
                    m.dim
                )));
            }
            if let Some(&(r, c, _, _)) = m.triplets.iter().find(|t| t.0 >= dim || t.1 >= dim) {
                return Err(FockError::Manifest(format!("{name}: entry ({r}, {c}) out of range")));
            }
            let x = SparseOperator::from_triplets(
                dim,
                m.triplets
                    .iter()
                    .map(|&(r, c, re, im)| (r, c, Complex64::new(re, im)))
                    .collect(),
                id.degree(),
                1,
            );
            lowering.insert(id, x);
        }
        let low = (1..=l.parabosons)
            .map(|k| OpId::gen(Family::A, k))
            .chain((1..=l.parafermions).map(|mu| OpId::gen(Family::F, mu)));
        let mut out = BTreeMap::new();
        for id in low {
            let x = lowering
                .remove(&id)
                .ok_or_else(|| FockError::Manifest(format!("missing generator {id}")))?;
            if let Some(up) = lowering.remove(&id.dagger()) {
                if up != x.adjoint() {
                    return Err(FockError::Manifest(format!(
                        "{} is not the adjoint of {id}",
                        id.dagger()
                    )));
                }
            }
            out.insert(id, x);
        }
        from_generators(*l, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::build_green_rep;

    #[test]
    fn round_trip() {
        let rep = build_green_rep(&ModeLayout::new(1, 1, 2, 3).unwrap()).unwrap();
        let m = Manifest::from_rep(&rep);
        let text = m.to_json();
        let back = Manifest::from_json(&text).unwrap();
        assert_eq!(back, m);
        let rep2 = back.to_rep().unwrap();
        for ((i1, x1), (i2, x2)) in rep.operators().zip(rep2.operators()) {
            assert_eq!(i1, i2);
            assert_eq!(x1, x2);
        }
        assert_eq!(Manifest::from_rep(&rep2).to_json(), text);
    }

    #[test]
    fn rejects_bad_input() {
        let rep = build_green_rep(&ModeLayout::new(1, 0, 1, 2).unwrap()).unwrap();
        let mut m = Manifest::from_rep(&rep);
        m.generators.get_mut("adag_1").unwrap().triplets[0].2 = 7.0;
        assert!(m.to_rep().is_err());
        let err = Manifest::from_json("{\n  \"layout\": 3").unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }
}
