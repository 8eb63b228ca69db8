use super::{AlgebraError, AlgebraSpec, Element};
use crate::scalar::Scalar;

/// A linear map between two specs, fixed by the images of the source basis.
/// Source elements without a listed image map to zero.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    source: AlgebraSpec,
    target: AlgebraSpec,
    images: Vec<Element>,
}

impl LinearMap {
    pub fn new(
        source: AlgebraSpec,
        target: AlgebraSpec,
        images: &[(&str, Vec<(&str, Scalar)>)],
    ) -> Result<Self, AlgebraError> {
        let mut out = vec![None; source.dim()];
        for (from, terms) in images {
            let i = source.index_of(from)?;
            if out[i].is_some() {
                return Err(AlgebraError::Map(format!("image of {from:?} given twice")));
            }
            out[i] = Some(target.combo(terms)?);
        }
        Ok(LinearMap {
            images: out.into_iter().map(Option::unwrap_or_default).collect(),
            source,
            target,
        })
    }

    pub fn identity(spec: &AlgebraSpec) -> Self {
        LinearMap {
            images: (0..spec.dim()).map(Element::basis).collect(),
            source: spec.clone(),
            target: spec.clone(),
        }
    }

    pub fn source(&self) -> &AlgebraSpec {
        &self.source
    }

    pub fn target(&self) -> &AlgebraSpec {
        &self.target
    }

    /// Image of source basis element `i`.
    pub fn image(&self, i: usize) -> &Element {
        &self.images[i]
    }

    pub fn image_of(&self, name: &str) -> Result<&Element, AlgebraError> {
        Ok(self.image(self.source.index_of(name)?))
    }

    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (i, c) in x.iter() {
            out.add_scaled(&self.images[i], c);
        }
        out
    }

    /// A copy with the images of two source elements exchanged.
    pub fn with_swapped(&self, x: &str, y: &str) -> Result<Self, AlgebraError> {
        let (i, j) = (self.source.index_of(x)?, self.source.index_of(y)?);
        let mut m = self.clone();
        m.images.swap(i, j);
        Ok(m)
    }
}
