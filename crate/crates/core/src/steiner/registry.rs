//! Named constructions of skew presentations, selectable at runtime.

use std::collections::BTreeMap;

use crate::error::SteinerError;
use crate::field::CoefficientField;
use crate::pfaffian::{PolyRing, SkewMatrix};
use crate::poly::Polynomial;
use crate::rng::InstanceRng;

use super::{
    contraction_in, contraction_matrix, AlternatingThreeForm, SkewPresentation, SteinerData,
    SteinerKind, COBLE_VARS, FOURFOLD_VARS,
};

/// One way of producing a skew presentation.
pub trait SteinerConstruction: Send + Sync {
    fn name(&self) -> &'static str;

    fn kind(&self) -> SteinerKind;

    /// Draw random input data over `field`.
    fn sample(&self, field: &CoefficientField, rng: &mut InstanceRng) -> SteinerData;

    fn assemble(&self, data: &SteinerData) -> Result<SkewPresentation, SteinerError>;
}

#[derive(Clone, Debug, Default)]
pub struct ConstructionOptions {
    /// Pfaffian degree, used by `linear-pfaffian`.
    pub degree: Option<usize>,
}

pub type Factory = fn(&ConstructionOptions) -> Result<Box<dyn SteinerConstruction>, SteinerError>;

pub struct Registry {
    factories: BTreeMap<&'static str, Factory>,
}

impl Registry {
    pub fn empty() -> Self {
        Self {
            factories: BTreeMap::new(),
        }
    }

    /// The four built-in constructions.
    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register("linear-pfaffian", |opts| {
            let degree = opts.degree.unwrap_or(3);
            if degree < 1 {
                return Err(SteinerError::ShapeMismatch(
                    "degree must be positive".into(),
                ));
            }
            Ok(Box::new(LinearPfaffian { degree }))
        });
        r.register("coble-full", |_| Ok(Box::new(CobleFull)));
        r.register("coble-restriction", |_| Ok(Box::new(CobleRestriction)));
        r.register("two-tangent", |_| Ok(Box::new(TwoTangent)));
        r
    }

    pub fn register(&mut self, name: &'static str, factory: Factory) {
        self.factories.insert(name, factory);
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.factories.keys().copied()
    }

    pub fn create(
        &self,
        name: &str,
        opts: &ConstructionOptions,
    ) -> Result<Box<dyn SteinerConstruction>, SteinerError> {
        let factory = self
            .factories
            .get(name)
            .ok_or_else(|| SteinerError::UnknownKind(name.to_string()))?;
        factory(opts)
    }
}

/// The built-in construction for `kind`.
pub fn construction_for(kind: SteinerKind) -> Box<dyn SteinerConstruction> {
    match kind {
        SteinerKind::LinearPfaffian { degree } => Box::new(LinearPfaffian { degree }),
        SteinerKind::CobleFull => Box::new(CobleFull),
        SteinerKind::CobleRestriction => Box::new(CobleRestriction),
        SteinerKind::TwoTangent => Box::new(TwoTangent),
    }
}

fn three_forms(
    data: &SteinerData,
    count: usize,
    num_vars: usize,
    kind: SteinerKind,
) -> Result<&[AlternatingThreeForm], SteinerError> {
    let SteinerData::ThreeForms(forms) = data else {
        return Err(SteinerError::ShapeMismatch(format!(
            "{kind} is built from 3-forms"
        )));
    };
    if forms.len() != count {
        return Err(SteinerError::ShapeMismatch(format!(
            "{kind} takes {count} 3-form(s), got {}",
            forms.len()
        )));
    }
    if let Some(w) = forms.iter().find(|w| w.num_vars() != num_vars) {
        return Err(SteinerError::ShapeMismatch(format!(
            "{kind} takes 3-forms in {num_vars} variables, got {}",
            w.num_vars()
        )));
    }
    if forms.iter().any(|w| w.field() != forms[0].field()) {
        return Err(SteinerError::ShapeMismatch(
            "3-forms over different fields".into(),
        ));
    }
    Ok(forms)
}

/// `(x0, ..., x_{n-1})` padded with zeros to `len`, at offset `at`.
fn coordinate_vector(field: &CoefficientField, n: usize, len: usize, at: usize) -> Vec<Polynomial> {
    (0..len)
        .map(|i| {
            if i >= at && i < at + n {
                Polynomial::var(field, n, i - at)
            } else {
                Polynomial::zero(field, n)
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug)]
pub struct LinearPfaffian {
    pub degree: usize,
}

impl SteinerConstruction for LinearPfaffian {
    fn name(&self) -> &'static str {
        "linear-pfaffian"
    }

    fn kind(&self) -> SteinerKind {
        SteinerKind::LinearPfaffian {
            degree: self.degree,
        }
    }

    fn sample(&self, field: &CoefficientField, rng: &mut InstanceRng) -> SteinerData {
        let ring = PolyRing::new(field, FOURFOLD_VARS);
        let m = SkewMatrix::from_fn(2 * self.degree, ring, |_, _| {
            Polynomial::random_form(field, FOURFOLD_VARS, 1, rng)
        })
        .expect("entries share the field");
        SteinerData::Matrix(m)
    }

    fn assemble(&self, data: &SteinerData) -> Result<SkewPresentation, SteinerError> {
        let SteinerData::Matrix(m) = data else {
            return Err(SteinerError::ShapeMismatch(
                "linear-pfaffian is built from a matrix of linear forms".into(),
            ));
        };
        SkewPresentation::new(self.kind(), m.clone(), Vec::new())
    }
}

/// Contraction of one 3-form in 9 variables; kernel `x`.
#[derive(Clone, Copy, Debug)]
pub struct CobleFull;

impl SteinerConstruction for CobleFull {
    fn name(&self) -> &'static str {
        "coble-full"
    }

    fn kind(&self) -> SteinerKind {
        SteinerKind::CobleFull
    }

    fn sample(&self, field: &CoefficientField, rng: &mut InstanceRng) -> SteinerData {
        SteinerData::ThreeForms(vec![AlternatingThreeForm::random(field, COBLE_VARS, rng)])
    }

    fn assemble(&self, data: &SteinerData) -> Result<SkewPresentation, SteinerError> {
        let w = &three_forms(data, 1, COBLE_VARS, self.kind())?[0];
        let kernel = coordinate_vector(w.field(), COBLE_VARS, COBLE_VARS, 0);
        SkewPresentation::new(self.kind(), contraction_matrix(w), vec![kernel])
    }
}

/// Contraction of a 3-form in 9 variables restricted to
/// `x6 = x7 = x8 = 0`; kernel `(x0, ..., x5, 0, 0, 0)`.
#[derive(Clone, Copy, Debug)]
pub struct CobleRestriction;

impl SteinerConstruction for CobleRestriction {
    fn name(&self) -> &'static str {
        "coble-restriction"
    }

    fn kind(&self) -> SteinerKind {
        SteinerKind::CobleRestriction
    }

    fn sample(&self, field: &CoefficientField, rng: &mut InstanceRng) -> SteinerData {
        SteinerData::ThreeForms(vec![AlternatingThreeForm::random(field, COBLE_VARS, rng)])
    }

    fn assemble(&self, data: &SteinerData) -> Result<SkewPresentation, SteinerError> {
        let w = &three_forms(data, 1, COBLE_VARS, self.kind())?[0];
        let kernel = coordinate_vector(w.field(), FOURFOLD_VARS, COBLE_VARS, 0);
        SkewPresentation::new(self.kind(), contraction_in(w, FOURFOLD_VARS), vec![kernel])
    }
}

/// `[[M1, M2], [M2, M3]]` from three 3-forms in 6 variables; kernels
/// `(x, 0)` and `(0, x)`.
#[derive(Clone, Copy, Debug)]
pub struct TwoTangent;

impl SteinerConstruction for TwoTangent {
    fn name(&self) -> &'static str {
        "two-tangent"
    }

    fn kind(&self) -> SteinerKind {
        SteinerKind::TwoTangent
    }

    fn sample(&self, field: &CoefficientField, rng: &mut InstanceRng) -> SteinerData {
        SteinerData::ThreeForms(
            (0..3)
                .map(|_| AlternatingThreeForm::random(field, FOURFOLD_VARS, rng))
                .collect(),
        )
    }

    fn assemble(&self, data: &SteinerData) -> Result<SkewPresentation, SteinerError> {
        let forms = three_forms(data, 3, FOURFOLD_VARS, self.kind())?;
        let field = forms[0].field();
        let blocks: Vec<_> = forms.iter().map(contraction_matrix).collect();
        let n = FOURFOLD_VARS;
        let m = SkewMatrix::from_fn(2 * n, PolyRing::new(field, n), |i, j| {
            match (i < n, j < n) {
                (true, true) => blocks[0].get(i, j),
                (true, false) => blocks[1].get(i, j - n),
                (false, false) => blocks[2].get(i - n, j - n),
                (false, true) => unreachable!("i < j"),
            }
        })?;
        let kernels = vec![
            coordinate_vector(field, n, 2 * n, 0),
            coordinate_vector(field, n, 2 * n, n),
        ];
        SkewPresentation::new(self.kind(), m, kernels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names() {
        let r = Registry::builtin();
        assert_eq!(
            r.names().collect::<Vec<_>>(),
            [
                "coble-full",
                "coble-restriction",
                "linear-pfaffian",
                "two-tangent"
            ]
        );
        assert!(matches!(
            r.create("coble", &ConstructionOptions::default()),
            Err(SteinerError::UnknownKind(_))
        ));
        let lp = r
            .create("linear-pfaffian", &ConstructionOptions { degree: Some(4) })
            .unwrap();
        assert_eq!(lp.kind(), SteinerKind::LinearPfaffian { degree: 4 });
    }

    #[test]
    fn wrong_data_is_shape_mismatch() {
        let f = CoefficientField::prime(101).unwrap();
        let one = SteinerData::ThreeForms(vec![AlternatingThreeForm::zero(&f, 6)]);
        assert!(matches!(
            TwoTangent.assemble(&one),
            Err(SteinerError::ShapeMismatch(_))
        ));
        assert!(matches!(
            CobleFull.assemble(&one),
            Err(SteinerError::ShapeMismatch(_))
        ));
        assert!(matches!(
            LinearPfaffian { degree: 3 }.assemble(&one),
            Err(SteinerError::ShapeMismatch(_))
        ));
    }
}
