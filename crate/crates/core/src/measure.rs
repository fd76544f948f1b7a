//! σ-finite measure spaces over representable sets, simple E-valued
//! functions and their elementary integral φ(f) = Σ μ(Aᵢ)·aᵢ.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::Partition;
use crate::rat::{one, zero, Rat};
use crate::sets::{BaseSet, LineSet, NSet, RSet};
use crate::spaces::{ElemVal, SimpleFn, SpaceElement, SpaceId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MeasureBase {
    /// counting measure on ℕ
    CountingNat,
    /// Lebesgue measure restricted to [lo, hi)
    Lebesgue { lo: Rat, hi: Rat },
    /// finite set 0..weights.len() with point masses
    FiniteWeighted { weights: Vec<Rat> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureSpace {
    pub id: String,
    pub base: MeasureBase,
}

#[derive(Debug, Error)]
pub enum MeasureError {
    #[error("cell has infinite measure")]
    InfiniteMeasureCell,
    #[error("set does not belong to this base")]
    WrongBase,
    #[error("{0}")]
    Space(#[from] crate::spaces::SpaceError),
}

impl MeasureSpace {
    pub fn counting(id: &str) -> Self {
        MeasureSpace { id: id.to_string(), base: MeasureBase::CountingNat }
    }

    pub fn lebesgue01(id: &str) -> Self {
        MeasureSpace { id: id.to_string(), base: MeasureBase::Lebesgue { lo: zero(), hi: one() } }
    }

    pub fn lebesgue(id: &str, lo: Rat, hi: Rat) -> Self {
        MeasureSpace { id: id.to_string(), base: MeasureBase::Lebesgue { lo, hi } }
    }

    pub fn finite_uniform(id: &str, n: usize) -> Self {
        MeasureSpace {
            id: id.to_string(),
            base: MeasureBase::FiniteWeighted { weights: vec![one(); n] },
        }
    }

    pub fn base_set(&self) -> BaseSet {
        match &self.base {
            MeasureBase::CountingNat => BaseSet::Nat,
            MeasureBase::Lebesgue { lo, hi } => BaseSet::Interval(lo.clone(), hi.clone()),
            MeasureBase::FiniteWeighted { weights } => BaseSet::Fin(weights.len() as u32),
        }
    }

    /// μ(A); None means +∞.
    pub fn measure(&self, set: &RSet) -> Result<Option<Rat>, MeasureError> {
        match (&self.base, set) {
            (MeasureBase::CountingNat, RSet::Nat(s)) => {
                Ok(s.cardinality().map(|c| crate::rat::int(c as i64)))
            }
            (MeasureBase::Lebesgue { lo, hi }, RSet::Line(s)) => {
                let clipped = s.intersect(&LineSet::interval(lo.clone(), hi.clone()));
                // points are null
                Ok(Some(clipped.measure()))
            }
            (MeasureBase::FiniteWeighted { weights }, RSet::Fin(s)) => {
                let mut m = zero();
                for l in s {
                    let w = weights.get(*l as usize).ok_or(MeasureError::WrongBase)?;
                    m += w;
                }
                Ok(Some(m))
            }
            _ => Err(MeasureError::WrongBase),
        }
    }

    /// A ∈ ℐ = {A : μ(A) < ∞}.
    pub fn finite_measure(&self, set: &RSet) -> bool {
        matches!(self.measure(set), Ok(Some(_)))
    }

    /// A canonical partition witnessing σ-finiteness.
    pub fn sigma_finite_partition(&self) -> Partition {
        match &self.base {
            MeasureBase::CountingNat => Partition::nat_singletons(),
            MeasureBase::Lebesgue { lo, hi } => Partition::finite(
                BaseSet::Interval(lo.clone(), hi.clone()),
                vec![RSet::Line(LineSet::interval(lo.clone(), hi.clone()))],
            ),
            MeasureBase::FiniteWeighted { weights } => Partition::finite(
                BaseSet::Fin(weights.len() as u32),
                vec![RSet::Fin((0..weights.len() as u32).collect())],
            ),
        }
    }

    /// The space of simple functions over this measure space with values in
    /// `codomain`.
    pub fn simple_space(&self, codomain: SpaceId) -> SpaceId {
        SpaceId::simple(&self.id, codomain)
    }
}

/// φ(f) = Σ μ(Aᵢ)·aᵢ, exact; the value is independent of the representation
/// because the sum is linear in the terms.
pub fn phi_simple(ms: &MeasureSpace, f: &SimpleFn) -> Result<SpaceElement, MeasureError> {
    let mut acc: Option<SpaceElement> = None;
    for (a, set) in &f.terms {
        let m = ms.measure(set)?.ok_or(MeasureError::InfiniteMeasureCell)?;
        let term = a.scale(&m);
        acc = Some(match acc {
            None => term,
            Some(s) => s.add(&term)?,
        });
    }
    acc.ok_or(MeasureError::WrongBase)
}

/// φ for a simple function known to be the zero representation too.
pub fn phi_simple_or_zero(
    ms: &MeasureSpace,
    f: &SimpleFn,
    codomain: &SpaceId,
) -> Result<SpaceElement, MeasureError> {
    if f.terms.is_empty() {
        return Ok(SpaceElement::zero(codomain));
    }
    phi_simple(ms, f)
}

/// Builds a simple function from (value, set) pairs with membership checks.
pub fn simple_fn(
    ms: &MeasureSpace,
    codomain: &SpaceId,
    terms: Vec<(SpaceElement, RSet)>,
) -> Result<SpaceElement, MeasureError> {
    for (v, s) in &terms {
        if v.space != *codomain {
            return Err(MeasureError::Space(crate::spaces::SpaceError::SpaceMismatch(
                v.space.clone(),
                codomain.clone(),
            )));
        }
        if !ms.finite_measure(s) {
            return Err(MeasureError::InfiniteMeasureCell);
        }
    }
    Ok(SpaceElement::raw(ms.simple_space(codomain.clone()), ElemVal::Simple(SimpleFn::new(terms))))
}

/// Convenience constructors for common sets.
pub fn nat_singleton(n: u64) -> RSet {
    RSet::Nat(NSet::singleton(n))
}

pub fn line_interval(a: Rat, b: Rat) -> RSet {
    RSet::Line(LineSet::interval(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, ratio};
    use crate::spaces::SeqElement;

    #[test]
    fn step_integral_on_unit_interval() {
        // 1·1_{[0,1/2)} + 2·1_{[1/2,1)} integrates to 3/2
        let ms = MeasureSpace::lebesgue01("leb");
        let f = SimpleFn::new(vec![
            (SpaceElement::scalar(one()), line_interval(zero(), ratio(1, 2))),
            (SpaceElement::scalar(int(2)), line_interval(ratio(1, 2), one())),
        ]);
        assert_eq!(phi_simple(&ms, &f).unwrap(), SpaceElement::scalar(ratio(3, 2)));
    }

    #[test]
    fn counting_measure_basis() {
        // e1·1_{{1}} over counting measure integrates to e1
        let ms = MeasureSpace::counting("count");
        let e1 = SpaceElement::seq(SpaceId::C00, SeqElement::basis(1)).unwrap();
        let f = SimpleFn::new(vec![(e1.clone(), nat_singleton(1))]);
        assert_eq!(phi_simple(&ms, &f).unwrap(), e1);
    }

    #[test]
    fn representation_independence() {
        // a·1_A + a·1_B = a·1_{A∪B} for disjoint A, B
        let ms = MeasureSpace::lebesgue01("leb");
        let a = SpaceElement::scalar(ratio(5, 3));
        let split = SimpleFn::new(vec![
            (a.clone(), line_interval(zero(), ratio(1, 4))),
            (a.clone(), line_interval(ratio(1, 4), ratio(2, 3))),
        ]);
        let joined = SimpleFn::new(vec![(a.clone(), line_interval(zero(), ratio(2, 3)))]);
        assert_eq!(phi_simple(&ms, &split).unwrap(), phi_simple(&ms, &joined).unwrap());
    }

    #[test]
    fn infinite_cells_rejected() {
        let ms = MeasureSpace::counting("count");
        let e1 = SpaceElement::seq(SpaceId::C00, SeqElement::basis(1)).unwrap();
        let f = SimpleFn::new(vec![(e1, RSet::Nat(NSet::evens()))]);
        assert!(matches!(phi_simple(&ms, &f), Err(MeasureError::InfiniteMeasureCell)));
    }

    #[test]
    fn point_sets_are_null_for_lebesgue() {
        let ms = MeasureSpace::lebesgue01("leb");
        let f = SimpleFn::new(vec![(
            SpaceElement::scalar(int(7)),
            RSet::Line(LineSet::point(ratio(1, 2))),
        )]);
        assert_eq!(phi_simple(&ms, &f).unwrap(), SpaceElement::scalar(zero()));
    }
}
