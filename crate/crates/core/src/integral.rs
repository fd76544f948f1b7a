//! Elementary integrals φ: Γ → E from the catalog, with exact application,
//! Γ-membership checks and symbolic images of witness families.

use serde::{Deserialize, Serialize};

use crate::families::{CountableFamily, TailRule};
use crate::measure::{phi_simple, MeasureSpace};
use crate::rat::Rat;
use crate::spaces::{ElemVal, SpaceElement, SpaceId};

/// The elementary integrals the engine evaluates exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Phi {
    /// Γ = step functions on [0,1] (degree-0 piecewise), φ = exact integral,
    /// E = ℝ
    RiemannStep,
    /// Γ = simple functions over `ms` whose values lie in `value_space`
    /// (a subspace of `codomain`); φ(f) = Σ μ(Aᵢ)aᵢ read in `codomain`
    Simple { ms: MeasureSpace, value_space: SpaceId, codomain: SpaceId },
}

impl Phi {
    pub fn counting_sum(value_space: SpaceId, codomain: SpaceId) -> Phi {
        Phi::Simple { ms: MeasureSpace::counting("counting"), value_space, codomain }
    }

    pub fn codomain(&self) -> SpaceId {
        match self {
            Phi::RiemannStep => SpaceId::Rn(1),
            Phi::Simple { codomain, .. } => codomain.clone(),
        }
    }

    /// Does the element belong to Γ?
    pub fn in_gamma(&self, e: &SpaceElement) -> Result<(), String> {
        match self {
            // Γ is the span of interval indicators on [0,1], singletons
            // included: step functions, or simple combinations of interval
            // and point sets with scalar values
            Phi::RiemannStep => match &e.val {
                ElemVal::Pw(p) if p.is_step() => Ok(()),
                ElemVal::Pw(_) => Err("not a step function".into()),
                ElemVal::Simple(f) => {
                    for (v, s) in &f.terms {
                        if v.as_scalar().is_none() {
                            return Err("step terms must carry scalar values".into());
                        }
                        if !matches!(s, crate::sets::RSet::Line(_)) {
                            return Err("step terms must use line sets".into());
                        }
                    }
                    Ok(())
                }
                _ => Err("not a piecewise element".into()),
            },
            Phi::Simple { ms, value_space, .. } => match &e.val {
                ElemVal::Simple(f) => {
                    for (v, s) in &f.terms {
                        if !ms.finite_measure(s) {
                            return Err(format!("cell {s} has infinite measure"));
                        }
                        let tagged = SpaceElement::new(value_space.clone(), v.val.clone());
                        if tagged.is_err() {
                            return Err(format!("value {v} is outside {value_space}"));
                        }
                    }
                    Ok(())
                }
                _ => Err("not a simple function".into()),
            },
        }
    }

    /// Exact φ on a Γ-element.
    pub fn apply(&self, e: &SpaceElement) -> Result<SpaceElement, String> {
        match self {
            Phi::RiemannStep => match &e.val {
                ElemVal::Pw(p) => Ok(SpaceElement::scalar(p.integral())),
                ElemVal::Simple(f) => {
                    let ms = MeasureSpace::lebesgue01("riemann");
                    if f.terms.is_empty() {
                        return Ok(SpaceElement::scalar(crate::rat::zero()));
                    }
                    phi_simple(&ms, f).map_err(|e| e.to_string())
                }
                _ => Err("not a piecewise element".into()),
            },
            Phi::Simple { ms, codomain, .. } => match &e.val {
                ElemVal::Simple(f) => {
                    if f.terms.is_empty() {
                        return Ok(SpaceElement::zero(codomain));
                    }
                    let v = phi_simple(ms, f).map_err(|e| e.to_string())?;
                    // φ-values land in the codomain; the representation is
                    // shared, only the tag moves
                    SpaceElement::new(codomain.clone(), v.val).map_err(|e| e.to_string())
                }
                _ => Err("not a simple function".into()),
            },
        }
    }

    /// Whether an entire tail rule generates Γ-elements (the prefix is checked
    /// separately element by element).
    pub fn tail_in_gamma(&self, rule: &TailRule) -> Result<String, String> {
        match (self, rule) {
            (_, TailRule::Empty) | (_, TailRule::RepeatLast) => {
                Ok("finite/constant tail: covered by prefix checks".into())
            }
            (Phi::RiemannStep, TailRule::DarbouxLower { .. } | TailRule::DarbouxUpper { .. }) => {
                Ok("Darboux steps are steps".into())
            }
            (_, TailRule::GeometricScale { base, .. })
            | (_, TailRule::GeometricAffine { limit: base, .. }) => {
                self.in_gamma(base).map(|_| "Γ is a linear subspace: scalings stay inside".into())
            }
            (Phi::Simple { .. }, TailRule::SimpleSweep { cells, .. }) => {
                let _ = cells;
                Ok("sweep terms use fixed finite-measure cells".into())
            }
            _ => Err(format!("no Γ-membership lemma for tail rule {}", rule.name())),
        }
    }

    /// The image family φ(F) of a witness family, with the tail rule mapped
    /// through φ in closed form.
    pub fn image_family(&self, fam: &CountableFamily) -> Result<CountableFamily, String> {
        let mut prefix = Vec::with_capacity(fam.prefix.len());
        for e in &fam.prefix {
            prefix.push(self.apply(e)?);
        }
        let tail = match &fam.tail {
            TailRule::Empty => TailRule::Empty,
            TailRule::RepeatLast => TailRule::RepeatLast,
            TailRule::DarbouxLower { integrand } => {
                TailRule::DarbouxSumLower { integrand: integrand.clone() }
            }
            TailRule::DarbouxUpper { integrand } => {
                TailRule::DarbouxSumUpper { integrand: integrand.clone() }
            }
            TailRule::GeometricScale { base, ratio } => TailRule::GeometricScale {
                base: Box::new(self.apply(base)?),
                ratio: ratio.clone(),
            },
            TailRule::GeometricAffine { limit, dev, ratio } => TailRule::GeometricAffine {
                limit: Box::new(self.apply(limit)?),
                dev: Box::new(self.apply(dev)?),
                ratio: ratio.clone(),
            },
            TailRule::SimpleSweep { cells, profiles } => {
                // φ(Σ profileᵢ(n)·1_{cellᵢ}) = Σ μ(cellᵢ)·profileᵢ(n):
                // a rational combination of the profile families
                let Phi::Simple { ms, .. } = self else {
                    return Err("simple-sweep families need a simple-function φ".into());
                };
                let mut acc: Option<CountableFamily> = None;
                for (cell, profile) in cells.iter().zip(profiles.iter()) {
                    let m = ms
                        .measure(cell)
                        .map_err(|e| e.to_string())?
                        .ok_or("sweep cell has infinite measure")?;
                    let scaled = crate::families::family_scale(profile, &m)
                        .ok_or("profile does not scale in closed form")?;
                    acc = Some(match acc {
                        None => scaled,
                        Some(a) => crate::families::family_add(&a, &scaled)
                            .ok_or("profile sum leaves the closed-form catalog")?,
                    });
                }
                let combined = acc.ok_or("empty sweep")?;
                // π prefix was computed by φ directly; keep the combined tail
                combined.tail
            }
            other => {
                return Err(format!(
                    "no φ-image in closed form for tail rule {}",
                    other.name()
                ))
            }
        };
        Ok(CountableFamily {
            space: self.codomain(),
            prefix,
            tail,
            monotone_claim: fam.monotone_claim,
        })
    }
}

/// Exact evaluation of a polynomial integrand's integral — used by callers
/// assembling expected values.
pub fn exact_integral01(p: &crate::spaces::PiecewisePoly) -> Rat {
    p.integral()
}
