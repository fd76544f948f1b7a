//! Finitely presented countable families and partitions.
//!
//! A countable family is a finite explicit prefix plus a symbolic tail rule
//! from a closed catalog; each rule knows its elements, its monotonicity
//! lemma and its pointwise limit in closed form. Order limits (countable
//! suprema/infima) are computed from the pointwise limit and then checked
//! against the space's membership predicate: in every catalog space the
//! order of functions/sequences is coordinatewise, so a representable
//! pointwise limit of a monotone family is the order limit, and a limit that
//! escapes the representable part of the space certifies that no order limit
//! exists there (no-least-upper-bound lemma) or is reported Unknown when the
//! escape is only a representability gap.

use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rat::{fmt_rat, geometric_tail, int, one, powi, zero, Rat};
use crate::sets::{BaseSet, LineSet, NSet, RSet};
use crate::spaces::{
    compare, lattice_sup, ElemVal, LatticeResult, LineFn, OrderRel, PiecewisePoly, SeqElement,
    SpaceElement, SpaceId,
};
use crate::verdict::{Cert, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Monotone {
    Increasing,
    Decreasing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LimitMode {
    Sup,
    Inf,
}

/// Symbolic tails: each admits closed-form elements, a monotonicity lemma
/// and a closed-form pointwise limit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TailRule {
    /// no tail: the family is its prefix
    Empty,
    /// constant tail repeating the last prefix element
    RepeatLast,
    /// n ↦ scale·ratioⁿ·e_n
    IndexedBasis { scale: Rat, ratio: Rat },
    /// n ↦ (scale/n)·e_n
    ReciprocalBasis { scale: Rat },
    /// n ↦ ratioⁿ·base
    GeometricScale { base: Box<SpaceElement>, ratio: Rat },
    /// n ↦ limit + ratioⁿ·dev
    GeometricAffine { limit: Box<SpaceElement>, dev: Box<SpaceElement>, ratio: Rat },
    /// n ↦ scale·Σ_{m>n+offset} e_m
    TailOnes { scale: Rat, offset: i64 },
    /// n ↦ (a + b/n)·base
    AffineIndex { a: Rat, b: Rat, base: Box<SpaceElement> },
    /// n ↦ from + scale·Σ_{m≤n, m∈set} e_m
    IndicatorPartial { set: NSet, scale: Rat, from: Box<SpaceElement> },
    /// n ↦ lower Darboux step of the integrand on the dyadic grid of depth n
    DarbouxLower { integrand: PiecewisePoly },
    DarbouxUpper { integrand: PiecewisePoly },
    /// n ↦ exact lower/upper Darboux sum at dyadic depth n (scalar families)
    DarbouxSumLower { integrand: PiecewisePoly },
    DarbouxSumUpper { integrand: PiecewisePoly },
    /// n ↦ Σ_{k≤n} tent_k where tent_k peaks at 1/k over the grid {1/i}
    TentPartialSums,
    /// n ↦ line ramp rising 0→1 on [lo·(n+offset), hi·(n+offset)), then 1
    MovingRamp { lo: Rat, hi: Rat, offset: i64 },
    /// n ↦ scale·𝟙_mask(n)·e_n
    MaskedBasis { scale: Rat, mask: NSet },
    /// n ↦ scale·Σ_{m ∈ ((n−1)·block, n·block] ∩ set} e_m
    IndicatorBlock { scale: Rat, set: NSet, block: u64 },
    /// n ↦ (Σⱼ coeffⱼ·ratioⱼⁿ)·base — scalar mixtures of geometric profiles
    GeometricMix { terms: Vec<(Rat, Rat)>, base: Box<SpaceElement> },
    /// n ↦ center + (1/n)·dev
    AffinePair { center: Box<SpaceElement>, dev: Box<SpaceElement> },
    /// n ↦ the 1/n-grid envelope of the unit interval (simple functions whose
    /// cells carry their own indicators)
    GridEnvelopes,
    /// n ↦ Σᵢ profilesᵢ(n)·𝟙_{cellsᵢ} as a simple function over fixed cells
    SimpleSweep { cells: Vec<RSet>, profiles: Vec<CountableFamily> },
}

impl TailRule {
    pub fn name(&self) -> &'static str {
        match self {
            TailRule::Empty => "empty",
            TailRule::RepeatLast => "repeat-last",
            TailRule::IndexedBasis { .. } => "indexed-basis",
            TailRule::ReciprocalBasis { .. } => "reciprocal-basis",
            TailRule::GeometricScale { .. } => "geometric-scale",
            TailRule::GeometricAffine { .. } => "geometric-affine",
            TailRule::TailOnes { .. } => "tail-ones",
            TailRule::AffineIndex { .. } => "affine-index",
            TailRule::IndicatorPartial { .. } => "indicator-partial",
            TailRule::DarbouxLower { .. } => "darboux-lower",
            TailRule::DarbouxUpper { .. } => "darboux-upper",
            TailRule::DarbouxSumLower { .. } => "darboux-sum-lower",
            TailRule::DarbouxSumUpper { .. } => "darboux-sum-upper",
            TailRule::TentPartialSums => "tent-partial-sums",
            TailRule::MovingRamp { .. } => "moving-ramp",
            TailRule::MaskedBasis { .. } => "masked-basis",
            TailRule::IndicatorBlock { .. } => "indicator-block",
            TailRule::GeometricMix { .. } => "geometric-mix",
            TailRule::AffinePair { .. } => "affine-pair",
            TailRule::GridEnvelopes => "grid-envelopes",
            TailRule::SimpleSweep { .. } => "simple-sweep",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountableFamily {
    pub space: SpaceId,
    pub prefix: Vec<SpaceElement>,
    pub tail: TailRule,
    pub monotone_claim: Option<Monotone>,
}

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("monotonicity violated between indices {0} and {1}")]
    MonotonicityViolation(u64, u64),
    #[error("family index {0} out of range")]
    IndexOutOfRange(u64),
    #[error("partition bases differ")]
    BaseMismatch,
    #[error("{0}")]
    Space(#[from] crate::spaces::SpaceError),
    #[error("{0}")]
    Other(String),
}

/// Result of an order-limit computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LimitOutcome {
    /// the order limit exists in the space and equals this element
    Limit(SpaceElement, Cert),
    /// no order limit exists in the space (certified escape)
    NoLimit(Cert),
    Unknown(String),
}

impl LimitOutcome {
    pub fn into_verdict(self) -> Verdict {
        match self {
            LimitOutcome::Limit(v, c) => Verdict::proved(Some(v), c),
            LimitOutcome::NoLimit(c) => Verdict::refuted(c),
            LimitOutcome::Unknown(r) => Verdict::unknown(r),
        }
    }

    pub fn value(&self) -> Option<&SpaceElement> {
        match self {
            LimitOutcome::Limit(v, _) => Some(v),
            _ => None,
        }
    }
}

/// Closed-form pointwise limit of a tail rule.
enum PointwiseLimit {
    Elem(SpaceElement, Cert),
    EscapesSpace(String),
    NotRepresentable(String),
    Unknown(String),
}

impl CountableFamily {
    pub fn finite(space: SpaceId, prefix: Vec<SpaceElement>) -> Self {
        CountableFamily { space, prefix, tail: TailRule::Empty, monotone_claim: None }
    }

    pub fn with_monotone(mut self, m: Monotone) -> Self {
        self.monotone_claim = Some(m);
        self
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.tail, TailRule::Empty)
    }

    /// Element at 1-based index n; None beyond a finite family.
    pub fn element_at(&self, n: u64) -> Option<SpaceElement> {
        assert!(n >= 1);
        if (n as usize) <= self.prefix.len() {
            return Some(self.prefix[(n - 1) as usize].clone());
        }
        let el = match &self.tail {
            TailRule::Empty => return None,
            TailRule::RepeatLast => return self.prefix.last().cloned(),
            TailRule::IndexedBasis { scale, ratio } => {
                let c = scale * powi(ratio, n as i64);
                SpaceElement::raw(
                    self.space.clone(),
                    ElemVal::Seq(SeqElement::basis(n).scale(&c)),
                )
            }
            TailRule::ReciprocalBasis { scale } => {
                let c = scale / int(n as i64);
                SpaceElement::raw(
                    self.space.clone(),
                    ElemVal::Seq(SeqElement::basis(n).scale(&c)),
                )
            }
            TailRule::GeometricScale { base, ratio } => base.scale(&powi(ratio, n as i64)),
            TailRule::GeometricAffine { limit, dev, ratio } => {
                limit.add(&dev.scale(&powi(ratio, n as i64))).ok()?
            }
            TailRule::TailOnes { scale, offset } => {
                let from = (n as i64 + offset + 1).max(1) as u64;
                let ind = SeqElement::indicator(&NSet::from(from), scale);
                SpaceElement::raw(self.space.clone(), ElemVal::Seq(ind))
            }
            TailRule::AffineIndex { a, b, base } => base.scale(&(a + b / int(n as i64))),
            TailRule::IndicatorPartial { set, scale, from } => {
                let upto = NSet::finite((1..=n).filter(|m| set.contains(*m)));
                let ind = SeqElement::indicator(&upto, scale);
                from.add(&SpaceElement::raw(self.space.clone(), ElemVal::Seq(ind))).ok()?
            }
            TailRule::DarbouxLower { integrand } => SpaceElement::raw(
                self.space.clone(),
                ElemVal::Pw(darboux_step(integrand, n as u32, false)),
            ),
            TailRule::DarbouxUpper { integrand } => SpaceElement::raw(
                self.space.clone(),
                ElemVal::Pw(darboux_step(integrand, n as u32, true)),
            ),
            TailRule::DarbouxSumLower { integrand } => {
                SpaceElement::scalar(darboux_sum(integrand, n as u32, false))
            }
            TailRule::DarbouxSumUpper { integrand } => {
                SpaceElement::scalar(darboux_sum(integrand, n as u32, true))
            }
            TailRule::TentPartialSums => {
                SpaceElement::raw(self.space.clone(), ElemVal::Pw(tent_partial_sum(n)))
            }
            TailRule::MovingRamp { lo, hi, offset } => {
                let s = int(n as i64 + offset);
                SpaceElement::raw(
                    self.space.clone(),
                    ElemVal::Line(LineFn::ramp(lo * &s, hi * &s)),
                )
            }
            TailRule::MaskedBasis { scale, mask } => {
                let c = if mask.contains(n) { scale.clone() } else { zero() };
                SpaceElement::raw(
                    self.space.clone(),
                    ElemVal::Seq(SeqElement::basis(n).scale(&c)),
                )
            }
            TailRule::IndicatorBlock { scale, set, block } => {
                let mut acc = SeqElement::zero_elem();
                for m in (n - 1) * block + 1..=n * block {
                    if set.contains(m) {
                        acc = acc.add(&SeqElement::basis(m).scale(scale));
                    }
                }
                SpaceElement::raw(self.space.clone(), ElemVal::Seq(acc))
            }
            TailRule::GeometricMix { terms, base } => {
                let mut c = zero();
                for (coeff, ratio) in terms {
                    c += coeff * powi(ratio, n as i64);
                }
                base.scale(&c)
            }
            TailRule::AffinePair { center, dev } => {
                center.add(&dev.scale(&(one() / int(n as i64)))).ok()?
            }
            TailRule::GridEnvelopes => SpaceElement::raw(
                self.space.clone(),
                ElemVal::Simple(crate::funcdesc::grid_envelope_simple(n)),
            ),
            TailRule::SimpleSweep { cells, profiles } => {
                let mut terms = Vec::new();
                for (cell, profile) in cells.iter().zip(profiles.iter()) {
                    terms.push((profile.element_at(n)?, cell.clone()));
                }
                SpaceElement::raw(
                    self.space.clone(),
                    ElemVal::Simple(crate::spaces::SimpleFn::new(terms)),
                )
            }
        };
        Some(el)
    }

    /// Direction of the tail rule under its side conditions, as a catalog
    /// lemma; None when the rule carries no monotonicity guarantee.
    fn tail_monotone_lemma(&self) -> Option<(Monotone, String)> {
        use Monotone::*;
        let lemma = |m: Monotone, s: &str| Some((m, s.to_string()));
        match &self.tail {
            TailRule::Empty | TailRule::RepeatLast => {
                lemma(Increasing, "constant-tail (both directions)")
            }
            TailRule::IndexedBasis { scale, .. } | TailRule::ReciprocalBasis { scale } => {
                if *scale == zero() {
                    lemma(Increasing, "zero family")
                } else {
                    None
                }
            }
            TailRule::GeometricScale { base, ratio } => {
                let (nonneg, nonpos) = base.sign_summary();
                if *ratio >= zero() && *ratio <= one() && nonneg {
                    lemma(Decreasing, "geometric-scale: 0<=ratio<=1, base>=0")
                } else if *ratio >= zero() && *ratio <= one() && nonpos {
                    lemma(Increasing, "geometric-scale: 0<=ratio<=1, base<=0")
                } else {
                    None
                }
            }
            TailRule::GeometricAffine { dev, ratio, .. } => {
                let (nonneg, nonpos) = dev.sign_summary();
                if *ratio >= zero() && *ratio <= one() && nonneg {
                    lemma(Decreasing, "geometric-affine: deviation >= 0 shrinks")
                } else if *ratio >= zero() && *ratio <= one() && nonpos {
                    lemma(Increasing, "geometric-affine: deviation <= 0 shrinks")
                } else {
                    None
                }
            }
            TailRule::TailOnes { scale, .. } => {
                if *scale >= zero() {
                    lemma(Decreasing, "tail-ones: supports shrink")
                } else {
                    lemma(Increasing, "tail-ones: negative scale")
                }
            }
            TailRule::AffineIndex { b, base, .. } => {
                let (nonneg, nonpos) = base.sign_summary();
                if (*b >= zero() && nonneg) || (*b <= zero() && nonpos) {
                    lemma(Decreasing, "affine-index: b/n shrinks toward a")
                } else if (*b <= zero() && nonneg) || (*b >= zero() && nonpos) {
                    lemma(Increasing, "affine-index: b/n grows toward a")
                } else {
                    None
                }
            }
            TailRule::IndicatorPartial { scale, .. } => {
                if *scale >= zero() {
                    lemma(Increasing, "indicator-partial: supports grow")
                } else {
                    lemma(Decreasing, "indicator-partial: negative scale")
                }
            }
            TailRule::DarbouxLower { .. } | TailRule::DarbouxSumLower { .. } => {
                lemma(Increasing, "darboux: dyadic refinement raises infima")
            }
            TailRule::DarbouxUpper { .. } | TailRule::DarbouxSumUpper { .. } => {
                lemma(Decreasing, "darboux: dyadic refinement lowers suprema")
            }
            TailRule::TentPartialSums => lemma(Increasing, "tents are nonnegative"),
            TailRule::MovingRamp { lo, .. } => {
                if *lo >= zero() {
                    lemma(Decreasing, "moving-ramp: thresholds march right")
                } else {
                    None
                }
            }
            TailRule::MaskedBasis { scale, .. } | TailRule::IndicatorBlock { scale, .. } => {
                if *scale == zero() {
                    lemma(Increasing, "zero family")
                } else {
                    None
                }
            }
            TailRule::AffinePair { dev, .. } => {
                let (nonneg, nonpos) = dev.sign_summary();
                if nonneg {
                    lemma(Decreasing, "affine-pair: dev/n shrinks toward the center")
                } else if nonpos {
                    lemma(Increasing, "affine-pair: dev/n grows toward the center")
                } else {
                    None
                }
            }
            TailRule::GridEnvelopes => {
                // envelopes over incomparable grids carry no monotone lemma
                None
            }
            TailRule::GeometricMix { terms, base } => {
                // decreasing when all profiles shrink with nonneg coefficients
                let (nonneg, nonpos) = base.sign_summary();
                let shrinking = terms
                    .iter()
                    .all(|(c, r)| *c >= zero() && *r >= zero() && *r <= one());
                if shrinking && nonneg {
                    lemma(Decreasing, "geometric-mix: nonnegative shrinking profiles")
                } else if shrinking && nonpos {
                    lemma(Increasing, "geometric-mix: nonpositive base, shrinking profiles")
                } else {
                    None
                }
            }
            TailRule::SimpleSweep { profiles, .. } => {
                let mut dir: Option<Monotone> = None;
                for p in profiles {
                    let sub = CountableFamily {
                        space: p.space.clone(),
                        prefix: p.prefix.clone(),
                        tail: p.tail.clone(),
                        monotone_claim: p.monotone_claim,
                    };
                    let (d, _) = sub.tail_monotone_lemma()?;
                    match dir {
                        None => dir = Some(d),
                        Some(existing) if existing == d => {}
                        _ => return None,
                    }
                }
                dir.map(|d| (d, "sweep over disjoint cells with aligned monotone profiles".to_string()))
            }
        }
    }

    /// Verifies the claimed monotonicity: consecutive prefix pairs exactly,
    /// the prefix/tail seam and a few tail pairs exactly, the rest by the
    /// tail rule's lemma.
    pub fn verify_monotone(&self, probes: u64) -> Result<Cert, FamilyError> {
        let Some(claim) = self.monotone_claim else {
            return Err(FamilyError::Other("family carries no monotonicity claim".into()));
        };
        let want = |rel: OrderRel| match claim {
            Monotone::Increasing => rel.le(),
            Monotone::Decreasing => rel.ge(),
        };
        let end = (self.prefix.len() as u64 + probes).max(2);
        let mut checked = 0usize;
        for n in 1..end {
            let (Some(a), Some(b)) = (self.element_at(n), self.element_at(n + 1)) else {
                break;
            };
            let rel = compare(&a, &b)?;
            if !want(rel) {
                return Err(FamilyError::MonotonicityViolation(n, n + 1));
            }
            checked += 1;
        }
        let rule = if self.is_finite() {
            "finite family: fully enumerated".to_string()
        } else {
            match self.tail_monotone_lemma() {
                Some((dir, name)) if dir == claim || matches!(self.tail, TailRule::Empty | TailRule::RepeatLast) => name,
                Some((_, _)) => {
                    return Err(FamilyError::Other(format!(
                        "tail rule {} is monotone the other way",
                        self.tail.name()
                    )))
                }
                None => {
                    return Err(FamilyError::Other(format!(
                        "tail rule {} carries no monotonicity lemma",
                        self.tail.name()
                    )))
                }
            }
        };
        Ok(Cert::Monotone { checked, rule })
    }

    /// Closed-form pointwise limit of the family (meaningful for monotone
    /// families; the membership side is checked by the caller).
    fn pointwise_limit(&self) -> PointwiseLimit {
        let space = &self.space;
        match &self.tail {
            TailRule::Empty => PointwiseLimit::Unknown("finite family has no tail".into()),
            TailRule::RepeatLast => match self.prefix.last() {
                Some(e) => PointwiseLimit::Elem(
                    e.clone(),
                    Cert::PointwiseLimit { description: "constant tail attains its limit".into() },
                ),
                None => PointwiseLimit::Unknown("empty family".into()),
            },
            TailRule::GeometricScale { base, ratio } => {
                if ratio.abs() < one() {
                    PointwiseLimit::Elem(
                        base.zero_like(),
                        Cert::PointwiseLimit {
                            description: format!("ratio^n·base -> 0 for |ratio| = |{}| < 1", fmt_rat(ratio)),
                        },
                    )
                } else {
                    PointwiseLimit::Unknown("geometric ratio >= 1".into())
                }
            }
            TailRule::GeometricAffine { limit, dev, ratio } => {
                if ratio.abs() < one() {
                    let _ = dev;
                    PointwiseLimit::Elem(
                        (**limit).clone(),
                        Cert::PointwiseLimit {
                            description: format!(
                                "limit + ratio^n·dev -> limit for |ratio| = |{}| < 1",
                                fmt_rat(ratio)
                            ),
                        },
                    )
                } else {
                    PointwiseLimit::Unknown("geometric ratio >= 1".into())
                }
            }
            TailRule::TailOnes { scale, .. } => PointwiseLimit::Elem(
                SpaceElement::zero(space),
                Cert::PointwiseLimit {
                    description: format!(
                        "coordinate m equals {} only while m > n: every coordinate stabilizes at 0",
                        fmt_rat(scale)
                    ),
                },
            ),
            TailRule::AffineIndex { a, base, .. } => PointwiseLimit::Elem(
                base.scale(a),
                Cert::PointwiseLimit { description: "b/n -> 0, limit a·base".into() },
            ),
            TailRule::IndicatorPartial { set, scale, from } => {
                let full = SeqElement::indicator(set, scale);
                let limit = match from.add(&SpaceElement::raw(space.clone(), ElemVal::Seq(full))) {
                    Ok(l) => l,
                    Err(e) => return PointwiseLimit::Unknown(e.to_string()),
                };
                match limit.check_membership() {
                    Ok(()) => PointwiseLimit::Elem(
                        limit,
                        Cert::PointwiseLimit {
                            description: "coordinatewise: partial indicator sums fill the set".into(),
                        },
                    ),
                    Err(_) => PointwiseLimit::EscapesSpace(format!(
                        "pointwise limit {} is not an element of {}",
                        limit, space
                    )),
                }
            }
            TailRule::DarbouxSumLower { integrand } | TailRule::DarbouxSumUpper { integrand } => {
                PointwiseLimit::Elem(
                    SpaceElement::scalar(integrand.integral()),
                    Cert::PointwiseLimit {
                        description: "Darboux sums of a piecewise polynomial converge to its exact integral"
                            .into(),
                    },
                )
            }
            TailRule::DarbouxLower { .. } | TailRule::DarbouxUpper { .. } => {
                PointwiseLimit::NotRepresentable(
                    "limit of Darboux steps is the integrand, not a step".into(),
                )
            }
            TailRule::TentPartialSums => PointwiseLimit::Elem(
                SpaceElement::raw(space.clone(), ElemVal::Pw(PiecewisePoly::constant(one()))),
                Cert::ForcedByContinuity {
                    exceptional: vec![zero()],
                    description: "pointwise limit is 1 on (0,1]; any continuous upper bound is >= 1 at 0 by the left limit, so the constant 1 is the least upper bound"
                        .into(),
                },
            ),
            TailRule::MovingRamp { .. } => PointwiseLimit::Elem(
                SpaceElement::zero(space),
                Cert::PointwiseLimit {
                    description: "ramp thresholds pass any fixed point: every value stabilizes at 0"
                        .into(),
                },
            ),
            TailRule::IndexedBasis { scale, ratio } => {
                if *scale == zero() {
                    PointwiseLimit::Elem(SpaceElement::zero(space), Cert::note("zero family"))
                } else {
                    let _ = ratio;
                    PointwiseLimit::Unknown("indexed-basis families are not monotone".into())
                }
            }
            TailRule::ReciprocalBasis { .. } => {
                PointwiseLimit::Unknown("reciprocal-basis families are not monotone".into())
            }
            TailRule::MaskedBasis { .. } | TailRule::IndicatorBlock { .. } => {
                PointwiseLimit::Unknown("basis-block families are not monotone".into())
            }
            TailRule::AffinePair { center, .. } => PointwiseLimit::Elem(
                (**center).clone(),
                Cert::PointwiseLimit { description: "dev/n -> 0, limit is the center".into() },
            ),
            TailRule::GridEnvelopes => PointwiseLimit::NotRepresentable(
                "grid envelopes tighten toward the diagonal indicator field".into(),
            ),
            TailRule::GeometricMix { terms, base } => {
                if terms.iter().all(|(_, r)| r.abs() < one() || *r == one()) {
                    let stay: Rat =
                        terms.iter().filter(|(_, r)| *r == one()).map(|(c, _)| c.clone()).sum();
                    PointwiseLimit::Elem(
                        base.scale(&stay),
                        Cert::PointwiseLimit {
                            description: "geometric profiles with |ratio|<1 vanish; unit ratios persist"
                                .into(),
                        },
                    )
                } else {
                    PointwiseLimit::Unknown("geometric-mix ratio outside [-1,1]".into())
                }
            }
            TailRule::SimpleSweep { cells, profiles } => {
                let mut terms = Vec::new();
                let mut certs = Vec::new();
                for (cell, profile) in cells.iter().zip(profiles.iter()) {
                    match profile.pointwise_limit() {
                        PointwiseLimit::Elem(v, c) => {
                            terms.push((v, cell.clone()));
                            certs.push(c);
                        }
                        PointwiseLimit::EscapesSpace(b) => {
                            return PointwiseLimit::EscapesSpace(format!(
                                "cell {cell}: {b}"
                            ))
                        }
                        PointwiseLimit::NotRepresentable(r) => {
                            return PointwiseLimit::NotRepresentable(r)
                        }
                        PointwiseLimit::Unknown(r) => return PointwiseLimit::Unknown(r),
                    }
                }
                let limit = SpaceElement::raw(
                    space.clone(),
                    ElemVal::Simple(crate::spaces::SimpleFn::new(terms)),
                );
                match limit.check_membership() {
                    Ok(()) => PointwiseLimit::Elem(limit, Cert::All(certs)),
                    Err(e) => PointwiseLimit::EscapesSpace(e.to_string()),
                }
            }
        }
    }

    /// Exact order limit (countable sup or inf) of the family.
    pub fn order_limit(&self, mode: LimitMode, probes: u64) -> LimitOutcome {
        if self.is_finite() || matches!(self.tail, TailRule::RepeatLast) {
            return self.finite_order_limit(mode);
        }
        // monotone direction must match the mode
        let need = match mode {
            LimitMode::Sup => Monotone::Increasing,
            LimitMode::Inf => Monotone::Decreasing,
        };
        if self.monotone_claim != Some(need) {
            return LimitOutcome::Unknown(format!(
                "order_limit({:?}) needs a verified {:?} claim",
                mode, need
            ));
        }
        let mono = match self.verify_monotone(probes) {
            Ok(c) => c,
            Err(FamilyError::MonotonicityViolation(a, b)) => {
                return LimitOutcome::NoLimit(Cert::ViolationAt {
                    at: format!("indices ({a},{b})"),
                    detail: "monotonicity violated".into(),
                })
            }
            Err(e) => return LimitOutcome::Unknown(e.to_string()),
        };
        match self.pointwise_limit() {
            PointwiseLimit::Elem(v, limit_cert) => {
                // the candidate must bound every element: prefix and seam
                // exactly, tail by the monotone lemma (a monotone family is
                // bounded by its limit once the probes confirm the seam)
                let end = self.prefix.len() as u64 + probes;
                let mut checked = 0usize;
                for n in 1..=end {
                    let Some(e) = self.element_at(n) else { break };
                    let rel = match compare(&e, &v) {
                        Ok(r) => r,
                        Err(e) => return LimitOutcome::Unknown(e.to_string()),
                    };
                    let ok = match mode {
                        LimitMode::Sup => rel.le(),
                        LimitMode::Inf => rel.ge(),
                    };
                    if !ok {
                        return LimitOutcome::NoLimit(Cert::ViolationAt {
                            at: format!("index {n}"),
                            detail: format!("element not bounded by the claimed limit {v}"),
                        });
                    }
                    checked += 1;
                }
                LimitOutcome::Limit(
                    v,
                    Cert::All(vec![
                        mono,
                        Cert::Bound {
                            upper: mode == LimitMode::Sup,
                            checked,
                            rule: self.tail.name().to_string(),
                        },
                        limit_cert,
                    ]),
                )
            }
            PointwiseLimit::EscapesSpace(behavior) => {
                // coordinatewise order: an upper bound in the space would have
                // to dominate the pointwise limit; the no-least-bound lemma of
                // the representable catalog turns the escape into NoLimit
                LimitOutcome::NoLimit(Cert::All(vec![
                    mono,
                    Cert::Escape { behavior },
                    Cert::lemma("no-least-bound-above-escaping-pointwise-limit"),
                ]))
            }
            PointwiseLimit::NotRepresentable(r) => LimitOutcome::Unknown(r),
            PointwiseLimit::Unknown(r) => LimitOutcome::Unknown(r),
        }
    }

    fn finite_order_limit(&self, mode: LimitMode) -> LimitOutcome {
        let n = self.prefix.len();
        if n == 0 {
            return LimitOutcome::Unknown("empty family".into());
        }
        let mut acc = self.prefix[0].clone();
        for e in &self.prefix[1..] {
            let r = match mode {
                LimitMode::Sup => lattice_sup(&acc, e),
                LimitMode::Inf => crate::spaces::lattice_inf(&acc, e),
            };
            match r {
                Ok(LatticeResult::Elem(v)) => acc = v,
                Ok(LatticeResult::NotLattice(why)) => {
                    // fall back to a chain check: a finite totally ordered
                    // family has its max/min as the order limit
                    match self.finite_chain_extremum(mode) {
                        Some(v) => {
                            return LimitOutcome::Limit(
                                v,
                                Cert::note("finite chain: extremum attained"),
                            )
                        }
                        None => return LimitOutcome::Unknown(why),
                    }
                }
                Err(e) => return LimitOutcome::Unknown(e.to_string()),
            }
        }
        LimitOutcome::Limit(acc, Cert::note("finite family: iterated lattice operation"))
    }

    fn finite_chain_extremum(&self, mode: LimitMode) -> Option<SpaceElement> {
        let mut best = self.prefix[0].clone();
        for e in &self.prefix[1..] {
            match compare(e, &best).ok()? {
                OrderRel::Ge | OrderRel::Eq => {
                    if mode == LimitMode::Sup {
                        best = e.clone();
                    }
                }
                OrderRel::Le => {
                    if mode == LimitMode::Inf {
                        best = e.clone();
                    }
                }
                OrderRel::Incomparable => return None,
            }
        }
        Some(best)
    }

    /// Order sum Σ_n a_n: supremum of the partial sums; requires nonnegative
    /// terms (checked on the prefix, by lemma on the tail).
    pub fn order_sum(&self, probes: u64) -> LimitOutcome {
        // nonnegativity of terms
        let end = self.prefix.len() as u64 + 2;
        for n in 1..=end {
            let Some(e) = self.element_at(n) else { break };
            if !e.is_nonneg() {
                return LimitOutcome::Unknown(format!("term {n} is not nonnegative"));
            }
        }
        if !self.tail_terms_nonneg() {
            return LimitOutcome::Unknown("tail terms not certified nonnegative".into());
        }
        // exact prefix partial sums
        let plen = self.prefix.len() as u64;
        let mut acc = match self.element_at(1) {
            Some(e) => e.zero_like(),
            None => return LimitOutcome::Unknown("empty family".into()),
        };
        for n in 1..=plen {
            let Some(e) = self.element_at(n) else { break };
            acc = match acc.add(&e) {
                Ok(v) => v,
                Err(e) => return LimitOutcome::Unknown(e.to_string()),
            };
        }
        match &self.tail {
            TailRule::Empty => LimitOutcome::Limit(
                acc,
                Cert::note("finite sum: supremum of partial sums is the total"),
            ),
            TailRule::GeometricScale { base, ratio } => {
                if ratio.abs() >= one() {
                    if base.is_zero() {
                        return LimitOutcome::Limit(acc, Cert::note("zero tail"));
                    }
                    return LimitOutcome::NoLimit(Cert::SumDiverges {
                        behavior: format!(
                            "geometric terms with ratio {} do not vanish",
                            fmt_rat(ratio)
                        ),
                    });
                }
                let tail_total = geometric_tail(&one(), ratio, plen as i64 + 1);
                let total = match acc.add(&base.scale(&tail_total)) {
                    Ok(v) => v,
                    Err(e) => return LimitOutcome::Unknown(e.to_string()),
                };
                LimitOutcome::Limit(
                    total,
                    Cert::All(vec![
                        Cert::PointwiseLimit {
                            description: "geometric series summed in closed form".into(),
                        },
                        Cert::GeometricDecay { coeff: base.to_string(), ratio: ratio.clone() },
                    ]),
                )
            }
            TailRule::IndexedBasis { scale, ratio } => {
                // partial sums stabilize coordinatewise at scale·ratio^m·e_m
                if *scale == zero() {
                    return LimitOutcome::Limit(acc, Cert::note("zero tail"));
                }
                if *ratio == one() {
                    // limit = acc + scale·1_{m>plen}
                    let ones_from = SeqElement::indicator(&NSet::from(plen + 1), scale);
                    let limit =
                        match acc.add(&SpaceElement::raw(self.space.clone(), ElemVal::Seq(ones_from))) {
                            Ok(v) => v,
                            Err(e) => return LimitOutcome::Unknown(e.to_string()),
                        };
                    match limit.check_membership() {
                        Ok(()) => LimitOutcome::Limit(
                            limit,
                            Cert::PointwiseLimit {
                                description: "coordinate m stabilizes at the m-th term".into(),
                            },
                        ),
                        Err(_) => LimitOutcome::NoLimit(Cert::All(vec![
                            Cert::Escape {
                                behavior: format!("pointwise limit {} escapes {}", limit, self.space),
                            },
                            Cert::lemma("no-least-bound-above-escaping-pointwise-limit"),
                        ])),
                    }
                } else {
                    LimitOutcome::Unknown(
                        "pointwise limit (scale·ratio^m)_m is outside the representable catalog"
                            .into(),
                    )
                }
            }
            TailRule::ReciprocalBasis { .. } => LimitOutcome::Unknown(
                "pointwise limit (scale/m)_m is outside the representable catalog".into(),
            ),
            TailRule::MaskedBasis { scale, mask } => {
                self.indicator_sum_limit(acc, scale, mask, 1, plen)
            }
            TailRule::IndicatorBlock { scale, set, block } => {
                self.indicator_sum_limit(acc, scale, set, *block, plen)
            }
            TailRule::GeometricMix { terms, base } => {
                let mut tail_total = zero();
                for (c, r) in terms {
                    if *c == zero() {
                        continue;
                    }
                    if r.abs() >= one() {
                        if base.is_zero() {
                            continue;
                        }
                        return LimitOutcome::NoLimit(Cert::SumDiverges {
                            behavior: format!(
                                "geometric profile with ratio {} does not vanish",
                                fmt_rat(r)
                            ),
                        });
                    }
                    tail_total += geometric_tail(c, r, plen as i64 + 1);
                }
                match acc.add(&base.scale(&tail_total)) {
                    Ok(total) => LimitOutcome::Limit(
                        total,
                        Cert::PointwiseLimit {
                            description: "geometric mixture summed in closed form".into(),
                        },
                    ),
                    Err(e) => LimitOutcome::Unknown(e.to_string()),
                }
            }
            _ => {
                let _ = probes;
                LimitOutcome::Unknown(format!(
                    "order_sum over tail rule {} is outside the closed-form catalog",
                    self.tail.name()
                ))
            }
        }
    }

    /// Partial sums of basis-indicator terms stabilize coordinatewise; the
    /// limit is the prefix total plus scale·𝟙 of the uncovered part of the set.
    fn indicator_sum_limit(
        &self,
        acc: SpaceElement,
        scale: &Rat,
        set: &NSet,
        block: u64,
        plen: u64,
    ) -> LimitOutcome {
        let from = plen * block + 1;
        let uncovered = set.intersect(&NSet::from(from));
        let ind = SeqElement::indicator(&uncovered, scale);
        let limit = match acc.add(&SpaceElement::raw(self.space.clone(), ElemVal::Seq(ind))) {
            Ok(v) => v,
            Err(e) => return LimitOutcome::Unknown(e.to_string()),
        };
        match limit.check_membership() {
            Ok(()) => LimitOutcome::Limit(
                limit,
                Cert::PointwiseLimit {
                    description: "coordinate m stabilizes once the blocks pass it".into(),
                },
            ),
            Err(_) => LimitOutcome::NoLimit(Cert::All(vec![
                Cert::Escape {
                    behavior: format!(
                        "pointwise limit of the partial sums ({limit}) escapes {}",
                        self.space
                    ),
                },
                Cert::lemma("no-least-bound-above-escaping-pointwise-limit"),
            ])),
        }
    }

    /// Are all tail elements nonnegative (by rule-level side conditions)?
    pub fn tail_nonneg(&self) -> bool {
        self.tail_terms_nonneg()
    }

    fn tail_terms_nonneg(&self) -> bool {
        match &self.tail {
            TailRule::Empty => true,
            TailRule::RepeatLast => self.prefix.last().map(|e| e.is_nonneg()).unwrap_or(true),
            TailRule::IndexedBasis { scale, ratio } => *scale >= zero() && *ratio >= zero(),
            TailRule::ReciprocalBasis { scale } => *scale >= zero(),
            TailRule::GeometricScale { base, ratio } => base.is_nonneg() && *ratio >= zero(),
            TailRule::GeometricAffine { limit, dev, ratio } => {
                limit.is_nonneg() && dev.is_nonneg() && *ratio >= zero()
            }
            TailRule::TailOnes { scale, .. } => *scale >= zero(),
            TailRule::AffineIndex { a, b, base } => {
                base.is_nonneg() && *a >= zero() && *b >= zero()
            }
            TailRule::IndicatorPartial { .. } => false,
            TailRule::DarbouxLower { integrand } | TailRule::DarbouxSumLower { integrand } => {
                integrand.sign_summary().0
            }
            TailRule::DarbouxUpper { integrand } | TailRule::DarbouxSumUpper { integrand } => {
                integrand.sign_summary().0
            }
            TailRule::TentPartialSums => true,
            TailRule::MovingRamp { lo, .. } => *lo >= zero(),
            TailRule::MaskedBasis { scale, .. } => *scale >= zero(),
            TailRule::IndicatorBlock { scale, .. } => *scale >= zero(),
            TailRule::GeometricMix { terms, base } => {
                base.is_nonneg() && terms.iter().all(|(c, r)| *c >= zero() && *r >= zero())
            }
            TailRule::AffinePair { center, dev } => center.is_nonneg() && dev.is_nonneg(),
            TailRule::GridEnvelopes => true,
            TailRule::SimpleSweep { profiles, .. } => {
                profiles.iter().all(|p| p.tail_terms_nonneg())
            }
        }
    }
}

/// c·family, with the tail rule rescaled in closed form.
pub fn family_scale(fam: &CountableFamily, c: &Rat) -> Option<CountableFamily> {
    let prefix = fam.prefix.iter().map(|e| e.scale(c)).collect();
    let tail = match &fam.tail {
        TailRule::Empty => TailRule::Empty,
        TailRule::RepeatLast => TailRule::RepeatLast,
        TailRule::IndexedBasis { scale, ratio } => {
            TailRule::IndexedBasis { scale: scale * c, ratio: ratio.clone() }
        }
        TailRule::ReciprocalBasis { scale } => TailRule::ReciprocalBasis { scale: scale * c },
        TailRule::GeometricScale { base, ratio } => {
            TailRule::GeometricScale { base: Box::new(base.scale(c)), ratio: ratio.clone() }
        }
        TailRule::GeometricAffine { limit, dev, ratio } => TailRule::GeometricAffine {
            limit: Box::new(limit.scale(c)),
            dev: Box::new(dev.scale(c)),
            ratio: ratio.clone(),
        },
        TailRule::TailOnes { scale, offset } => {
            TailRule::TailOnes { scale: scale * c, offset: *offset }
        }
        TailRule::AffineIndex { a, b, base } => {
            TailRule::AffineIndex { a: a.clone(), b: b.clone(), base: Box::new(base.scale(c)) }
        }
        TailRule::IndicatorPartial { set, scale, from } => TailRule::IndicatorPartial {
            set: set.clone(),
            scale: scale * c,
            from: Box::new(from.scale(c)),
        },
        TailRule::MaskedBasis { scale, mask } => {
            TailRule::MaskedBasis { scale: scale * c, mask: mask.clone() }
        }
        TailRule::IndicatorBlock { scale, set, block } => {
            TailRule::IndicatorBlock { scale: scale * c, set: set.clone(), block: *block }
        }
        TailRule::GeometricMix { terms, base } => TailRule::GeometricMix {
            terms: terms.iter().map(|(k, r)| (k * c, r.clone())).collect(),
            base: base.clone(),
        },
        TailRule::AffinePair { center, dev } => TailRule::AffinePair {
            center: Box::new(center.scale(c)),
            dev: Box::new(dev.scale(c)),
        },
        TailRule::GridEnvelopes => return None,
        TailRule::DarbouxLower { integrand } => {
            if *c >= zero() {
                TailRule::DarbouxLower { integrand: integrand.scale(c) }
            } else {
                TailRule::DarbouxUpper { integrand: integrand.scale(c) }
            }
        }
        TailRule::DarbouxUpper { integrand } => {
            if *c >= zero() {
                TailRule::DarbouxUpper { integrand: integrand.scale(c) }
            } else {
                TailRule::DarbouxLower { integrand: integrand.scale(c) }
            }
        }
        TailRule::DarbouxSumLower { integrand } => {
            if *c >= zero() {
                TailRule::DarbouxSumLower { integrand: integrand.scale(c) }
            } else {
                TailRule::DarbouxSumUpper { integrand: integrand.scale(c) }
            }
        }
        TailRule::DarbouxSumUpper { integrand } => {
            if *c >= zero() {
                TailRule::DarbouxSumUpper { integrand: integrand.scale(c) }
            } else {
                TailRule::DarbouxSumLower { integrand: integrand.scale(c) }
            }
        }
        TailRule::SimpleSweep { cells, profiles } => {
            let scaled: Option<Vec<_>> = profiles.iter().map(|p| family_scale(p, c)).collect();
            TailRule::SimpleSweep { cells: cells.clone(), profiles: scaled? }
        }
        TailRule::TentPartialSums | TailRule::MovingRamp { .. } => return None,
    };
    Some(CountableFamily { space: fam.space.clone(), prefix, tail, monotone_claim: None })
}

/// Termwise sum of two families, when the tail rules combine in closed form.
pub fn family_add(a: &CountableFamily, b: &CountableFamily) -> Option<CountableFamily> {
    if a.space != b.space {
        return None;
    }
    let plen = a.prefix.len().max(b.prefix.len());
    let mut prefix = Vec::with_capacity(plen);
    for n in 1..=plen as u64 {
        let ea = a.element_at(n)?;
        let eb = b.element_at(n)?;
        prefix.push(ea.add(&eb).ok()?);
    }
    let tail = add_tails(&a.tail, &b.tail)?;
    Some(CountableFamily { space: a.space.clone(), prefix, tail, monotone_claim: None })
}

fn add_tails(a: &TailRule, b: &TailRule) -> Option<TailRule> {
    use TailRule::*;
    Some(match (a, b) {
        (Empty, Empty) => Empty,
        (RepeatLast, RepeatLast) => RepeatLast,
        (GeometricScale { base: b1, ratio: r1 }, GeometricScale { base: b2, ratio: r2 })
            if r1 == r2 =>
        {
            GeometricScale { base: Box::new(b1.add(b2).ok()?), ratio: r1.clone() }
        }
        (GeometricAffine { limit: l1, dev: d1, ratio: r1 },
         GeometricAffine { limit: l2, dev: d2, ratio: r2 })
            if r1 == r2 =>
        {
            GeometricAffine {
                limit: Box::new(l1.add(l2).ok()?),
                dev: Box::new(d1.add(d2).ok()?),
                ratio: r1.clone(),
            }
        }
        (GeometricScale { base, ratio: r1 }, GeometricAffine { limit, dev, ratio: r2 })
        | (GeometricAffine { limit, dev, ratio: r2 }, GeometricScale { base, ratio: r1 })
            if r1 == r2 =>
        {
            GeometricAffine {
                limit: limit.clone(),
                dev: Box::new(dev.add(base).ok()?),
                ratio: r1.clone(),
            }
        }
        (TailOnes { scale: s1, offset: o1 }, TailOnes { scale: s2, offset: o2 }) if o1 == o2 => {
            TailOnes { scale: s1 + s2, offset: *o1 }
        }
        (
            IndicatorPartial { set: s1, scale: c1, from: f1 },
            IndicatorPartial { set: s2, scale: c2, from: f2 },
        ) => {
            if s1 == s2 {
                IndicatorPartial {
                    set: s1.clone(),
                    scale: c1 + c2,
                    from: Box::new(f1.add(f2).ok()?),
                }
            } else if c1 == c2 && s1.is_disjoint(s2) {
                IndicatorPartial {
                    set: s1.union(s2),
                    scale: c1.clone(),
                    from: Box::new(f1.add(f2).ok()?),
                }
            } else {
                return None;
            }
        }
        (MaskedBasis { scale: c1, mask: m1 }, MaskedBasis { scale: c2, mask: m2 }) if m1 == m2 => {
            MaskedBasis { scale: c1 + c2, mask: m1.clone() }
        }
        (GeometricMix { terms: t1, base: b1 }, GeometricMix { terms: t2, base: b2 })
            if b1 == b2 =>
        {
            let mut terms = t1.clone();
            terms.extend(t2.iter().cloned());
            GeometricMix { terms, base: b1.clone() }
        }
        (IndexedBasis { scale: c1, ratio: r1 }, IndexedBasis { scale: c2, ratio: r2 })
            if r1 == r2 =>
        {
            IndexedBasis { scale: c1 + c2, ratio: r1.clone() }
        }
        (AffineIndex { a: a1, b: b1, base: x1 }, AffineIndex { a: a2, b: b2, base: x2 })
            if a1 == a2 && b1 == b2 =>
        {
            AffineIndex { a: a1.clone(), b: b1.clone(), base: Box::new(x1.add(x2).ok()?) }
        }
        (AffinePair { center: c1, dev: d1 }, AffinePair { center: c2, dev: d2 }) => AffinePair {
            center: Box::new(c1.add(c2).ok()?),
            dev: Box::new(d1.add(d2).ok()?),
        },
        _ => return None,
    })
}

/// Exact lower/upper Darboux step of a piecewise polynomial on the dyadic
/// grid of depth `depth` (cells [i/2ⁿ, (i+1)/2ⁿ)), refined by the integrand's
/// own breakpoints so each cell's extremum is vertex-exact.
pub fn darboux_step(f: &PiecewisePoly, depth: u32, upper: bool) -> PiecewisePoly {
    let n = 1u64 << depth.min(24);
    let w = powi(&int(2), -(depth.min(24) as i64));
    let mut cuts = Vec::with_capacity(n as usize + 1);
    let mut values = Vec::with_capacity(n as usize);
    for i in 0..n {
        let lo = int(i as i64) * &w;
        let hi = int((i + 1) as i64) * &w;
        values.push(cell_extremum(f, &lo, &hi, upper));
        cuts.push(lo);
    }
    cuts.push(one());
    PiecewisePoly::step(cuts, values).expect("dyadic grid is valid")
}

fn cell_extremum(f: &PiecewisePoly, lo: &Rat, hi: &Rat, upper: bool) -> Rat {
    // split the cell at the integrand's breakpoints inside it
    let mut marks = vec![lo.clone()];
    for b in f.breaks() {
        if b > lo && b < hi {
            marks.push(b.clone());
        }
    }
    marks.push(hi.clone());
    let mut best: Option<Rat> = None;
    for w in marks.windows(2) {
        let piece = f.pieces()[piece_index_of(f, &w[0])].clone();
        let v = if upper { piece.max_on(&w[0], &w[1]) } else { piece.min_on(&w[0], &w[1]) };
        best = Some(match best {
            None => v,
            Some(b) => {
                if upper {
                    b.max(v)
                } else {
                    b.min(v)
                }
            }
        });
    }
    best.expect("cell has at least one piece")
}

fn piece_index_of(f: &PiecewisePoly, x: &Rat) -> usize {
    let mut idx = 0;
    for (i, b) in f.breaks().iter().enumerate().take(f.pieces().len()) {
        if b <= x {
            idx = i;
        }
    }
    idx
}

/// Exact Darboux sum at dyadic depth; O(pieces) using power-sum formulas for
/// monotone integrands, falling back to per-cell extremes otherwise.
pub fn darboux_sum(f: &PiecewisePoly, depth: u32, upper: bool) -> Rat {
    let n: u64 = 1 << depth.min(40);
    let w = powi(&int(2), -(depth as i64));
    // fast exact path: integrand monotone on each of its pieces and the grid
    // refines the breakpoints: per-cell extremum is at a cell endpoint
    if let Some(total) = darboux_sum_monotone(f, depth, upper) {
        return total;
    }
    // general exact path (materializes the grid)
    let mut acc = zero();
    for i in 0..n {
        let lo = int(i as i64) * &w;
        let hi = int((i + 1) as i64) * &w;
        acc += cell_extremum(f, &lo, &hi, upper) * &w;
    }
    acc
}

fn darboux_sum_monotone(f: &PiecewisePoly, depth: u32, upper: bool) -> Option<Rat> {
    let w = powi(&int(2), -(depth as i64));
    let n_total: u64 = 1 << depth;
    // breakpoints must lie on the grid
    for b in f.breaks() {
        let scaled = b / &w;
        if !scaled.is_integer() {
            return None;
        }
    }
    let mut acc = zero();
    for (pi, piece) in f.pieces().iter().enumerate() {
        let lo = &f.breaks()[pi];
        let hi = &f.breaks()[pi + 1];
        let i0: u64 = {
            let q = lo / &w;
            let v = q.to_integer();
            u64::try_from(v).ok()?
        };
        let i1: u64 = {
            let q = hi / &w;
            let v = q.to_integer();
            u64::try_from(v).ok()?
        };
        if i1 > n_total {
            return None;
        }
        // monotone on the piece iff the derivative has constant sign there
        let d = piece.derivative();
        let incr = d.min_on(lo, hi) >= zero();
        let decr = d.max_on(lo, hi) <= zero();
        if !incr && !decr {
            return None;
        }
        // extremum at the left endpoint of each cell when (incr, lower) or
        // (decr, upper); at the right endpoint otherwise
        let left = incr != upper;
        let count = i1 - i0;
        // Σ over cells i0..i1 of piece(cell endpoint)·w, endpoint = (i+δ)·w
        let delta = if left { zero() } else { one() };
        // piece(c0 + c1 x + c2 x²) at x = (i+δ)w: expand exactly in power sums
        let c = &piece.c;
        let s0 = int(count as i64);
        // Σ (i+δ) for i in i0..i1 = Σ i + count·δ (with Σ i over the range)
        let sum_i_range = crate::rat::sum_i(i1) - crate::rat::sum_i(i0);
        let sum_i2_range = crate::rat::sum_i2(i1) - crate::rat::sum_i2(i0);
        let s1 = &sum_i_range + &s0 * &delta;
        let s2 = &sum_i2_range + int(2) * &delta * &sum_i_range + &s0 * &delta * &delta;
        let total_piece =
            (&c[0] * &s0 + &c[1] * &w * &s1 + &c[2] * &w * &w * &s2) * &w;
        acc += total_piece;
    }
    Some(acc)
}

/// Partial sums of the tent functions peaking at 1/k: constant 1 on [1/n, 1],
/// a ramp on [1/(n+1), 1/n), zero before.
pub fn tent_partial_sum(n: u64) -> PiecewisePoly {
    let inv_n1 = one() / int((n + 1) as i64);
    let inv_n = one() / int(n as i64);
    if n == 0 {
        return PiecewisePoly::zero_elem();
    }
    let xs = if inv_n == one() {
        vec![zero(), inv_n1, one()]
    } else {
        vec![zero(), inv_n1.clone(), inv_n.clone(), one()]
    };
    let ys = if xs.len() == 3 {
        vec![zero(), zero(), one()]
    } else {
        vec![zero(), zero(), one(), one()]
    };
    PiecewisePoly::linear_interp(&xs, &ys).expect("tent nodes increase")
}

/// The n-th tent: peak 1 at 1/n, zero at the other grid points 1/i, affine in
/// between (and zero at 0).
pub fn tent(n: u64) -> PiecewisePoly {
    assert!(n >= 1);
    tent_partial_sum(n)
        .sub(&tent_partial_sum(n - 1))
}

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

/// Symbolic tail of a countable partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CellTail {
    /// finite partition: the prefix is all of it
    None,
    /// cells {start}, {start+1}, … of ℕ
    Singletons { start: u64 },
    /// cells {start+(k−1)w, …, start+kw−1} of ℕ
    Blocks { start: u64, width: u64 },
    /// cells [anchor·ratioⁿ, anchor·ratioⁿ⁻¹) for n = 1, 2, … marching to 0
    GeomShrink { anchor: Rat, ratio: Rat },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub base: BaseSet,
    pub prefix: Vec<RSet>,
    pub tail: CellTail,
}

impl Partition {
    pub fn finite(base: BaseSet, cells: Vec<RSet>) -> Self {
        Partition { base, prefix: cells, tail: CellTail::None }
    }

    /// All singleton cells of ℕ.
    pub fn nat_singletons() -> Self {
        Partition { base: BaseSet::Nat, prefix: vec![], tail: CellTail::Singletons { start: 1 } }
    }

    /// {0} plus dyadic cells [2^{-n-1}, 2^{-n}) of [0,1).
    pub fn dyadic_shrink01() -> Self {
        Partition {
            base: BaseSet::Interval(zero(), one()),
            prefix: vec![RSet::Line(LineSet::point(zero()))],
            tail: CellTail::GeomShrink { anchor: one(), ratio: crate::rat::ratio(1, 2) },
        }
    }

    /// {0} plus cells [anchor·rⁿ, anchor·rⁿ⁻¹) of [0, anchor·r⁰) = [0,1)-style bases.
    pub fn geometric_shrink(base: BaseSet, anchor: Rat, ratio: Rat) -> Self {
        Partition {
            base,
            prefix: vec![RSet::Line(LineSet::point(zero()))],
            tail: CellTail::GeomShrink { anchor, ratio },
        }
    }

    pub fn cell_at(&self, n: u64) -> Option<RSet> {
        assert!(n >= 1);
        if (n as usize) <= self.prefix.len() {
            return Some(self.prefix[(n - 1) as usize].clone());
        }
        let k = n - self.prefix.len() as u64; // 1-based index into the tail
        match &self.tail {
            CellTail::None => None,
            CellTail::Singletons { start } => Some(RSet::Nat(NSet::singleton(start + k - 1))),
            CellTail::Blocks { start, width } => Some(RSet::Nat(NSet::finite(
                start + (k - 1) * width..start + k * width,
            ))),
            CellTail::GeomShrink { anchor, ratio } => {
                let hi = anchor * powi(ratio, k as i64 - 1);
                let lo = anchor * powi(ratio, k as i64);
                Some(RSet::Line(LineSet::interval(lo, hi)))
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.tail, CellTail::None)
    }

    /// Checks disjointness and exact cover of the base (prefix exactly, tail
    /// symbolically).
    pub fn verify(&self) -> Result<Cert, FamilyError> {
        // prefix pairwise disjoint
        for i in 0..self.prefix.len() {
            for j in i + 1..self.prefix.len() {
                if !self.prefix[i].is_disjoint(&self.prefix[j]) {
                    return Err(FamilyError::Other(format!(
                        "cells {} and {} overlap",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let prefix_union = self.union_prefix()?;
        match &self.tail {
            CellTail::None => {
                let full = self.base.full_rset();
                if prefix_union.is_subset(&full) && full.is_subset(&prefix_union) {
                    Ok(Cert::note("finite partition: exact cover checked"))
                } else {
                    Err(FamilyError::Other("cells do not cover the base".into()))
                }
            }
            CellTail::Singletons { start } | CellTail::Blocks { start, .. } => {
                if self.base != BaseSet::Nat {
                    return Err(FamilyError::BaseMismatch);
                }
                let below = RSet::Nat(NSet::finite(1..*start));
                let above = RSet::Nat(NSet::from(*start));
                let covers = prefix_union.is_subset(&below) && below.is_subset(&prefix_union);
                let disj = self.prefix.iter().all(|c| c.is_disjoint(&above));
                if covers && disj {
                    Ok(Cert::note("prefix covers below the indexed tail exactly"))
                } else {
                    Err(FamilyError::Other("prefix and indexed tail misaligned".into()))
                }
            }
            CellTail::GeomShrink { anchor, ratio } => {
                if *ratio <= zero() || *ratio >= one() || *anchor <= zero() {
                    return Err(FamilyError::Other("geometric tail needs 0<ratio<1, anchor>0".into()));
                }
                let BaseSet::Interval(lo, hi) = &self.base else {
                    return Err(FamilyError::BaseMismatch);
                };
                // tail cells tile (0, anchor); the prefix must cover the rest,
                // which is {0} ∪ [anchor, hi), and stay out of (0, anchor)
                if lo != &zero() || anchor > hi {
                    return Err(FamilyError::Other("geometric tail must sit at the left end".into()));
                }
                let rest = if anchor == hi {
                    RSet::Line(LineSet::point(zero()))
                } else {
                    RSet::Line(
                        LineSet::point(zero()).union(&LineSet::interval(anchor.clone(), hi.clone())),
                    )
                };
                let covers = prefix_union.is_subset(&rest) && rest.is_subset(&prefix_union);
                // disjointness from the open region (0,anchor): intersection with
                // [0,anchor) must be at most the point 0
                let tail_region = LineSet::interval(zero(), anchor.clone());
                let disj = self.prefix.iter().all(|c| match c {
                    RSet::Line(ls) => {
                        let ix = ls.intersect(&tail_region);
                        ix.is_null() && ix.points().iter().all(|p| *p == zero())
                    }
                    _ => false,
                });
                if covers && disj {
                    Ok(Cert::note("geometric tail tiles (0,anchor); prefix covers the rest"))
                } else {
                    Err(FamilyError::Other("prefix and geometric tail misaligned".into()))
                }
            }
        }
    }

    fn union_prefix(&self) -> Result<RSet, FamilyError> {
        let mut acc = match &self.base {
            BaseSet::Nat => RSet::Nat(NSet::empty()),
            BaseSet::Interval(..) => RSet::Line(LineSet::empty()),
            BaseSet::Fin(_) => RSet::Fin(Default::default()),
        };
        for c in &self.prefix {
            acc = acc.union(c).ok_or(FamilyError::BaseMismatch)?;
        }
        Ok(acc)
    }

    /// Cells of this partition clipped below the Nat threshold `n0`.
    fn nat_cells_below(&self, n0: u64) -> Option<Vec<RSet>> {
        let window = RSet::Nat(NSet::finite(1..n0));
        let mut out = Vec::new();
        match &self.tail {
            CellTail::None | CellTail::Singletons { .. } | CellTail::Blocks { .. } => {
                for c in &self.prefix {
                    let clipped = c.intersect(&window)?;
                    if !clipped.is_empty() {
                        out.push(clipped);
                    }
                }
                match &self.tail {
                    CellTail::Singletons { start } => {
                        for n in *start..n0 {
                            out.push(RSet::Nat(NSet::singleton(n)));
                        }
                    }
                    CellTail::Blocks { start, width } => {
                        let mut k = 1u64;
                        while start + (k - 1) * width < n0 {
                            let cell = NSet::finite(start + (k - 1) * width..start + k * width);
                            let clipped = RSet::Nat(cell).intersect(&window)?;
                            if !clipped.is_empty() {
                                out.push(clipped);
                            }
                            k += 1;
                        }
                    }
                    _ => {}
                }
                Some(out)
            }
            CellTail::GeomShrink { .. } => None,
        }
    }

    /// Common refinement (pairwise intersections, diagonal order, empties
    /// dropped). Supported shapes: finite×finite, anything involving
    /// singleton tails on ℕ, matching geometric tails, and geometric×finite.
    pub fn refine(&self, other: &Partition) -> Result<Partition, FamilyError> {
        if self.base != other.base {
            return Err(FamilyError::BaseMismatch);
        }
        match (&self.tail, &other.tail) {
            (CellTail::None, CellTail::None) => {
                let mut cells = Vec::new();
                for a in &self.prefix {
                    for b in &other.prefix {
                        let c = a.intersect(b).ok_or(FamilyError::BaseMismatch)?;
                        if !c.is_empty() {
                            cells.push(c);
                        }
                    }
                }
                Ok(Partition::finite(self.base.clone(), cells))
            }
            (CellTail::Blocks { start: s1, width: w1 }, CellTail::Blocks { start: s2, width: w2 })
                if s1 == s2 && w1 == w2 && self.prefix == other.prefix =>
            {
                Ok(self.clone())
            }
            (CellTail::Singletons { start }, _) | (_, CellTail::Singletons { start }) => {
                let other_start = match (&self.tail, &other.tail) {
                    (CellTail::Singletons { start: a }, CellTail::Singletons { start: b }) => {
                        *a.max(b)
                    }
                    _ => *start,
                };
                // beyond n0, both partitions' cells intersect to singletons
                let n0 = other_start
                    .max(self.prefix.len() as u64 + 1)
                    .max(other.prefix.len() as u64 + 1)
                    .max(match (&self.tail, &other.tail) {
                        (CellTail::Blocks { start, .. }, _) | (_, CellTail::Blocks { start, .. }) => {
                            *start
                        }
                        _ => 1,
                    });
                let left = self
                    .nat_cells_below(n0)
                    .ok_or_else(|| FamilyError::Other("unsupported refinement shape".into()))?;
                let right = other
                    .nat_cells_below(n0)
                    .ok_or_else(|| FamilyError::Other("unsupported refinement shape".into()))?;
                let mut cells = Vec::new();
                for a in &left {
                    for b in &right {
                        let c = a.intersect(b).ok_or(FamilyError::BaseMismatch)?;
                        if !c.is_empty() {
                            cells.push(c);
                        }
                    }
                }
                Ok(Partition {
                    base: BaseSet::Nat,
                    prefix: cells,
                    tail: CellTail::Singletons { start: n0 },
                })
            }
            (
                CellTail::GeomShrink { anchor: a1, ratio: r1 },
                CellTail::GeomShrink { anchor: a2, ratio: r2 },
            ) if a1 == a2 && r1 == r2 => {
                // identical tails: refine the prefixes against each other and
                // keep the shared tail (its cells already coincide)
                let mut cells = Vec::new();
                for a in &self.prefix {
                    for b in &other.prefix {
                        let c = a.intersect(b).ok_or(FamilyError::BaseMismatch)?;
                        if !c.is_empty() {
                            cells.push(c);
                        }
                    }
                }
                Ok(Partition {
                    base: self.base.clone(),
                    prefix: cells,
                    tail: self.tail.clone(),
                })
            }
            (CellTail::GeomShrink { .. }, CellTail::None) => refine_geom_finite(self, other),
            (CellTail::None, CellTail::GeomShrink { .. }) => refine_geom_finite(other, self),
            _ => Err(FamilyError::Other(
                "refinement of these tail shapes is outside the catalog".into(),
            )),
        }
    }

    /// Proved iff every cell of `self` is contained in some cell of `coarser`.
    pub fn is_refinement_of(&self, coarser: &Partition) -> Verdict {
        if self.base != coarser.base {
            return Verdict::unknown("partition bases differ");
        }
        // prefix cells: exact containment search among the coarser cells
        // (prefix plus enough tail cells to cover the search)
        for (i, c) in self.prefix.iter().enumerate() {
            if !cell_contained_somewhere(c, coarser) {
                return Verdict::refuted(Cert::ViolationAt {
                    at: format!("cell {}", i + 1),
                    detail: format!("cell {c} is not inside any coarser cell"),
                });
            }
        }
        match (&self.tail, &coarser.tail) {
            (CellTail::None, _) => {
                Verdict::proved(None, Cert::note("all cells checked exactly"))
            }
            (CellTail::Singletons { start }, _) => {
                // a singleton {n} is inside some coarser cell iff the coarser
                // partition covers ℕ — it does by contract; verify on a window
                // plus the structural argument
                let upto = start + 8;
                for n in *start..upto {
                    let c = RSet::Nat(NSet::singleton(n));
                    if !cell_contained_somewhere(&c, coarser) {
                        return Verdict::refuted(Cert::ViolationAt {
                            at: format!("singleton {{{n}}}"),
                            detail: "not inside any coarser cell".into(),
                        });
                    }
                }
                Verdict::proved(
                    None,
                    Cert::All(vec![
                        Cert::note("singleton tail: window checked exactly"),
                        Cert::lemma("singletons-live-inside-any-partition"),
                    ]),
                )
            }
            (
                CellTail::GeomShrink { anchor: a1, ratio: r1 },
                CellTail::GeomShrink { anchor: a2, ratio: r2 },
            ) => {
                // tail cell [a1·r1^n, a1·r1^{n-1}) must fit in a coarser tail
                // cell [a2·r2^m, a2·r2^{m-1}) for some m; with a shared anchor
                // and r1 = r2^k this holds structurally
                let aligned = a1 == a2 && power_of(r1, r2).is_some();
                if aligned {
                    Verdict::proved(None, Cert::lemma("geometric tails align"))
                } else {
                    Verdict::unknown("geometric tails not alignable in closed form")
                }
            }
            _ => Verdict::unknown("tail shapes outside the refinement catalog"),
        }
    }
}

fn refine_geom_finite(geom: &Partition, fin: &Partition) -> Result<Partition, FamilyError> {
    let CellTail::GeomShrink { anchor, ratio } = &geom.tail else { unreachable!() };
    // tail cells eventually sit inside the finite cell whose region contains
    // (0, δ); find δ = the smallest positive mark of the finite partition
    let mut delta: Option<Rat> = None;
    for c in &fin.prefix {
        if let RSet::Line(ls) = c {
            for (a, b) in ls.intervals() {
                for m in [a, b] {
                    if *m > zero() {
                        delta = Some(match delta {
                            None => m.clone(),
                            Some(d) => d.min(m.clone()),
                        });
                    }
                }
            }
        }
    }
    let delta = delta.ok_or_else(|| FamilyError::Other("no positive mark".into()))?;
    // fold tail cells into the prefix until the cell right end <= delta
    let mut folded = geom.clone();
    let mut k = 1i64;
    while anchor * powi(ratio, k - 1) > delta {
        let hi = anchor * powi(ratio, k - 1);
        let lo = anchor * powi(ratio, k);
        folded.prefix.push(RSet::Line(LineSet::interval(lo, hi)));
        k += 1;
        if k > 4096 {
            return Err(FamilyError::Other("geometric folding did not terminate".into()));
        }
    }
    folded.tail = CellTail::GeomShrink { anchor: anchor * powi(ratio, k - 1), ratio: ratio.clone() };
    // now every remaining tail cell is inside one finite cell; refine prefixes
    let mut cells = Vec::new();
    for a in &folded.prefix {
        for b in &fin.prefix {
            let c = a.intersect(b).ok_or(FamilyError::BaseMismatch)?;
            if !c.is_empty() {
                cells.push(c);
            }
        }
    }
    Ok(Partition { base: geom.base.clone(), prefix: cells, tail: folded.tail })
}

fn cell_contained_somewhere(c: &RSet, p: &Partition) -> bool {
    for (i, cell) in p.prefix.iter().enumerate() {
        let _ = i;
        if c.is_subset(cell) {
            return true;
        }
    }
    // probe a window of tail cells
    let start = p.prefix.len() as u64 + 1;
    for n in start..start + 64 {
        match p.cell_at(n) {
            Some(cell) => {
                if c.is_subset(&cell) {
                    return true;
                }
            }
            None => break,
        }
    }
    false
}

/// r1 = r2^k for a positive integer k?
fn power_of(r1: &Rat, r2: &Rat) -> Option<u32> {
    let mut acc = r2.clone();
    for k in 1..=64 {
        if acc == *r1 {
            return Some(k);
        }
        acc *= r2;
    }
    None
}

/// Convenience: scalar family in ℝ (= Rn(1)).
pub fn scalar_family(values: Vec<Rat>, tail: TailRule) -> CountableFamily {
    CountableFamily {
        space: SpaceId::Rn(1),
        prefix: values.into_iter().map(SpaceElement::scalar).collect(),
        tail,
        monotone_claim: None,
    }
}

/// Convenience: the family of simple functions over a fixed cell list whose
/// values come from per-cell scalar profiles is assembled by gallery code;
/// here we only expose the cell-value family of a lateral witness as a
/// first-class CountableFamily.
pub fn family_from_elements(space: SpaceId, elems: Vec<SpaceElement>) -> CountableFamily {
    CountableFamily::finite(space, elems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;
    use crate::spaces::Poly2;

    fn seq(space: SpaceId, s: SeqElement) -> SpaceElement {
        SpaceElement::raw(space, ElemVal::Seq(s))
    }

    #[test]
    fn partial_sums_of_basis_reach_ones_in_c() {
        // Σ e_n in c: prefix 3 explicit, tail e_n; sup of partial sums = 1
        let fam = CountableFamily {
            space: SpaceId::C,
            prefix: (1..=3).map(|n| seq(SpaceId::C, SeqElement::basis(n))).collect(),
            tail: TailRule::IndexedBasis { scale: one(), ratio: one() },
            monotone_claim: None,
        };
        match fam.order_sum(8) {
            LimitOutcome::Limit(v, _) => {
                assert_eq!(v, seq(SpaceId::C, SeqElement::ones()));
            }
            other => panic!("expected a limit, got {other:?}"),
        }
    }

    #[test]
    fn evens_partial_sums_escape_c() {
        // Σ e_{2n}: pointwise limit 1_evens is not eventually constant
        let fam = CountableFamily {
            space: SpaceId::C,
            prefix: vec![seq(SpaceId::C, SeqElement::basis(2))],
            tail: TailRule::Empty,
            monotone_claim: None,
        };
        let _ = fam;
        // modeled via indicator-partial order_limit below
        let fam2 = CountableFamily {
            space: SpaceId::C,
            prefix: vec![],
            tail: TailRule::IndicatorPartial {
                set: NSet::evens(),
                scale: one(),
                from: Box::new(SpaceElement::zero(&SpaceId::C)),
            },
            monotone_claim: Some(Monotone::Increasing),
        };
        match fam2.order_limit(LimitMode::Sup, 6) {
            LimitOutcome::NoLimit(c) => {
                let txt = serde_json::to_string(&c).unwrap();
                assert!(txt.contains("escape") || txt.contains("Escape"));
            }
            other => panic!("expected NoLimit, got {other:?}"),
        }
    }

    #[test]
    fn tail_ones_decreases_to_zero() {
        // 2·Σ_{m>n} e_m ↓ 0 in c
        let fam = CountableFamily {
            space: SpaceId::C,
            prefix: vec![],
            tail: TailRule::TailOnes { scale: int(2), offset: 0 },
            monotone_claim: Some(Monotone::Decreasing),
        };
        match fam.order_limit(LimitMode::Inf, 6) {
            LimitOutcome::Limit(v, _) => assert!(v.is_zero()),
            other => panic!("expected limit 0, got {other:?}"),
        }
    }

    #[test]
    fn darboux_sums_for_x_match_closed_form() {
        let f = PiecewisePoly::from_poly(Poly2::x());
        for depth in [1u32, 3, 7] {
            let lower = darboux_sum(&f, depth, false);
            let upper = darboux_sum(&f, depth, true);
            let n = int(1i64 << depth);
            assert_eq!(lower, (&n - one()) / (int(2) * &n));
            assert_eq!(upper, (&n + one()) / (int(2) * &n));
            assert_eq!(&upper - &lower, powi(&ratio(1, 2), depth as i64));
        }
        // enumerated path agrees with the power-sum path
        let lower_steps = darboux_step(&f, 4, false);
        assert_eq!(lower_steps.integral(), darboux_sum(&f, 4, false));
    }

    #[test]
    fn darboux_sums_for_x_squared() {
        let f = PiecewisePoly::from_poly(Poly2::x_squared());
        // lower sum at depth n: (1 - 2^{-n})(2 - 2^{-n})/6
        for depth in [1u32, 2, 5] {
            let h = powi(&ratio(1, 2), depth as i64);
            let expect = (one() - &h) * (int(2) - &h) / int(6);
            assert_eq!(darboux_sum(&f, depth, false), expect);
        }
    }

    #[test]
    fn geometric_series_order_sum() {
        // Σ 2^{-n}·e1 = e1 (counting-measure Bochner example)
        let fam = CountableFamily {
            space: SpaceId::C00,
            prefix: vec![],
            tail: TailRule::GeometricScale {
                base: Box::new(seq(SpaceId::C00, SeqElement::basis(1))),
                ratio: ratio(1, 2),
            },
            monotone_claim: None,
        };
        match fam.order_sum(4) {
            LimitOutcome::Limit(v, _) => {
                assert_eq!(v, seq(SpaceId::C00, SeqElement::basis(1)));
            }
            other => panic!("expected e1, got {other:?}"),
        }
    }

    #[test]
    fn tent_sums_force_the_constant_one() {
        let fam = CountableFamily {
            space: SpaceId::Pl01,
            prefix: vec![],
            tail: TailRule::TentPartialSums,
            monotone_claim: Some(Monotone::Increasing),
        };
        match fam.order_limit(LimitMode::Sup, 5) {
            LimitOutcome::Limit(v, cert) => {
                assert_eq!(
                    v,
                    SpaceElement::raw(SpaceId::Pl01, ElemVal::Pw(PiecewisePoly::constant(one())))
                );
                let txt = serde_json::to_string(&cert).unwrap();
                assert!(txt.contains("ForcedByContinuity"));
            }
            other => panic!("expected 1, got {other:?}"),
        }
    }

    #[test]
    fn tents_sum_to_indicator_pointwise() {
        // tent_k evaluations: tent_2 peaks at 1/2
        let t2 = tent(2);
        assert_eq!(t2.eval(&ratio(1, 2)).unwrap(), one());
        assert_eq!(t2.eval(&one()).unwrap(), zero());
        assert_eq!(t2.eval(&ratio(1, 3)).unwrap(), zero());
        // partial sum s_3 is 1 on [1/3, 1]
        let s3 = tent_partial_sum(3);
        assert_eq!(s3.eval(&ratio(1, 3)).unwrap(), one());
        assert_eq!(s3.eval(&one()).unwrap(), one());
        assert_eq!(s3.eval(&ratio(1, 8)).unwrap(), zero());
    }

    #[test]
    fn refine_finite_partitions() {
        // {evens, odds} ∧ {{1}, ℕ∖{1}} = {evens, {1}, odds∖{1}}
        let p = Partition::finite(
            BaseSet::Nat,
            vec![RSet::Nat(NSet::evens()), RSet::Nat(NSet::odds())],
        );
        let q = Partition::finite(
            BaseSet::Nat,
            vec![RSet::Nat(NSet::singleton(1)), RSet::Nat(NSet::singleton(1).complement())],
        );
        let r = p.refine(&q).unwrap();
        assert_eq!(r.prefix.len(), 3);
        assert!(r.verify().is_ok());
        assert!(r.is_refinement_of(&p).is_proved());
        assert!(r.is_refinement_of(&q).is_proved());
        // and the halves-thirds example
        let a = Partition::finite(
            BaseSet::Interval(zero(), one()),
            vec![
                RSet::Line(LineSet::interval(zero(), ratio(1, 2))),
                RSet::Line(LineSet::interval(ratio(1, 2), one())),
            ],
        );
        let b = Partition::finite(
            BaseSet::Interval(zero(), one()),
            vec![
                RSet::Line(LineSet::interval(zero(), ratio(1, 3))),
                RSet::Line(LineSet::interval(ratio(1, 3), one())),
            ],
        );
        let ab = a.refine(&b).unwrap();
        assert_eq!(ab.prefix.len(), 3);
        assert!(ab.verify().is_ok());
    }

    #[test]
    fn dyadic_partition_refines_itself() {
        let d = Partition::dyadic_shrink01();
        assert!(d.verify().is_ok());
        let dd = d.refine(&d).unwrap();
        assert!(dd.verify().is_ok());
        assert!(dd.is_refinement_of(&d).is_proved());
    }

    #[test]
    fn evens_not_refinement_of_one_vs_rest() {
        let p = Partition::finite(
            BaseSet::Nat,
            vec![RSet::Nat(NSet::evens()), RSet::Nat(NSet::odds())],
        );
        let q = Partition::finite(
            BaseSet::Nat,
            vec![RSet::Nat(NSet::singleton(1)), RSet::Nat(NSet::singleton(1).complement())],
        );
        let v = p.is_refinement_of(&q);
        assert!(v.is_refuted());
    }

    #[test]
    fn moving_ramp_family_decreases_to_zero() {
        let fam = CountableFamily {
            space: SpaceId::MovAvg,
            prefix: vec![],
            tail: TailRule::MovingRamp { lo: int(2), hi: int(3), offset: 1 },
            monotone_claim: Some(Monotone::Decreasing),
        };
        match fam.order_limit(LimitMode::Inf, 5) {
            LimitOutcome::Limit(v, _) => assert!(v.is_zero()),
            other => panic!("expected 0, got {other:?}"),
        }
    }
}
