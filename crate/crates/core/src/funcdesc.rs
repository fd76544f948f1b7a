//! Catalog of function descriptions: the functions X → E whose membership in
//! the extensions gets verified. Each kind supports exact evaluation,
//! restriction by representable sets where the result stays in the catalog,
//! and symbolic comparison against simple/step elements.

use serde::{Deserialize, Serialize};

use crate::rat::{int, one, zero, Rat};
use crate::sets::{LineSet, NSet, RSet};
use crate::spaces::{
    compare, ElemVal, LineFn, OrderRel, PiecewisePoly, SeqElement, SimpleFn, SpaceElement, SpaceId,
};

/// Value profile of a function on ℕ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NatRule {
    /// n ↦ x_n·e_n for a symbolic scalar sequence x
    Diag(SeqElement),
    /// n ↦ (−1)ⁿ·e_n
    DiagSigned,
    /// even n ↦ e_{n−1} + e_n, odd n ↦ 0
    PairBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NatFn {
    /// codomain of the values
    pub space: SpaceId,
    pub rule: NatRule,
    /// restriction mask: values vanish off this set
    pub mask: NSet,
}

impl NatFn {
    pub fn diag(space: SpaceId, profile: SeqElement) -> Self {
        NatFn { space, rule: NatRule::Diag(profile), mask: NSet::full() }
    }

    pub fn value_at(&self, n: u64) -> SpaceElement {
        if !self.mask.contains(n) {
            return SpaceElement::zero(&self.space);
        }
        let seq = match &self.rule {
            NatRule::Diag(x) => SeqElement::basis(n).scale(&x.coord(n)),
            NatRule::DiagSigned => {
                let sign = if n % 2 == 0 { one() } else { -one() };
                SeqElement::basis(n).scale(&sign)
            }
            NatRule::PairBlock => {
                if n % 2 == 0 {
                    SeqElement::basis(n - 1).add(&SeqElement::basis(n))
                } else {
                    SeqElement::zero_elem()
                }
            }
        };
        SpaceElement::raw(self.space.clone(), ElemVal::Seq(seq))
    }

    pub fn masked(&self, set: &NSet) -> NatFn {
        NatFn { space: self.space.clone(), rule: self.rule.clone(), mask: self.mask.intersect(set) }
    }

    /// Everywhere nonnegative? Exact: beyond the window the sign outcome is a
    /// periodic function of n.
    pub fn is_nonneg(&self) -> bool {
        let (t, p) = self.nat_window();
        (1..=t + p).all(|n| self.value_at(n).is_nonneg())
    }

    /// (threshold, period) after which the value profile repeats structurally.
    pub fn nat_window(&self) -> (u64, u64) {
        let mut t = self.mask.periodic_from();
        let mut p = num_integer::lcm(self.mask.period(), 2);
        if let NatRule::Diag(x) = &self.rule {
            t = t.max(x.prefix_len() as u64 + 1);
            p = num_integer::lcm(p, x.tail_period());
        }
        (t, p)
    }
}

/// A function description from the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FuncDescr {
    /// [0,1] → ℝ, piecewise polynomial
    Pw(PiecewisePoly),
    /// a simple function (the description *is* the element)
    Simple { space: SpaceId, f: SimpleFn },
    /// partially simple: f = Σₙ aₙ·𝟙_{Aₙ} over a countable partition, with
    /// the cell values aₙ given as a closed-form family
    PartiallySimple {
        codomain: SpaceId,
        partition: crate::families::Partition,
        values: crate::families::CountableFamily,
    },
    /// ℕ → E from a value profile
    Nat(NatFn),
    /// [0,1) → bounded functions on [0,1): t ↦ 𝟙_{{t}}
    PointIndicator,
    /// [2,3] → moving-average lattice: x ↦ 𝟙_{∪ₖ (kx, kx+1]}
    PsiRamp,
}

impl FuncDescr {
    pub fn codomain(&self) -> SpaceId {
        match self {
            FuncDescr::Pw(_) => SpaceId::Rn(1),
            FuncDescr::Simple { space, .. } => match space {
                SpaceId::Simple { codomain, .. } => (**codomain).clone(),
                other => other.clone(),
            },
            FuncDescr::PartiallySimple { codomain, .. } => codomain.clone(),
            FuncDescr::Nat(nf) => nf.space.clone(),
            FuncDescr::PointIndicator => SpaceId::LinfFn01,
            FuncDescr::PsiRamp => SpaceId::MovAvg,
        }
    }

    /// f >= 0 everywhere, exactly where the catalog decides it.
    pub fn is_nonneg(&self) -> Option<bool> {
        match self {
            FuncDescr::Pw(p) => Some(p.sign_summary().0),
            FuncDescr::Simple { f, .. } => f.sign_summary().map(|(a, _)| a),
            FuncDescr::PartiallySimple { partition, values, .. } => {
                let upto = values.prefix.len().max(partition.prefix.len()) as u64 + 4;
                for n in 1..=upto {
                    match values.element_at(n) {
                        Some(v) if v.is_nonneg() => {}
                        Some(_) => return Some(false),
                        None => break,
                    }
                }
                Some(values.tail_nonneg())
            }
            FuncDescr::Nat(nf) => Some(nf.is_nonneg()),
            FuncDescr::PointIndicator => Some(true),
            FuncDescr::PsiRamp => Some(true),
        }
    }

    /// f is zero somewhere / nowhere: returns Some(true) when the catalog can
    /// certify "f(x) ≠ 0 for every x of the base".
    pub fn nowhere_zero(&self) -> Option<bool> {
        match self {
            FuncDescr::PointIndicator => Some(true), // 1_{{t}}(t) = 1 for every t
            FuncDescr::PsiRamp => Some(true),        // ψ(x) has norm 1 for every x
            _ => None,
        }
    }

    /// Restriction f·𝟙_A when it stays in the catalog.
    pub fn restrict(&self, set: &RSet) -> Option<FuncDescr> {
        match (self, set) {
            (FuncDescr::Nat(nf), RSet::Nat(a)) => Some(FuncDescr::Nat(nf.masked(a))),
            (FuncDescr::Pw(p), RSet::Line(ls)) => {
                // representable when the set is a finite union of intervals
                // with endpoints in [0,1] (mask pieces to zero outside)
                if !ls.points().is_empty() {
                    return None;
                }
                let mut cuts: Vec<Rat> = vec![zero(), one()];
                for (a, b) in ls.intervals() {
                    cuts.push(a.clone().max(zero()));
                    cuts.push(b.clone().min(one()));
                }
                cuts.sort();
                cuts.dedup();
                let mut pieces = Vec::new();
                for w in cuts.windows(2) {
                    let mid = (&w[0] + &w[1]) / int(2);
                    if ls.contains(&mid) {
                        let v = p.eval(&mid).ok()?;
                        let _ = v;
                        pieces.push(piece_of(p, &w[0]));
                    } else {
                        pieces.push(crate::spaces::Poly2::zero_poly());
                    }
                }
                PiecewisePoly::new(cuts, pieces).ok().map(FuncDescr::Pw)
            }
            (FuncDescr::Simple { space, f }, _) => {
                let mut terms = Vec::new();
                for (v, s) in &f.terms {
                    let clipped = s.intersect(set)?;
                    if !clipped.is_empty() {
                        terms.push((v.clone(), clipped));
                    }
                }
                Some(FuncDescr::Simple { space: space.clone(), f: SimpleFn::new(terms) })
            }
            _ => None,
        }
    }

    /// Restriction f·𝟙_A as a Γ-representable element, when the catalog
    /// supports it (finite sets of ℕ give finite simple functions; interval
    /// masks of piecewise integrands give masked piecewise elements).
    pub fn restrict_elem(&self, set: &RSet) -> Option<SpaceElement> {
        match (self, set) {
            (FuncDescr::Nat(nf), RSet::Nat(a)) if a.is_finite() => {
                let card = a.cardinality()? as usize;
                let mut terms = Vec::new();
                for m in a.first_elements(card) {
                    let v = nf.value_at(m);
                    if !v.is_zero() {
                        terms.push((v, RSet::Nat(NSet::singleton(m))));
                    }
                }
                Some(SpaceElement::raw(
                    SpaceId::simple("counting", nf.space.clone()),
                    ElemVal::Simple(SimpleFn::new(terms)),
                ))
            }
            (FuncDescr::Pw(pw), RSet::Line(ls)) => {
                if ls.intervals().is_empty() {
                    // pure point sets: f·𝟙 is a combination of point-supported
                    // step terms (each of integral zero)
                    let mut terms = Vec::new();
                    for p in ls.points() {
                        if *p < zero() || *p > one() {
                            return None;
                        }
                        let v = pw.eval(p).ok()?;
                        terms.push((
                            SpaceElement::scalar(v),
                            RSet::Line(LineSet::point(p.clone())),
                        ));
                    }
                    return Some(SpaceElement::raw(
                        SpaceId::simple("riemann", SpaceId::Rn(1)),
                        ElemVal::Simple(SimpleFn::new(terms)),
                    ));
                }
                match self.restrict(set)? {
                    FuncDescr::Pw(p) => Some(SpaceElement::raw(SpaceId::Pp01, ElemVal::Pw(p))),
                    _ => None,
                }
            }
            (FuncDescr::Simple { .. }, _) => match self.restrict(set)? {
                FuncDescr::Simple { space, f } => {
                    Some(SpaceElement::raw(space, ElemVal::Simple(f)))
                }
                _ => None,
            },
            (FuncDescr::PartiallySimple { codomain, partition, values }, _) => {
                // the restriction to one partition cell (or a subset of it)
                // is the constant term value·𝟙_set
                let upto = partition.prefix.len() as u64 + 64;
                for n in 1..=upto {
                    let cell = partition.cell_at(n)?;
                    if set.is_subset(&cell) {
                        let v = values.element_at(n)?;
                        if v.space != *codomain {
                            return None;
                        }
                        return Some(SpaceElement::raw(
                            SpaceId::simple("cells", codomain.clone()),
                            ElemVal::Simple(SimpleFn::new(vec![(v, set.clone())])),
                        ));
                    }
                }
                None
            }
            _ => None,
        }
    }

    /// When the function is itself an element of a catalog space, return it.
    pub fn as_element(&self) -> Option<SpaceElement> {
        match self {
            FuncDescr::Pw(p) => {
                Some(SpaceElement::raw(SpaceId::Pp01, ElemVal::Pw(p.clone())))
            }
            FuncDescr::Simple { space, f } => {
                Some(SpaceElement::raw(space.clone(), ElemVal::Simple(f.clone())))
            }
            _ => None,
        }
    }

    /// Exact comparison of the function against a catalog element of the same
    /// ambient function space: (f >= g everywhere, f <= g everywhere).
    pub fn compare_elem(&self, g: &SpaceElement) -> Option<(bool, bool)> {
        match (self, &g.val) {
            (FuncDescr::Pw(p), ElemVal::Pw(q)) => {
                let d = p.sub(q);
                let (nn, np) = d.sign_summary();
                Some((nn, np))
            }
            (FuncDescr::Simple { f, .. }, ElemVal::Simple(sg)) => {
                let d = f.add(&sg.neg());
                d.sign_summary()
            }
            (FuncDescr::Nat(nf), ElemVal::Simple(sg)) => {
                // beyond the combined window, the comparison outcome at n is a
                // periodic function of n, so one full period decides all n
                let (tf, pf) = nf.nat_window();
                let (tg, pg) = sg.nat_window();
                let t = tf.max(tg);
                let p = num_integer::lcm(pf, pg);
                let mut ge = true;
                let mut le = true;
                for n in 1..=t + p {
                    let fv = nf.value_at(n);
                    let gv = sg.value_at_nat(n)?;
                    match compare(&fv, &gv).ok()? {
                        OrderRel::Eq => {}
                        OrderRel::Ge => le = false,
                        OrderRel::Le => ge = false,
                        OrderRel::Incomparable => {
                            ge = false;
                            le = false;
                        }
                    }
                }
                Some((ge, le))
            }
            (FuncDescr::PointIndicator, ElemVal::Simple(sg)) => {
                // f(t) = 1_{{t}} vs a simple function with LineSet cells:
                // f <= g iff on each point t of the base, g's value v(t)
                // dominates 1_{{t}}: v(t) >= 1 at t itself and v(t) >= 0
                // elsewhere. With additive terms this reduces per region.
                point_indicator_compare(sg)
            }
            _ => None,
        }
    }
}

fn piece_of(p: &PiecewisePoly, x: &Rat) -> crate::spaces::Poly2 {
    let mut idx = 0;
    for (i, b) in p.breaks().iter().enumerate().take(p.pieces().len()) {
        if b <= x {
            idx = i;
        }
    }
    p.pieces()[idx].clone()
}

/// (pointwise f >= g, f <= g) for f = t ↦ 𝟙_{{t}} on [0,1) and simple g.
///
/// On a region R where g is the constant element v, "f <= g on R" means
/// δ_t <= v for every t in R, i.e. v >= 0 everywhere and v >= 1 on R;
/// "f >= g on R" (for regions with more than one point) forces v <= 0 on R
/// and v <= 0 off R... off-R values of v do not matter for the pointwise
/// order of the functions at arguments in R, only v itself as an element
/// of the codomain: δ_t >= v means v <= δ_t pointwise, so v <= 0 except at
/// t where v(t) <= 1 — and since t sweeps R, v <= 0 on all of R when R is
/// not a single point.
fn point_indicator_compare(g: &SimpleFn) -> Option<(bool, bool)> {
    // collect marks from the term sets and from the value functions
    let mut marks: Vec<Rat> = vec![zero(), one()];
    for (v, s) in &g.terms {
        if let RSet::Line(ls) = s {
            for (a, b) in ls.intervals() {
                marks.push(a.clone());
                marks.push(b.clone());
            }
            marks.extend(ls.points().iter().cloned());
        } else {
            return None;
        }
        let ElemVal::Line(lv) = &v.val else { return None };
        marks.extend(lv.critical_points());
    }
    marks.retain(|m| *m >= zero() && *m <= one());
    marks.sort();
    marks.dedup();
    let mut ge = true;
    let mut le = true;
    let value_of = |t: &Rat| -> Option<LineFn> {
        let v = g.value_at_line(t)?;
        match v.val {
            ElemVal::Line(lv) => Some(lv),
            _ => None,
        }
    };
    // the marks themselves: single-argument conditions
    for m in marks.iter().filter(|m| **m < one()) {
        let lv = value_of(m)?;
        let (v_nonneg, v_nonpos) = lv.sign_summary();
        if !(v_nonneg && lv.value(m) >= one()) {
            le = false;
        }
        // δ_m >= v: v <= 0 off m and v(m) <= 1
        let stripped = lv.sub(&LineFn::zero_elem().with_delta(m.clone(), lv.value(m)));
        let ge_here = v_nonpos || (stripped.sign_summary().1 && lv.value(m) <= one());
        if !ge_here {
            ge = false;
        }
    }
    // open regions between consecutive marks: g is a fixed element there and
    // the argument t sweeps the whole region
    for w in marks.windows(2) {
        let mid = (&w[0] + &w[1]) / int(2);
        if mid <= w[0] || mid >= one() {
            continue;
        }
        let lv = value_of(&mid)?;
        let (v_nonneg, v_nonpos) = lv.sign_summary();
        if !(v_nonneg && lv.ge_const_on(&one(), &w[0], &w[1])) {
            le = false;
        }
        if !v_nonpos {
            ge = false;
        }
    }
    Some((ge, le))
}

/// f(t) = 𝟙_{{t}} as an element value, for spot evaluation.
pub fn point_indicator_value(t: &Rat) -> SpaceElement {
    SpaceElement::raw(
        SpaceId::LinfFn01,
        ElemVal::Line(LineFn::zero_elem().with_delta(t.clone(), one())),
    )
}

/// ψ(x) truncated to its first k blocks plus optionally the tail ray bound,
/// for exact spot checks: 𝟙_{∪_{j≤k} (jx, jx+1]}.
pub fn psi_partial_value(x: &Rat, k: u64) -> SpaceElement {
    let mut acc = LineFn::zero_elem();
    for j in 1..=k {
        let a = int(j as i64) * x;
        let b = &a + one();
        acc = acc.add(&LineFn::indicator_lopen(&a, &b));
    }
    SpaceElement::raw(SpaceId::MovAvg, ElemVal::Line(acc))
}

/// The blocks of ψ(x) as a LineSet prefix: (jx, jx+1] for j = 1..=k. Written
/// as [jx, jx+1) shifted by the two endpoint deltas when a function is
/// needed; as raw interval data for the separation lemma.
pub fn psi_blocks(x: &Rat, k: u64) -> Vec<(Rat, Rat)> {
    (1..=k).map(|j| (int(j as i64) * x, int(j as i64) * x + one())).collect()
}

/// Example 7.8's upper envelopes: τ_n maps t to 𝟙 of the grid cell of width
/// 1/n containing t; as a simple function over [0,1).
pub fn grid_envelope_simple(n: u64) -> SimpleFn {
    let mut terms = Vec::new();
    for i in 0..n {
        let lo = int(i as i64) / int(n as i64);
        let hi = int((i + 1) as i64) / int(n as i64);
        let cell = LineSet::interval(lo, hi);
        let val = SpaceElement::raw(SpaceId::LinfFn01, ElemVal::Line(LineFn::indicator(&cell)));
        terms.push((val, RSet::Line(cell)));
    }
    SimpleFn::new(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;
    use crate::sets::BaseSet;

    #[test]
    fn diag_values_and_mask() {
        let x = SeqElement::ones();
        let f = NatFn::diag(SpaceId::C, x);
        let v2 = f.value_at(2);
        assert_eq!(v2, SpaceElement::seq(SpaceId::C, SeqElement::basis(2)).unwrap());
        let masked = f.masked(&NSet::evens());
        assert!(masked.value_at(3).is_zero());
        assert!(!masked.value_at(4).is_zero());
        assert!(masked.is_nonneg());
    }

    #[test]
    fn pairblock_values() {
        let f = NatFn { space: SpaceId::C, rule: NatRule::PairBlock, mask: NSet::full() };
        assert!(f.value_at(1).is_zero());
        let v2 = f.value_at(2);
        let expect = SeqElement::basis(1).add(&SeqElement::basis(2));
        assert_eq!(v2, SpaceElement::seq(SpaceId::C, expect).unwrap());
    }

    #[test]
    fn restrict_pw_by_interval() {
        let f = FuncDescr::Pw(PiecewisePoly::from_poly(crate::spaces::Poly2::x()));
        let r = f.restrict(&RSet::Line(LineSet::interval(zero(), ratio(1, 2)))).unwrap();
        match r {
            FuncDescr::Pw(p) => {
                assert_eq!(p.eval(&ratio(1, 4)).unwrap(), ratio(1, 4));
                assert_eq!(p.eval(&ratio(3, 4)).unwrap(), zero());
            }
            _ => panic!(),
        }
        let _ = BaseSet::Nat;
    }

    #[test]
    fn point_indicator_under_grid_envelope() {
        let g = grid_envelope_simple(4);
        let f = FuncDescr::PointIndicator;
        let (ge, le) = f.compare_elem(&SpaceElement::raw(
            SpaceId::simple("leb", SpaceId::LinfFn01),
            ElemVal::Simple(g),
        ))
        .unwrap();
        assert!(le && !ge);
    }

    #[test]
    fn psi_partial_and_blocks() {
        // x = 2: blocks (2,3], (4,5], ...
        let v = psi_partial_value(&int(2), 2);
        match &v.val {
            ElemVal::Line(l) => {
                assert_eq!(l.value(&ratio(5, 2)), one());
                assert_eq!(l.value(&int(2)), zero());
                assert_eq!(l.value(&int(3)), one());
                assert_eq!(l.value(&ratio(7, 2)), zero());
            }
            _ => panic!(),
        }
        assert_eq!(psi_blocks(&int(2), 3), vec![
            (int(2), int(3)),
            (int(4), int(5)),
            (int(6), int(7)),
        ]);
    }
}
