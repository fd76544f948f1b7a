//! Concrete partially ordered vector spaces with exact order oracles.
//!
//! Every element carries the identifier of the space it lives in; operations
//! across different spaces are rejected. All order decisions are exact.

pub mod linefn;
pub mod pair;
pub mod piecewise;
pub mod poly;
pub mod seq;
pub mod simple;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use linefn::LineFn;
pub use pair::{PairElement, PairOrder};
pub use piecewise::PiecewisePoly;
pub use poly::Poly2;
pub use seq::{SeqElement, SeqTail};
pub use simple::SimpleFn;

use crate::rat::{zero, Rat};

/// The space catalog. Sequence spaces share one representation (finite prefix
/// plus symbolic tail); what differs is the membership predicate and the
/// classification facts attached to the name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpaceId {
    /// finitely supported real sequences
    C00,
    /// sequences converging to 0 (representable part: finitely supported)
    C0,
    /// convergent sequences (representable part: eventually constant)
    C,
    /// absolutely summable sequences (representable part: finitely supported)
    L1,
    /// bounded sequences (representable part: eventually periodic)
    LinfN,
    /// all real sequences (representable part: eventually periodic)
    RN,
    /// ℝ^k with the componentwise order
    Rn(u32),
    /// ℝ² with the lexicographic order
    RLex2,
    /// polynomials of degree <= 2 on [0,1], pointwise order
    PolyDeg2,
    /// continuous piecewise-linear functions on [0,1]
    Pl01,
    /// piecewise polynomial (degree <= 2) functions on [0,1], not necessarily continuous
    Pp01,
    /// bounded functions on [0,1) (finite-presentation part)
    LinfFn01,
    /// measurable functions on ℝ with finite moving-average norm (finite-presentation part)
    MovAvg,
    /// simple functions over a named measure space with values in `codomain`
    Simple { ms: String, codomain: Box<SpaceId> },
}

impl SpaceId {
    pub fn simple(ms: &str, codomain: SpaceId) -> SpaceId {
        SpaceId::Simple { ms: ms.to_string(), codomain: Box::new(codomain) }
    }

    /// Spaces whose finite lattice operations the catalog supports exactly.
    pub fn is_lattice_catalog(&self) -> bool {
        match self {
            SpaceId::C00
            | SpaceId::C0
            | SpaceId::C
            | SpaceId::L1
            | SpaceId::LinfN
            | SpaceId::RN
            | SpaceId::Rn(_)
            | SpaceId::RLex2
            | SpaceId::Pl01
            | SpaceId::LinfFn01
            | SpaceId::MovAvg => true,
            SpaceId::PolyDeg2 | SpaceId::Pp01 => false,
            SpaceId::Simple { .. } => true,
        }
    }
}

impl std::fmt::Display for SpaceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpaceId::C00 => write!(f, "c00"),
            SpaceId::C0 => write!(f, "c0"),
            SpaceId::C => write!(f, "c"),
            SpaceId::L1 => write!(f, "l1"),
            SpaceId::LinfN => write!(f, "linf"),
            SpaceId::RN => write!(f, "rN"),
            SpaceId::Rn(k) => write!(f, "r{k}"),
            SpaceId::RLex2 => write!(f, "rlex2"),
            SpaceId::PolyDeg2 => write!(f, "polydeg2"),
            SpaceId::Pl01 => write!(f, "pl01"),
            SpaceId::Pp01 => write!(f, "pp01"),
            SpaceId::LinfFn01 => write!(f, "linf01"),
            SpaceId::MovAvg => write!(f, "movavg"),
            SpaceId::Simple { ms, codomain } => write!(f, "simple({ms},{codomain})"),
        }
    }
}

#[derive(Debug, Error)]
pub enum SpaceError {
    #[error("space mismatch: {0} vs {1}")]
    SpaceMismatch(SpaceId, SpaceId),
    #[error("{1} is not an element of {0}")]
    NotMember(SpaceId, String),
    #[error("argument out of domain: {0}")]
    OutOfDomain(String),
    #[error("coefficient/element lists have different lengths")]
    LengthMismatch,
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

/// Outcome of an exact comparison in a partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderRel {
    Le,
    Ge,
    Eq,
    Incomparable,
}

impl OrderRel {
    pub fn from_signs(nonneg: bool, nonpos: bool) -> OrderRel {
        // signs of a - b
        match (nonneg, nonpos) {
            (true, true) => OrderRel::Eq,
            (true, false) => OrderRel::Ge,
            (false, true) => OrderRel::Le,
            (false, false) => OrderRel::Incomparable,
        }
    }

    pub fn ge(self) -> bool {
        matches!(self, OrderRel::Ge | OrderRel::Eq)
    }

    pub fn le(self) -> bool {
        matches!(self, OrderRel::Le | OrderRel::Eq)
    }
}

/// Result of a finite lattice operation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LatticeResult {
    Elem(SpaceElement),
    /// the space is outside the lattice catalog, or the exact result is not
    /// representable (irrational crossing); the reason says which
    NotLattice(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ElemVal {
    Seq(SeqElement),
    Pair(PairElement),
    Poly(Poly2),
    Pw(PiecewisePoly),
    Line(LineFn),
    Simple(SimpleFn),
}

/// A tagged element of one concrete space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceElement {
    pub space: SpaceId,
    pub val: ElemVal,
}

impl SpaceElement {
    pub fn new(space: SpaceId, val: ElemVal) -> Result<Self, SpaceError> {
        let el = SpaceElement { space, val };
        el.check_membership()?;
        Ok(el)
    }

    /// For internal constructions already known to be members.
    pub(crate) fn raw(space: SpaceId, val: ElemVal) -> Self {
        SpaceElement { space, val }
    }

    pub fn seq(space: SpaceId, s: SeqElement) -> Result<Self, SpaceError> {
        SpaceElement::new(space, ElemVal::Seq(s))
    }

    pub fn scalar(x: Rat) -> Self {
        SpaceElement::raw(SpaceId::Rn(1), ElemVal::Seq(SeqElement::from_prefix(vec![x])))
    }

    pub fn as_scalar(&self) -> Option<Rat> {
        match (&self.space, &self.val) {
            (SpaceId::Rn(1), ElemVal::Seq(s)) => Some(s.coord(1)),
            _ => None,
        }
    }

    pub fn zero(space: &SpaceId) -> Self {
        let val = match space {
            SpaceId::RLex2 => ElemVal::Pair(PairElement::zero_elem(PairOrder::Lexicographic)),
            SpaceId::PolyDeg2 => ElemVal::Poly(Poly2::zero_poly()),
            SpaceId::Pl01 | SpaceId::Pp01 => ElemVal::Pw(PiecewisePoly::zero_elem()),
            SpaceId::LinfFn01 | SpaceId::MovAvg => ElemVal::Line(LineFn::zero_elem()),
            SpaceId::Simple { .. } => ElemVal::Simple(SimpleFn::zero_elem()),
            _ => ElemVal::Seq(SeqElement::zero_elem()),
        };
        SpaceElement::raw(space.clone(), val)
    }

    pub fn zero_like(&self) -> Self {
        SpaceElement::zero(&self.space)
    }

    pub fn check_membership(&self) -> Result<(), SpaceError> {
        let err = |why: &str| {
            Err(SpaceError::NotMember(self.space.clone(), why.to_string()))
        };
        match (&self.space, &self.val) {
            (SpaceId::C00 | SpaceId::C0 | SpaceId::L1, ElemVal::Seq(s)) => {
                if s.is_finitely_supported() {
                    Ok(())
                } else {
                    err("not finitely supported")
                }
            }
            (SpaceId::C, ElemVal::Seq(s)) => {
                if s.eventual_constant().is_some() {
                    Ok(())
                } else {
                    err("not eventually constant")
                }
            }
            (SpaceId::LinfN | SpaceId::RN, ElemVal::Seq(_)) => Ok(()),
            (SpaceId::Rn(k), ElemVal::Seq(s)) => {
                match s.support_bound() {
                    Some(b) if b <= *k as u64 => Ok(()),
                    _ => err("support exceeds dimension"),
                }
            }
            (SpaceId::RLex2, ElemVal::Pair(p)) => {
                if p.order == PairOrder::Lexicographic {
                    Ok(())
                } else {
                    err("wrong pair order")
                }
            }
            (SpaceId::PolyDeg2, ElemVal::Poly(_)) => Ok(()),
            (SpaceId::Pl01, ElemVal::Pw(p)) => {
                if p.degree() <= 1 && p.is_continuous() {
                    Ok(())
                } else {
                    err("not continuous piecewise-linear")
                }
            }
            (SpaceId::Pp01, ElemVal::Pw(_)) => Ok(()),
            (SpaceId::LinfFn01, ElemVal::Line(l)) => {
                if l.supported_in(&zero(), &crate::rat::one()) {
                    Ok(())
                } else {
                    err("support not inside [0,1)")
                }
            }
            (SpaceId::MovAvg, ElemVal::Line(_)) => Ok(()),
            (SpaceId::Simple { codomain, .. }, ElemVal::Simple(sf)) => {
                for (v, _) in &sf.terms {
                    if v.space != **codomain {
                        return err("term value outside the codomain");
                    }
                    v.check_membership()?;
                }
                Ok(())
            }
            _ => err("representation does not match the space"),
        }
    }

    fn same_space(&self, other: &SpaceElement) -> Result<(), SpaceError> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(SpaceError::SpaceMismatch(self.space.clone(), other.space.clone()))
        }
    }

    pub fn add(&self, other: &SpaceElement) -> Result<SpaceElement, SpaceError> {
        self.same_space(other)?;
        let val = match (&self.val, &other.val) {
            (ElemVal::Seq(a), ElemVal::Seq(b)) => ElemVal::Seq(a.add(b)),
            (ElemVal::Pair(a), ElemVal::Pair(b)) => ElemVal::Pair(a.add(b)),
            (ElemVal::Poly(a), ElemVal::Poly(b)) => ElemVal::Poly(a.add(b)),
            (ElemVal::Pw(a), ElemVal::Pw(b)) => ElemVal::Pw(a.add(b)),
            (ElemVal::Line(a), ElemVal::Line(b)) => ElemVal::Line(a.add(b)),
            (ElemVal::Simple(a), ElemVal::Simple(b)) => ElemVal::Simple(a.add(b)),
            _ => return Err(SpaceError::Unsupported("mixed representations".into())),
        };
        Ok(SpaceElement::raw(self.space.clone(), val))
    }

    pub fn scale(&self, k: &Rat) -> SpaceElement {
        let val = match &self.val {
            ElemVal::Seq(a) => ElemVal::Seq(a.scale(k)),
            ElemVal::Pair(a) => ElemVal::Pair(a.scale(k)),
            ElemVal::Poly(a) => ElemVal::Poly(a.scale(k)),
            ElemVal::Pw(a) => ElemVal::Pw(a.scale(k)),
            ElemVal::Line(a) => ElemVal::Line(a.scale(k)),
            ElemVal::Simple(a) => ElemVal::Simple(a.scale(k)),
        };
        SpaceElement::raw(self.space.clone(), val)
    }

    pub fn neg(&self) -> SpaceElement {
        self.scale(&-crate::rat::one())
    }

    pub fn sub(&self, other: &SpaceElement) -> Result<SpaceElement, SpaceError> {
        self.add(&other.neg())
    }

    /// (everywhere >= 0, everywhere <= 0) in this space's order.
    pub fn sign_summary(&self) -> (bool, bool) {
        match &self.val {
            ElemVal::Seq(a) => a.sign_summary(),
            ElemVal::Pair(a) => a.sign_summary(),
            ElemVal::Poly(a) => {
                (a.nonneg_on(&zero(), &crate::rat::one()), a.neg().nonneg_on(&zero(), &crate::rat::one()))
            }
            ElemVal::Pw(a) => a.sign_summary(),
            ElemVal::Line(a) => a.sign_summary(),
            ElemVal::Simple(a) => a.sign_summary().unwrap_or((false, false)),
        }
    }

    pub fn is_zero(&self) -> bool {
        let (a, b) = self.sign_summary();
        a && b
    }

    pub fn is_nonneg(&self) -> bool {
        self.sign_summary().0
    }
}

impl std::fmt::Display for SpaceElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.val {
            ElemVal::Seq(a) => write!(f, "{a}"),
            ElemVal::Pair(a) => write!(f, "{a}"),
            ElemVal::Poly(a) => write!(f, "{a}"),
            ElemVal::Pw(a) => write!(f, "{a}"),
            ElemVal::Line(a) => write!(f, "{a}"),
            ElemVal::Simple(a) => {
                let parts: Vec<String> =
                    a.terms.iter().map(|(v, s)| format!("({v})·1[{s}]")).collect();
                write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
            }
        }
    }
}

/// Exact decision of the partial order between two elements of one space.
pub fn compare(a: &SpaceElement, b: &SpaceElement) -> Result<OrderRel, SpaceError> {
    let d = a.sub(b)?;
    let (nonneg, nonpos) = d.sign_summary();
    Ok(OrderRel::from_signs(nonneg, nonpos))
}

/// Exact linear combination Σ coeffs[i]·elems[i].
pub fn linear_combine(
    coeffs: &[Rat],
    elems: &[SpaceElement],
) -> Result<SpaceElement, SpaceError> {
    if coeffs.len() != elems.len() {
        return Err(SpaceError::LengthMismatch);
    }
    let Some(first) = elems.first() else {
        return Err(SpaceError::LengthMismatch);
    };
    let mut acc = SpaceElement::zero(&first.space);
    for (c, e) in coeffs.iter().zip(elems) {
        acc = acc.add(&e.scale(c))?;
    }
    Ok(acc)
}

/// Least upper bound of two elements, for spaces in the lattice catalog.
pub fn lattice_sup(a: &SpaceElement, b: &SpaceElement) -> Result<LatticeResult, SpaceError> {
    if a.space != b.space {
        return Err(SpaceError::SpaceMismatch(a.space.clone(), b.space.clone()));
    }
    if !a.space.is_lattice_catalog() {
        return Ok(LatticeResult::NotLattice(format!(
            "{} is outside the finite-lattice catalog",
            a.space
        )));
    }
    let val = match (&a.val, &b.val) {
        (ElemVal::Seq(x), ElemVal::Seq(y)) => ElemVal::Seq(x.pointwise_sup(y)),
        (ElemVal::Pair(x), ElemVal::Pair(y)) => {
            // the lex plane is totally ordered: sup is the larger element
            let d = x.add(&y.neg());
            let (nonneg, _) = d.sign_summary();
            ElemVal::Pair(if nonneg { x.clone() } else { y.clone() })
        }
        (ElemVal::Pw(x), ElemVal::Pw(y)) => match x.pointwise_sup(y) {
            Some(s) => ElemVal::Pw(s),
            None => {
                return Ok(LatticeResult::NotLattice(
                    "pointwise max crosses at an irrational point".into(),
                ))
            }
        },
        (ElemVal::Line(x), ElemVal::Line(y)) => {
            // sup = (x + y + |x - y|)/2, exact for the affine catalog
            match x.sub(y).abs() {
                Some(d) => ElemVal::Line(x.add(y).add(&d).scale(&crate::rat::ratio(1, 2))),
                None => {
                    return Ok(LatticeResult::NotLattice(
                        "absolute value not representable (irrational sign change)".into(),
                    ))
                }
            }
        }
        (ElemVal::Simple(_), ElemVal::Simple(_)) => {
            return sup_of_simple(a, b);
        }
        _ => return Err(SpaceError::Unsupported("mixed representations".into())),
    };
    Ok(LatticeResult::Elem(SpaceElement::raw(a.space.clone(), val)))
}

pub fn lattice_inf(a: &SpaceElement, b: &SpaceElement) -> Result<LatticeResult, SpaceError> {
    match lattice_sup(&a.neg(), &b.neg())? {
        LatticeResult::Elem(e) => Ok(LatticeResult::Elem(e.neg())),
        nl => Ok(nl),
    }
}

/// Positive part a ∨ 0.
pub fn positive_part(a: &SpaceElement) -> Result<LatticeResult, SpaceError> {
    lattice_sup(a, &a.zero_like())
}

fn sup_of_simple(a: &SpaceElement, b: &SpaceElement) -> Result<LatticeResult, SpaceError> {
    use crate::sets::{NSet, RSet};
    let (ElemVal::Simple(x), ElemVal::Simple(y)) = (&a.val, &b.val) else { unreachable!() };
    let probes = x.probe_points(Some(y));
    let mut terms: Vec<(SpaceElement, RSet)> = Vec::new();
    if !probes.fin_labels.is_empty() {
        for l in &probes.fin_labels {
            let (vx, vy) = match (x.value_at_fin(*l), y.value_at_fin(*l)) {
                (Some(vx), Some(vy)) => (vx, vy),
                _ => return Ok(LatticeResult::NotLattice("value sum failed".into())),
            };
            match lattice_sup(&vx, &vy)? {
                LatticeResult::Elem(v) => {
                    terms.push((v, RSet::Fin([*l].into_iter().collect())));
                }
                nl => return Ok(nl),
            }
        }
    } else if let Some(upto) = probes.nat {
        // values are periodic beyond `upto` with the combined period; build
        // singleton terms below and arithmetic-class terms beyond
        let period = {
            let mut p = 1u64;
            for (_, s) in x.terms.iter().chain(y.terms.iter()) {
                if let RSet::Nat(ns) = s {
                    p = num_integer::lcm(p, ns.period());
                }
            }
            p
        };
        for n in 1..upto {
            let (vx, vy) = match (x.value_at_nat(n), y.value_at_nat(n)) {
                (Some(vx), Some(vy)) => (vx, vy),
                _ => return Ok(LatticeResult::NotLattice("value sum failed".into())),
            };
            match lattice_sup(&vx, &vy)? {
                LatticeResult::Elem(v) => terms.push((v, RSet::Nat(NSet::singleton(n)))),
                nl => return Ok(nl),
            }
        }
        for r in 0..period {
            let n = upto + r;
            let (vx, vy) = match (x.value_at_nat(n), y.value_at_nat(n)) {
                (Some(vx), Some(vy)) => (vx, vy),
                _ => return Ok(LatticeResult::NotLattice("value sum failed".into())),
            };
            let cls = NSet::arithmetic(n, period);
            match lattice_sup(&vx, &vy)? {
                LatticeResult::Elem(v) => terms.push((v, RSet::Nat(cls))),
                nl => return Ok(nl),
            }
        }
    } else {
        return Ok(LatticeResult::NotLattice(
            "lattice of line-based simple functions is outside the catalog".into(),
        ));
    }
    terms.retain(|(v, _)| !v.is_zero());
    Ok(LatticeResult::Elem(SpaceElement::raw(a.space.clone(), ElemVal::Simple(SimpleFn::new(terms)))))
}

/// Exact evaluation of a piecewise element at a point of [0,1].
pub fn eval_piecewise(p: &SpaceElement, x: &Rat) -> Result<Rat, SpaceError> {
    match &p.val {
        ElemVal::Pw(pw) => pw.eval(x).map_err(SpaceError::OutOfDomain),
        ElemVal::Poly(q) => {
            if *x < zero() || *x > crate::rat::one() {
                return Err(SpaceError::OutOfDomain(crate::rat::fmt_rat(x)));
            }
            Ok(q.eval(x))
        }
        _ => Err(SpaceError::Unsupported("not a piecewise element".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, one, ratio};

    fn c00(el: SeqElement) -> SpaceElement {
        SpaceElement::seq(SpaceId::C00, el).unwrap()
    }

    #[test]
    fn basis_vectors_incomparable() {
        let e1 = c00(SeqElement::basis(1));
        let e2 = c00(SeqElement::basis(2));
        assert_eq!(compare(&e1, &e2).unwrap(), OrderRel::Incomparable);
        assert_eq!(compare(&e1, &e1).unwrap(), OrderRel::Eq);
    }

    #[test]
    fn lex_pair_ge() {
        let a = SpaceElement::new(
            SpaceId::RLex2,
            ElemVal::Pair(PairElement::new(int(1), int(-5), PairOrder::Lexicographic)),
        )
        .unwrap();
        let b = SpaceElement::new(
            SpaceId::RLex2,
            ElemVal::Pair(PairElement::new(int(0), int(100), PairOrder::Lexicographic)),
        )
        .unwrap();
        assert_eq!(compare(&a, &b).unwrap(), OrderRel::Ge);
    }

    #[test]
    fn x_squared_le_x_on_unit_interval() {
        let x = SpaceElement::new(SpaceId::Pp01, ElemVal::Pw(PiecewisePoly::from_poly(Poly2::x())))
            .unwrap();
        let x2 = SpaceElement::new(
            SpaceId::Pp01,
            ElemVal::Pw(PiecewisePoly::from_poly(Poly2::x_squared())),
        )
        .unwrap();
        assert_eq!(compare(&x2, &x).unwrap(), OrderRel::Le);
    }

    #[test]
    fn sup_in_c00() {
        let e1 = c00(SeqElement::basis(1));
        let e2 = c00(SeqElement::basis(2));
        match lattice_sup(&e1, &e2).unwrap() {
            LatticeResult::Elem(s) => {
                let expected = c00(SeqElement::basis(1).add(&SeqElement::basis(2)));
                assert_eq!(s, expected);
            }
            _ => panic!("c00 is a lattice"),
        }
    }

    #[test]
    fn polydeg2_outside_lattice_catalog() {
        let x = SpaceElement::new(SpaceId::PolyDeg2, ElemVal::Poly(Poly2::x())).unwrap();
        let x2 = SpaceElement::new(SpaceId::PolyDeg2, ElemVal::Poly(Poly2::x_squared())).unwrap();
        assert!(matches!(lattice_sup(&x2, &x).unwrap(), LatticeResult::NotLattice(_)));
    }

    #[test]
    fn linear_combination_exact() {
        let e1 = c00(SeqElement::basis(1));
        let e2 = c00(SeqElement::basis(2));
        let c = linear_combine(&[int(2), int(-3)], &[e1, e2]).unwrap();
        match &c.val {
            ElemVal::Seq(s) => {
                assert_eq!(s.coord(1), int(2));
                assert_eq!(s.coord(2), int(-3));
                assert_eq!(s.coord(3), zero());
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn space_mismatch_rejected() {
        let a = c00(SeqElement::basis(1));
        let b = SpaceElement::seq(SpaceId::C, SeqElement::basis(1)).unwrap();
        assert!(compare(&a, &b).is_err());
    }

    #[test]
    fn membership_checks() {
        assert!(SpaceElement::seq(SpaceId::C00, SeqElement::ones()).is_err());
        assert!(SpaceElement::seq(SpaceId::C, SeqElement::ones()).is_ok());
        assert!(SpaceElement::seq(SpaceId::Rn(2), SeqElement::basis(3)).is_err());
        assert!(SpaceElement::seq(SpaceId::Rn(3), SeqElement::basis(3)).is_ok());
        // 1_evens is bounded but not eventually constant
        let evens = SeqElement::indicator(&crate::sets::NSet::evens(), &one());
        assert!(SpaceElement::seq(SpaceId::C, evens.clone()).is_err());
        assert!(SpaceElement::seq(SpaceId::LinfN, evens).is_ok());
    }

    #[test]
    fn pl01_sup_with_crossing() {
        let f = SpaceElement::new(
            SpaceId::Pl01,
            ElemVal::Pw(PiecewisePoly::from_poly(Poly2::x())),
        )
        .unwrap();
        let g = SpaceElement::new(
            SpaceId::Pl01,
            ElemVal::Pw(PiecewisePoly::from_poly(Poly2::new(one(), int(-1), zero()))),
        )
        .unwrap();
        match lattice_sup(&f, &g).unwrap() {
            LatticeResult::Elem(s) => {
                assert_eq!(eval_piecewise(&s, &ratio(1, 2)).unwrap(), ratio(1, 2));
                assert_eq!(eval_piecewise(&s, &zero()).unwrap(), one());
            }
            _ => panic!("pl01 is a lattice"),
        }
    }

    #[test]
    fn inf_sup_duality() {
        let e1 = c00(SeqElement::basis(1));
        let e2 = c00(SeqElement::basis(2));
        let inf = match lattice_inf(&e1, &e2).unwrap() {
            LatticeResult::Elem(e) => e,
            _ => panic!(),
        };
        let neg_sup = match lattice_sup(&e1.neg(), &e2.neg()).unwrap() {
            LatticeResult::Elem(e) => e.neg(),
            _ => panic!(),
        };
        assert_eq!(inf, neg_sup);
    }
}
