//! Representable sets: the measurable sets the kernel can decide exactly.
//!
//! Subsets of ℕ are kept eventually periodic (finite head + periodic tail),
//! which is the closure of finite, cofinite and arithmetic sets under the
//! Boolean operations. Subsets of the line are finite unions of rational
//! half-open intervals `[a,b)` plus finitely many isolated points.

use std::collections::BTreeSet;

use num_integer::Integer;

use serde::{Deserialize, Serialize};

use crate::rat::{fmt_rat, Rat};

/// Eventually periodic subset of ℕ = {1,2,3,…}.
///
/// Membership of n < `threshold` is read from `head`; membership of
/// n >= `threshold` holds iff `n mod period` is in `residues`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NSet {
    threshold: u64,
    head: BTreeSet<u64>,
    period: u64,
    residues: BTreeSet<u64>,
}

impl NSet {
    fn new_raw(threshold: u64, head: BTreeSet<u64>, period: u64, residues: BTreeSet<u64>) -> Self {
        let mut s = NSet { threshold: threshold.max(1), head, period: period.max(1), residues };
        s.canonicalize();
        s
    }

    pub fn empty() -> Self {
        NSet::new_raw(1, BTreeSet::new(), 1, BTreeSet::new())
    }

    pub fn full() -> Self {
        NSet::new_raw(1, BTreeSet::new(), 1, [0u64].into_iter().collect())
    }

    pub fn finite<I: IntoIterator<Item = u64>>(elems: I) -> Self {
        let head: BTreeSet<u64> = elems.into_iter().filter(|&n| n >= 1).collect();
        let threshold = head.iter().max().map(|m| m + 1).unwrap_or(1);
        NSet::new_raw(threshold, head, 1, BTreeSet::new())
    }

    pub fn singleton(n: u64) -> Self {
        NSet::finite([n])
    }

    /// {first, first + step, first + 2·step, …}
    pub fn arithmetic(first: u64, step: u64) -> Self {
        assert!(first >= 1 && step >= 1);
        NSet::new_raw(first, BTreeSet::new(), step, [first % step].into_iter().collect())
    }

    pub fn evens() -> Self {
        NSet::arithmetic(2, 2)
    }

    pub fn odds() -> Self {
        NSet::arithmetic(1, 2)
    }

    /// {n : n >= from}
    pub fn from(from: u64) -> Self {
        NSet::arithmetic(from.max(1), 1)
    }

    pub fn contains(&self, n: u64) -> bool {
        if n == 0 {
            return false;
        }
        if n < self.threshold {
            self.head.contains(&n)
        } else {
            self.residues.contains(&(n % self.period))
        }
    }

    /// Membership is periodic with this period for all n >= `periodic_from`.
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn periodic_from(&self) -> u64 {
        self.threshold
    }

    fn canonicalize(&mut self) {
        // minimal period: smallest divisor of `period` consistent with residues
        for d in 1..=self.period {
            if self.period % d != 0 {
                continue;
            }
            let ok = (0..self.period).all(|r| {
                self.residues.contains(&r) == self.residues.contains(&(r % d))
            });
            if ok {
                self.residues = self.residues.iter().map(|r| r % d).collect();
                self.period = d;
                break;
            }
        }
        // minimal threshold: drop head entries the periodic part already predicts
        while self.threshold > 1 {
            let n = self.threshold - 1;
            let head_says = self.head.contains(&n);
            let tail_says = self.residues.contains(&(n % self.period));
            if head_says == tail_says {
                self.head.remove(&n);
                self.threshold = n;
            } else {
                break;
            }
        }
        self.head.retain(|&n| n >= 1 && n < self.threshold);
    }

    fn binop(&self, other: &NSet, f: impl Fn(bool, bool) -> bool) -> NSet {
        let threshold = self.threshold.max(other.threshold);
        let period = self.period.lcm(&other.period);
        let mut head = BTreeSet::new();
        for n in 1..threshold {
            if f(self.contains(n), other.contains(n)) {
                head.insert(n);
            }
        }
        let mut residues = BTreeSet::new();
        for r in 0..period {
            // pick a representative >= threshold with this residue
            let mut n = threshold + (period - threshold % period + r) % period;
            if n < threshold {
                n += period;
            }
            if f(self.contains(n), other.contains(n)) {
                residues.insert(r);
            }
        }
        NSet::new_raw(threshold, head, period, residues)
    }

    pub fn intersect(&self, other: &NSet) -> NSet {
        self.binop(other, |a, b| a && b)
    }

    pub fn union(&self, other: &NSet) -> NSet {
        self.binop(other, |a, b| a || b)
    }

    pub fn minus(&self, other: &NSet) -> NSet {
        self.binop(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> NSet {
        NSet::full().minus(self)
    }

    pub fn is_empty(&self) -> bool {
        self.head.is_empty() && self.residues.is_empty()
    }

    pub fn is_subset(&self, other: &NSet) -> bool {
        self.minus(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &NSet) -> bool {
        self.intersect(other).is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn cardinality(&self) -> Option<u64> {
        self.is_finite().then(|| self.head.len() as u64)
    }

    /// The first `k` elements in increasing order.
    pub fn first_elements(&self, k: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(k);
        let mut n = 1u64;
        while out.len() < k {
            if self.contains(n) {
                out.push(n);
            }
            if n >= self.threshold && self.residues.is_empty() {
                break;
            }
            n += 1;
        }
        out
    }
}

impl std::fmt::Display for NSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_finite() {
            let elems: Vec<String> = self.head.iter().map(|n| n.to_string()).collect();
            write!(f, "{{{}}}", elems.join(","))
        } else {
            write!(
                f,
                "{{head {:?}, n>={}: n mod {} in {:?}}}",
                self.head, self.threshold, self.period, self.residues
            )
        }
    }
}

/// Finite union of half-open rational intervals `[a,b)` plus isolated points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct LineSet {
    ivs: Vec<(Rat, Rat)>,
    pts: Vec<Rat>,
}

impl LineSet {
    pub fn empty() -> Self {
        LineSet::default()
    }

    pub fn interval(a: Rat, b: Rat) -> Self {
        let mut s = LineSet::default();
        if a < b {
            s.ivs.push((a, b));
        }
        s
    }

    pub fn point(p: Rat) -> Self {
        LineSet { ivs: vec![], pts: vec![p] }
    }

    pub fn from_parts(ivs: Vec<(Rat, Rat)>, pts: Vec<Rat>) -> Self {
        let mut s = LineSet { ivs, pts };
        s.canonicalize();
        s
    }

    pub fn intervals(&self) -> &[(Rat, Rat)] {
        &self.ivs
    }

    pub fn points(&self) -> &[Rat] {
        &self.pts
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.pts.contains(x) || self.ivs.iter().any(|(a, b)| a <= x && x < b)
    }

    fn canonicalize(&mut self) {
        self.ivs.retain(|(a, b)| a < b);
        self.ivs.sort();
        // merge overlapping / adjacent intervals
        let mut merged: Vec<(Rat, Rat)> = Vec::with_capacity(self.ivs.len());
        for (a, b) in self.ivs.drain(..) {
            match merged.last_mut() {
                Some((_, last_b)) if *last_b >= a => {
                    if b > *last_b {
                        *last_b = b;
                    }
                }
                _ => merged.push((a, b)),
            }
        }
        self.ivs = merged;
        self.pts.sort();
        self.pts.dedup();
        let ivs = self.ivs.clone();
        // a point equal to a right endpoint b extends [a,b) to [a,b']; keep it a point
        self.pts.retain(|p| !ivs.iter().any(|(a, b)| a <= p && p < b));
        // absorb points that close a gap of zero width? not possible with [a,b); done
    }

    pub fn union(&self, other: &LineSet) -> LineSet {
        let mut ivs = self.ivs.clone();
        ivs.extend(other.ivs.iter().cloned());
        let mut pts = self.pts.clone();
        pts.extend(other.pts.iter().cloned());
        LineSet::from_parts(ivs, pts)
    }

    pub fn intersect(&self, other: &LineSet) -> LineSet {
        let mut ivs = Vec::new();
        for (a1, b1) in &self.ivs {
            for (a2, b2) in &other.ivs {
                let a = a1.max(a2).clone();
                let b = b1.min(b2).clone();
                if a < b {
                    ivs.push((a, b));
                }
            }
        }
        let mut pts: Vec<Rat> = self.pts.iter().filter(|p| other.contains(p)).cloned().collect();
        pts.extend(other.pts.iter().filter(|p| self.contains(p)).cloned());
        LineSet::from_parts(ivs, pts)
    }

    /// Set difference, or None when the result would need an open interval
    /// (subtracting a point that sits inside one of our intervals). Every
    /// representable set is a union of `[a,b)` and isolated points, so
    /// `[a,b) ∖ {p}` with `a <= p < b` has no exact representation here.
    pub fn minus(&self, other: &LineSet) -> Option<LineSet> {
        let mut ivs = self.ivs.clone();
        for (a2, b2) in &other.ivs {
            let mut next = Vec::new();
            for (a, b) in ivs {
                if &b <= a2 || b2 <= &a {
                    next.push((a, b));
                } else {
                    if &a < a2 {
                        next.push((a.clone(), a2.clone()));
                    }
                    if b2 < &b {
                        next.push((b2.clone(), b));
                    }
                }
            }
            ivs = next;
        }
        for p in &other.pts {
            if ivs.iter().any(|(a, b)| a <= p && p < b) {
                return None;
            }
        }
        let pts = self.pts.iter().filter(|p| !other.contains(p)).cloned().collect();
        Some(LineSet::from_parts(ivs, pts))
    }

    pub fn is_empty(&self) -> bool {
        self.ivs.is_empty() && self.pts.is_empty()
    }

    pub fn is_disjoint(&self, other: &LineSet) -> bool {
        self.intersect(other).is_empty()
    }

    pub fn is_subset(&self, other: &LineSet) -> bool {
        // intervals must be covered by other's intervals (points have measure
        // zero and cannot cover an interval)
        for (a, b) in &self.ivs {
            let mut cur = a.clone();
            loop {
                if cur >= *b {
                    break;
                }
                match other.ivs.iter().find(|(c, d)| c <= &cur && &cur < d) {
                    Some((_, d)) => cur = d.clone(),
                    None => return false,
                }
            }
        }
        self.pts.iter().all(|p| other.contains(p))
    }

    /// Lebesgue measure: total interval length (points are null).
    pub fn measure(&self) -> Rat {
        let mut m = crate::rat::zero();
        for (a, b) in &self.ivs {
            m += b - a;
        }
        m
    }

    pub fn is_null(&self) -> bool {
        self.ivs.is_empty()
    }
}

impl std::fmt::Display for LineSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self
            .ivs
            .iter()
            .map(|(a, b)| format!("[{},{})", fmt_rat(a), fmt_rat(b)))
            .collect();
        parts.extend(self.pts.iter().map(|p| format!("{{{}}}", fmt_rat(p))));
        if parts.is_empty() {
            write!(f, "empty")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

/// Identifies the base set a partition or measure space lives on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseSet {
    /// ℕ = {1,2,3,…}
    Nat,
    /// half-open rational interval [lo, hi)
    Interval(Rat, Rat),
    /// finite set with labels 0..n
    Fin(u32),
}

impl BaseSet {
    pub fn full_rset(&self) -> RSet {
        match self {
            BaseSet::Nat => RSet::Nat(NSet::full()),
            BaseSet::Interval(a, b) => RSet::Line(LineSet::interval(a.clone(), b.clone())),
            BaseSet::Fin(n) => RSet::Fin((0..*n).collect()),
        }
    }
}

impl std::fmt::Display for BaseSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BaseSet::Nat => write!(f, "nat"),
            BaseSet::Interval(a, b) => write!(f, "[{},{})", fmt_rat(a), fmt_rat(b)),
            BaseSet::Fin(n) => write!(f, "fin({n})"),
        }
    }
}

/// A representable subset of one of the three base kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RSet {
    Nat(NSet),
    Line(LineSet),
    Fin(BTreeSet<u32>),
}

impl RSet {
    pub fn is_empty(&self) -> bool {
        match self {
            RSet::Nat(s) => s.is_empty(),
            RSet::Line(s) => s.is_empty(),
            RSet::Fin(s) => s.is_empty(),
        }
    }

    pub fn intersect(&self, other: &RSet) -> Option<RSet> {
        match (self, other) {
            (RSet::Nat(a), RSet::Nat(b)) => Some(RSet::Nat(a.intersect(b))),
            (RSet::Line(a), RSet::Line(b)) => Some(RSet::Line(a.intersect(b))),
            (RSet::Fin(a), RSet::Fin(b)) => Some(RSet::Fin(a.intersection(b).cloned().collect())),
            _ => None,
        }
    }

    pub fn union(&self, other: &RSet) -> Option<RSet> {
        match (self, other) {
            (RSet::Nat(a), RSet::Nat(b)) => Some(RSet::Nat(a.union(b))),
            (RSet::Line(a), RSet::Line(b)) => Some(RSet::Line(a.union(b))),
            (RSet::Fin(a), RSet::Fin(b)) => Some(RSet::Fin(a.union(b).cloned().collect())),
            _ => None,
        }
    }

    pub fn is_disjoint(&self, other: &RSet) -> bool {
        match (self, other) {
            (RSet::Nat(a), RSet::Nat(b)) => a.is_disjoint(b),
            (RSet::Line(a), RSet::Line(b)) => a.is_disjoint(b),
            (RSet::Fin(a), RSet::Fin(b)) => a.is_disjoint(b),
            _ => true,
        }
    }

    pub fn is_subset(&self, other: &RSet) -> bool {
        match (self, other) {
            (RSet::Nat(a), RSet::Nat(b)) => a.is_subset(b),
            (RSet::Line(a), RSet::Line(b)) => a.is_subset(b),
            (RSet::Fin(a), RSet::Fin(b)) => a.is_subset(b),
            _ => false,
        }
    }
}

impl std::fmt::Display for RSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RSet::Nat(s) => write!(f, "{s}"),
            RSet::Line(s) => write!(f, "{s}"),
            RSet::Fin(s) => write!(f, "{s:?}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, ratio};

    #[test]
    fn nset_evens_odds_partition_nat() {
        let e = NSet::evens();
        let o = NSet::odds();
        assert!(e.is_disjoint(&o));
        assert_eq!(e.union(&o), NSet::full());
        assert_eq!(e.complement(), o);
        assert!(e.contains(2) && !e.contains(3) && !e.contains(0));
    }

    #[test]
    fn nset_arithmetic_intersection() {
        // multiples-of-2 from 2 ∩ multiples-of-3 from 3 = multiples of 6
        let a = NSet::arithmetic(2, 2);
        let b = NSet::arithmetic(3, 3);
        let c = a.intersect(&b);
        assert_eq!(c, NSet::arithmetic(6, 6));
        assert_eq!(c.first_elements(3), vec![6, 12, 18]);
    }

    #[test]
    fn nset_finite_card_and_subset() {
        let s = NSet::finite([1, 5, 9]);
        assert_eq!(s.cardinality(), Some(3));
        assert!(s.is_subset(&NSet::odds()));
        assert!(!NSet::odds().is_subset(&s));
    }

    #[test]
    fn nset_canonical_equality() {
        // {1} ∪ {n >= 2} written two ways
        let a = NSet::full();
        let b = NSet::finite([1]).union(&NSet::from(2));
        assert_eq!(a, b);
    }

    #[test]
    fn lineset_algebra() {
        let half = LineSet::interval(int(0), ratio(1, 2));
        let whole = LineSet::interval(int(0), int(1));
        assert!(half.is_subset(&whole));
        let other = whole.minus(&half).unwrap();
        assert_eq!(other, LineSet::interval(ratio(1, 2), int(1)));
        assert!(half.is_disjoint(&other));
        assert_eq!(half.union(&other), whole);
        assert_eq!(half.measure(), ratio(1, 2));
        // removing an interior point has no half-open representation
        assert!(whole.minus(&LineSet::point(ratio(1, 2))).is_none());
    }

    #[test]
    fn lineset_points_are_null() {
        let p = LineSet::point(ratio(1, 2));
        assert!(p.is_null());
        assert!(p.is_subset(&LineSet::interval(int(0), int(1))));
        assert!(p.contains(&ratio(1, 2)));
        assert!(!p.contains(&ratio(1, 3)));
    }

    #[test]
    fn lineset_merge_adjacent() {
        let a = LineSet::interval(int(0), ratio(1, 3));
        let b = LineSet::interval(ratio(1, 3), int(1));
        assert_eq!(a.union(&b), LineSet::interval(int(0), int(1)));
    }
}
