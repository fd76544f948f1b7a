//! Simple functions: finite sums Σ aᵢ·𝟙_{Aᵢ} with vector values and
//! representable sets. Overlapping terms add, so the value at a point is the
//! sum over the terms whose set contains it; this makes the integral linear
//! in the representation and representation-independence a checkable fact
//! rather than a normal-form obligation.

use serde::{Deserialize, Serialize};

use super::SpaceElement;
use crate::rat::Rat;
use crate::sets::{LineSet, NSet, RSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleFn {
    pub terms: Vec<(SpaceElement, RSet)>,
}

impl SimpleFn {
    pub fn new(terms: Vec<(SpaceElement, RSet)>) -> Self {
        SimpleFn { terms }
    }

    pub fn zero_elem() -> Self {
        SimpleFn { terms: vec![] }
    }

    pub fn add(&self, other: &SimpleFn) -> SimpleFn {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        SimpleFn { terms }
    }

    pub fn scale(&self, k: &Rat) -> SimpleFn {
        SimpleFn {
            terms: self.terms.iter().map(|(v, s)| (v.scale(k), s.clone())).collect(),
        }
    }

    pub fn neg(&self) -> SimpleFn {
        self.scale(&-crate::rat::one())
    }

    fn value_from_terms(&self, contains: impl Fn(&RSet) -> bool) -> Option<SpaceElement> {
        let mut acc: Option<SpaceElement> = None;
        for (v, s) in &self.terms {
            if contains(s) {
                acc = Some(match acc {
                    None => v.clone(),
                    Some(a) => a.add(v).ok()?,
                });
            }
        }
        acc.or_else(|| self.terms.first().map(|(v, _)| v.zero_like()))
    }

    pub fn value_at_nat(&self, n: u64) -> Option<SpaceElement> {
        self.value_from_terms(|s| matches!(s, RSet::Nat(ns) if ns.contains(n)))
    }

    pub fn value_at_line(&self, x: &Rat) -> Option<SpaceElement> {
        self.value_from_terms(|s| matches!(s, RSet::Line(ls) if ls.contains(x)))
    }

    pub fn value_at_fin(&self, label: u32) -> Option<SpaceElement> {
        self.value_from_terms(|s| matches!(s, RSet::Fin(fs) if fs.contains(&label)))
    }

    /// Finitely many inputs that, together with one witness inside each open
    /// region between them, determine the function everywhere.
    pub fn probe_points(&self, other: Option<&SimpleFn>) -> ProbeSet {
        let mut nat_window: (u64, u64) = (1, 1); // (threshold, period lcm)
        let mut line_marks: Vec<Rat> = Vec::new();
        let mut fin_labels: Vec<u32> = Vec::new();
        let mut nat_any = false;
        let mut line_any = false;
        let all = self.terms.iter().chain(other.into_iter().flat_map(|o| o.terms.iter()));
        for (_, s) in all {
            match s {
                RSet::Nat(ns) => {
                    nat_any = true;
                    nat_window.0 = nat_window.0.max(ns.periodic_from());
                    nat_window.1 = num_integer::lcm(nat_window.1, ns.period());
                }
                RSet::Line(ls) => {
                    line_any = true;
                    for (a, b) in ls.intervals() {
                        line_marks.push(a.clone());
                        line_marks.push(b.clone());
                    }
                    line_marks.extend(ls.points().iter().cloned());
                }
                RSet::Fin(fs) => {
                    fin_labels.extend(fs.iter().cloned());
                }
            }
        }
        line_marks.sort();
        line_marks.dedup();
        fin_labels.sort();
        fin_labels.dedup();
        ProbeSet {
            nat: nat_any.then(|| nat_window.0 + nat_window.1),
            line_marks: line_any.then_some(line_marks),
            fin_labels,
        }
    }

    /// Pointwise order summary (everywhere >= 0, everywhere <= 0) of this
    /// simple function, decided by exhausting the finitely many probe classes.
    pub fn sign_summary(&self) -> Option<(bool, bool)> {
        let probes = self.probe_points(None);
        let mut nonneg = true;
        let mut nonpos = true;
        if let Some(upto) = probes.nat {
            for n in 1..=upto {
                let (a, b) = self.value_at_nat(n)?.sign_summary();
                nonneg &= a;
                nonpos &= b;
            }
        }
        if let Some(marks) = &probes.line_marks {
            for x in ProbeSet::line_probe_values(marks) {
                let (a, b) = self.value_at_line(&x)?.sign_summary();
                nonneg &= a;
                nonpos &= b;
            }
        }
        for l in &probes.fin_labels {
            let (a, b) = self.value_at_fin(*l)?.sign_summary();
            nonneg &= a;
            nonpos &= b;
        }
        Some((nonneg, nonpos))
    }

    pub fn is_zero(&self) -> bool {
        self.sign_summary().map(|(a, b)| a && b).unwrap_or(false)
    }

    /// (threshold, period): for base-ℕ simple functions, the value at n is a
    /// periodic function of n with this period once n >= threshold — the term
    /// sets are eventually periodic and each value element reads coordinate n
    /// from its own eventually periodic description.
    pub fn nat_window(&self) -> (u64, u64) {
        let mut t = 1u64;
        let mut p = 1u64;
        for (v, s) in &self.terms {
            if let RSet::Nat(ns) = s {
                t = t.max(ns.periodic_from());
                p = num_integer::lcm(p, ns.period());
            }
            if let crate::spaces::ElemVal::Seq(seq) = &v.val {
                t = t.max(seq.prefix_len() as u64 + 1);
                p = num_integer::lcm(p, seq.tail_period());
            }
        }
        (t, p)
    }

    /// The union of all term sets (an over-approximation of the support).
    pub fn carrier(&self) -> Option<RSet> {
        let mut acc: Option<RSet> = None;
        for (_, s) in &self.terms {
            acc = Some(match acc {
                None => s.clone(),
                Some(a) => a.union(s)?,
            });
        }
        acc
    }
}

pub struct ProbeSet {
    /// check all n in 1..=this (covers one full period past every threshold)
    pub nat: Option<u64>,
    pub line_marks: Option<Vec<Rat>>,
    pub fin_labels: Vec<u32>,
}

impl ProbeSet {
    /// The marks themselves plus a rational witness inside each open gap and
    /// one beyond each end.
    pub fn line_probe_values(marks: &[Rat]) -> Vec<Rat> {
        let mut out = Vec::new();
        if marks.is_empty() {
            out.push(crate::rat::zero());
            return out;
        }
        out.push(marks[0].clone() - crate::rat::one());
        for (i, m) in marks.iter().enumerate() {
            out.push(m.clone());
            if i + 1 < marks.len() {
                out.push((m + &marks[i + 1]) / crate::rat::int(2));
            }
        }
        out.push(marks[marks.len() - 1].clone() + crate::rat::one());
        out
    }
}

/// Builds the NSet / LineSet constructors most scenarios need.
pub fn nat_set(ns: NSet) -> RSet {
    RSet::Nat(ns)
}

pub fn line_set(ls: LineSet) -> RSet {
    RSet::Line(ls)
}
