//! Sequence elements: finite prefix plus a symbolic tail.
//!
//! The tail is anchored at absolute index 1, so the value at coordinate n of
//! a `Periodic` tail is `pattern[(n-1) mod len]` regardless of the prefix
//! length. This keeps addition of two tails a pointwise operation on patterns
//! (over the lcm of the periods) with no phase bookkeeping.

use serde::{Deserialize, Serialize};

use crate::rat::{fmt_rat, zero, Rat};
use crate::sets::NSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeqTail {
    Zero,
    Constant(Rat),
    Periodic(Vec<Rat>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeqElement {
    prefix: Vec<Rat>,
    tail: SeqTail,
}

impl SeqElement {
    pub fn new(prefix: Vec<Rat>, tail: SeqTail) -> Self {
        let mut s = SeqElement { prefix, tail };
        s.canonicalize();
        s
    }

    pub fn zero_elem() -> Self {
        SeqElement { prefix: vec![], tail: SeqTail::Zero }
    }

    pub fn constant(c: Rat) -> Self {
        SeqElement::new(vec![], SeqTail::Constant(c))
    }

    pub fn ones() -> Self {
        SeqElement::constant(crate::rat::one())
    }

    /// e_n = indicator of {n}, 1-based.
    pub fn basis(n: u64) -> Self {
        assert!(n >= 1);
        let mut prefix = vec![zero(); n as usize];
        prefix[(n - 1) as usize] = crate::rat::one();
        SeqElement::new(prefix, SeqTail::Zero)
    }

    pub fn from_prefix(prefix: Vec<Rat>) -> Self {
        SeqElement::new(prefix, SeqTail::Zero)
    }

    /// scale · indicator of an eventually periodic subset of ℕ.
    pub fn indicator(set: &NSet, scale: &Rat) -> Self {
        let t = set.periodic_from();
        let k = set.period();
        let prefix: Vec<Rat> =
            (1..t).map(|n| if set.contains(n) { scale.clone() } else { zero() }).collect();
        // anchored pattern: pattern[(n-1) mod k] for n >= t
        let mut pattern = vec![zero(); k as usize];
        for n in t..t + k {
            if set.contains(n) {
                pattern[((n - 1) % k) as usize] = scale.clone();
            }
        }
        SeqElement::new(prefix, SeqTail::Periodic(pattern))
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix.len()
    }

    pub fn tail(&self) -> &SeqTail {
        &self.tail
    }

    /// Coordinates are periodic with this period beyond the prefix.
    pub fn tail_period(&self) -> u64 {
        match &self.tail {
            SeqTail::Zero | SeqTail::Constant(_) => 1,
            SeqTail::Periodic(p) => p.len() as u64,
        }
    }

    fn tail_value(&self, n: u64) -> Rat {
        match &self.tail {
            SeqTail::Zero => zero(),
            SeqTail::Constant(c) => c.clone(),
            SeqTail::Periodic(p) => p[((n - 1) as usize) % p.len()].clone(),
        }
    }

    /// Coordinate n, 1-based.
    pub fn coord(&self, n: u64) -> Rat {
        assert!(n >= 1);
        if (n as usize) <= self.prefix.len() {
            self.prefix[(n - 1) as usize].clone()
        } else {
            self.tail_value(n)
        }
    }

    fn canonicalize(&mut self) {
        // reduce a periodic pattern to its minimal period, or to a constant
        if let SeqTail::Periodic(p) = &self.tail {
            let k = p.len();
            let mut min_p = k;
            for d in 1..k {
                if k % d == 0 && (0..k).all(|i| p[i] == p[i % d]) {
                    min_p = d;
                    break;
                }
            }
            if min_p == 1 {
                let c = p[0].clone();
                self.tail = if c == zero() { SeqTail::Zero } else { SeqTail::Constant(c) };
            } else if min_p < k {
                self.tail = SeqTail::Periodic(p[..min_p].to_vec());
            }
        }
        if let SeqTail::Constant(c) = &self.tail {
            if *c == zero() {
                self.tail = SeqTail::Zero;
            }
        }
        // trim prefix entries the tail already predicts
        while let Some(last) = self.prefix.last() {
            let n = self.prefix.len() as u64;
            if *last == self.tail_value(n) {
                self.prefix.pop();
            } else {
                break;
            }
        }
    }

    fn zip(&self, other: &SeqElement, f: impl Fn(&Rat, &Rat) -> Rat) -> SeqElement {
        let plen = self.prefix.len().max(other.prefix.len());
        let prefix: Vec<Rat> =
            (1..=plen as u64).map(|n| f(&self.coord(n), &other.coord(n))).collect();
        let tail = match (&self.tail, &other.tail) {
            (SeqTail::Periodic(p), _) | (_, SeqTail::Periodic(p)) => {
                let q = match (&self.tail, &other.tail) {
                    (SeqTail::Periodic(a), SeqTail::Periodic(b)) => {
                        num_integer::lcm(a.len(), b.len())
                    }
                    _ => p.len(),
                };
                let start = plen as u64 + 1;
                // anchored: compute one full window and re-anchor
                let mut pattern = vec![zero(); q];
                for n in start..start + q as u64 {
                    pattern[((n - 1) as usize) % q] = f(&self.tail_value(n), &other.tail_value(n));
                }
                SeqTail::Periodic(pattern)
            }
            _ => {
                let c = f(&self.tail_value(plen as u64 + 1), &other.tail_value(plen as u64 + 1));
                if c == zero() {
                    SeqTail::Zero
                } else {
                    SeqTail::Constant(c)
                }
            }
        };
        SeqElement::new(prefix, tail)
    }

    pub fn add(&self, other: &SeqElement) -> SeqElement {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &SeqElement) -> SeqElement {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rat) -> SeqElement {
        let prefix = self.prefix.iter().map(|x| x * c).collect();
        let tail = match &self.tail {
            SeqTail::Zero => SeqTail::Zero,
            SeqTail::Constant(k) => SeqTail::Constant(k * c),
            SeqTail::Periodic(p) => SeqTail::Periodic(p.iter().map(|x| x * c).collect()),
        };
        SeqElement::new(prefix, tail)
    }

    pub fn neg(&self) -> SeqElement {
        self.scale(&-crate::rat::one())
    }

    pub fn pointwise_sup(&self, other: &SeqElement) -> SeqElement {
        self.zip(other, |a, b| a.max(b).clone())
    }

    pub fn pointwise_inf(&self, other: &SeqElement) -> SeqElement {
        self.zip(other, |a, b| a.min(b).clone())
    }

    /// (all coords >= 0, all coords <= 0), decided exactly.
    pub fn sign_summary(&self) -> (bool, bool) {
        let mut nonneg = self.prefix.iter().all(|x| *x >= zero());
        let mut nonpos = self.prefix.iter().all(|x| *x <= zero());
        match &self.tail {
            SeqTail::Zero => {}
            SeqTail::Constant(c) => {
                nonneg &= *c >= zero();
                nonpos &= *c <= zero();
            }
            SeqTail::Periodic(p) => {
                nonneg &= p.iter().all(|x| *x >= zero());
                nonpos &= p.iter().all(|x| *x <= zero());
            }
        }
        (nonneg, nonpos)
    }

    pub fn is_zero(&self) -> bool {
        self.prefix.is_empty() && matches!(self.tail, SeqTail::Zero)
    }

    /// Some(c) iff the sequence is eventually the constant c.
    pub fn eventual_constant(&self) -> Option<Rat> {
        match &self.tail {
            SeqTail::Zero => Some(zero()),
            SeqTail::Constant(c) => Some(c.clone()),
            SeqTail::Periodic(_) => None,
        }
    }

    pub fn is_finitely_supported(&self) -> bool {
        matches!(self.tail, SeqTail::Zero)
    }

    /// Largest index with a (possibly) nonzero coordinate, when finitely supported.
    pub fn support_bound(&self) -> Option<u64> {
        self.is_finitely_supported().then(|| self.prefix.len() as u64)
    }

    pub fn sup_norm(&self) -> Rat {
        use num_traits::Signed;
        let mut m = zero();
        for x in &self.prefix {
            m = m.max(x.abs());
        }
        match &self.tail {
            SeqTail::Zero => {}
            SeqTail::Constant(c) => m = m.max(c.abs()),
            SeqTail::Periodic(p) => {
                for x in p {
                    m = m.max(x.abs());
                }
            }
        }
        m
    }

    /// ℓ¹ norm; defined on finitely supported elements only.
    pub fn l1_norm(&self) -> Option<Rat> {
        use num_traits::Signed;
        self.is_finitely_supported()
            .then(|| self.prefix.iter().map(|x| x.abs()).fold(zero(), |a, b| a + b))
    }
}

impl std::fmt::Display for SeqElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.prefix.iter().map(fmt_rat).collect();
        let tail = match &self.tail {
            SeqTail::Zero => "0,0,...".to_string(),
            SeqTail::Constant(c) => format!("{0},{0},...", fmt_rat(c)),
            SeqTail::Periodic(p) => {
                let pp: Vec<String> = p.iter().map(fmt_rat).collect();
                format!("per({})...", pp.join(","))
            }
        };
        write!(f, "({}{}{})", parts.join(","), if parts.is_empty() { "" } else { "," }, tail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, one, ratio};

    #[test]
    fn basis_and_sum() {
        let e1 = SeqElement::basis(1);
        let e2 = SeqElement::basis(2);
        let s = e1.add(&e2);
        assert_eq!(s.coord(1), one());
        assert_eq!(s.coord(2), one());
        assert_eq!(s.coord(3), zero());
        assert!(s.is_finitely_supported());
    }

    #[test]
    fn periodic_anchoring_is_phase_free() {
        // indicator of evens, built two ways
        let ind = SeqElement::indicator(&NSet::evens(), &one());
        assert_eq!(ind.coord(1), zero());
        assert_eq!(ind.coord(2), one());
        assert_eq!(ind.coord(1001), zero());
        assert_eq!(ind.coord(1002), one());
        // evens + odds = ones
        let odds = SeqElement::indicator(&NSet::odds(), &one());
        assert_eq!(ind.add(&odds), SeqElement::ones());
    }

    #[test]
    fn canonical_trim() {
        // prefix (0,1) with constant-1 tail == prefix (0) with constant-1 tail
        let a = SeqElement::new(vec![zero(), one()], SeqTail::Constant(one()));
        let b = SeqElement::new(vec![zero()], SeqTail::Constant(one()));
        assert_eq!(a, b);
    }

    #[test]
    fn tail_ones_shape() {
        // 1 - (e1 + e2) = zeros then ones
        let ones = SeqElement::ones();
        let partial = SeqElement::basis(1).add(&SeqElement::basis(2));
        let t = ones.sub(&partial);
        assert_eq!(t.coord(1), zero());
        assert_eq!(t.coord(2), zero());
        assert_eq!(t.coord(3), one());
        assert_eq!(t.eventual_constant(), Some(one()));
    }

    #[test]
    fn norms() {
        let x = SeqElement::from_prefix(vec![int(-3), ratio(1, 2)]);
        assert_eq!(x.sup_norm(), int(3));
        assert_eq!(x.l1_norm(), Some(ratio(7, 2)));
        assert_eq!(SeqElement::ones().l1_norm(), None);
        assert_eq!(SeqElement::ones().sup_norm(), one());
    }
}
