//! Scalar pairs: ℝ² with the lexicographic or the componentwise order.

use serde::{Deserialize, Serialize};

use crate::rat::{fmt_rat, zero, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairOrder {
    Lexicographic,
    Componentwise,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairElement {
    pub first: Rat,
    pub second: Rat,
    pub order: PairOrder,
}

impl PairElement {
    pub fn new(first: Rat, second: Rat, order: PairOrder) -> Self {
        PairElement { first, second, order }
    }

    pub fn zero_elem(order: PairOrder) -> Self {
        PairElement::new(zero(), zero(), order)
    }

    pub fn add(&self, other: &PairElement) -> PairElement {
        PairElement::new(&self.first + &other.first, &self.second + &other.second, self.order)
    }

    pub fn scale(&self, k: &Rat) -> PairElement {
        PairElement::new(&self.first * k, &self.second * k, self.order)
    }

    pub fn neg(&self) -> PairElement {
        self.scale(&-crate::rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.first == zero() && self.second == zero()
    }

    /// (a,b) >= 0 in the lexicographic order iff a > 0, or a = 0 and b >= 0.
    pub fn sign_summary(&self) -> (bool, bool) {
        match self.order {
            PairOrder::Lexicographic => {
                let nonneg = self.first > zero() || (self.first == zero() && self.second >= zero());
                let nonpos = self.first < zero() || (self.first == zero() && self.second <= zero());
                (nonneg, nonpos)
            }
            PairOrder::Componentwise => (
                self.first >= zero() && self.second >= zero(),
                self.first <= zero() && self.second <= zero(),
            ),
        }
    }
}

impl std::fmt::Display for PairElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", fmt_rat(&self.first), fmt_rat(&self.second))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    #[test]
    fn lex_order_is_total() {
        // (1,-5) >= (0,100) lexicographically
        let a = PairElement::new(int(1), int(-5), PairOrder::Lexicographic);
        let b = PairElement::new(int(0), int(100), PairOrder::Lexicographic);
        let d = a.add(&b.neg());
        let (nonneg, nonpos) = d.sign_summary();
        assert!(nonneg && !nonpos);
    }

    #[test]
    fn componentwise_incomparable() {
        let a = PairElement::new(int(1), int(-1), PairOrder::Componentwise);
        let (nonneg, nonpos) = a.sign_summary();
        assert!(!nonneg && !nonpos);
    }
}
