//! Norms evaluable in closed form on catalog elements.

use serde::{Deserialize, Serialize};

use crate::rat::Rat;
use crate::spaces::{ElemVal, SpaceElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Norm {
    /// sup norm on sequence and piecewise elements
    Sup,
    /// ℓ¹ norm on finitely supported sequences
    L1,
    /// sup_x ∫_x^{x+1} |f| on line elements
    MovingAverage,
}

impl Norm {
    pub fn eval(&self, e: &SpaceElement) -> Option<Rat> {
        match (self, &e.val) {
            (Norm::Sup, ElemVal::Seq(s)) => Some(s.sup_norm()),
            (Norm::Sup, ElemVal::Pw(p)) => Some(p.sup_norm()),
            (Norm::Sup, ElemVal::Poly(q)) => {
                let pw = crate::spaces::PiecewisePoly::from_poly(q.clone());
                Some(pw.sup_norm())
            }
            (Norm::L1, ElemVal::Seq(s)) => s.l1_norm(),
            (Norm::MovingAverage, ElemVal::Line(l)) => l.moving_average_norm(),
            _ => None,
        }
    }
}

impl std::fmt::Display for Norm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Norm::Sup => write!(f, "sup"),
            Norm::L1 => write!(f, "l1"),
            Norm::MovingAverage => write!(f, "moving-average"),
        }
    }
}
