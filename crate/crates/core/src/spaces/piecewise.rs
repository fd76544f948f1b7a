//! Piecewise polynomial functions on [0,1] with rational breakpoints.
//!
//! Piece i lives on [breaks[i], breaks[i+1]); the last piece also owns x = 1.
//! Degrees are at most 2, so per-piece order questions are vertex-exact.

use serde::{Deserialize, Serialize};

use super::poly::Poly2;
use crate::rat::{int, one, zero, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PiecewisePoly {
    breaks: Vec<Rat>,
    pieces: Vec<Poly2>,
}

impl PiecewisePoly {
    pub fn new(breaks: Vec<Rat>, pieces: Vec<Poly2>) -> Result<Self, String> {
        if breaks.len() < 2 || breaks.len() != pieces.len() + 1 {
            return Err("breakpoint/piece count mismatch".into());
        }
        if breaks[0] != zero() || breaks[breaks.len() - 1] != one() {
            return Err("breakpoints must span [0,1]".into());
        }
        for w in breaks.windows(2) {
            if w[0] >= w[1] {
                return Err("breakpoints must strictly increase".into());
            }
        }
        Ok(PiecewisePoly { breaks, pieces }.simplify())
    }

    pub fn from_poly(p: Poly2) -> Self {
        PiecewisePoly { breaks: vec![zero(), one()], pieces: vec![p] }
    }

    pub fn constant(c: Rat) -> Self {
        PiecewisePoly::from_poly(Poly2::constant(c))
    }

    pub fn zero_elem() -> Self {
        PiecewisePoly::constant(zero())
    }

    /// Step function: values[i] on [cuts[i], cuts[i+1]).
    pub fn step(cuts: Vec<Rat>, values: Vec<Rat>) -> Result<Self, String> {
        PiecewisePoly::new(cuts, values.into_iter().map(Poly2::constant).collect())
    }

    /// Continuous piecewise-linear interpolation through (xs[i], ys[i]).
    pub fn linear_interp(xs: &[Rat], ys: &[Rat]) -> Result<Self, String> {
        if xs.len() != ys.len() || xs.len() < 2 {
            return Err("need matching node lists".into());
        }
        let mut pieces = Vec::new();
        for i in 0..xs.len() - 1 {
            let dx = &xs[i + 1] - &xs[i];
            if dx <= zero() {
                return Err("nodes must strictly increase".into());
            }
            let slope = (&ys[i + 1] - &ys[i]) / &dx;
            // y_i + slope (x - x_i)
            pieces.push(Poly2::new(&ys[i] - &slope * &xs[i], slope, zero()));
        }
        PiecewisePoly::new(xs.to_vec(), pieces)
    }

    pub fn breaks(&self) -> &[Rat] {
        &self.breaks
    }

    pub fn pieces(&self) -> &[Poly2] {
        &self.pieces
    }

    fn simplify(mut self) -> Self {
        // merge adjacent pieces with identical polynomials
        let mut i = 0;
        while i + 1 < self.pieces.len() {
            if self.pieces[i] == self.pieces[i + 1] {
                self.pieces.remove(i + 1);
                self.breaks.remove(i + 1);
            } else {
                i += 1;
            }
        }
        self
    }

    pub fn degree(&self) -> usize {
        self.pieces.iter().map(|p| p.degree()).max().unwrap_or(0)
    }

    pub fn is_step(&self) -> bool {
        self.degree() == 0
    }

    /// Continuity at every interior breakpoint (left limit equals the value
    /// owned by the right piece).
    pub fn is_continuous(&self) -> bool {
        for i in 1..self.breaks.len() - 1 {
            let b = &self.breaks[i];
            if self.pieces[i - 1].eval(b) != self.pieces[i].eval(b) {
                return false;
            }
        }
        true
    }

    fn piece_index(&self, x: &Rat) -> usize {
        if *x >= one() {
            return self.pieces.len() - 1;
        }
        // last i with breaks[i] <= x
        let mut idx = 0;
        for i in 0..self.pieces.len() {
            if &self.breaks[i] <= x {
                idx = i;
            }
        }
        idx
    }

    /// Exact evaluation; breakpoints belong to the piece starting there
    /// (half-open convention), x = 1 to the last piece.
    pub fn eval(&self, x: &Rat) -> Result<Rat, String> {
        if *x < zero() || *x > one() {
            return Err(format!("argument {} outside [0,1]", crate::rat::fmt_rat(x)));
        }
        Ok(self.pieces[self.piece_index(x)].eval(x))
    }

    /// Refines both functions to a shared breakpoint list.
    pub fn align(&self, other: &PiecewisePoly) -> (Vec<Rat>, Vec<Poly2>, Vec<Poly2>) {
        let mut cuts: Vec<Rat> = self.breaks.iter().chain(other.breaks.iter()).cloned().collect();
        cuts.sort();
        cuts.dedup();
        let mut a = Vec::new();
        let mut b = Vec::new();
        for w in cuts.windows(2) {
            a.push(self.pieces[self.piece_index(&w[0])].clone());
            b.push(other.pieces[other.piece_index(&w[0])].clone());
        }
        (cuts, a, b)
    }

    fn zip(&self, other: &PiecewisePoly, f: impl Fn(&Poly2, &Poly2) -> Poly2) -> PiecewisePoly {
        let (cuts, a, b) = self.align(other);
        let pieces = a.iter().zip(b.iter()).map(|(p, q)| f(p, q)).collect();
        PiecewisePoly { breaks: cuts, pieces }.simplify()
    }

    pub fn add(&self, other: &PiecewisePoly) -> PiecewisePoly {
        self.zip(other, |p, q| p.add(q))
    }

    pub fn sub(&self, other: &PiecewisePoly) -> PiecewisePoly {
        self.zip(other, |p, q| p.sub(q))
    }

    pub fn scale(&self, k: &Rat) -> PiecewisePoly {
        PiecewisePoly {
            breaks: self.breaks.clone(),
            pieces: self.pieces.iter().map(|p| p.scale(k)).collect(),
        }
        .simplify()
    }

    pub fn neg(&self) -> PiecewisePoly {
        self.scale(&int(-1))
    }

    /// Pointwise product, when degrees stay <= 2.
    pub fn mul(&self, other: &PiecewisePoly) -> Option<PiecewisePoly> {
        let (cuts, a, b) = self.align(other);
        let mut pieces = Vec::new();
        for (p, q) in a.iter().zip(b.iter()) {
            pieces.push(p.mul(q)?);
        }
        Some(PiecewisePoly { breaks: cuts, pieces }.simplify())
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.iter().all(|p| p.is_zero())
    }

    /// (everywhere >= 0, everywhere <= 0) on [0,1], exactly.
    ///
    /// Each piece is continuous on its half-open interval, so the closed
    /// interval min/max decide the half-open sign questions too.
    pub fn sign_summary(&self) -> (bool, bool) {
        let mut nonneg = true;
        let mut nonpos = true;
        for i in 0..self.pieces.len() {
            let lo = &self.breaks[i];
            let hi = &self.breaks[i + 1];
            let m = self.pieces[i].min_on(lo, hi);
            let mx = self.pieces[i].max_on(lo, hi);
            nonneg &= m >= zero();
            nonpos &= mx <= zero();
        }
        (nonneg, nonpos)
    }

    /// Exact Riemann integral over [0,1].
    pub fn integral(&self) -> Rat {
        let mut acc = zero();
        for i in 0..self.pieces.len() {
            acc += self.pieces[i].integral(&self.breaks[i], &self.breaks[i + 1]);
        }
        acc
    }

    /// Exact minimum over [0,1].
    pub fn min_value(&self) -> Rat {
        let mut m: Option<Rat> = None;
        for i in 0..self.pieces.len() {
            let v = self.pieces[i].min_on(&self.breaks[i], &self.breaks[i + 1]);
            m = Some(match m {
                None => v,
                Some(cur) => cur.min(v),
            });
        }
        m.unwrap()
    }

    pub fn max_value(&self) -> Rat {
        -self.neg().min_value()
    }

    pub fn sup_norm(&self) -> Rat {
        self.max_value().max(-self.min_value())
    }

    /// Pointwise max, inserting rational crossing points. None when a sign
    /// change of the difference happens at an irrational point, in which case
    /// the pointwise max is not representable with rational breakpoints.
    pub fn pointwise_sup(&self, other: &PiecewisePoly) -> Option<PiecewisePoly> {
        let (cuts, a, b) = self.align(other);
        let mut new_cuts = vec![cuts[0].clone()];
        let mut pieces: Vec<Poly2> = Vec::new();
        for i in 0..a.len() {
            let lo = cuts[i].clone();
            let hi = cuts[i + 1].clone();
            let d = a[i].sub(&b[i]);
            let mut marks = vec![lo.clone()];
            marks.extend(d.rational_roots_in(&lo, &hi)?);
            marks.push(hi.clone());
            for w in marks.windows(2) {
                // on (w0, w1) the difference has constant sign; decide by the
                // exact min/max over the closed subinterval
                let take_a = d.min_on(&w[0], &w[1]) >= zero();
                let take_b = d.max_on(&w[0], &w[1]) <= zero();
                let chosen = if take_a {
                    a[i].clone()
                } else if take_b {
                    b[i].clone()
                } else {
                    return None; // sign change without a rational root in the list
                };
                if pieces.last() == Some(&chosen) {
                    *new_cuts.last_mut().unwrap() = w[1].clone();
                } else {
                    pieces.push(chosen);
                    new_cuts.push(w[1].clone());
                }
            }
        }
        PiecewisePoly::new(new_cuts, pieces).ok()
    }

    pub fn pointwise_inf(&self, other: &PiecewisePoly) -> Option<PiecewisePoly> {
        Some(self.neg().pointwise_sup(&other.neg())?.neg())
    }
}

impl std::fmt::Display for PiecewisePoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = (0..self.pieces.len())
            .map(|i| {
                format!(
                    "[{},{}): {}",
                    crate::rat::fmt_rat(&self.breaks[i]),
                    crate::rat::fmt_rat(&self.breaks[i + 1]),
                    self.pieces[i]
                )
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn x() -> PiecewisePoly {
        PiecewisePoly::from_poly(Poly2::x())
    }

    #[test]
    fn sup_of_x_and_one_minus_x() {
        // crossing at 1/2; values 1, 1/2, 1 at 0, 1/2, 1
        let a = x();
        let b = PiecewisePoly::from_poly(Poly2::new(one(), int(-1), zero()));
        let s = a.pointwise_sup(&b).unwrap();
        assert_eq!(s.eval(&zero()).unwrap(), one());
        assert_eq!(s.eval(&ratio(1, 2)).unwrap(), ratio(1, 2));
        assert_eq!(s.eval(&one()).unwrap(), one());
        assert_eq!(s.breaks().len(), 3);
        assert!(s.is_continuous());
    }

    #[test]
    fn x_squared_below_x() {
        let d = x().sub(&PiecewisePoly::from_poly(Poly2::x_squared()));
        let (nonneg, nonpos) = d.sign_summary();
        assert!(nonneg && !nonpos);
    }

    #[test]
    fn integral_splits_at_breakpoints() {
        let f = PiecewisePoly::step(vec![zero(), ratio(1, 2), one()], vec![one(), int(2)]).unwrap();
        assert_eq!(f.integral(), ratio(3, 2));
        assert_eq!(f.eval(&ratio(1, 2)).unwrap(), int(2));
        assert_eq!(f.eval(&ratio(1, 4)).unwrap(), one());
    }

    #[test]
    fn irrational_crossing_detected() {
        // x² vs constant 1/2 crosses at 1/√2
        let a = PiecewisePoly::from_poly(Poly2::x_squared());
        let b = PiecewisePoly::constant(ratio(1, 2));
        assert!(a.pointwise_sup(&b).is_none());
    }

    #[test]
    fn tent_interpolation() {
        // tent through (0,0), (1/2,1), (1,0)
        let t = PiecewisePoly::linear_interp(
            &[zero(), ratio(1, 2), one()],
            &[zero(), one(), zero()],
        )
        .unwrap();
        assert_eq!(t.eval(&ratio(1, 4)).unwrap(), ratio(1, 2));
        assert_eq!(t.eval(&ratio(3, 4)).unwrap(), ratio(1, 2));
        assert!(t.is_continuous());
        assert_eq!(t.integral(), ratio(1, 2));
    }
}
