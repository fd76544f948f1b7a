//! Finite-presentation functions on the real line: finitely many polynomial
//! pieces on half-open intervals, a constant ray tail, and point deltas.
//!
//! Off every piece the value is 0. Point deltas are additive corrections at
//! single points, which is how indicators of sets like (a,b] are written:
//! [a,b) + delta(b,+1) + delta(a,-1). These stand in for the function-space
//! lattices of the Bochner examples (moving-average norm) and for bounded
//! functions on [0,1).

use serde::{Deserialize, Serialize};

use super::poly::Poly2;
use crate::rat::{zero, Rat};
use crate::sets::LineSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct LineFn {
    /// disjoint sorted [a,b) pieces
    ivs: Vec<(Rat, Rat, Poly2)>,
    /// constant value on [from, ∞)
    ray: Option<(Rat, Rat)>,
    /// additive corrections at isolated points
    deltas: Vec<(Rat, Rat)>,
}

impl LineFn {
    pub fn zero_elem() -> Self {
        LineFn::default()
    }

    pub fn from_pieces(mut ivs: Vec<(Rat, Rat, Poly2)>) -> Self {
        ivs.retain(|(a, b, p)| a < b && !p.is_zero());
        ivs.sort_by(|x, y| x.0.cmp(&y.0));
        for w in ivs.windows(2) {
            assert!(w[0].1 <= w[1].0, "line pieces must be disjoint");
        }
        LineFn { ivs, ray: None, deltas: vec![] }
    }

    pub fn with_ray(mut self, from: Rat, value: Rat) -> Self {
        if let Some((_, b, _)) = self.ivs.last() {
            assert!(*b <= from, "ray must start after the pieces");
        }
        self.ray = Some((from, value));
        self
    }

    pub fn with_delta(mut self, at: Rat, value: Rat) -> Self {
        self.deltas.push((at, value));
        self.normalize_deltas();
        self
    }

    /// Indicator of a LineSet's intervals (points in the set become +1 deltas).
    pub fn indicator(set: &LineSet) -> Self {
        let ivs = set
            .intervals()
            .iter()
            .map(|(a, b)| (a.clone(), b.clone(), Poly2::constant(crate::rat::one())))
            .collect();
        let mut f = LineFn::from_pieces(ivs);
        for p in set.points() {
            f = f.with_delta(p.clone(), crate::rat::one());
        }
        f
    }

    /// Indicator of the left-open interval (a, b].
    pub fn indicator_lopen(a: &Rat, b: &Rat) -> Self {
        LineFn::from_pieces(vec![(a.clone(), b.clone(), Poly2::constant(crate::rat::one()))])
            .with_delta(a.clone(), -crate::rat::one())
            .with_delta(b.clone(), crate::rat::one())
    }

    /// Ramp: 0 before `lo`, affine from 0 to 1 on [lo, hi), 1 on [hi, ∞);
    /// this is the closed form of the Bochner integral of the S_{a,c} maps.
    pub fn ramp(lo: Rat, hi: Rat) -> Self {
        assert!(lo < hi);
        let slope = crate::rat::one() / (&hi - &lo);
        let p = Poly2::new(-&slope * &lo, slope, zero());
        LineFn::from_pieces(vec![(lo, hi.clone(), p)]).with_ray(hi, crate::rat::one())
    }

    fn normalize_deltas(&mut self) {
        let mut acc: std::collections::BTreeMap<Rat, Rat> = Default::default();
        for (x, v) in self.deltas.drain(..) {
            *acc.entry(x).or_insert_with(zero) += v;
        }
        self.deltas = acc.into_iter().filter(|(_, v)| *v != zero()).collect();
    }

    fn base_value(&self, x: &Rat) -> Rat {
        for (a, b, p) in &self.ivs {
            if a <= x && x < b {
                return p.eval(x);
            }
        }
        if let Some((from, v)) = &self.ray {
            if x >= from {
                return v.clone();
            }
        }
        zero()
    }

    pub fn value(&self, x: &Rat) -> Rat {
        let mut v = self.base_value(x);
        for (p, d) in &self.deltas {
            if p == x {
                v += d;
            }
        }
        v
    }

    /// All boundary/correction points of the presentation.
    pub fn critical_points(&self) -> Vec<Rat> {
        let mut pts = Vec::new();
        for (a, b, _) in &self.ivs {
            pts.push(a.clone());
            pts.push(b.clone());
        }
        if let Some((from, _)) = &self.ray {
            pts.push(from.clone());
        }
        for (p, _) in &self.deltas {
            pts.push(p.clone());
        }
        pts.sort();
        pts.dedup();
        pts
    }

    pub fn add(&self, other: &LineFn) -> LineFn {
        let mut cuts: Vec<Rat> = self.critical_points();
        cuts.extend(other.critical_points());
        cuts.sort();
        cuts.dedup();
        let mut ivs = Vec::new();
        for w in cuts.windows(2) {
            let p = self.piece_on(&w[0], &w[1]).add(&other.piece_on(&w[0], &w[1]));
            if !p.is_zero() {
                ivs.push((w[0].clone(), w[1].clone(), p));
            }
        }
        let ray = match (&self.ray, &other.ray, cuts.last()) {
            (None, None, _) => None,
            (_, _, Some(last)) => {
                let s = self.ray_value_beyond() + other.ray_value_beyond();
                (s != zero()).then(|| (last.clone(), s))
            }
            _ => None,
        };
        let mut out = LineFn { ivs, ray, deltas: vec![] };
        for (p, d) in self.deltas.iter().chain(other.deltas.iter()) {
            out = out.with_delta(p.clone(), d.clone());
        }
        out
    }

    fn ray_value_beyond(&self) -> Rat {
        self.ray.as_ref().map(|(_, v)| v.clone()).unwrap_or_else(zero)
    }

    /// The polynomial describing this function on [a,b) (which must not cross
    /// any critical point).
    fn piece_on(&self, a: &Rat, _b: &Rat) -> Poly2 {
        for (lo, hi, p) in &self.ivs {
            if lo <= a && a < hi {
                return p.clone();
            }
        }
        if let Some((from, v)) = &self.ray {
            if a >= from {
                return Poly2::constant(v.clone());
            }
        }
        Poly2::zero_poly()
    }

    pub fn scale(&self, k: &Rat) -> LineFn {
        if *k == zero() {
            return LineFn::zero_elem();
        }
        LineFn {
            ivs: self.ivs.iter().map(|(a, b, p)| (a.clone(), b.clone(), p.scale(k))).collect(),
            ray: self.ray.as_ref().map(|(f, v)| (f.clone(), v * k)),
            deltas: self.deltas.iter().map(|(p, d)| (p.clone(), d * k)).collect(),
        }
    }

    pub fn neg(&self) -> LineFn {
        self.scale(&-crate::rat::one())
    }

    pub fn sub(&self, other: &LineFn) -> LineFn {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.ivs.is_empty() && self.deltas.is_empty() && self.ray_value_beyond() == zero()
    }

    /// (everywhere >= 0, everywhere <= 0), exact.
    pub fn sign_summary(&self) -> (bool, bool) {
        let mut nonneg = true;
        let mut nonpos = true;
        for (a, b, p) in &self.ivs {
            nonneg &= p.min_on(a, b) >= zero();
            nonpos &= p.max_on(a, b) <= zero();
        }
        let rv = self.ray_value_beyond();
        nonneg &= rv >= zero();
        nonpos &= rv <= zero();
        for (x, _) in &self.deltas {
            let v = self.value(x);
            nonneg &= v >= zero();
            nonpos &= v <= zero();
        }
        (nonneg, nonpos)
    }

    /// value >= c at every point of [a, b), exactly (vertex analysis on the
    /// polynomial pieces, explicit checks at delta points).
    pub fn ge_const_on(&self, c: &Rat, a: &Rat, b: &Rat) -> bool {
        let mut marks = vec![a.clone()];
        for p in self.critical_points() {
            if &p > a && &p < b {
                marks.push(p);
            }
        }
        marks.push(b.clone());
        for w in marks.windows(2) {
            if self.piece_on(&w[0], &w[1]).min_on(&w[0], &w[1]) < *c {
                return false;
            }
        }
        for (x, _) in &self.deltas {
            if x >= a && x < b && self.value(x) < *c {
                return false;
            }
        }
        true
    }

    pub fn le_const_on(&self, c: &Rat, a: &Rat, b: &Rat) -> bool {
        self.neg().ge_const_on(&-c.clone(), a, b)
    }

    /// Support is contained in [lo, hi) (deltas included, ray must vanish).
    pub fn supported_in(&self, lo: &Rat, hi: &Rat) -> bool {
        self.ray.as_ref().map(|(_, v)| *v == zero()).unwrap_or(true)
            && self.ivs.iter().all(|(a, b, _)| a >= lo && b <= hi)
            && self.deltas.iter().all(|(p, _)| p >= lo && p < hi)
    }

    /// Exact ∫_a^b of the function (deltas are null).
    pub fn integral_on(&self, a: &Rat, b: &Rat) -> Rat {
        let mut acc = zero();
        for (lo, hi, p) in &self.ivs {
            let l = lo.max(a);
            let h = hi.min(b);
            if l < h {
                acc += p.integral(l, h);
            }
        }
        if let Some((from, v)) = &self.ray {
            let l = from.max(a);
            if l < b {
                acc += v * (b - l);
            }
        }
        acc
    }

    /// |f| as a LineFn; requires every sign change to happen at a rational
    /// point (always true for the affine catalog).
    pub fn abs(&self) -> Option<LineFn> {
        let mut ivs = Vec::new();
        for (a, b, p) in &self.ivs {
            let mut marks = vec![a.clone()];
            marks.extend(p.rational_roots_in(a, b)?);
            marks.push(b.clone());
            for w in marks.windows(2) {
                let q = if p.min_on(&w[0], &w[1]) >= zero() { p.clone() } else { p.neg() };
                ivs.push((w[0].clone(), w[1].clone(), q));
            }
        }
        let mut out = LineFn::from_pieces(ivs);
        if let Some((from, v)) = &self.ray {
            use num_traits::Signed;
            out = out.with_ray(from.clone(), v.abs());
        }
        for (x, _) in &self.deltas {
            use num_traits::Signed;
            let target = self.value(x).abs();
            let base = out.base_value(x);
            if target != base {
                out = out.with_delta(x.clone(), target - base);
            }
        }
        Some(out)
    }

    /// Moving-average norm  sup_x ∫_x^{x+1} |f|,  exact for the affine
    /// catalog. The window integral is piecewise smooth in x with critical
    /// points at breakpoints and breakpoints − 1; between them the derivative
    /// |f|(x+1) − |f|(x) is a polynomial whose rational roots are also
    /// candidates. The ray contributes its own limit value.
    pub fn moving_average_norm(&self) -> Option<Rat> {
        let g = self.abs()?;
        let mut cand: Vec<Rat> = Vec::new();
        for p in g.critical_points() {
            cand.push(p.clone());
            cand.push(p - crate::rat::one());
        }
        cand.sort();
        cand.dedup();
        if cand.is_empty() {
            return Some(g.ray_value_beyond());
        }
        // between consecutive candidates the derivative of the window integral
        // is w(x) = |f|(x+1) − |f|(x); add its rational roots as candidates
        let mut more = Vec::new();
        for w in cand.windows(2) {
            let p1 = g.piece_on(&w[0], &w[1]);
            let shifted =
                g.piece_on(&(&w[0] + crate::rat::one()), &(&w[1] + crate::rat::one()));
            let deriv = shifted.compose_affine(&crate::rat::one(), &crate::rat::one()).sub(&p1);
            more.extend(deriv.rational_roots_in(&w[0], &w[1])?);
        }
        cand.extend(more);
        cand.sort();
        cand.dedup();
        let mut best = g.ray_value_beyond(); // limit as x → ±∞
        for x in &cand {
            let v = g.integral_on(x, &(x + crate::rat::one()));
            best = best.max(v);
        }
        Some(best)
    }
}

impl std::fmt::Display for LineFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self
            .ivs
            .iter()
            .map(|(a, b, p)| {
                format!("[{},{}): {}", crate::rat::fmt_rat(a), crate::rat::fmt_rat(b), p)
            })
            .collect();
        if let Some((from, v)) = &self.ray {
            parts.push(format!("[{},inf): {}", crate::rat::fmt_rat(from), crate::rat::fmt_rat(v)));
        }
        for (x, d) in &self.deltas {
            parts.push(format!("delta({})={}", crate::rat::fmt_rat(x), crate::rat::fmt_rat(d)));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("; "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, one, ratio};

    #[test]
    fn lopen_indicator_values() {
        let f = LineFn::indicator_lopen(&int(6), &int(7));
        assert_eq!(f.value(&int(6)), zero());
        assert_eq!(f.value(&ratio(13, 2)), one());
        assert_eq!(f.value(&int(7)), one());
        assert_eq!(f.value(&ratio(15, 2)), zero());
    }

    #[test]
    fn moving_average_of_unit_indicator() {
        let f = LineFn::indicator(&LineSet::interval(int(0), int(1)));
        assert_eq!(f.moving_average_norm(), Some(one()));
        let g = LineFn::indicator(&LineSet::interval(int(0), ratio(1, 2)));
        assert_eq!(g.moving_average_norm(), Some(ratio(1, 2)));
    }

    #[test]
    fn ramp_norm_is_one_via_tail() {
        // the ramp tends to 1 at +∞, so every window eventually averages 1
        let r = LineFn::ramp(int(4), int(6));
        assert_eq!(r.value(&int(4)), zero());
        assert_eq!(r.value(&int(5)), ratio(1, 2));
        assert_eq!(r.value(&int(7)), one());
        assert_eq!(r.moving_average_norm(), Some(one()));
    }

    #[test]
    fn add_and_signs() {
        let a = LineFn::indicator_lopen(&int(0), &int(2));
        let b = LineFn::indicator_lopen(&int(1), &int(3)).neg();
        let s = a.add(&b);
        assert_eq!(s.value(&ratio(1, 2)), one());
        assert_eq!(s.value(&ratio(3, 2)), zero());
        assert_eq!(s.value(&ratio(5, 2)), -one());
        let (nn, np) = s.sign_summary();
        assert!(!nn && !np);
        let (nn2, _) = a.sign_summary();
        assert!(nn2);
    }

    #[test]
    fn point_mass_norm_zero() {
        let f = LineFn::zero_elem().with_delta(ratio(1, 2), one());
        assert_eq!(f.value(&ratio(1, 2)), one());
        assert_eq!(f.moving_average_norm(), Some(zero()));
        assert!(!f.is_zero());
    }
}
