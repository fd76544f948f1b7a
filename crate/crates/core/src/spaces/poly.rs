//! Polynomials of degree at most two with rational coefficients.
//!
//! Sign questions on an interval reduce to evaluating endpoints and the
//! vertex, which is rational for degree <= 2 — this is what keeps every
//! order decision on piecewise elements exact.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rat::{fmt_rat, int, zero, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Poly2 {
    /// c[0] + c[1]·x + c[2]·x²
    pub c: [Rat; 3],
}

impl Poly2 {
    pub fn new(c0: Rat, c1: Rat, c2: Rat) -> Self {
        Poly2 { c: [c0, c1, c2] }
    }

    pub fn constant(c: Rat) -> Self {
        Poly2::new(c, zero(), zero())
    }

    pub fn zero_poly() -> Self {
        Poly2::constant(zero())
    }

    pub fn x() -> Self {
        Poly2::new(zero(), crate::rat::one(), zero())
    }

    pub fn x_squared() -> Self {
        Poly2::new(zero(), zero(), crate::rat::one())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        (&self.c[2] * x + &self.c[1]) * x + &self.c[0]
    }

    pub fn degree(&self) -> usize {
        if !self.c[2].is_zero() {
            2
        } else if !self.c[1].is_zero() {
            1
        } else {
            0
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        Poly2::new(&self.c[0] + &other.c[0], &self.c[1] + &other.c[1], &self.c[2] + &other.c[2])
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        Poly2::new(&self.c[0] - &other.c[0], &self.c[1] - &other.c[1], &self.c[2] - &other.c[2])
    }

    pub fn scale(&self, k: &Rat) -> Poly2 {
        Poly2::new(&self.c[0] * k, &self.c[1] * k, &self.c[2] * k)
    }

    pub fn neg(&self) -> Poly2 {
        self.scale(&-crate::rat::one())
    }

    /// Product, when the result still has degree <= 2.
    pub fn mul(&self, other: &Poly2) -> Option<Poly2> {
        if self.degree() + other.degree() > 2 {
            return None;
        }
        let mut c = [zero(), zero(), zero()];
        for i in 0..3 {
            for j in 0..3 {
                if i + j <= 2 {
                    c[i + j] = &c[i + j] + &self.c[i] * &other.c[j];
                }
            }
        }
        Some(Poly2 { c })
    }

    /// p(a + b·x): precomposition with an affine map, still degree <= 2.
    pub fn compose_affine(&self, a: &Rat, b: &Rat) -> Poly2 {
        let c0 = self.eval(a);
        // p(a + bx) = p(a) + p'(a)·b·x + c2·b²·x²
        let dp_a = &self.c[1] + int(2) * &self.c[2] * a;
        Poly2::new(c0, dp_a * b, &self.c[2] * b * b)
    }

    pub fn derivative(&self) -> Poly2 {
        Poly2::new(self.c[1].clone(), int(2) * &self.c[2], zero())
    }

    /// Exact definite integral over [a, b].
    pub fn integral(&self, a: &Rat, b: &Rat) -> Rat {
        let anti = |x: &Rat| -> Rat {
            &self.c[0] * x + &self.c[1] * x * x / int(2) + &self.c[2] * x * x * x / int(3)
        };
        anti(b) - anti(a)
    }

    /// Exact minimum over the closed interval [a, b] (equals the infimum over
    /// [a, b) by continuity).
    pub fn min_on(&self, a: &Rat, b: &Rat) -> Rat {
        let mut m = self.eval(a).min(self.eval(b));
        if !self.c[2].is_zero() {
            let vx = -&self.c[1] / (int(2) * &self.c[2]);
            if &vx > a && &vx < b {
                m = m.min(self.eval(&vx));
            }
        }
        m
    }

    pub fn max_on(&self, a: &Rat, b: &Rat) -> Rat {
        -self.neg().min_on(a, b)
    }

    pub fn nonneg_on(&self, a: &Rat, b: &Rat) -> bool {
        self.min_on(a, b) >= zero()
    }

    /// Roots inside the open interval (a, b), exactly — but only when they
    /// are rational. Returns None when a sign change happens at an irrational
    /// point (perfect-square test on the discriminant fails).
    pub fn rational_roots_in(&self, a: &Rat, b: &Rat) -> Option<Vec<Rat>> {
        let mut roots = Vec::new();
        match self.degree() {
            0 => {}
            1 => {
                let r = -&self.c[0] / &self.c[1];
                if &r > a && &r < b {
                    roots.push(r);
                }
            }
            2 => {
                let disc = &self.c[1] * &self.c[1] - int(4) * &self.c[2] * &self.c[0];
                if disc.is_negative() {
                    // no real roots
                } else {
                    let sq = rat_sqrt(&disc)?;
                    let two_a = int(2) * &self.c[2];
                    for r in [(-&self.c[1] + &sq) / &two_a, (-&self.c[1] - &sq) / &two_a] {
                        if &r > a && &r < b && !roots.contains(&r) {
                            roots.push(r);
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
        roots.sort();
        Some(roots)
    }
}

/// Exact square root of a nonnegative rational, when it is rational.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt(r.numer())?;
    let d = int_sqrt(r.denom())?;
    Some(Rat::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

impl std::fmt::Display for Poly2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} + {}x + {}x^2", fmt_rat(&self.c[0]), fmt_rat(&self.c[1]), fmt_rat(&self.c[2]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, one, ratio};

    #[test]
    fn x_minus_x_squared_sign_on_unit_interval() {
        // x - x² >= 0 on [0,1]: vertex at 1/2 with value 1/4
        let p = Poly2::x().sub(&Poly2::x_squared());
        assert!(p.nonneg_on(&zero(), &one()));
        assert_eq!(p.min_on(&zero(), &one()), zero());
        assert_eq!(p.max_on(&zero(), &one()), ratio(1, 4));
    }

    #[test]
    fn integral_of_x_and_x_squared() {
        assert_eq!(Poly2::x().integral(&zero(), &one()), ratio(1, 2));
        assert_eq!(Poly2::x_squared().integral(&zero(), &one()), ratio(1, 3));
    }

    #[test]
    fn rational_and_irrational_roots() {
        // x² - 1/4 has rational roots ±1/2
        let p = Poly2::new(ratio(-1, 4), zero(), one());
        assert_eq!(p.rational_roots_in(&int(-1), &int(1)).unwrap(), vec![ratio(-1, 2), ratio(1, 2)]);
        // x² - 2 has irrational roots
        let q = Poly2::new(int(-2), zero(), one());
        assert!(q.rational_roots_in(&int(-2), &int(2)).is_none());
        // x² + 1 has none
        let r = Poly2::new(one(), zero(), one());
        assert_eq!(r.rational_roots_in(&int(-2), &int(2)).unwrap(), Vec::<Rat>::new());
    }

    #[test]
    fn derivative_three_point_identity() {
        // h'(0) = 4h(1/2) - h(1) - 3h(0), h'(1) = 3h(1) + h(0) - 4h(1/2)
        let h = Poly2::new(ratio(1, 3), ratio(-5, 2), int(2));
        let d = h.derivative();
        let h0 = h.eval(&zero());
        let hm = h.eval(&ratio(1, 2));
        let h1 = h.eval(&one());
        assert_eq!(d.eval(&zero()), int(4) * &hm - &h1 - int(3) * &h0);
        assert_eq!(d.eval(&one()), int(3) * &h1 + &h0 - int(4) * &hm);
    }
}
