//! Exact rational scalars. Every order decision in this crate reduces to
//! comparisons of these; nothing is ever rounded.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The scalar field of the whole kernel: arbitrary-precision rationals,
/// always in lowest terms with positive denominator (maintained by
/// `BigRational` itself).
pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// r^k for integer k (k may be negative; r must be nonzero then).
pub fn powi(r: &Rat, k: i64) -> Rat {
    if k >= 0 {
        num_traits::pow::pow(r.clone(), k as usize)
    } else {
        assert!(!r.is_zero(), "negative power of zero");
        num_traits::pow::pow(r.recip(), (-k) as usize)
    }
}

/// Exact geometric tail: sum over n >= start of c * q^n, for |q| < 1.
pub fn geometric_tail(c: &Rat, q: &Rat, start: i64) -> Rat {
    assert!(q.abs() < one(), "geometric tail needs |q| < 1");
    c * powi(q, start) / (one() - q)
}

/// Sum over i in 0..count of i, as a rational.
pub fn sum_i(count: u64) -> Rat {
    let n = BigInt::from(count);
    Rat::from_integer(&n * (&n - 1i32)) / int(2)
}

/// Sum over i in 0..count of i^2, as a rational.
pub fn sum_i2(count: u64) -> Rat {
    if count == 0 {
        return zero();
    }
    let n = BigInt::from(count - 1);
    Rat::from_integer(&n * (&n + 1i32) * (2i32 * &n + 1i32)) / int(6)
}

/// Smallest integer >= r.
pub fn ceil_int(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}

/// Largest integer <= r.
pub fn floor_int(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders `p/q`, or just `p` for integers (the DSL's literal syntax).
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with q > 0. Returns None on malformed input or a zero
/// denominator; the DSL layer turns that into a spanned diagnostic.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.parse().ok()?;
        let d: BigInt = den.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_tail_matches_partial_sums() {
        // sum over n >= 3 of 5 * (1/2)^n = 5/4
        let t = geometric_tail(&int(5), &ratio(1, 2), 3);
        assert_eq!(t, ratio(5, 4));
        let mut acc = zero();
        for n in 3..60 {
            acc += int(5) * powi(&ratio(1, 2), n);
        }
        assert!((t - acc).abs() < powi(&ratio(1, 2), 50));
    }

    #[test]
    fn power_sums_match_enumeration() {
        for count in [0u64, 1, 2, 7, 100] {
            let s1: u64 = (0..count).sum();
            let s2: u64 = (0..count).map(|i| i * i).sum();
            assert_eq!(sum_i(count), int(s1 as i64));
            assert_eq!(sum_i2(count), int(s2 as i64));
        }
    }

    #[test]
    fn parse_print_roundtrip() {
        for s in ["0", "-3", "1/2", "-7/3", "22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&r), s);
        }
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
    }
}
