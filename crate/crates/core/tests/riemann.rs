//! Riemann recovery through the vertical extension: the classical integrals
//! arrive with exact dyadic Darboux witnesses.

use povi_core::families::{darboux_sum, CountableFamily, Monotone, TailRule};
use povi_core::funcdesc::FuncDescr;
use povi_core::integral::Phi;
use povi_core::rat::{int, one, powi, ratio, zero};
use povi_core::spaces::{PiecewisePoly, Poly2, SpaceElement, SpaceId};
use povi_core::verdict::Status;
use povi_core::vertical::{verify_vertical, VerticalWitness};

fn darboux_witness(integrand: PiecewisePoly, claimed: povi_core::Rat) -> VerticalWitness {
    VerticalWitness {
        lower: CountableFamily {
            space: SpaceId::Pp01,
            prefix: vec![],
            tail: TailRule::DarbouxLower { integrand: integrand.clone() },
            monotone_claim: Some(Monotone::Increasing),
        },
        upper: CountableFamily {
            space: SpaceId::Pp01,
            prefix: vec![],
            tail: TailRule::DarbouxUpper { integrand },
            monotone_claim: Some(Monotone::Decreasing),
        },
        claimed: SpaceElement::scalar(claimed),
    }
}

#[test]
fn integral_of_x_is_one_half() {
    let f = PiecewisePoly::from_poly(Poly2::x());
    let w = darboux_witness(f.clone(), ratio(1, 2));
    let v = verify_vertical(&Phi::RiemannStep, &FuncDescr::Pw(f), &w, 8);
    assert_eq!(v.status, Status::Proved, "cert: {:?}", v.cert);
    assert_eq!(v.value, Some(SpaceElement::scalar(ratio(1, 2))));
}

#[test]
fn integral_of_x_squared_is_one_third() {
    let f = PiecewisePoly::from_poly(Poly2::x_squared());
    let w = darboux_witness(f.clone(), ratio(1, 3));
    let v = verify_vertical(&Phi::RiemannStep, &FuncDescr::Pw(f), &w, 8);
    assert_eq!(v.status, Status::Proved, "cert: {:?}", v.cert);
}

#[test]
fn wrong_claim_is_refuted() {
    let f = PiecewisePoly::from_poly(Poly2::x());
    let w = darboux_witness(f.clone(), ratio(2, 5));
    let v = verify_vertical(&Phi::RiemannStep, &FuncDescr::Pw(f), &w, 8);
    assert_eq!(v.status, Status::Refuted);
}

#[test]
fn gamma_violation_is_reported() {
    // witness containing a non-step element is rejected
    let f = PiecewisePoly::from_poly(Poly2::x());
    let mut w = darboux_witness(f.clone(), ratio(1, 2));
    w.lower.prefix.push(SpaceElement::new(
        SpaceId::Pp01,
        povi_core::spaces::ElemVal::Pw(PiecewisePoly::from_poly(Poly2::x())),
    )
    .unwrap());
    let v = verify_vertical(&Phi::RiemannStep, &FuncDescr::Pw(f), &w, 4);
    assert_eq!(v.status, Status::Refuted);
}

#[test]
fn bracket_width_is_two_to_minus_depth() {
    // at depth n both integrands have upper − lower = 2^{-n} exactly
    for depth in [1u32, 5, 10, 20] {
        for f in [PiecewisePoly::from_poly(Poly2::x()), PiecewisePoly::from_poly(Poly2::x_squared())]
        {
            let gap = darboux_sum(&f, depth, true) - darboux_sum(&f, depth, false);
            assert_eq!(gap, powi(&ratio(1, 2), depth as i64));
        }
    }
}

#[test]
fn depth_twenty_runs_fast() {
    let started = std::time::Instant::now();
    let f = PiecewisePoly::from_poly(Poly2::x());
    let lo = darboux_sum(&f, 20, false);
    let hi = darboux_sum(&f, 20, true);
    assert!(lo < ratio(1, 2) && ratio(1, 2) < hi);
    let n = int(1 << 20);
    assert_eq!(lo, (&n - one()) / (int(2) * &n));
    assert!(started.elapsed().as_secs_f64() < 1.0);
    let _ = zero();
}
