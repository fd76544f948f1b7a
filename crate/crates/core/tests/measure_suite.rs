//! The measure-side theorem suite: layering equivalence, kernels,
//! convolution, density change and pushforwards, all exact.

use povi_core::measure_ops::{
    classical_equivalence, convolution_circle, density_change_unit, kernel_vertical_integral,
    layer_witness, order_bounded_partition, pushforward_orderc, BilinearKernel, Density,
    OrderContMap,
};
use povi_core::rat::{int, one, powi, ratio, zero};
use povi_core::spaces::{PiecewisePoly, Poly2, SpaceElement};

#[test]
fn dyadic_layering_of_x() {
    // t = 2 (domain ratio 1/2): φ_L(g) = 1/3, φ_L(h) = 2/3
    let f = PiecewisePoly::from_poly(Poly2::x());
    let (_, wl, vl) = layer_witness(&f, &ratio(1, 2), false, 6).unwrap();
    let (_, wh, vh) = layer_witness(&f, &ratio(1, 2), true, 6).unwrap();
    assert!(vl.is_proved(), "{vl:?}");
    assert!(vh.is_proved(), "{vh:?}");
    assert_eq!(wl.claimed_sum, SpaceElement::scalar(ratio(1, 3)));
    assert_eq!(wh.claimed_sum, SpaceElement::scalar(ratio(2, 3)));
}

#[test]
fn schedule_shrinks_bracket_around_one_half() {
    // t_k = 1 + 2^{-k}: domain ratios 1/t_k; after 10 steps the bracket width
    // is at most 2^{-10}·(1/2)
    let f = PiecewisePoly::from_poly(Poly2::x());
    let schedule: Vec<_> = (1..=10)
        .map(|k| one() / (one() + powi(&ratio(1, 2), k)))
        .collect();
    let report = classical_equivalence(&f, &schedule, 6).unwrap();
    assert!(report.verdict.is_proved());
    assert_eq!(report.exact_integral, ratio(1, 2));
    let last = report.steps.last().unwrap();
    assert!(last.width <= powi(&ratio(1, 2), 10) * ratio(1, 2));
    // φ_L(g) = 1/(t+1) exactly at every step
    for (k, step) in report.steps.iter().enumerate() {
        let t = one() + powi(&ratio(1, 2), (k + 1) as i64);
        assert_eq!(step.phi_lower, one() / (&t + one()));
        assert_eq!(step.phi_upper, &t / (&t + one()));
    }
}

#[test]
fn x_squared_layering_certifies_one_third() {
    // domain ratios r give value ratio r², keeping breakpoints rational
    let f = PiecewisePoly::from_poly(Poly2::x_squared());
    let schedule: Vec<_> = (1..=8)
        .map(|k| one() / (one() + powi(&ratio(1, 2), k)))
        .collect();
    let report = classical_equivalence(&f, &schedule, 6).unwrap();
    assert!(report.verdict.is_proved());
    assert_eq!(report.exact_integral, ratio(1, 3));
}

#[test]
fn ae_zero_on_a_point() {
    use povi_core::sets::LineSet;
    let ms = povi_core::measure::MeasureSpace::lebesgue01("leb");
    let a = SpaceElement::scalar(zero());
    let b = SpaceElement::scalar(int(5));
    let v = povi_core::measure_ops::ae_zero_integral(
        &ms,
        &povi_core::spaces::SpaceId::Rn(1),
        &LineSet::point(ratio(1, 2)),
        (&a, &b),
    );
    assert!(v.is_proved());
    assert_eq!(v.value, Some(SpaceElement::scalar(zero())));
    // non-null support is rejected
    let bad = povi_core::measure_ops::ae_zero_integral(
        &ms,
        &povi_core::spaces::SpaceId::Rn(1),
        &LineSet::interval(zero(), ratio(1, 2)),
        (&a, &b),
    );
    assert!(bad.is_refuted());
}

#[test]
fn order_bounds_from_layering() {
    let f = PiecewisePoly::from_poly(Poly2::x());
    let (g, _, _) = layer_witness(&f, &ratio(1, 2), false, 4).unwrap();
    let bounds = order_bounded_partition(&g, 4).unwrap();
    // cell [2^{-k-1}, 2^{-k}) is bounded by its own constant value
    assert!(bounds.len() >= 3);
}

#[test]
fn density_changes() {
    // h = 2·𝟙: ∫ h dμ = 2
    let (v, verdict) = density_change_unit(&Density::Constant(int(2)), &[], 4).unwrap();
    assert_eq!(v, int(2));
    assert!(verdict.is_proved());
    // h = 𝟙_{[0,1/2)}: transported value 1/2
    let (v2, verdict2) =
        density_change_unit(&Density::Indicator(zero(), ratio(1, 2)), &[], 4).unwrap();
    assert_eq!(v2, ratio(1, 2));
    assert!(verdict2.is_proved());
    // h(x) = x with the multiplicative sandwich: value 1/2 = ν([0,1))
    let h = PiecewisePoly::from_poly(Poly2::x());
    let (v3, verdict3) =
        density_change_unit(&Density::Monotone(h), &[2, 4, 8], 5).unwrap();
    assert_eq!(v3, ratio(1, 2));
    assert!(verdict3.is_proved(), "{verdict3:?}");
}

#[test]
fn pushforward_through_coordinates() {
    // f(n) = e_n with φ_L(f) = 𝟙: coordinate 1 sees Σ_n α(f(n)) = 1
    use povi_core::lateral::diag_witness;
    use povi_core::sets::NSet;
    let w = diag_witness(povi_core::spaces::SpaceId::C, NSet::full(), one());
    let v = pushforward_orderc(&OrderContMap::Coord(1), &w, 6);
    assert!(v.is_proved(), "{v:?}");
    assert_eq!(v.value, Some(SpaceElement::scalar(one())));
}

#[test]
fn kernel_x_times_t() {
    // F(x,t) = x·t: φ_V(H) = t/2
    let kernel = BilinearKernel { a: zero(), b: zero(), c: zero(), d: one() };
    let report = kernel_vertical_integral(&kernel, 5).unwrap();
    assert!(report.verdict.is_proved(), "{:?}", report.verdict);
    assert_eq!(report.value.eval(&one()).unwrap(), ratio(1, 2));
    assert_eq!(report.value.eval(&ratio(1, 2)).unwrap(), ratio(1, 4));
    // constant kernels integrate to the constant
    let c = BilinearKernel { a: int(3), b: zero(), c: zero(), d: zero() };
    let rc = kernel_vertical_integral(&c, 4).unwrap();
    assert_eq!(rc.value.eval(&ratio(1, 3)).unwrap(), int(3));
}

#[test]
fn circle_convolution_of_tent() {
    // periodic tent peaking at 1/2; convolve with uniform mass on [0,1/2)
    let g = PiecewisePoly::linear_interp(
        &[zero(), ratio(1, 2), one()],
        &[zero(), one(), zero()],
    )
    .unwrap();
    let probes: Vec<_> = (0..8).map(|i| ratio(i, 8)).collect();
    let (conv, verdict) = convolution_circle(&g, &ratio(1, 2), &probes).unwrap();
    assert!(verdict.is_proved(), "{verdict:?}");
    // total mass: ∫ conv = mass · ∫ g = 1/2 · 1/2
    assert_eq!(conv.integral(), ratio(1, 4));
}
