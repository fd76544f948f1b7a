use povi_core::families::{CountableFamily, Partition, TailRule};
use povi_core::funcdesc::FuncDescr;
use povi_core::integral::Phi;
use povi_core::lateral::{verify_lateral_positive, LateralWitness};
use povi_core::rat::{one, ratio, zero};
use povi_core::spaces::{PiecewisePoly, Poly2, SpaceElement, SpaceId};

fn main() {
    let f = FuncDescr::Pw(PiecewisePoly::from_poly(Poly2::x()));
    let w = LateralWitness {
        partition: Partition::geometric_shrink(
            povi_core::sets::BaseSet::Interval(zero(), one()),
            one(),
            ratio(1, 2),
        ),
        cell_values: CountableFamily {
            space: SpaceId::Rn(1),
            prefix: vec![SpaceElement::scalar(zero())],
            tail: TailRule::GeometricMix {
                terms: vec![(ratio(3, 2), ratio(1, 4))],
                base: Box::new(SpaceElement::scalar(one())),
            },
            monotone_claim: None,
        },
        claimed_sum: SpaceElement::scalar(ratio(1, 2)),
    };
    let v = verify_lateral_positive(&Phi::RiemannStep, &f, &w, 6);
    println!("{:#?}", v);
}
