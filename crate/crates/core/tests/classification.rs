//! The classification table and its independent refutation rechecks.

use povi_core::classify::{
    banach_lattice_auto, check_predicate, classification_table, implication_lattice_audit,
    recheck, AuditConfig, Predicate, PredicateQuery,
};
use povi_core::norm::Norm;
use povi_core::spaces::SpaceId;
use povi_core::verdict::Status;

fn cfg() -> AuditConfig {
    AuditConfig { seed: 0xC0FFEE, count: 50 }
}

fn q(predicate: Predicate, sub: SpaceId, amb: SpaceId) -> PredicateQuery {
    PredicateQuery { predicate, sub, amb }
}

#[test]
fn the_required_entries() {
    let c = cfg();
    assert_eq!(
        check_predicate(&q(Predicate::Mediated, SpaceId::C00, SpaceId::C), &c).status,
        Status::Proved
    );
    assert_eq!(
        check_predicate(&q(Predicate::Splitting, SpaceId::C00, SpaceId::C), &c).status,
        Status::Refuted
    );
    assert_eq!(
        check_predicate(&q(Predicate::Mediated, SpaceId::RLex2, SpaceId::RLex2), &c).status,
        Status::Proved
    );
    assert_eq!(
        check_predicate(&q(Predicate::Splitting, SpaceId::PolyDeg2, SpaceId::PolyDeg2), &c)
            .status,
        Status::Proved
    );
    assert_eq!(
        check_predicate(&q(Predicate::Mediated, SpaceId::PolyDeg2, SpaceId::PolyDeg2), &c)
            .status,
        Status::Refuted
    );
    for s in [SpaceId::RN, SpaceId::LinfN, SpaceId::C, SpaceId::C0, SpaceId::L1, SpaceId::C00] {
        assert_eq!(
            check_predicate(&q(Predicate::Pervasive, s.clone(), s), &c).status,
            Status::Proved
        );
    }
}

#[test]
fn refutations_recheck_independently() {
    let rows = classification_table(&cfg());
    let mut rechecked = 0;
    for row in &rows {
        if let Some(w) = &row.witness {
            assert!(row.verdict.is_refuted(), "{}: witness on a non-refuted row", row.id);
            recheck(w, 6).unwrap_or_else(|e| panic!("{}: recheck failed: {e}", row.id));
            rechecked += 1;
        }
    }
    assert!(rechecked >= 6, "expected at least six witnessed refutations, got {rechecked}");
}

#[test]
fn implication_lattice_holds() {
    let rows = classification_table(&cfg());
    implication_lattice_audit(&rows).unwrap();
}

#[test]
fn banach_auto_paths() {
    let c = cfg();
    assert!(banach_lattice_auto(&SpaceId::Rn(3), Norm::Sup, &c).is_proved());
    assert!(banach_lattice_auto(&SpaceId::C00, Norm::L1, &c).is_proved());
    // c with the sup norm: precondition fails
    let v = banach_lattice_auto(&SpaceId::C, Norm::Sup, &c);
    assert_eq!(v.status, Status::Unknown);
    let vc = povi_core::classify::sigma_order_continuity(&SpaceId::C, Norm::Sup, &c);
    assert_eq!(vc.status, Status::Refuted);
}

#[test]
fn lex_not_integrally_closed() {
    let v = check_predicate(
        &q(Predicate::IntegrallyClosed, SpaceId::RLex2, SpaceId::RLex2),
        &cfg(),
    );
    assert_eq!(v.status, Status::Refuted);
}

#[test]
fn external_facts_are_flagged() {
    let rows = classification_table(&cfg());
    let ext: Vec<_> = rows
        .iter()
        .filter(|r| r.verdict.status == Status::ProvedExternally)
        .collect();
    assert_eq!(ext.len(), 2);
}
