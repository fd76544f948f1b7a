//! The vertical extension Γ_V: membership verification from countable
//! bracketing witnesses.
//!
//! Membership here is witness verification, never witness search: the
//! engine checks that the supplied families bracket the target, that their
//! φ-images share the claimed value as supremum and infimum, and it says
//! Refuted only about the supplied witness, not about membership itself.

use serde::{Deserialize, Serialize};

use crate::families::{
    family_add, family_scale, CountableFamily, LimitMode, LimitOutcome, Monotone,
};
use crate::funcdesc::FuncDescr;
use crate::integral::Phi;
use crate::norm::Norm;
use crate::rat::{zero, Rat};
use crate::spaces::{compare, lattice_inf, LatticeResult, OrderRel, SpaceElement};
use crate::verdict::{Cert, Status, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerticalWitness {
    /// Λ ⊂ Γ with Λ <= f
    pub lower: CountableFamily,
    /// Υ ⊂ Γ with f <= Υ
    pub upper: CountableFamily,
    /// the claimed φ_V(f) = sup φ(Λ) = inf φ(Υ)
    pub claimed: SpaceElement,
}

/// Outcome of the bracket check: fully verified, or verified on a probe set.
enum BracketStrength {
    Exact(Cert),
    ProbesOnly(Cert),
}

/// Checks Λ <= f (side = lower) or f <= Υ (side = upper) exactly on the
/// prefix and probes, and for the whole tail via the pointwise-limit
/// comparison when the family is monotone with a representable limit, or via
/// the Darboux construction lemma.
fn check_bracket(
    f: &FuncDescr,
    fam: &CountableFamily,
    lower_side: bool,
    probes: u64,
) -> Result<BracketStrength, Verdict> {
    let upto = fam.prefix.len() as u64 + probes;
    let mut checked = 0usize;
    for n in 1..=upto {
        let Some(e) = fam.element_at(n) else { break };
        let Some((ge, le)) = f.compare_elem(&e) else {
            return Err(Verdict::unknown(format!(
                "bracket comparison against element {n} is outside the catalog"
            )));
        };
        let ok = if lower_side { ge } else { le };
        if !ok {
            return Err(Verdict::refuted(Cert::ViolationAt {
                at: format!("witness element {n}"),
                detail: format!(
                    "bracket violated: element is not {} the target",
                    if lower_side { "below" } else { "above" }
                ),
            }));
        }
        checked += 1;
    }
    if fam.is_finite() {
        return Ok(BracketStrength::Exact(Cert::Bound {
            upper: !lower_side,
            checked,
            rule: "finite family fully checked".into(),
        }));
    }
    // whole-tail arguments
    use crate::families::TailRule::*;
    match &fam.tail {
        DarbouxLower { integrand } if lower_side => {
            if *f == FuncDescr::Pw(integrand.clone()) {
                return Ok(BracketStrength::Exact(Cert::lemma(
                    "darboux-lower-steps-bound-their-integrand",
                )));
            }
        }
        DarbouxUpper { integrand } if !lower_side => {
            if *f == FuncDescr::Pw(integrand.clone()) {
                return Ok(BracketStrength::Exact(Cert::lemma(
                    "darboux-upper-steps-bound-their-integrand",
                )));
            }
        }
        _ => {}
    }
    // monotone families: the pointwise limit bounds every member, so a single
    // comparison of f against the limit settles the whole tail
    let need = if lower_side { Monotone::Increasing } else { Monotone::Decreasing };
    if fam.monotone_claim == Some(need) {
        if let LimitOutcome::Limit(l, _) = fam.order_limit(
            if lower_side { LimitMode::Sup } else { LimitMode::Inf },
            probes,
        ) {
            if let Some((ge, le)) = f.compare_elem(&l) {
                let ok = if lower_side { ge } else { le };
                if ok {
                    return Ok(BracketStrength::Exact(Cert::All(vec![
                        Cert::Bound {
                            upper: !lower_side,
                            checked,
                            rule: "prefix and probes exact".into(),
                        },
                        Cert::note(
                            "tail settled by one comparison against the family's order limit",
                        ),
                    ])));
                }
                return Err(Verdict::refuted(Cert::ViolationAt {
                    at: "family limit".into(),
                    detail: "the target does not bracket the family's limit".into(),
                }));
            }
        }
    }
    Ok(BracketStrength::ProbesOnly(Cert::Bound {
        upper: !lower_side,
        checked,
        rule: format!("probe-only: no whole-tail lemma for rule {}", fam.tail.name()),
    }))
}

/// Γ-membership of a witness family under φ.
fn check_gamma(phi: &Phi, fam: &CountableFamily) -> Result<Cert, Verdict> {
    for (i, e) in fam.prefix.iter().enumerate() {
        if let Err(why) = phi.in_gamma(e) {
            return Err(Verdict::refuted(Cert::ViolationAt {
                at: format!("witness element {}", i + 1),
                detail: format!("not in Γ: {why}"),
            }));
        }
    }
    match phi.tail_in_gamma(&fam.tail) {
        Ok(lemma) => Ok(Cert::All(vec![
            Cert::note(format!("{} prefix elements in Γ", fam.prefix.len())),
            Cert::note(lemma),
        ])),
        Err(why) => Err(Verdict::unknown(why)),
    }
}

fn family_sub(a: &CountableFamily, b: &CountableFamily) -> Option<CountableFamily> {
    let neg_b = family_scale(b, &-crate::rat::one())?;
    family_add(a, &neg_b)
}

/// Core routine shared by the membership checks: given exact image families
/// (φ of the witnesses), decide sup φ(Λ) = inf φ(Υ) = claimed.
fn images_pin_value(
    lower_img: &CountableFamily,
    upper_img: &CountableFamily,
    claimed: &SpaceElement,
    probes: u64,
) -> Result<Cert, Verdict> {
    let mut lo = lower_img.clone();
    lo.monotone_claim = Some(Monotone::Increasing);
    let mut hi = upper_img.clone();
    hi.monotone_claim = Some(Monotone::Decreasing);
    // route A: both order limits in closed form
    let la = lo.order_limit(LimitMode::Sup, probes);
    let ua = hi.order_limit(LimitMode::Inf, probes);
    if let (LimitOutcome::Limit(sv, sc), LimitOutcome::Limit(iv, ic)) = (&la, &ua) {
        if sv == claimed && iv == claimed {
            return Ok(Cert::All(vec![
                Cert::ExactEqual { lhs: "sup of lower images".into(), rhs: claimed.to_string() },
                Cert::ExactEqual { lhs: "inf of upper images".into(), rhs: claimed.to_string() },
                sc.clone(),
                ic.clone(),
            ]));
        }
        return Err(Verdict::refuted(Cert::ViolationAt {
            at: "image limits".into(),
            detail: format!("sup of lower images is {sv}, inf of upper images is {iv}, claimed {claimed}"),
        }));
    }
    if let LimitOutcome::NoLimit(c) = &la {
        return Err(Verdict::refuted(Cert::All(vec![
            Cert::note("supremum of the lower φ-images does not exist"),
            c.clone(),
        ])));
    }
    if let LimitOutcome::NoLimit(c) = &ua {
        return Err(Verdict::refuted(Cert::All(vec![
            Cert::note("infimum of the upper φ-images does not exist"),
            c.clone(),
        ])));
    }
    // route B: bracketing of the claim plus vanishing gap — valid in every
    // partially ordered vector space (if v is between all images and the
    // image gap has infimum 0, then v is both the sup and the inf)
    let upto = lower_img.prefix.len().max(upper_img.prefix.len()) as u64 + probes;
    for n in 1..=upto {
        if let Some(e) = lower_img.element_at(n) {
            match compare(&e, claimed) {
                Ok(r) if r.le() => {}
                Ok(_) => {
                    return Err(Verdict::refuted(Cert::ViolationAt {
                        at: format!("lower image {n}"),
                        detail: "exceeds the claimed value".into(),
                    }))
                }
                Err(e) => return Err(Verdict::unknown(e.to_string())),
            }
        }
        if let Some(e) = upper_img.element_at(n) {
            match compare(&e, claimed) {
                Ok(r) if r.ge() => {}
                Ok(_) => {
                    return Err(Verdict::refuted(Cert::ViolationAt {
                        at: format!("upper image {n}"),
                        detail: "drops below the claimed value".into(),
                    }))
                }
                Err(e) => return Err(Verdict::unknown(e.to_string())),
            }
        }
    }
    let Some(mut gap) = family_sub(upper_img, lower_img) else {
        return Err(Verdict::unknown("image gap family leaves the closed-form catalog"));
    };
    gap.monotone_claim = Some(Monotone::Decreasing);
    match gap.order_limit(LimitMode::Inf, probes) {
        LimitOutcome::Limit(v, c) if v.is_zero() => Ok(Cert::All(vec![
            Cert::note("claim bracketed by every image (prefix exact, tail monotone)"),
            Cert::note("image gap has infimum 0, pinning sup = inf = claim"),
            c,
        ])),
        LimitOutcome::Limit(v, _) => Err(Verdict::refuted(Cert::ViolationAt {
            at: "image gap".into(),
            detail: format!("infimum of the gap is {v}, not 0"),
        })),
        LimitOutcome::NoLimit(c) => Err(Verdict::refuted(c)),
        LimitOutcome::Unknown(r) => Err(Verdict::unknown(r)),
    }
}

/// Verifies f ∈ Γ_V with φ_V(f) = w.claimed from the supplied witness.
pub fn verify_vertical(phi: &Phi, f: &FuncDescr, w: &VerticalWitness, probes: u64) -> Verdict {
    let g_lo = match check_gamma(phi, &w.lower) {
        Ok(c) => c,
        Err(v) => return v,
    };
    let g_hi = match check_gamma(phi, &w.upper) {
        Ok(c) => c,
        Err(v) => return v,
    };
    let b_lo = match check_bracket(f, &w.lower, true, probes) {
        Ok(b) => b,
        Err(v) => return v,
    };
    let b_hi = match check_bracket(f, &w.upper, false, probes) {
        Ok(b) => b,
        Err(v) => return v,
    };
    let lower_img = match phi.image_family(&w.lower) {
        Ok(fam) => fam,
        Err(why) => return Verdict::unknown(why),
    };
    let upper_img = match phi.image_family(&w.upper) {
        Ok(fam) => fam,
        Err(why) => return Verdict::unknown(why),
    };
    let value_cert = match images_pin_value(&lower_img, &upper_img, &w.claimed, probes) {
        Ok(c) => c,
        Err(v) => return v,
    };
    let (status, b_lo_cert, b_hi_cert) = match (b_lo, b_hi) {
        (BracketStrength::Exact(a), BracketStrength::Exact(b)) => (Status::Proved, a, b),
        (BracketStrength::Exact(a) | BracketStrength::ProbesOnly(a),
         BracketStrength::Exact(b) | BracketStrength::ProbesOnly(b)) => {
            (Status::ProvedOnProbes, a, b)
        }
    };
    Verdict {
        status,
        value: Some(w.claimed.clone()),
        cert: Cert::All(vec![g_lo, g_hi, b_lo_cert, b_hi_cert, value_cert]),
    }
}

/// Lemma-3.8 membership: bracketing plus inf of the image differences equal
/// to 0, under a mediated φ(Γ). Returns membership without requiring the
/// value to be materialized (it reports sup φ(Λ) when computable).
pub fn mediated_form_check(
    phi: &Phi,
    f: &FuncDescr,
    lower: &CountableFamily,
    upper: &CountableFamily,
    mediated: &Verdict,
    probes: u64,
) -> Verdict {
    if !mediated.is_proved() {
        return Verdict::unknown("hypothesis not established: φ(Γ) mediated");
    }
    for fam in [lower, upper] {
        if let Err(v) = check_gamma(phi, fam) {
            return v;
        }
    }
    let b_lo = match check_bracket(f, lower, true, probes) {
        Ok(b) => b,
        Err(v) => return v,
    };
    let b_hi = match check_bracket(f, upper, false, probes) {
        Ok(b) => b,
        Err(v) => return v,
    };
    let lower_img = match phi.image_family(lower) {
        Ok(fam) => fam,
        Err(why) => return Verdict::unknown(why),
    };
    let upper_img = match phi.image_family(upper) {
        Ok(fam) => fam,
        Err(why) => return Verdict::unknown(why),
    };
    let Some(mut gap) = family_sub(&upper_img, &lower_img) else {
        return Verdict::unknown("image gap family leaves the closed-form catalog");
    };
    gap.monotone_claim = Some(Monotone::Decreasing);
    match gap.order_limit(LimitMode::Inf, probes) {
        LimitOutcome::Limit(v, c) if v.is_zero() => {
            let value = {
                let mut lo = lower_img;
                lo.monotone_claim = Some(Monotone::Increasing);
                lo.order_limit(LimitMode::Sup, probes).value().cloned()
            };
            let status = match (&b_lo, &b_hi) {
                (BracketStrength::Exact(_), BracketStrength::Exact(_)) => Status::Proved,
                _ => Status::ProvedOnProbes,
            };
            Verdict {
                status,
                value,
                cert: Cert::All(vec![
                    Cert::note("mediated φ(Γ): membership via vanishing image differences"),
                    c,
                ]),
            }
        }
        LimitOutcome::Limit(v, _) => Verdict::refuted(Cert::ViolationAt {
            at: "image differences".into(),
            detail: format!("infimum is {v} ≠ 0"),
        }),
        LimitOutcome::NoLimit(c) => Verdict::refuted(c),
        LimitOutcome::Unknown(r) => Verdict::unknown(r),
    }
}

/// Theorem-style norm criterion: for each supplied (σ, τ, ε), σ <= f <= τ
/// with ‖φ(τ) − φ(σ)‖ < ε, all exactly.
pub fn banach_norm_criterion(
    phi: &Phi,
    f: &FuncDescr,
    eps_brackets: &[(SpaceElement, SpaceElement, Rat)],
    norm: Norm,
) -> Verdict {
    for (i, (sigma, tau, eps)) in eps_brackets.iter().enumerate() {
        for e in [sigma, tau] {
            if let Err(why) = phi.in_gamma(e) {
                return Verdict::refuted(Cert::ViolationAt {
                    at: format!("bracket {}", i + 1),
                    detail: format!("not in Γ: {why}"),
                });
            }
        }
        let ok_lo = f.compare_elem(sigma).map(|(ge, _)| ge);
        let ok_hi = f.compare_elem(tau).map(|(_, le)| le);
        match (ok_lo, ok_hi) {
            (Some(true), Some(true)) => {}
            (None, _) | (_, None) => {
                return Verdict::unknown("bracket comparison outside the catalog")
            }
            _ => {
                return Verdict::refuted(Cert::ViolationAt {
                    at: format!("bracket {}", i + 1),
                    detail: "σ <= f <= τ fails".into(),
                })
            }
        }
        let (ps, pt) = match (phi.apply(sigma), phi.apply(tau)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Verdict::unknown("φ application failed"),
        };
        let d = match pt.sub(&ps) {
            Ok(d) => d,
            Err(e) => return Verdict::unknown(e.to_string()),
        };
        let Some(gap) = norm.eval(&d) else {
            return Verdict::unknown(format!("norm {norm} not registered for the codomain"));
        };
        if &gap >= eps {
            return Verdict::refuted(Cert::ViolationAt {
                at: format!("bracket {}", i + 1),
                detail: format!(
                    "‖φ(τ)−φ(σ)‖ = {} >= ε = {}",
                    crate::rat::fmt_rat(&gap),
                    crate::rat::fmt_rat(eps)
                ),
            });
        }
    }
    Verdict::proved(
        None,
        Cert::note(format!(
            "{} ε-brackets verified with exact norm gaps",
            eps_brackets.len()
        )),
    )
}

/// Membership of g in the order closure [𝒜]^o: |g − s_n| <= j_n with
/// j_n ↓ 0 pointwise.
pub fn step_closure_membership(
    g: &FuncDescr,
    steps: &CountableFamily,
    envelopes: &CountableFamily,
    probes: u64,
) -> Verdict {
    let upto = steps.prefix.len().max(envelopes.prefix.len()) as u64 + probes;
    let FuncDescr::Pw(gp) = g else {
        return Verdict::unknown("order-closure checks cover piecewise targets");
    };
    for n in 1..=upto {
        let (Some(s), Some(j)) = (steps.element_at(n), envelopes.element_at(n)) else { break };
        let (crate::spaces::ElemVal::Pw(sp), crate::spaces::ElemVal::Pw(jp)) = (&s.val, &j.val)
        else {
            return Verdict::unknown("witness elements are not piecewise");
        };
        let d = gp.sub(sp);
        // |g - s_n| <= j_n  ⟺  d <= j and -d <= j
        let c1 = jp.sub(&d).sign_summary().0;
        let c2 = jp.add(&d).sign_summary().0;
        if !(c1 && c2) {
            return Verdict::refuted(Cert::ViolationAt {
                at: format!("index {n}"),
                detail: "|g − s_n| <= j_n fails".into(),
            });
        }
    }
    let mut env = envelopes.clone();
    env.monotone_claim = Some(Monotone::Decreasing);
    match env.order_limit(LimitMode::Inf, probes) {
        LimitOutcome::Limit(v, c) if v.is_zero() => Verdict::proved(
            None,
            Cert::All(vec![Cert::note("deviation envelopes checked exactly"), c]),
        ),
        LimitOutcome::Limit(v, _) => Verdict::refuted(Cert::ViolationAt {
            at: "envelope limit".into(),
            detail: format!("j_n ↓ {v} ≠ 0"),
        }),
        LimitOutcome::NoLimit(c) => Verdict::refuted(c),
        LimitOutcome::Unknown(r) => Verdict::unknown(r),
    }
}

/// The envelope repair of a non-monotone double array: j_n = inf_{m,k<=n}
/// s_{mk}, which dominates g_n and decreases.
pub fn envelope_repair(table: &[Vec<SpaceElement>]) -> Result<Vec<SpaceElement>, String> {
    let mut out = Vec::new();
    let mut current: Option<SpaceElement> = None;
    for n in 0..table.len() {
        for (m, row) in table.iter().enumerate().take(n + 1) {
            for (k, s) in row.iter().enumerate().take(n + 1) {
                let _ = (m, k);
                current = Some(match current.take() {
                    None => s.clone(),
                    Some(c) => match lattice_inf(&c, s).map_err(|e| e.to_string())? {
                        LatticeResult::Elem(v) => v,
                        LatticeResult::NotLattice(w) => return Err(w),
                    },
                });
            }
        }
        match &current {
            Some(c) => out.push(c.clone()),
            None => return Err("empty table".into()),
        }
    }
    Ok(out)
}

/// Multiplication theorem at desk scale: for monotone nonnegative piecewise
/// integrands whose product stays in the degree-2 catalog, the lower/upper
/// Darboux steps of the product form a vertical witness for g·f.
pub fn multiply_and_integrate(
    phi: &Phi,
    f: &FuncDescr,
    g: &FuncDescr,
    claimed: &SpaceElement,
    probes: u64,
) -> Verdict {
    let (FuncDescr::Pw(fp), FuncDescr::Pw(gp)) = (f, g) else {
        return Verdict::unknown("product catalog covers piecewise integrands");
    };
    let Some(product) = fp.mul(gp) else {
        return Verdict::unknown("product degree exceeds the exact catalog");
    };
    // fast path: the product is itself a step function (g = step, f = step)
    if product.is_step() {
        let e = SpaceElement::raw(crate::spaces::SpaceId::Pp01, crate::spaces::ElemVal::Pw(product));
        return match phi.apply(&e) {
            Ok(v) if &v == claimed => Verdict::proved(
                Some(v),
                Cert::note("product lies in Γ, φ_V = φ"),
            ),
            Ok(v) => Verdict::refuted(Cert::ViolationAt {
                at: "direct φ".into(),
                detail: format!("φ(gf) = {v} ≠ claimed {claimed}"),
            }),
            Err(why) => Verdict::unknown(why),
        };
    }
    if !(fp.sign_summary().0 && gp.sign_summary().0) {
        return Verdict::unknown("product witness construction needs nonnegative factors");
    }
    let w = VerticalWitness {
        lower: CountableFamily {
            space: crate::spaces::SpaceId::Pp01,
            prefix: vec![],
            tail: crate::families::TailRule::DarbouxLower { integrand: product.clone() },
            monotone_claim: Some(Monotone::Increasing),
        },
        upper: CountableFamily {
            space: crate::spaces::SpaceId::Pp01,
            prefix: vec![],
            tail: crate::families::TailRule::DarbouxUpper { integrand: product.clone() },
            monotone_claim: Some(Monotone::Decreasing),
        },
        claimed: claimed.clone(),
    };
    let target = FuncDescr::Pw(product);
    let verdict = verify_vertical(phi, &target, &w, probes);
    Verdict {
        status: verdict.status,
        value: verdict.value,
        cert: Cert::All(vec![
            Cert::note("witness constructed from the product's own Darboux families"),
            verdict.cert,
        ]),
    }
}

/// Corollary-style positive-part transfer: for a Proved membership in a Riesz
/// catalog, Θ(ω) = ω⁺ maps the witness to a witness for f⁺. We rebuild the
/// bracketing families with positive parts and re-verify.
pub fn positive_part_witness(
    w: &VerticalWitness,
) -> Result<(Vec<SpaceElement>, Vec<SpaceElement>), String> {
    let mut lows = Vec::new();
    let mut ups = Vec::new();
    let upto = w.lower.prefix.len().max(w.upper.prefix.len()).max(1) as u64;
    for n in 1..=upto {
        if let Some(e) = w.lower.element_at(n) {
            match crate::spaces::positive_part(&e).map_err(|e| e.to_string())? {
                LatticeResult::Elem(p) => lows.push(p),
                LatticeResult::NotLattice(why) => return Err(why),
            }
        }
        if let Some(e) = w.upper.element_at(n) {
            match crate::spaces::positive_part(&e).map_err(|e| e.to_string())? {
                LatticeResult::Elem(p) => ups.push(p),
                LatticeResult::NotLattice(why) => return Err(why),
            }
        }
    }
    Ok((lows, ups))
}

/// Θ-transfer inequality of the positive-part map: 0 <= Θ(τ) − Θ(σ) <= τ − σ
/// for σ <= τ, checked exactly.
pub fn theta_transfer_check(sigma: &SpaceElement, tau: &SpaceElement) -> Result<bool, String> {
    let rel = compare(sigma, tau).map_err(|e| e.to_string())?;
    if !matches!(rel, OrderRel::Le | OrderRel::Eq) {
        return Ok(true); // vacuous
    }
    let ps = match crate::spaces::positive_part(sigma).map_err(|e| e.to_string())? {
        LatticeResult::Elem(p) => p,
        LatticeResult::NotLattice(w) => return Err(w),
    };
    let pt = match crate::spaces::positive_part(tau).map_err(|e| e.to_string())? {
        LatticeResult::Elem(p) => p,
        LatticeResult::NotLattice(w) => return Err(w),
    };
    let d = pt.sub(&ps).map_err(|e| e.to_string())?;
    let (nonneg, _) = d.sign_summary();
    let slack = tau.sub(sigma).map_err(|e| e.to_string())?.sub(&d).map_err(|e| e.to_string())?;
    let (slack_ok, _) = slack.sign_summary();
    let _ = zero();
    Ok(nonneg && slack_ok)
}
