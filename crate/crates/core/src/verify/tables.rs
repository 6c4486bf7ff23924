//! The two comparison tables: which edges exist, and how each is checked.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::context::Context;
use super::counterexamples::{d8_shape, D8Shape};
use super::report::{EdgeResult, EdgeStatus, Row, Style};
use super::steps::{
    normalizer_zigzag, product_cone, run_step, tilde_cone, top_cone, zigzag_for, StepRecord, StepSpec,
};
use crate::collections::{BaseKind, CollectionKind, Condition};
use crate::group::SubgroupId;
use crate::topology::{
    compare_posets, fixed_point_scan, Avatar, InclusionMode, Outcome, ScanResult, SubgroupPoset,
    Tier, VerdictStatus,
};

pub const TILDE_TABLE: &str = "table31";
pub const HAT_TABLE: &str = "table44";

const BENSON: CollectionKind = CollectionKind::Benson;
const T_A: CollectionKind = CollectionKind::Tilde(BaseKind::A);
const T_S: CollectionKind = CollectionKind::Tilde(BaseKind::S);
const T_B: CollectionKind = CollectionKind::Tilde(BaseKind::B);
const H_A: CollectionKind = CollectionKind::Hat(BaseKind::A);
const H_S: CollectionKind = CollectionKind::Hat(BaseKind::S);
const H_B: CollectionKind = CollectionKind::Hat(BaseKind::B);

const ALL_THREE: &[Condition] = &[Condition::Cl, Condition::Ch, Condition::M];
const CL_CH: &[Condition] = &[Condition::Cl, Condition::Ch];

#[derive(Clone, Copy)]
enum Place {
    /// Same row, two collections; `sub ⊆ ambient` as collections.
    Horizontal {
        row: Row,
        from: CollectionKind,
        to: CollectionKind,
        sub: CollectionKind,
        ambient: CollectionKind,
    },
    /// Same collection; compares the `row` model with the nerve.
    Vertical { column: CollectionKind, row: Row },
}

/// Subgroup of D8 at which a dotted edge visibly fails to be equivariant.
#[derive(Clone, Copy)]
enum Witness {
    None,
    Klein,
    Cyclic,
}

#[derive(Clone, Copy)]
enum Check {
    Solid(fn(&Context<'_>) -> Vec<StepRecord>),
    Dashed,
    Dotted(Witness),
}

struct EdgeDef {
    table: &'static str,
    place: Place,
    style: Style,
    hypothesis: &'static [Condition],
    check: Check,
}

fn h(row: Row, from: CollectionKind, to: CollectionKind, sub: CollectionKind, ambient: CollectionKind) -> Place {
    Place::Horizontal { row, from, to, sub, ambient }
}

fn v(column: CollectionKind, row: Row) -> Place {
    Place::Vertical { column, row }
}

fn tilde_edges() -> Vec<EdgeDef> {
    use Row::*;
    let e = |place, style, check| EdgeDef {
        table: TILDE_TABLE,
        place,
        style,
        hypothesis: &[],
        check,
    };
    vec![
        e(h(Orbit, BENSON, T_A, BENSON, T_A), Style::Dotted, Check::Dotted(Witness::Klein)),
        e(h(Orbit, T_A, T_S, T_A, T_S), Style::Dotted, Check::Dotted(Witness::Cyclic)),
        e(h(Orbit, T_S, T_B, T_B, T_S), Style::Solid, Check::Solid(tilde_orbit_links)),
        e(h(Nerve, BENSON, T_A, BENSON, T_A), Style::Solid, Check::Solid(tilde_benson_fibers)),
        e(h(Nerve, T_A, T_S, T_A, T_S), Style::Solid, Check::Solid(tilde_product_fibers)),
        e(h(Nerve, T_S, T_B, T_B, T_S), Style::Solid, Check::Solid(tilde_equivariant_links)),
        e(h(Centralizer, BENSON, T_A, BENSON, T_A), Style::Solid, Check::Solid(tilde_lower_links)),
        e(h(Centralizer, T_A, T_S, T_A, T_S), Style::Solid, Check::Solid(tilde_centralizer_fibers)),
        e(h(Centralizer, T_S, T_B, T_B, T_S), Style::Dotted, Check::Dotted(Witness::Klein)),
        e(v(BENSON, Orbit), Style::Dotted, Check::Dotted(Witness::None)),
        e(v(T_A, Orbit), Style::Dotted, Check::Dotted(Witness::None)),
        e(v(T_S, Orbit), Style::Dashed, Check::Dashed),
        e(v(T_B, Orbit), Style::Dashed, Check::Dashed),
        e(v(BENSON, Centralizer), Style::Dashed, Check::Dashed),
        e(v(T_A, Centralizer), Style::Dashed, Check::Dashed),
        e(v(T_S, Centralizer), Style::Dashed, Check::Dashed),
        e(v(T_B, Centralizer), Style::Dotted, Check::Dotted(Witness::None)),
    ]
}

fn hat_edges() -> Vec<EdgeDef> {
    use Row::*;
    let e = |place, style, hypothesis, check| EdgeDef {
        table: HAT_TABLE,
        place,
        style,
        hypothesis,
        check,
    };
    vec![
        e(h(Orbit, H_A, H_S, H_A, H_S), Style::Dotted, &[], Check::Dotted(Witness::Cyclic)),
        e(h(Orbit, H_S, H_B, H_B, H_S), Style::Solid, ALL_THREE, Check::Solid(hat_orbit_links)),
        e(h(Nerve, H_A, H_S, H_A, H_S), Style::Solid, &[], Check::Solid(hat_product_fibers)),
        e(h(Nerve, H_S, H_B, H_B, H_S), Style::Solid, ALL_THREE, Check::Solid(hat_equivariant_links)),
        e(h(Centralizer, H_A, H_S, H_A, H_S), Style::Solid, &[], Check::Solid(hat_centralizer_fibers)),
        e(h(Centralizer, H_S, H_B, H_B, H_S), Style::Dotted, ALL_THREE, Check::Dotted(Witness::Klein)),
        e(v(H_A, Orbit), Style::Dotted, &[], Check::Dotted(Witness::Cyclic)),
        e(v(H_S, Orbit), Style::Dashed, CL_CH, Check::Dashed),
        e(v(H_B, Orbit), Style::Dashed, CL_CH, Check::Dashed),
        e(v(H_A, Centralizer), Style::Dashed, CL_CH, Check::Dashed),
        e(v(H_S, Centralizer), Style::Dashed, CL_CH, Check::Dashed),
        e(v(H_B, Centralizer), Style::Dotted, &[], Check::Dotted(Witness::Cyclic)),
    ]
}

// --- solid edges of the tilde table ---

fn tilde_benson_fibers(ctx: &Context<'_>) -> Vec<StepRecord> {
    let spec = StepSpec {
        step: "benson-fibers-are-cones",
        claim: "E_{<=P} is a cone on tilde(P), N_G(P)-equivariantly, for every P in tilde-A".into(),
        sub: ctx.poset(BENSON),
        ambient: ctx.poset(T_A),
        mode: InclusionMode::EquivariantFiberBelow,
        subgroup: None,
        condition: None,
    };
    vec![run_step(ctx, spec, &mut |p, target| {
        let apex = ctx.local.tilde_of(p).ok()?;
        Some(top_cone(target, apex, Some(ctx.local.normalizer(p))))
    })]
}

fn tilde_product_fibers(ctx: &Context<'_>) -> Vec<StepRecord> {
    let spec = StepSpec {
        step: "tilde-a-fibers-conical",
        claim: "tilde-A_{<=P} contracts via Q <= Q*tilde(P) >= tilde(P), N_G(P)-equivariantly".into(),
        sub: ctx.poset(T_A),
        ambient: ctx.poset(T_S),
        mode: InclusionMode::EquivariantFiberBelow,
        subgroup: None,
        condition: None,
    };
    vec![run_step(ctx, spec, &mut |p, target| {
        let apex = ctx.local.tilde_of(p).ok()?;
        Some(product_cone(ctx, target, apex, Some(ctx.local.normalizer(p))))
    })]
}

fn tilde_links(ctx: &Context<'_>, mode: InclusionMode, step: &'static str) -> Vec<StepRecord> {
    let spec = StepSpec {
        step,
        claim: "tilde-S_{>P} contracts via Q >= N_Q(P) <= N_Q(P)O_p(N_G(P)) >= O_p(N_G(P)) for P in tilde-S \\ tilde-B".into(),
        sub: ctx.poset(T_B),
        ambient: ctx.poset(T_S),
        mode,
        subgroup: None,
        condition: None,
    };
    vec![run_step(ctx, spec, &mut |p, target| {
        Some(normalizer_zigzag(ctx, p, target, None, Some(ctx.local.normalizer(p))))
    })]
}

fn tilde_equivariant_links(ctx: &Context<'_>) -> Vec<StepRecord> {
    tilde_links(ctx, InclusionMode::EquivariantUpperLinks, "tilde-s-upper-links-equivariant")
}

fn tilde_orbit_links(ctx: &Context<'_>) -> Vec<StepRecord> {
    tilde_links(ctx, InclusionMode::UpperLinks, "tilde-s-upper-links")
}

fn tilde_lower_links(ctx: &Context<'_>) -> Vec<StepRecord> {
    let spec = StepSpec {
        step: "tilde-a-lower-links",
        claim: "tilde-A_{<P} contracts via Q >= tilde(Q) <= tilde(P) for P in tilde-A \\ E".into(),
        sub: ctx.poset(BENSON),
        ambient: ctx.poset(T_A),
        mode: InclusionMode::LowerLinks,
        subgroup: None,
        condition: None,
    };
    vec![run_step(ctx, spec, &mut |p, target| {
        let apex = ctx.local.tilde_of(p).ok()?;
        Some(tilde_cone(ctx, target, apex))
    })]
}

/// Runs fibers of `sub_{≤C_G(H)} ⊆ ambient_{≤C_G(H)}` for every class of
/// subgroups `H`, contracting by `Q ↦ Q·op(P)`.
fn centralizer_fibers(
    ctx: &Context<'_>,
    sub: CollectionKind,
    ambient: CollectionKind,
    step: &'static str,
    claim: &str,
    op: &dyn Fn(SubgroupId) -> Option<SubgroupId>,
) -> Vec<StepRecord> {
    let l = ctx.lattice;
    l.class_representatives()
        .into_iter()
        .map(|hh| {
            let c = l.centralizer(hh);
            let x = ctx.poset(sub).below(l, c, false);
            let y = ctx.poset(ambient).below(l, c, false);
            let spec = StepSpec {
                step,
                claim: claim.to_string(),
                sub: &x,
                ambient: &y,
                mode: InclusionMode::FiberBelow,
                subgroup: Some(hh),
                condition: None,
            };
            run_step(ctx, spec, &mut |p, target| Some(product_cone(ctx, target, op(p)?, None)))
        })
        .collect()
}

fn tilde_centralizer_fibers(ctx: &Context<'_>) -> Vec<StepRecord> {
    centralizer_fibers(
        ctx,
        T_A,
        T_S,
        "tilde-centralizer-fibers",
        "for every H, tilde-A_{<=C_G(H)} has fibers contracting via Q <= Q*tilde(P) >= tilde(P)",
        &|p| ctx.local.tilde_of(p).ok(),
    )
}

// --- solid edges of the hat table ---

fn hat_product_fibers(ctx: &Context<'_>) -> Vec<StepRecord> {
    let spec = StepSpec {
        step: "hat-a-fibers-conical",
        claim: "hat-A_{<=P} contracts via Q <= Q*hat(P) >= hat(P), N_G(P)-equivariantly".into(),
        sub: ctx.poset(H_A),
        ambient: ctx.poset(H_S),
        mode: InclusionMode::EquivariantFiberBelow,
        subgroup: None,
        condition: None,
    };
    vec![run_step(ctx, spec, &mut |p, target| {
        let apex = ctx.local.hat_of(p).ok()?;
        Some(product_cone(ctx, target, apex, Some(ctx.local.normalizer(p))))
    })]
}

fn hat_links(ctx: &Context<'_>, mode: InclusionMode, step: &'static str) -> Vec<StepRecord> {
    Condition::ALL
        .iter()
        .copied()
        .filter(|&c| ctx.holds(c))
        .map(|c| {
            let claim = match c {
                Condition::M => "hat-S_{>P} contracts via Q >= N_Q(P) <= N_Q(P)N_R(P)O_p(N_G(P)) >= N_R(P)O_p(N_G(P)), R = O_p(M) for a p-local M >= N_G(P) of full p-part",
                _ => "hat-S_{>P} contracts via Q >= N_Q(P) <= N_Q(P)O_p(N_G(P)) >= O_p(N_G(P))",
            };
            let spec = StepSpec {
                step,
                claim: claim.into(),
                sub: ctx.poset(H_B),
                ambient: ctx.poset(H_S),
                mode,
                subgroup: None,
                condition: Some(c),
            };
            run_step(ctx, spec, &mut |p, target| {
                zigzag_for(ctx, c, p, target, Some(ctx.local.normalizer(p)))
            })
        })
        .collect()
}

fn hat_equivariant_links(ctx: &Context<'_>) -> Vec<StepRecord> {
    hat_links(ctx, InclusionMode::EquivariantUpperLinks, "hat-s-upper-links-equivariant")
}

fn hat_orbit_links(ctx: &Context<'_>) -> Vec<StepRecord> {
    hat_links(ctx, InclusionMode::UpperLinks, "hat-s-upper-links")
}

fn hat_centralizer_fibers(ctx: &Context<'_>) -> Vec<StepRecord> {
    centralizer_fibers(
        ctx,
        H_A,
        H_S,
        "hat-centralizer-fibers",
        "for every H, hat-A_{<=C_G(H)} has fibers contracting via Q <= hat(P)Q >= hat(P)",
        &|p| ctx.local.hat_of(p).ok(),
    )
}

// --- evaluation ---

fn avatar_of(row: Row) -> Avatar {
    match row {
        Row::Orbit => Avatar::Above,
        Row::Nerve => Avatar::Fixed,
        Row::Centralizer => Avatar::Centralizer,
    }
}

type AvatarFn<'c> = Box<dyn Fn(SubgroupId) -> SubgroupPoset + 'c>;

/// The two posets compared at `H` for an edge: `(sub, ambient)`.
fn avatars<'c>(ctx: &'c Context<'_>, place: Place) -> (AvatarFn<'c>, AvatarFn<'c>) {
    let l = ctx.lattice;
    match place {
        Place::Horizontal { row, sub, ambient, .. } => {
            let a = avatar_of(row);
            (
                Box::new(move |h| a.of(l, ctx.poset(sub), h)),
                Box::new(move |h| a.of(l, ctx.poset(ambient), h)),
            )
        }
        Place::Vertical { column, row } => {
            let a = avatar_of(row);
            (
                Box::new(move |h| a.of(l, ctx.poset(column), h)),
                Box::new(move |h| Avatar::Fixed.of(l, ctx.poset(column), h)),
            )
        }
    }
}

fn labels(place: Place) -> (&'static str, String, String, String) {
    match place {
        Place::Horizontal { row, from, to, .. } => (
            "horizontal",
            from.to_string(),
            to.to_string(),
            format!("{row}: {from} -- {to}"),
        ),
        Place::Vertical { column, row } => {
            let (a, b) = match row {
                Row::Orbit => (Row::Orbit, Row::Nerve),
                _ => (Row::Nerve, Row::Centralizer),
            };
            ("vertical", a.to_string(), b.to_string(), format!("{column}: {a} -- {b}"))
        }
    }
}

fn tier_status(t: Tier) -> EdgeStatus {
    match t {
        Tier::Certified => EdgeStatus::Certified,
        Tier::HomologyConsistent => EdgeStatus::HomologyConsistent,
        Tier::Inconclusive => EdgeStatus::Inconclusive,
        Tier::Mismatch => EdgeStatus::Mismatch,
    }
}

fn scan_summary(ctx: &Context<'_>, sylow: SubgroupId, scan: &ScanResult) -> Value {
    let mut tiers: BTreeMap<String, usize> = BTreeMap::new();
    let mut methods: BTreeMap<String, usize> = BTreeMap::new();
    for c in &scan.comparisons {
        *tiers.entry(tier_status(c.tier).to_string()).or_default() += 1;
        *methods.entry(c.method.clone()).or_default() += 1;
    }
    let uncertified: Vec<_> = scan.comparisons.iter().filter(|c| c.tier != Tier::Certified).collect();
    json!({
        "sylow": ctx.name(sylow),
        "subgroups_scanned": scan.comparisons.len(),
        "tier": tier_status(scan.tier),
        "tiers": tiers,
        "methods": methods,
        "uncertified": uncertified,
    })
}

fn sylow_scan(ctx: &Context<'_>, sylow: SubgroupId, sub: &AvatarFn<'_>, ambient: &AvatarFn<'_>) -> ScanResult {
    let range = ctx.lattice.subgroups_of(sylow);
    fixed_point_scan(ctx.lattice, &range, &**sub, &**ambient, &|_, _, _| Vec::new(), &ctx.limits)
}

fn evaluate_dashed(ctx: &Context<'_>, place: Place) -> (EdgeStatus, Value) {
    let (sub, ambient) = avatars(ctx, place);
    let first = ctx.sylows()[0];
    let scan = sylow_scan(ctx, first, &sub, &ambient);
    let mut evidence = json!({ "scan": scan_summary(ctx, first, &scan) });
    let mut tier = scan.tier;
    if let Some(&second) = ctx.sylows().get(1) {
        let spot = sylow_scan(ctx, second, &sub, &ambient);
        evidence["spot_check"] = scan_summary(ctx, second, &spot);
        tier = tier.max(spot.tier);
    }
    (tier_status(tier), evidence)
}

fn evaluate_dotted(ctx: &Context<'_>, place: Place, witness: Witness) -> (EdgeStatus, Value) {
    let (sub, ambient) = avatars(ctx, place);
    let trivial = ctx.lattice.trivial();
    let base = compare_posets(ctx.lattice, trivial, &sub(trivial), &ambient(trivial), &|_, _, _| Vec::new(), &ctx.limits);
    let mut status = tier_status(base.tier);

    // Equivariance is not claimed; record where it fails.
    let scan = sylow_scan(ctx, ctx.sylows()[0], &sub, &ambient);
    let failing: Vec<String> = scan
        .comparisons
        .iter()
        .filter(|c| c.tier == Tier::Mismatch)
        .map(|c| ctx.name(c.subgroup))
        .collect();
    let mut evidence = json!({
        "ordinary": base,
        "fixed_point_mismatches": failing,
    });

    if let Some(shape) = d8_shape(ctx) {
        let subgroups: Vec<SubgroupId> = match witness {
            Witness::None => Vec::new(),
            Witness::Klein => shape.klein.to_vec(),
            Witness::Cyclic => vec![shape.cyclic],
        };
        if !subgroups.is_empty() {
            let checks: Vec<Value> = subgroups
                .iter()
                .map(|&w| witness_check(ctx, &shape, w, &sub, &ambient))
                .collect();
            let reproduced = checks.iter().all(|c| c["reproduced"] == json!(true));
            if !reproduced {
                status = EdgeStatus::Mismatch;
            }
            evidence["counterexample"] = json!({ "reproduced": reproduced, "checks": checks });
        }
    }
    (status, evidence)
}

/// At the witness one side is empty while the other is contractible.
fn witness_check(ctx: &Context<'_>, _shape: &D8Shape, w: SubgroupId, sub: &AvatarFn<'_>, ambient: &AvatarFn<'_>) -> Value {
    let (x, y) = (sub(w), ambient(w));
    let contractible = |p: &SubgroupPoset| {
        crate::topology::contractibility(ctx.lattice, p, None, &ctx.limits).status == VerdictStatus::Contractible
    };
    let reproduced = (x.is_empty() && contractible(&y)) || (y.is_empty() && contractible(&x));
    json!({
        "subgroup": ctx.name(w),
        "sub_size": x.len(),
        "ambient_size": y.len(),
        "reproduced": reproduced,
    })
}

fn evaluate_solid(ctx: &Context<'_>, place: Place, steps: fn(&Context<'_>) -> Vec<StepRecord>) -> (EdgeStatus, Value) {
    let records = steps(ctx);
    let worst = records.iter().map(|r| r.outcome).max().unwrap_or(Outcome::Pass);
    let mut status = match worst {
        Outcome::Pass => EdgeStatus::Certified,
        Outcome::Inconclusive => EdgeStatus::Inconclusive,
        Outcome::Fail => EdgeStatus::Mismatch,
    };
    let mut evidence = json!({ "steps": records });
    if let Place::Horizontal { sub, ambient, .. } = place {
        match (ctx.homology(sub), ctx.homology(ambient)) {
            (Ok(a), Ok(b)) => {
                let agree = a.same_homology(&b);
                if !agree {
                    status = EdgeStatus::Mismatch;
                }
                evidence["homology"] = json!({ "sub": a.summary(), "ambient": b.summary(), "agree": agree });
            }
            (a, b) => {
                if status == EdgeStatus::Certified {
                    status = EdgeStatus::Inconclusive;
                }
                evidence["homology"] = json!({
                    "unavailable": [a.err(), b.err()],
                });
            }
        }
    }
    (status, evidence)
}

/// The hypotheses that hold, or `None` when the edge has hypotheses and
/// none of them holds.
fn gate(hypothesis: &[Condition], holds: impl Fn(Condition) -> bool) -> Option<Vec<Condition>> {
    let holding: Vec<Condition> = hypothesis.iter().copied().filter(|&c| holds(c)).collect();
    (hypothesis.is_empty() || !holding.is_empty()).then_some(holding)
}

fn evaluate(ctx: &Context<'_>, def: &EdgeDef) -> EdgeResult {
    let (orientation, from, to, label) = labels(def.place);
    let (status, evidence) = if let Some(holding) = gate(def.hypothesis, |c| ctx.holds(c)) {
        let (status, mut evidence) = match def.check {
            Check::Solid(steps) => evaluate_solid(ctx, def.place, steps),
            Check::Dashed => evaluate_dashed(ctx, def.place),
            Check::Dotted(w) => evaluate_dotted(ctx, def.place, w),
        };
        if !def.hypothesis.is_empty() {
            evidence["conditions_holding"] = json!(holding);
        }
        (status, evidence)
    } else {
        let reports: Vec<_> = def.hypothesis.iter().map(|&c| ctx.condition(c).clone()).collect();
        (EdgeStatus::Skipped, json!({ "failing_conditions": reports }))
    };
    EdgeResult {
        table: def.table.to_string(),
        orientation,
        from,
        to,
        label,
        style: def.style,
        hypothesis: def.hypothesis.to_vec(),
        status,
        evidence,
    }
}

pub fn run_tilde_table(ctx: &Context<'_>) -> Vec<EdgeResult> {
    tilde_edges().iter().map(|d| evaluate(ctx, d)).collect()
}

pub fn run_hat_table(ctx: &Context<'_>) -> Vec<EdgeResult> {
    hat_edges().iter().map(|d| evaluate(ctx, d)).collect()
}
