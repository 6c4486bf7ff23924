//! The explicit poset maps behind each solid edge, packaged as certificate
//! providers for [`verify_inclusion`].

use serde::Serialize;

use super::context::Context;
use crate::collections::Condition;
use crate::group::{p_part, SubgroupId};
use crate::topology::{
    verify_inclusion, Certificate, ConicalContraction, Direction, InclusionMode, Outcome,
    PointCheck, PosetMap, SubgroupPoset, Zigzag, ZigzagStep,
};

/// `Q ≤ Q·apex ≥ apex`.
pub fn product_cone(
    ctx: &Context<'_>,
    domain: &SubgroupPoset,
    apex: SubgroupId,
    equivariant_under: Option<SubgroupId>,
) -> Certificate {
    Certificate::Conical(ConicalContraction {
        map: PosetMap::from_fn(domain, |q| ctx.lattice.join(q, apex)),
        domain: domain.clone(),
        apex,
        direction: Direction::Up,
        equivariant_under,
    })
}

/// `Q ≤ apex` for every `Q`: the poset is a cone with top `apex`.
pub fn top_cone(domain: &SubgroupPoset, apex: SubgroupId, equivariant_under: Option<SubgroupId>) -> Certificate {
    Certificate::Conical(ConicalContraction {
        map: PosetMap::constant(domain, apex),
        domain: domain.clone(),
        apex,
        direction: Direction::Up,
        equivariant_under,
    })
}

/// `Q ≥ Q̃ ≤ apex`.
pub fn tilde_cone(ctx: &Context<'_>, domain: &SubgroupPoset, apex: SubgroupId) -> Certificate {
    Certificate::Conical(ConicalContraction {
        map: PosetMap::from_fn(domain, |q| ctx.local.tilde_of(q).unwrap_or(q)),
        domain: domain.clone(),
        apex,
        direction: Direction::Down,
        equivariant_under: None,
    })
}

/// `Q ≥ N_Q(P) ≤ N_Q(P)·X·O_p(N_G(P)) ≥ X·O_p(N_G(P))` on `𝒞_{>P}`, where
/// `X` is `extra` (or trivial).
pub fn normalizer_zigzag(
    ctx: &Context<'_>,
    p: SubgroupId,
    domain: &SubgroupPoset,
    extra: Option<SubgroupId>,
    equivariant_under: Option<SubgroupId>,
) -> Certificate {
    let l = ctx.lattice;
    let core = ctx.local.normalizer_core(p);
    let base = extra.map_or(core, |x| l.join(x, core));
    let f1 = PosetMap::from_fn(domain, |q| l.normalizer_in(q, p));
    let f2 = PosetMap {
        images: f1.images.iter().map(|&n| l.join(n, base)).collect(),
    };
    let f3 = PosetMap::constant(domain, base);
    Certificate::Zigzag(Zigzag {
        domain: domain.clone(),
        steps: vec![
            ZigzagStep { relation: Direction::Down, map: f1 },
            ZigzagStep { relation: Direction::Up, map: f2 },
            ZigzagStep { relation: Direction::Down, map: f3 },
        ],
        equivariant_under,
    })
}

/// A p-local overgroup of `N_G(P)` containing a Sylow p-subgroup, first in
/// canonical order, and its largest normal p-subgroup.
pub fn local_overgroup(ctx: &Context<'_>, p: SubgroupId) -> Option<(SubgroupId, SubgroupId)> {
    let l = ctx.lattice;
    let prime = ctx.prime();
    let full = p_part(l.group().order(), prime);
    let n = ctx.local.normalizer(p);
    let mut locals: Vec<SubgroupId> = ctx
        .local
        .p_subgroups()
        .iter()
        .map(|&q| ctx.local.normalizer(q))
        .filter(|&m| l.is_subgroup_of(n, m) && p_part(l.order(m), prime) == full)
        .collect();
    locals.sort();
    locals.dedup();
    locals.first().map(|&m| (m, l.p_core(m, prime)))
}

/// The contracting zigzag of `𝒞_{>P}` justified by a given condition.
pub fn zigzag_for(
    ctx: &Context<'_>,
    condition: Condition,
    p: SubgroupId,
    domain: &SubgroupPoset,
    equivariant_under: Option<SubgroupId>,
) -> Option<Certificate> {
    match condition {
        Condition::Ch | Condition::Cl => Some(normalizer_zigzag(ctx, p, domain, None, equivariant_under)),
        Condition::M => {
            let (_, r) = local_overgroup(ctx, p)?;
            let extra = ctx.lattice.normalizer_in(r, p);
            Some(normalizer_zigzag(ctx, p, domain, Some(extra), equivariant_under))
        }
    }
}

/// What one proof step established.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StepRecord {
    pub step: &'static str,
    pub claim: String,
    pub mode: InclusionMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<SubgroupId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition: Option<Condition>,
    pub outcome: Outcome,
    pub points: usize,
    pub provided_certificates: usize,
    /// The assembled certificate re-verified from scratch.
    pub reverified: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<PointCheck>,
}

pub struct StepSpec<'s> {
    pub step: &'static str,
    pub claim: String,
    pub sub: &'s SubgroupPoset,
    pub ambient: &'s SubgroupPoset,
    pub mode: InclusionMode,
    pub subgroup: Option<SubgroupId>,
    pub condition: Option<Condition>,
}

pub fn run_step(
    ctx: &Context<'_>,
    spec: StepSpec<'_>,
    provider: &mut dyn FnMut(SubgroupId, &SubgroupPoset) -> Option<Certificate>,
) -> StepRecord {
    let check = verify_inclusion(
        ctx.lattice,
        spec.sub,
        spec.ambient,
        spec.mode,
        None,
        provider,
        &ctx.limits,
    );
    match check {
        Ok(check) => {
            let reverified = check
                .certificate
                .as_ref()
                .is_some_and(|c| c.verify(ctx.lattice, &ctx.limits).is_ok());
            let outcome = if check.outcome == Outcome::Pass && !reverified {
                Outcome::Fail
            } else {
                check.outcome
            };
            StepRecord {
                step: spec.step,
                claim: spec.claim,
                mode: spec.mode,
                subgroup: spec.subgroup,
                condition: spec.condition,
                outcome,
                points: check.points.len(),
                provided_certificates: check.points.iter().filter(|p| p.method.starts_with("provided")).count(),
                reverified,
                failures: check
                    .points
                    .into_iter()
                    .filter(|p| p.outcome != Outcome::Pass)
                    .collect(),
            }
        }
        Err(e) => StepRecord {
            step: spec.step,
            claim: format!("{} ({e})", spec.claim),
            mode: spec.mode,
            subgroup: spec.subgroup,
            condition: spec.condition,
            outcome: Outcome::Fail,
            points: 0,
            provided_certificates: 0,
            reverified: false,
            failures: Vec::new(),
        },
    }
}
