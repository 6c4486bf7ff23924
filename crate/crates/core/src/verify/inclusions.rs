//! Set-level relations between collections and agreement of their homology.

use super::context::Context;
use super::report::{CollectionHomology, EqualityResult, InclusionResult};
use crate::collections::{BaseKind, CollectionKind};

const BASES: [BaseKind; 3] = [BaseKind::A, BaseKind::S, BaseKind::B];

fn inclusion_pairs() -> Vec<(CollectionKind, CollectionKind)> {
    use CollectionKind::*;
    let mut pairs = vec![
        (D, Bcen),
        (Bcen, Hat(BaseKind::B)),
        (Hat(BaseKind::B), Base(BaseKind::B)),
        (Hat(BaseKind::B), Hat(BaseKind::S)),
        (Ce, Hat(BaseKind::S)),
        (Benson, Tilde(BaseKind::A)),
    ];
    for b in BASES {
        pairs.push((Hat(b), Tilde(b)));
        pairs.push((Tilde(b), Base(b)));
    }
    pairs
}

pub fn inclusions(ctx: &Context<'_>) -> Vec<InclusionResult> {
    inclusion_pairs()
        .into_iter()
        .map(|(a, b)| {
            let sup = ctx.poset(b);
            let violations: Vec<usize> = ctx
                .poset(a)
                .members()
                .iter()
                .filter(|&&h| !sup.contains(h))
                .map(|h| h.0)
                .collect();
            InclusionResult {
                sub: a.to_string(),
                sup: b.to_string(),
                holds: violations.is_empty(),
                violations,
            }
        })
        .collect()
}

fn all_equal(ctx: &Context<'_>, kinds: &[CollectionKind]) -> (bool, String) {
    let first = ctx.poset(kinds[0]);
    let odd: Vec<String> = kinds[1..]
        .iter()
        .filter(|&&k| ctx.poset(k) != first)
        .map(|k| k.to_string())
        .collect();
    let detail = if odd.is_empty() {
        format!("{} members each", first.len())
    } else {
        format!("differ from {}: {}", kinds[0], odd.join(", "))
    };
    (odd.is_empty(), detail)
}

pub fn equalities(ctx: &Context<'_>) -> Vec<EqualityResult> {
    use CollectionKind::*;
    let mut out = Vec::new();
    let ch = ctx.holds(crate::collections::Condition::Ch);
    let (holds, detail) = all_equal(ctx, &[Base(BaseKind::B), Hat(BaseKind::B), Bcen]);
    out.push(EqualityResult {
        name: "B = hat-B = Bcen under Ch".into(),
        applies: ch,
        holds,
        detail,
    });
    let one_class = ctx.local.single_class_of_order_p();
    for b in BASES {
        let (holds, detail) = all_equal(ctx, &[Base(b), Tilde(b), Hat(b)]);
        out.push(EqualityResult {
            name: format!("{b} = tilde-{b} = hat-{b} with one class of order-p elements"),
            applies: one_class,
            holds,
            detail,
        });
    }
    out
}

pub fn homology_profiles(ctx: &Context<'_>) -> Vec<CollectionHomology> {
    CollectionKind::ALL
        .iter()
        .map(|&k| {
            let h = ctx.homology(k);
            CollectionHomology {
                collection: k.to_string(),
                size: ctx.poset(k).len(),
                summary: match &h {
                    Ok(p) => p.summary(),
                    Err(e) => format!("unavailable: {e}"),
                },
                homology: h.ok(),
            }
        })
        .collect()
}

/// Homology agreement of a family of collections. A profile that could not
/// be computed makes the check not apply rather than fail.
fn agreement(ctx: &Context<'_>, kinds: &[CollectionKind], applies: bool) -> EqualityResult {
    let name = kinds.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ~ ");
    let profiles: Result<Vec<_>, String> = kinds.iter().map(|&k| ctx.homology(k)).collect();
    match profiles {
        Ok(ps) => {
            let holds = ps.iter().all(|p| p.same_homology(&ps[0]));
            let detail = kinds
                .iter()
                .zip(&ps)
                .map(|(k, p)| format!("{k}: {}", p.summary()))
                .collect::<Vec<_>>()
                .join("; ");
            EqualityResult { name, applies, holds, detail }
        }
        Err(e) => EqualityResult {
            name,
            applies: false,
            holds: false,
            detail: format!("unavailable: {e}"),
        },
    }
}

/// `hat_b_applies`: whether an equivalence of hat-S and hat-B was
/// established, so their homology must agree.
pub fn homology_agreements(ctx: &Context<'_>, hat_b_applies: bool) -> Vec<EqualityResult> {
    use CollectionKind::*;
    vec![
        agreement(ctx, &[Base(BaseKind::A), Base(BaseKind::S), Base(BaseKind::B)], true),
        agreement(
            ctx,
            &[Benson, Tilde(BaseKind::A), Tilde(BaseKind::S), Tilde(BaseKind::B)],
            true,
        ),
        agreement(ctx, &[Hat(BaseKind::A), Hat(BaseKind::S)], true),
        agreement(ctx, &[Hat(BaseKind::S), Hat(BaseKind::B)], hat_b_applies),
    ]
}
