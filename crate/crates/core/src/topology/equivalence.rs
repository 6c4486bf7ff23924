//! Checking that an inclusion of subgroup posets is a homotopy equivalence,
//! and scanning fixed-point avatars over a range of subgroups.

use serde::Serialize;

use super::certificate::{
    Certificate, Direction, FiberCertificate, FiberSide, LinksCertificate, LinksMode,
    MonotoneRetraction, PosetMap,
};
use super::complex::SimplicialComplex;
use super::homology::HomologyProfile;
use super::poset::SubgroupPoset;
use super::verdict::{contractibility, Evidence, VerdictStatus};
use crate::error::{Error, Result};
use crate::group::{SubgroupId, SubgroupLattice};
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InclusionMode {
    /// Every `X_{≤y}` contractible.
    FiberBelow,
    /// Every `X_{≥y}` contractible.
    FiberAbove,
    /// Every `X_{≤y}` contractible, equivariantly for the stabilizer of `y`.
    EquivariantFiberBelow,
    UpperLinks,
    LowerLinks,
    EquivariantUpperLinks,
}

impl InclusionMode {
    pub fn is_equivariant(self) -> bool {
        matches!(self, InclusionMode::EquivariantFiberBelow | InclusionMode::EquivariantUpperLinks)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Pass,
    Inconclusive,
    Fail,
}

/// Result for one point `y` of the ambient poset.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointCheck {
    pub point: SubgroupId,
    pub outcome: Outcome,
    /// `provided:<kind>` for a supplied certificate, `search:<kind>` otherwise.
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InclusionCheck {
    pub mode: InclusionMode,
    pub outcome: Outcome,
    pub points: Vec<PointCheck>,
    /// The assembled certificate when every point passed.
    #[serde(skip)]
    pub certificate: Option<Certificate>,
}

/// Supplies a contraction of the given subposet attached to a point, or
/// `None` to fall back to a search.
pub type CertificateProvider<'a> = dyn FnMut(SubgroupId, &SubgroupPoset) -> Option<Certificate> + 'a;

/// Checks that `sub ↪ ambient` is a homotopy equivalence in the given mode.
/// Equivariant modes use stabilizers in `acting`, defaulting to the whole group.
pub fn verify_inclusion(
    lattice: &SubgroupLattice,
    sub: &SubgroupPoset,
    ambient: &SubgroupPoset,
    mode: InclusionMode,
    acting: Option<SubgroupId>,
    provider: &mut CertificateProvider<'_>,
    limits: &Limits,
) -> Result<InclusionCheck> {
    if let Some(&missing) = sub.members().iter().find(|&&h| !ambient.contains(h)) {
        return Err(Error::NotASubposet(missing.0));
    }
    let acting = mode.is_equivariant().then(|| acting.unwrap_or(lattice.whole()));
    let points: Vec<SubgroupId> = match mode {
        InclusionMode::FiberBelow | InclusionMode::FiberAbove | InclusionMode::EquivariantFiberBelow => {
            ambient.members().to_vec()
        }
        _ => ambient
            .members()
            .iter()
            .copied()
            .filter(|&y| !sub.contains(y))
            .collect(),
    };
    let mut checks = Vec::with_capacity(points.len());
    let mut certs = Vec::with_capacity(points.len());
    for y in points {
        let target = match mode {
            InclusionMode::FiberBelow | InclusionMode::EquivariantFiberBelow => sub.below(lattice, y, false),
            InclusionMode::FiberAbove => sub.above(lattice, y, false),
            InclusionMode::UpperLinks | InclusionMode::EquivariantUpperLinks => ambient.above(lattice, y, true),
            InclusionMode::LowerLinks => ambient.below(lattice, y, true),
        };
        let stabilizer = acting.map(|g| lattice.normalizer_in(g, y));
        let (check, cert) = check_point(lattice, y, &target, stabilizer, provider, limits);
        checks.push(check);
        if let Some(c) = cert {
            certs.push((y, c));
        }
    }
    let outcome = checks.iter().map(|c| c.outcome).max().unwrap_or(Outcome::Pass);
    let certificate = (outcome == Outcome::Pass).then(|| match mode {
        InclusionMode::FiberBelow | InclusionMode::FiberAbove | InclusionMode::EquivariantFiberBelow => {
            Certificate::Fiber(FiberCertificate {
                sub: sub.clone(),
                ambient: ambient.clone(),
                side: if mode == InclusionMode::FiberAbove { FiberSide::Above } else { FiberSide::Below },
                acting,
                fibers: certs,
            })
        }
        _ => Certificate::Links(LinksCertificate {
            sub: sub.clone(),
            ambient: ambient.clone(),
            mode: match mode {
                InclusionMode::LowerLinks => LinksMode::Lower,
                InclusionMode::EquivariantUpperLinks => LinksMode::EquivariantUpper,
                _ => LinksMode::Upper,
            },
            acting,
            links: certs,
        }),
    });
    Ok(InclusionCheck {
        mode,
        outcome,
        points: checks,
        certificate,
    })
}

fn check_point(
    lattice: &SubgroupLattice,
    y: SubgroupId,
    target: &SubgroupPoset,
    stabilizer: Option<SubgroupId>,
    provider: &mut CertificateProvider<'_>,
    limits: &Limits,
) -> (PointCheck, Option<Certificate>) {
    if let Some(cert) = provider(y, target) {
        let method = format!("provided:{}", cert.kind());
        return match cert.verify_contracting(lattice, limits, target, stabilizer) {
            Ok(()) => (
                PointCheck { point: y, outcome: Outcome::Pass, method, detail: None },
                Some(cert),
            ),
            Err(e) => (
                PointCheck { point: y, outcome: Outcome::Fail, method, detail: Some(e.0) },
                None,
            ),
        };
    }
    let verdict = contractibility(lattice, target, stabilizer, limits);
    match verdict.status {
        VerdictStatus::Contractible => {
            let cert = verdict.certificate().cloned().expect("positive verdicts carry certificates");
            (
                PointCheck {
                    point: y,
                    outcome: Outcome::Pass,
                    method: format!("search:{}", cert.kind()),
                    detail: None,
                },
                Some(cert),
            )
        }
        VerdictStatus::NotContractible => (
            PointCheck {
                point: y,
                outcome: Outcome::Fail,
                method: "search".into(),
                detail: Some(describe_negative(&verdict.evidence)),
            },
            None,
        ),
        VerdictStatus::Unknown => (
            PointCheck {
                point: y,
                outcome: Outcome::Inconclusive,
                method: "search".into(),
                detail: match verdict.evidence {
                    Evidence::Note { message } => Some(message),
                    _ => None,
                },
            },
            None,
        ),
    }
}

fn describe_negative(e: &Evidence) -> String {
    match e {
        Evidence::Empty => "empty".into(),
        Evidence::Disconnected { components } => format!("{components} components"),
        Evidence::Homology { profile } => format!("reduced homology {}", profile.summary()),
        Evidence::Note { message } => message.clone(),
        Evidence::Certificate { .. } => "contractible".into(),
    }
}

/// The three fixed-point models of a collection `𝒞` at a subgroup `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Avatar {
    /// `𝒞_{≥H}`.
    Above,
    /// `𝒞^H`.
    Fixed,
    /// `𝒞_{≤C_G(H)}`.
    Centralizer,
}

impl Avatar {
    pub fn of(self, lattice: &SubgroupLattice, collection: &SubgroupPoset, h: SubgroupId) -> SubgroupPoset {
        match self {
            Avatar::Above => collection.above(lattice, h, false),
            Avatar::Fixed => collection.fixed_points(lattice, h),
            Avatar::Centralizer => collection.below(lattice, lattice.centralizer(h), false),
        }
    }
}

/// Strength of the evidence that two posets are homotopy equivalent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Tier {
    Certified,
    HomologyConsistent,
    Inconclusive,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AvatarComparison {
    pub subgroup: SubgroupId,
    pub tier: Tier,
    pub method: String,
    pub sub_size: usize,
    pub ambient_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<(String, String)>,
}

/// Supplies candidate retractions of the ambient avatar at `H`.
pub type RetractionHints<'a> = dyn Fn(SubgroupId, &SubgroupPoset, &SubgroupPoset) -> Vec<MonotoneRetraction> + 'a;

/// Compares `x ⊆ y` (the avatars at `h`), climbing from the cheapest
/// certificate to a homology comparison.
pub fn compare_posets(
    lattice: &SubgroupLattice,
    h: SubgroupId,
    x: &SubgroupPoset,
    y: &SubgroupPoset,
    hints: &RetractionHints<'_>,
    limits: &Limits,
) -> AvatarComparison {
    let result = |tier, method: &str, homology| AvatarComparison {
        subgroup: h,
        tier,
        method: method.to_string(),
        sub_size: x.len(),
        ambient_size: y.len(),
        homology,
    };
    if x == y {
        return result(Tier::Certified, if x.is_empty() { "both_empty" } else { "identical" }, None);
    }
    if x.is_subposet_of(y) && !x.is_empty() {
        let c_h = lattice.centralizer(h);
        let mut candidates = vec![
            generic_retraction(y, x, Direction::Up, |q| lattice.join(q, h)),
            generic_retraction(y, x, Direction::Down, |q| lattice.meet(q, c_h)),
        ];
        candidates.extend(hints(h, x, y));
        if candidates.iter().any(|r| r.verify(lattice).is_ok()) {
            return result(Tier::Certified, "retraction", None);
        }
        for mode in [InclusionMode::FiberBelow, InclusionMode::FiberAbove] {
            let check = verify_inclusion(lattice, x, y, mode, None, &mut |_, _| None, limits);
            if check.is_ok_and(|c| c.outcome == Outcome::Pass) {
                return result(Tier::Certified, "fiber", None);
            }
        }
    }
    let vx = contractibility(lattice, x, None, limits);
    let vy = contractibility(lattice, y, None, limits);
    if vx.status == VerdictStatus::Contractible && vy.status == VerdictStatus::Contractible {
        return result(Tier::Certified, "both_contractible", None);
    }
    let profiles = [x, y].map(|p| {
        SimplicialComplex::of_poset(lattice, p, limits.max_simplices).map(|c| HomologyProfile::compute(&c))
    });
    match profiles {
        [Ok(px), Ok(py)] => {
            let tier = if px.same_homology(&py) { Tier::HomologyConsistent } else { Tier::Mismatch };
            result(tier, "homology", Some((px.summary(), py.summary())))
        }
        _ => result(Tier::Inconclusive, "size_cap", None),
    }
}

fn generic_retraction(
    ambient: &SubgroupPoset,
    sub: &SubgroupPoset,
    direction: Direction,
    f: impl FnMut(SubgroupId) -> SubgroupId,
) -> MonotoneRetraction {
    MonotoneRetraction {
        map: PosetMap::from_fn(ambient, f),
        ambient: ambient.clone(),
        sub: sub.clone(),
        direction,
        equivariant_under: None,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanResult {
    pub tier: Tier,
    pub comparisons: Vec<AvatarComparison>,
}

/// Runs [`compare_posets`] on `sub_of(h) ⊆ ambient_of(h)` for each `h` and
/// reports the worst tier.
pub fn fixed_point_scan(
    lattice: &SubgroupLattice,
    range: &[SubgroupId],
    sub_of: &dyn Fn(SubgroupId) -> SubgroupPoset,
    ambient_of: &dyn Fn(SubgroupId) -> SubgroupPoset,
    hints: &RetractionHints<'_>,
    limits: &Limits,
) -> ScanResult {
    let comparisons: Vec<AvatarComparison> = range
        .iter()
        .map(|&h| compare_posets(lattice, h, &sub_of(h), &ambient_of(h), hints, limits))
        .collect();
    ScanResult {
        tier: comparisons.iter().map(|c| c.tier).max().unwrap_or(Tier::Certified),
        comparisons,
    }
}
