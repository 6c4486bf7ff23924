//! Machine-checkable witnesses for contractibility and homotopy equivalence
//! of subgroup posets. Every certificate is re-verified from scratch against
//! the lattice; nothing is trusted from whoever produced it.

use std::fmt;

use serde::Serialize;

use super::collapse::replay_collapses;
use super::complex::{Simplex, SimplicialComplex};
use super::homology::HomologyProfile;
use super::pi1::simply_connected;
use super::poset::SubgroupPoset;
use crate::group::{SubgroupId, SubgroupLattice};
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateError(pub String);

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CertificateError {}

type Check = Result<(), CertificateError>;

fn fail<T>(msg: impl Into<String>) -> Result<T, CertificateError> {
    Err(CertificateError(msg.into()))
}

/// How a map compares with the identity (or with the previous map).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// `x ≤ f(x)`.
    Up,
    /// `f(x) ≤ x`.
    Down,
}

impl Direction {
    fn holds(self, lattice: &SubgroupLattice, before: SubgroupId, after: SubgroupId) -> bool {
        match self {
            Direction::Up => lattice.is_subgroup_of(before, after),
            Direction::Down => lattice.is_subgroup_of(after, before),
        }
    }
}

/// A self-map of a poset, stored as the image of each member in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PosetMap {
    pub images: Vec<SubgroupId>,
}

impl PosetMap {
    pub fn from_fn(domain: &SubgroupPoset, f: impl FnMut(SubgroupId) -> SubgroupId) -> Self {
        Self {
            images: domain.members().iter().copied().map(f).collect(),
        }
    }

    pub fn constant(domain: &SubgroupPoset, value: SubgroupId) -> Self {
        Self {
            images: vec![value; domain.len()],
        }
    }

    pub fn identity(domain: &SubgroupPoset) -> Self {
        Self {
            images: domain.members().to_vec(),
        }
    }

    fn image_of(&self, domain: &SubgroupPoset, x: SubgroupId) -> Option<SubgroupId> {
        domain.position(x).map(|i| self.images[i])
    }

    fn is_constant(&self) -> bool {
        self.images.windows(2).all(|w| w[0] == w[1])
    }
}

fn check_self_map(lattice: &SubgroupLattice, domain: &SubgroupPoset, map: &PosetMap, into: &SubgroupPoset) -> Check {
    if map.images.len() != domain.len() {
        return fail("map length differs from domain size");
    }
    for (&x, &fx) in domain.members().iter().zip(&map.images) {
        if !into.contains(fx) {
            return fail(format!("image of {x} is {fx}, outside the target poset"));
        }
    }
    let members = domain.members();
    for i in 0..members.len() {
        for j in 0..members.len() {
            if i != j
                && lattice.is_subgroup_of(members[i], members[j])
                && !lattice.is_subgroup_of(map.images[i], map.images[j])
            {
                return fail(format!("map is not monotone on {} ≤ {}", members[i], members[j]));
            }
        }
    }
    Ok(())
}

fn check_equivariance(
    lattice: &SubgroupLattice,
    domain: &SubgroupPoset,
    map: &PosetMap,
    k: SubgroupId,
) -> Check {
    if !domain.is_invariant_under(lattice, k) {
        return fail(format!("domain is not invariant under {k}"));
    }
    for &g in lattice.subgroup(k).generators() {
        for (&x, &fx) in domain.members().iter().zip(&map.images) {
            let gx = lattice.conjugate(x, g);
            let f_gx = map.image_of(domain, gx).expect("invariant domain");
            if f_gx != lattice.conjugate(fx, g) {
                return fail(format!("map does not commute with conjugation on {x}"));
            }
        }
    }
    Ok(())
}

/// `x ≤ f(x) ≥ x₀` (or the dual): `Id ≃ f ≃ const x₀`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConicalContraction {
    pub domain: SubgroupPoset,
    pub map: PosetMap,
    pub apex: SubgroupId,
    pub direction: Direction,
    /// When set, the contraction is equivariant for this subgroup, whose
    /// action must fix the apex.
    pub equivariant_under: Option<SubgroupId>,
}

impl ConicalContraction {
    pub fn verify(&self, lattice: &SubgroupLattice) -> Check {
        if !self.domain.contains(self.apex) {
            return fail("apex outside the domain");
        }
        check_self_map(lattice, &self.domain, &self.map, &self.domain)?;
        for (&x, &fx) in self.domain.members().iter().zip(&self.map.images) {
            if !self.direction.holds(lattice, x, fx) {
                return fail(format!("identity and map are not comparable at {x}"));
            }
            if !self.direction.holds(lattice, self.apex, fx) {
                return fail(format!("apex and map are not comparable at {x}"));
            }
        }
        if let Some(k) = self.equivariant_under {
            if !lattice.subgroup_normalizes(k, self.apex) {
                return fail(format!("apex is not fixed by {k}"));
            }
            check_equivariance(lattice, &self.domain, &self.map, k)?;
        }
        Ok(())
    }
}

/// A monotone `f : Y → Y` with `f ≤ Id` or `f ≥ Id` and `f(Y) ⊆ X ⊆ Y`,
/// so that `X ↪ Y` is a homotopy equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotoneRetraction {
    pub ambient: SubgroupPoset,
    pub sub: SubgroupPoset,
    pub map: PosetMap,
    pub direction: Direction,
    pub equivariant_under: Option<SubgroupId>,
}

impl MonotoneRetraction {
    pub fn verify(&self, lattice: &SubgroupLattice) -> Check {
        if !self.sub.is_subposet_of(&self.ambient) {
            return fail("sub is not contained in ambient");
        }
        check_self_map(lattice, &self.ambient, &self.map, &self.sub)?;
        for (&y, &fy) in self.ambient.members().iter().zip(&self.map.images) {
            if !self.direction.holds(lattice, y, fy) {
                return fail(format!("map is not comparable with the identity at {y}"));
            }
        }
        if let Some(k) = self.equivariant_under {
            check_equivariance(lattice, &self.ambient, &self.map, k)?;
            if !self.sub.is_invariant_under(lattice, k) {
                return fail(format!("sub is not invariant under {k}"));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZigzagStep {
    /// Relation of the previous map (the identity for the first step) to this one.
    pub relation: Direction,
    pub map: PosetMap,
}

/// `Id ⋈ f₁ ⋈ … ⋈ f_k` with each `⋈` a pointwise comparison and `f_k`
/// constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Zigzag {
    pub domain: SubgroupPoset,
    pub steps: Vec<ZigzagStep>,
    pub equivariant_under: Option<SubgroupId>,
}

impl Zigzag {
    pub fn verify(&self, lattice: &SubgroupLattice) -> Check {
        let mut previous = PosetMap::identity(&self.domain);
        for (i, step) in self.steps.iter().enumerate() {
            check_self_map(lattice, &self.domain, &step.map, &self.domain)
                .map_err(|e| CertificateError(format!("step {}: {e}", i + 1)))?;
            for ((&before, &after), &x) in previous
                .images
                .iter()
                .zip(&step.map.images)
                .zip(self.domain.members())
            {
                if !step.relation.holds(lattice, before, after) {
                    return fail(format!("step {}: comparison fails at {x}", i + 1));
                }
            }
            if let Some(k) = self.equivariant_under {
                check_equivariance(lattice, &self.domain, &step.map, k)
                    .map_err(|e| CertificateError(format!("step {}: {e}", i + 1)))?;
            }
            previous = step.map.clone();
        }
        if !previous.is_constant() {
            return fail("terminal map is not constant");
        }
        Ok(())
    }
}

/// Elementary collapses of the order complex down to a single vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollapseSequence {
    pub domain: SubgroupPoset,
    pub pairs: Vec<(Simplex, Simplex)>,
}

/// Trivial reduced homology plus a Tietze-trivialized fundamental group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcyclicSimplyConnected {
    pub domain: SubgroupPoset,
    pub tietze_budget: usize,
}

/// Which subposets a fiber certificate ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberSide {
    /// `X_{≤y}` for `y ∈ Y`.
    Below,
    /// `X_{≥y}` for `y ∈ Y`.
    Above,
}

/// `X ⊆ Y` is a homotopy equivalence because every fiber `X_{≤y}` (or
/// `X_{≥y}`) is contractible, equivariantly for the stabilizer of `y` in
/// `acting` when that is set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberCertificate {
    pub sub: SubgroupPoset,
    pub ambient: SubgroupPoset,
    pub side: FiberSide,
    pub acting: Option<SubgroupId>,
    pub fibers: Vec<(SubgroupId, Certificate)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LinksMode {
    /// `Y_{>y}` contractible for `y ∈ Y ∖ X`.
    Upper,
    /// `Y_{<y}` contractible for `y ∈ Y ∖ X`.
    Lower,
    /// `Y_{>y}` contractible equivariantly for the stabilizer of `y`.
    EquivariantUpper,
}

/// `X ⊆ Y` is a homotopy equivalence because the links of the missing
/// points are contractible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinksCertificate {
    pub sub: SubgroupPoset,
    pub ambient: SubgroupPoset,
    pub mode: LinksMode,
    pub acting: Option<SubgroupId>,
    pub links: Vec<(SubgroupId, Certificate)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    Conical(ConicalContraction),
    Retraction(MonotoneRetraction),
    Zigzag(Zigzag),
    Collapse(CollapseSequence),
    AcyclicSimplyConnected(AcyclicSimplyConnected),
    Fiber(FiberCertificate),
    Links(LinksCertificate),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Conical(_) => "conical",
            Certificate::Retraction(_) => "retraction",
            Certificate::Zigzag(_) => "zigzag",
            Certificate::Collapse(_) => "collapse",
            Certificate::AcyclicSimplyConnected(_) => "acyclic_simply_connected",
            Certificate::Fiber(_) => "fiber",
            Certificate::Links(_) => "links",
        }
    }

    /// The poset this certificate shows contractible, if it is of that kind.
    pub fn contracted_domain(&self) -> Option<&SubgroupPoset> {
        match self {
            Certificate::Conical(c) => Some(&c.domain),
            Certificate::Zigzag(z) if !z.domain.is_empty() => Some(&z.domain),
            Certificate::Collapse(c) => Some(&c.domain),
            Certificate::AcyclicSimplyConnected(a) => Some(&a.domain),
            _ => None,
        }
    }

    /// `(sub, ambient)` for certificates of homotopy equivalence.
    pub fn equivalence(&self) -> Option<(&SubgroupPoset, &SubgroupPoset)> {
        match self {
            Certificate::Retraction(r) => Some((&r.sub, &r.ambient)),
            Certificate::Fiber(f) => Some((&f.sub, &f.ambient)),
            Certificate::Links(l) => Some((&l.sub, &l.ambient)),
            _ => None,
        }
    }

    /// The group for which the homotopy is equivariant, if any.
    pub fn equivariance(&self) -> Option<SubgroupId> {
        match self {
            Certificate::Conical(c) => c.equivariant_under,
            Certificate::Retraction(r) => r.equivariant_under,
            Certificate::Zigzag(z) => z.equivariant_under,
            _ => None,
        }
    }

    /// Verifies the certificate, and (when `require_equivariance` is set)
    /// that it is equivariant for a group containing it.
    pub fn verify_contracting(
        &self,
        lattice: &SubgroupLattice,
        limits: &Limits,
        domain: &SubgroupPoset,
        require_equivariance: Option<SubgroupId>,
    ) -> Check {
        match self.contracted_domain() {
            Some(d) if d == domain => {}
            Some(_) => return fail(format!("{} certificate is for a different poset", self.kind())),
            None => return fail(format!("{} certificate does not show contractibility", self.kind())),
        }
        if let Some(k) = require_equivariance {
            match self.equivariance() {
                Some(e) if lattice.is_subgroup_of(k, e) => {}
                _ => return fail(format!("{} certificate is not equivariant under {k}", self.kind())),
            }
        }
        self.verify(lattice, limits)
    }

    pub fn verify(&self, lattice: &SubgroupLattice, limits: &Limits) -> Check {
        match self {
            Certificate::Conical(c) => c.verify(lattice),
            Certificate::Retraction(r) => r.verify(lattice),
            Certificate::Zigzag(z) => z.verify(lattice),
            Certificate::Collapse(c) => {
                let complex = SimplicialComplex::of_poset(lattice, &c.domain, limits.max_simplices)
                    .map_err(|e| CertificateError(e.to_string()))?;
                match replay_collapses(&complex, &c.pairs) {
                    Ok(1) => Ok(()),
                    Ok(n) => fail(format!("collapses leave {n} simplices")),
                    Err(e) => fail(e),
                }
            }
            Certificate::AcyclicSimplyConnected(a) => {
                let complex = SimplicialComplex::of_poset(lattice, &a.domain, limits.max_simplices)
                    .map_err(|e| CertificateError(e.to_string()))?;
                if !HomologyProfile::compute(&complex).is_acyclic() {
                    return fail("reduced homology is nonzero");
                }
                if !simply_connected(&complex, a.tietze_budget) {
                    return fail("fundamental group not shown trivial");
                }
                Ok(())
            }
            Certificate::Fiber(f) => {
                if !f.sub.is_subposet_of(&f.ambient) {
                    return fail("sub is not contained in ambient");
                }
                if f.fibers.len() != f.ambient.len() {
                    return fail("fiber count differs from ambient size");
                }
                for (&y, (fy, cert)) in f.ambient.members().iter().zip(&f.fibers) {
                    if y != *fy {
                        return fail(format!("fiber for {fy} listed where {y} expected"));
                    }
                    let fiber = match f.side {
                        FiberSide::Below => f.sub.below(lattice, y, false),
                        FiberSide::Above => f.sub.above(lattice, y, false),
                    };
                    let stabilizer = f.acting.map(|g| lattice.normalizer_in(g, y));
                    cert.verify_contracting(lattice, limits, &fiber, stabilizer)
                        .map_err(|e| CertificateError(format!("fiber at {y}: {e}")))?;
                }
                Ok(())
            }
            Certificate::Links(l) => {
                if !l.sub.is_subposet_of(&l.ambient) {
                    return fail("sub is not contained in ambient");
                }
                let missing: Vec<SubgroupId> = l
                    .ambient
                    .members()
                    .iter()
                    .copied()
                    .filter(|&y| !l.sub.contains(y))
                    .collect();
                if missing.len() != l.links.len() {
                    return fail("link count differs from the number of missing points");
                }
                for (&y, (ly, cert)) in missing.iter().zip(&l.links) {
                    if y != *ly {
                        return fail(format!("link for {ly} listed where {y} expected"));
                    }
                    let link = match l.mode {
                        LinksMode::Lower => l.ambient.below(lattice, y, true),
                        _ => l.ambient.above(lattice, y, true),
                    };
                    let stabilizer = match (l.mode, l.acting) {
                        (LinksMode::EquivariantUpper, Some(g)) => Some(lattice.normalizer_in(g, y)),
                        (LinksMode::EquivariantUpper, None) => {
                            return fail("equivariant links need an acting group")
                        }
                        _ => None,
                    };
                    cert.verify_contracting(lattice, limits, &link, stabilizer)
                        .map_err(|e| CertificateError(format!("link at {y}: {e}")))?;
                }
                Ok(())
            }
        }
    }
}
