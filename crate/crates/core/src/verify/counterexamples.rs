//! The dihedral group of order 8 at p = 2: the small example on which the
//! non-equivariant edges visibly fail to be equivariant.

use super::context::Context;
use super::report::CounterexampleCheck;
use crate::collections::{BaseKind, CollectionKind, Condition};
use crate::group::SubgroupId;
use crate::topology::{contractibility, Avatar, SimplicialComplex, SubgroupPoset, VerdictStatus};

/// Distinguished subgroups of D8.
#[derive(Clone, Copy, Debug)]
pub struct D8Shape {
    /// The two Klein four-subgroups.
    pub klein: [SubgroupId; 2],
    /// The cyclic subgroup of order 4.
    pub cyclic: SubgroupId,
}

/// Recognizes D8 at p = 2: order 8, nonabelian, five involutions.
pub fn d8_shape(ctx: &Context<'_>) -> Option<D8Shape> {
    let l = ctx.lattice;
    let g = l.group();
    if ctx.prime() != 2 || g.order() != 8 || g.is_abelian() {
        return None;
    }
    let involutions = (0..g.order()).filter(|&x| g.element_order(x) == 2).count();
    if involutions != 5 {
        return None;
    }
    let fours: Vec<SubgroupId> = l.of_order(4).collect();
    let klein: Vec<SubgroupId> = fours.iter().copied().filter(|&h| l.is_elementary_abelian(h, 2)).collect();
    let cyclic: Vec<SubgroupId> = fours.iter().copied().filter(|&h| !l.is_elementary_abelian(h, 2)).collect();
    match (klein.as_slice(), cyclic.as_slice()) {
        (&[a, b], &[c]) => Some(D8Shape { klein: [a, b], cyclic: c }),
        _ => None,
    }
}

struct Checks<'c, 'a> {
    ctx: &'c Context<'a>,
    out: Vec<CounterexampleCheck>,
}

impl Checks<'_, '_> {
    fn push(&mut self, id: String, statement: &str, expected: &str, observed: String) {
        let reproduced = expected == observed;
        self.out.push(CounterexampleCheck {
            id,
            statement: statement.to_string(),
            expected: expected.to_string(),
            observed,
            reproduced,
        });
    }

    fn contractible(&self, p: &SubgroupPoset) -> bool {
        contractibility(self.ctx.lattice, p, None, &self.ctx.limits).status == VerdictStatus::Contractible
    }

    fn shape(&self, p: &SubgroupPoset) -> String {
        if p.is_empty() {
            return "empty".into();
        }
        match SimplicialComplex::of_poset(self.ctx.lattice, p, self.ctx.limits.max_simplices) {
            Ok(c) => format!(
                "{} vertices, {} edges, contractible={}",
                c.simplices(0).len(),
                c.simplices(1).len(),
                self.contractible(p)
            ),
            Err(e) => e.to_string(),
        }
    }
}

const T_S: CollectionKind = CollectionKind::Tilde(BaseKind::S);
const T_A: CollectionKind = CollectionKind::Tilde(BaseKind::A);
const T_B: CollectionKind = CollectionKind::Tilde(BaseKind::B);
const H_A: CollectionKind = CollectionKind::Hat(BaseKind::A);
const H_B: CollectionKind = CollectionKind::Hat(BaseKind::B);

pub fn run(ctx: &Context<'_>) -> Vec<CounterexampleCheck> {
    let Some(shape) = d8_shape(ctx) else {
        return Vec::new();
    };
    let l = ctx.lattice;
    let mut c = Checks { ctx, out: Vec::new() };
    let benson = ctx.poset(CollectionKind::Benson);

    c.push("benson-size".into(), "E has exactly one member", "1", benson.len().to_string());
    let ta = ctx.poset(T_A);
    let nerve = SimplicialComplex::of_poset(l, ta, ctx.limits.max_simplices);
    let observed = match &nerve {
        Ok(n) => {
            let edges = n.simplices(1);
            let shared = edges.len() == 2 && edges[0].iter().any(|v| edges[1].contains(v));
            format!(
                "{} vertices, {} edges, sharing a vertex={}, dimension={}",
                n.simplices(0).len(),
                edges.len(),
                shared,
                n.dimension()
            )
        }
        Err(e) => e.to_string(),
    };
    c.push(
        "tilde-a-nerve".into(),
        "the nerve of tilde-A is two edges sharing a vertex",
        "3 vertices, 2 edges, sharing a vertex=true, dimension=1",
        observed,
    );

    for (i, &v) in shape.klein.iter().enumerate() {
        let tag = |s: &str| format!("klein-{}-{s}", i + 1);
        let cg = l.centralizer(v);
        c.push(tag("benson-above"), "E_{>=V} is empty", "empty", c.shape(&Avatar::Above.of(l, benson, v)));
        c.push(
            tag("tilde-a-above"),
            "tilde-A_{>=V} is one point",
            "1 vertices, 0 edges, contractible=true",
            c.shape(&Avatar::Above.of(l, ta, v)),
        );
        c.push(tag("centralizer"), "C_G(V) = V", "true", (cg == v).to_string());
        c.push(
            tag("tilde-s-centralizer"),
            "tilde-S_{<=C_G(V)} is one edge",
            "2 vertices, 1 edges, contractible=true",
            c.shape(&Avatar::Centralizer.of(l, ctx.poset(T_S), v)),
        );
        c.push(
            tag("tilde-b-centralizer"),
            "tilde-B_{<=C_G(V)} is empty",
            "empty",
            c.shape(&Avatar::Centralizer.of(l, ctx.poset(T_B), v)),
        );
    }

    let z = shape.cyclic;
    c.push("cyclic-tilde-a-above".into(), "tilde-A_{>=Z4} is empty", "empty", c.shape(&Avatar::Above.of(l, ta, z)));
    let ts_above = Avatar::Above.of(l, ctx.poset(T_S), z);
    let has_edge = ts_above
        .members()
        .iter()
        .any(|&a| ts_above.members().iter().any(|&b| l.is_proper_subgroup_of(a, b)));
    c.push(
        "cyclic-tilde-s-above".into(),
        "tilde-S_{>=Z4} has an edge and is contractible",
        "edge=true, contractible=true",
        format!("edge={}, contractible={}", has_edge, c.contractible(&ts_above)),
    );

    for cond in Condition::ALL {
        c.push(format!("condition-{cond}"), "the condition holds", "true", ctx.holds(cond).to_string());
    }
    for b in [BaseKind::A, BaseKind::S, BaseKind::B] {
        let same = ctx.poset(CollectionKind::Tilde(b)) == ctx.poset(CollectionKind::Hat(b));
        c.push(format!("tilde-equals-hat-{b}"), "tilde and hat collections coincide", "true", same.to_string());
    }

    c.push("cyclic-hat-a-above".into(), "hat-A_{>=Z4} is empty", "empty", c.shape(&Avatar::Above.of(l, ctx.poset(H_A), z)));
    let ha_fixed = Avatar::Fixed.of(l, ctx.poset(H_A), z);
    c.push(
        "cyclic-hat-a-fixed".into(),
        "hat-A^{Z4} is contractible",
        "true",
        c.contractible(&ha_fixed).to_string(),
    );
    c.push(
        "cyclic-hat-b-centralizer".into(),
        "hat-B_{<=C_G(Z4)} is empty",
        "empty",
        c.shape(&Avatar::Centralizer.of(l, ctx.poset(H_B), z)),
    );
    let hb_fixed = Avatar::Fixed.of(l, ctx.poset(H_B), z);
    c.push(
        "cyclic-hat-b-fixed".into(),
        "hat-B^{Z4} is the single point G, contractible",
        "members=[G], contractible=true",
        format!(
            "members={}, contractible={}",
            if hb_fixed.members() == [l.whole()] { "[G]".to_string() } else { format!("{:?}", hb_fixed.members()) },
            c.contractible(&hb_fixed)
        ),
    );
    c.out
}
