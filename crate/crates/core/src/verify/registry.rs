//! One entry per result: identifier, hypothesis, default universe and check.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{run, Instance, InstanceUniverse, Verdict, VerificationReport, VerifyError};
use crate::criticality::{complete_to_critical_traced, gamma_t_profile, is_gamma_t_edge_critical};
use crate::exec::Exec;
use crate::families::{
    complement_is_galaxy, dead_example_w, endpaths, hen1_classify, is_k2_plus_complete,
    is_matching_union, is_union_of_large_cliques, pendant_with_open_support,
    predict_n_critical, spider_gamma_formula, spider_is_critical, spider_legs,
    spider_leg_multisets, FamilySpec, Hen1Class,
};
use crate::graph::{above, members, Diameter, Graph};
use crate::solver::{Mode, Solver, ENUMERATION_MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Bounds,
    CritEdgeValues,
    Tr3,
    Hen1,
    NCrit,
    FourCrit,
    N3Reg,
    Myn2Analogue,
    Hen2,
    Hen3,
    TrGtT1,
    T2Iff,
    FiveCrit,
    EndDeg3,
    Stems,
    LongLegs,
    SpiderFormula,
    SpiderCrit,
    Span,
    KnKm,
    Diam2,
    Dn,
    DnEdges,
    Myn1,
    RdDeadPair,
}

impl TheoremId {
    pub const ALL: [TheoremId; 25] = [
        TheoremId::Bounds,
        TheoremId::CritEdgeValues,
        TheoremId::Tr3,
        TheoremId::Hen1,
        TheoremId::NCrit,
        TheoremId::FourCrit,
        TheoremId::N3Reg,
        TheoremId::Myn2Analogue,
        TheoremId::Hen2,
        TheoremId::Hen3,
        TheoremId::TrGtT1,
        TheoremId::T2Iff,
        TheoremId::FiveCrit,
        TheoremId::EndDeg3,
        TheoremId::Stems,
        TheoremId::LongLegs,
        TheoremId::SpiderFormula,
        TheoremId::SpiderCrit,
        TheoremId::Span,
        TheoremId::KnKm,
        TheoremId::Diam2,
        TheoremId::Dn,
        TheoremId::DnEdges,
        TheoremId::Myn1,
        TheoremId::RdDeadPair,
    ];

    pub fn as_str(self) -> &'static str {
        use TheoremId::*;
        match self {
            Bounds => "T_BOUNDS",
            CritEdgeValues => "T_CRITEDGE_VALUES",
            Tr3 => "T_TR3",
            Hen1 => "T_HEN1",
            NCrit => "T_NCRIT",
            FourCrit => "T_4CRIT",
            N3Reg => "T_N3REG",
            Myn2Analogue => "T_MYN2_ANALOGUE",
            Hen2 => "T_HEN2",
            Hen3 => "T_HEN3",
            TrGtT1 => "T_TR_GT_T1",
            T2Iff => "T_T2IFF",
            FiveCrit => "T_5CRIT",
            EndDeg3 => "T_ENDDEG3",
            Stems => "T_STEMS",
            LongLegs => "T_LONGLEGS",
            SpiderFormula => "T_SPIDER_FORMULA",
            SpiderCrit => "T_SPIDER_CRIT",
            Span => "T_SPAN",
            KnKm => "T_KNKM",
            Diam2 => "T_DIAM2",
            Dn => "T_DN",
            DnEdges => "T_DN_EDGES",
            Myn1 => "T_MYN1",
            RdDeadPair => "T_RD_DEADPAIR",
        }
    }

    /// One-line statement of what the check asserts.
    pub fn statement(self) -> &'static str {
        use TheoremId::*;
        match self {
            Bounds => "γ_tR(G) - 2 <= γ_tR(G+uv) <= γ_tR(G) for every non-edge uv",
            CritEdgeValues => {
                "for a critical uv, every γ_tR(G+uv)-function has {f(u),f(v)} in \
                 {{2,2},{2,1},{2,0},{1,1}}; if both are leaves, some such f has f(u)=f(v)=1"
            }
            Tr3 => "γ_tR = 3 iff G has a universal vertex (n >= 3)",
            Hen1 => "connected G: γ_tR = n iff G is a path, cycle, corona, subdivided star, or in G ∪ H",
            NCrit => {
                "connected G, n >= 4, is n-edge-critical iff it is C_n, cor(K_r) with r >= 3, \
                 a subdivided star of order >= 7, in family G, or in family H with r not in {0,2}"
            }
            FourCrit => "G is 4-γ_tR-edge-critical iff its complement is a galaxy",
            N3Reg => "(n-3)-regular G with n >= 6 has γ_tR = 4 and is stable",
            Myn2Analogue => {
                "no graph is 5-supercritical; k >= 2 disjoint cliques of order >= 3 are 3k-supercritical"
            }
            Hen2 => "γ_t <= γ_tR <= 2γ_t, with γ_tR = γ_t iff G is a union of K_2s",
            Hen3 => "connected G, n >= 3: γ_tR = γ_t + 1 iff G has a universal vertex",
            TrGtT1 => "connected G, n >= 3, Δ <= n-2: γ_t + 2 <= γ_tR <= 2γ_t",
            T2Iff => {
                "connected G, n >= 3: γ_tR in {3,4} iff γ_t = 2; γ = 1 when γ_tR = 3, γ = 2 when γ_tR = 4"
            }
            FiveCrit => {
                "5-γ_tR-edge-critical G is 3-γ_t-edge-critical or K_2 ∪ K_m (m >= 3), \
                 the latter 4-γ_t-supercritical"
            }
            EndDeg3 => {
                "a leaf w with support x and non-adjacent u, v in N(x)-w gives γ_tR(G+uv) = γ_tR(G)"
            }
            Stems => "an edge-critical tree has no stem of degree >= 3",
            LongLegs => "two endpaths of length >= 3 ending at leaves a, b give γ_tR(G+ab) = γ_tR(G)",
            SpiderFormula => "γ_tR of a spider with k >= 3 legs follows the leg-count formula",
            SpiderCrit => {
                "a spider is edge-critical iff all legs but one have length 2 and the last has \
                 length 2, 4 or >= 6"
            }
            Span => "γ_tR = k >= 4 implies G spans a k-γ_tR-edge-critical graph",
            KnKm => "γ_tR(K_n □ K_m) = 2n for 2 <= n <= m",
            Diam2 => {
                "γ_tR(G_l^d) = 2l+1, and completing G_l^d or K_l □ K_l gives an edge-critical \
                 graph of diameter 2 with the same value"
            }
            Dn => "γ_tR(D_n) = 2n+1 and the dead vertices are exactly w_1..w_n",
            DnEdges => {
                "n >= 3: every non-edge at some w_i is critical in D_n while u_1u_2 is not; \
                 D_2 + w_1w_2 keeps the value"
            }
            Myn1 => "γ_t(G) - 2 <= γ_t(G+uv) <= γ_t(G) for every non-edge uv",
            RdDeadPair => "non-adjacent Roman-dead u, v give γ_R(G+uv) = γ_R(G)",
        }
    }

    /// Checks that identify their instances through the family descriptor.
    fn needs_families(self) -> bool {
        matches!(self, TheoremId::KnKm | TheoremId::Diam2 | TheoremId::Dn | TheoremId::DnEdges)
    }

    /// The universe the regression suite runs this check on.
    pub fn default_universe(self) -> InstanceUniverse {
        use TheoremId::*;
        let labeled6 = InstanceUniverse::all_labeled(6, false, true);
        match self {
            Bounds | CritEdgeValues | Myn1 => random_mix(),
            Tr3 | FourCrit | Hen2 | EndDeg3 | Span | RdDeadPair | FiveCrit => labeled6,
            Hen3 | TrGtT1 | T2Iff => InstanceUniverse::all_labeled(6, true, true),
            Hen1 | NCrit => InstanceUniverse::Union(vec![
                InstanceUniverse::all_labeled(7, true, true),
                n_critical_corpus(),
            ]),
            N3Reg => InstanceUniverse::AllLabeled {
                min_n: 6,
                max_n: 7,
                connected_only: false,
                no_isolated: true,
            },
            Myn2Analogue => InstanceUniverse::Union(vec![
                labeled6,
                families(&["union(K3,K3)", "union(K3,K4)", "union(K4,K4)", "union(K3,K3,K3)"]),
            ]),
            Stems => InstanceUniverse::Union(vec![
                InstanceUniverse::all_labeled(7, true, true),
                spider_corpus(),
            ]),
            LongLegs => InstanceUniverse::Union(vec![
                spider_corpus(),
                families(&["dstar(2,2)", "familyH(2,2,r=3)", "cor(P4)"]),
            ]),
            SpiderFormula | SpiderCrit => spider_corpus(),
            KnKm => InstanceUniverse::Families(
                (2..=4)
                    .flat_map(|n| (n..=4).map(move |m| FamilySpec::CartesianComplete(n, m)))
                    .collect(),
            ),
            Diam2 => families(&["Gd(2)", "Gd(3)", "KxK(2,2)", "KxK(3,3)"]),
            Dn | DnEdges => families(&["D(2)", "D(3)", "D(4)"]),
        }
    }
}

fn families(specs: &[&str]) -> InstanceUniverse {
    InstanceUniverse::families(specs).expect("built-in family specs parse")
}

/// 100 samples of `G(n, 1/2)` without isolated vertices for each `4 <= n <= 8`.
pub(crate) fn random_mix() -> InstanceUniverse {
    InstanceUniverse::Union(
        (4..=8)
            .map(|n| InstanceUniverse::RandomGnp {
                count: 100,
                n,
                p: 0.5,
                seed: n as u64,
                no_isolated: true,
            })
            .collect(),
    )
}

/// Cycles, coronas of cliques, subdivided stars and members of G and H.
pub(crate) fn n_critical_corpus() -> InstanceUniverse {
    let mut specs: Vec<FamilySpec> = (4..=9).map(FamilySpec::Cycle).collect();
    specs.extend((2..=5).map(|r| FamilySpec::corona(FamilySpec::Complete(r))));
    specs.extend((2..=4).map(FamilySpec::SubdividedStar));
    for k1 in 0..=3 {
        for k2 in 0..=3 - k1 {
            if k1 + k2 >= 1 {
                specs.push(FamilySpec::FamilyG(k1, k2));
            }
        }
    }
    for a in 1..=2 {
        for b in 1..=2 {
            specs.extend((0..=5).map(|r| FamilySpec::FamilyH { a, b, r }));
        }
    }
    InstanceUniverse::Families(specs)
}

/// Spiders with 3 or 4 legs of length at most 4, plus `Sp(2,2,m)` for `m <= 8`.
pub(crate) fn spider_corpus() -> InstanceUniverse {
    let mut legs: Vec<Vec<usize>> = (3..=4).flat_map(|k| spider_leg_multisets(k, 4)).collect();
    legs.extend((5..=8).map(|m| vec![2, 2, m]));
    InstanceUniverse::Families(legs.into_iter().map(FamilySpec::spider).collect())
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_uppercase();
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == key)
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Shared helpers over one solver.
pub(crate) struct Ctx<'a> {
    pub(crate) solver: &'a Solver,
}

type Res<T> = Result<T, VerifyError>;

impl Ctx<'_> {
    pub(crate) fn tr(&self, g: &Graph) -> Res<usize> {
        self.solver.gamma_tr_value(g).map_err(|e| VerifyError::solve(g, e))
    }

    fn t(&self, g: &Graph) -> Res<usize> {
        self.solver.gamma_t(g).map(|r| r.value).map_err(|e| VerifyError::solve(g, e))
    }

    fn dom(&self, g: &Graph) -> Res<usize> {
        self.solver.gamma(g).map(|r| r.value).map_err(|e| VerifyError::solve(g, e))
    }

    fn roman(&self, g: &Graph) -> Res<usize> {
        self.solver.gamma_r_value(g).map_err(|e| VerifyError::solve(g, e))
    }

    pub(crate) fn tr_plus(&self, g: &Graph, u: usize, v: usize) -> Res<usize> {
        self.tr(&g.add_edge(u, v).expect("caller passes a non-edge"))
    }

    /// First non-edge whose addition leaves γ_tR at `base`.
    pub(crate) fn first_stable(&self, g: &Graph, base: usize) -> Res<Option<(usize, usize)>> {
        for (u, v) in g.non_edges() {
            if self.tr_plus(g, u, v)? == base {
                return Ok(Some((u, v)));
            }
        }
        Ok(None)
    }

    /// γ_tR-edge-critical: at least one non-edge, and every one is critical.
    pub(crate) fn edge_critical(&self, g: &Graph, base: usize) -> Res<bool> {
        Ok(!g.is_complete() && self.first_stable(g, base)?.is_none())
    }

    /// Every non-edge drops γ_tR by exactly 2; `Err`-free `Some(pair)` names
    /// the first non-edge that does not.
    pub(crate) fn first_not_super(&self, g: &Graph, base: usize) -> Res<Option<(usize, usize)>> {
        for (u, v) in g.non_edges() {
            if self.tr_plus(g, u, v)? + 2 != base {
                return Ok(Some((u, v)));
            }
        }
        Ok(None)
    }

    pub(crate) fn supercritical(&self, g: &Graph, base: usize) -> Res<bool> {
        Ok(!g.is_complete() && self.first_not_super(g, base)?.is_none())
    }

    pub(crate) fn dead(&self, g: &Graph, mode: Mode) -> Res<u64> {
        self.solver.dead_vertices(g, mode).map_err(|e| VerifyError::solve(g, e))
    }
}

fn no_isolated(g: &Graph) -> bool {
    g.order() >= 2 && !g.has_isolated_vertex()
}

fn connected_from(g: &Graph, n: usize) -> bool {
    g.order() >= n && g.is_connected()
}

fn ok() -> Res<Verdict> {
    Ok(Some(None))
}

fn skip() -> Res<Verdict> {
    Ok(None)
}

fn fail(detail: String) -> Res<Verdict> {
    Ok(Some(Some(detail)))
}

fn fail_if(bad: bool, detail: impl FnOnce() -> String) -> Res<Verdict> {
    if bad {
        fail(detail())
    } else {
        ok()
    }
}

pub(super) fn verify(
    solver: &Solver,
    exec: Exec,
    id: TheoremId,
    universe: &InstanceUniverse,
) -> Result<VerificationReport, VerifyError> {
    if id.needs_families() && !universe.is_family_only() {
        return Err(VerifyError::IncompatibleUniverse {
            theorem: id.to_string(),
            reason: "instances must come from family descriptors".into(),
        });
    }
    let ctx = Ctx { solver };
    run(id.as_str(), universe, exec, |inst| check(&ctx, id, inst))
}

fn check(ctx: &Ctx, id: TheoremId, inst: &Instance) -> Res<Verdict> {
    use TheoremId::*;
    let g = &inst.graph;
    let n = g.order();
    match id {
        Bounds => {
            if !no_isolated(g) {
                return skip();
            }
            let base = ctx.tr(g)?;
            for (u, v) in g.non_edges() {
                let plus = ctx.tr_plus(g, u, v)?;
                if plus > base || plus + 2 < base {
                    return fail(format!("γ_tR = {base} but γ_tR(G+{u}{v}) = {plus}"));
                }
            }
            ok()
        }
        Myn1 => {
            if !no_isolated(g) {
                return skip();
            }
            let base = ctx.t(g)?;
            for (u, v) in g.non_edges() {
                let plus = ctx.t(&g.add_edge(u, v).expect("non-edge"))?;
                if plus > base || plus + 2 < base {
                    return fail(format!("γ_t = {base} but γ_t(G+{u}{v}) = {plus}"));
                }
            }
            ok()
        }
        CritEdgeValues => {
            if !no_isolated(g) || n > ENUMERATION_MAX_ORDER {
                return skip();
            }
            crit_edge_values(ctx, g)
        }
        Tr3 => {
            if !no_isolated(g) || n < 3 {
                return skip();
            }
            let tr = ctx.tr(g)?;
            let universal = g.universal_vertex();
            fail_if((tr == 3) != universal.is_some(), || {
                format!("γ_tR = {tr}, universal vertex {universal:?}")
            })
        }
        Hen1 => {
            if !connected_from(g, 2) {
                return skip();
            }
            let class = hen1_classify(g)?;
            let tr = ctx.tr(g)?;
            fail_if((class != Hen1Class::None) != (tr == n), || {
                format!("class {class}, γ_tR = {tr}, n = {n}")
            })
        }
        NCrit => {
            if !connected_from(g, 4) {
                return skip();
            }
            let predicted = predict_n_critical(g)?;
            let tr = ctx.tr(g)?;
            let measured = tr == n && ctx.edge_critical(g, tr)?;
            fail_if(predicted != measured, || {
                format!(
                    "predicted {predicted}, measured {measured} (class {}, γ_tR = {tr})",
                    hen1_classify(g).map(|c| c.to_string()).unwrap_or_default()
                )
            })
        }
        FourCrit => {
            if !no_isolated(g) {
                return skip();
            }
            let tr = ctx.tr(g)?;
            let critical = tr == 4 && ctx.edge_critical(g, tr)?;
            let galaxy = complement_is_galaxy(g);
            fail_if(critical != galaxy, || {
                format!("γ_tR = {tr}, 4-edge-critical {critical}, complement galaxy {galaxy}")
            })
        }
        N3Reg => {
            if n < 6 || (0..n).any(|v| g.degree(v) + 3 != n) {
                return skip();
            }
            let tr = ctx.tr(g)?;
            if tr != 4 {
                return fail(format!("γ_tR = {tr}, expected 4"));
            }
            match g.non_edges().into_iter().find_map(|(u, v)| match ctx.tr_plus(g, u, v) {
                Ok(x) if x == tr => None,
                other => Some(other.map(|x| (u, v, x))),
            }) {
                None => ok(),
                Some(r) => {
                    let (u, v, x) = r?;
                    fail(format!("not stable: γ_tR(G+{u}{v}) = {x}"))
                }
            }
        }
        Myn2Analogue => {
            if !no_isolated(g) {
                return skip();
            }
            let tr = ctx.tr(g)?;
            if is_union_of_large_cliques(g) {
                let k = g.components().len();
                if tr != 3 * k || !ctx.supercritical(g, tr)? {
                    return fail(format!("{k} cliques: γ_tR = {tr}, expected {} and supercritical", 3 * k));
                }
            }
            fail_if(tr == 5 && ctx.supercritical(g, tr)?, || "5-supercritical".to_string())
        }
        Hen2 => {
            if !no_isolated(g) {
                return skip();
            }
            let (tr, t) = (ctx.tr(g)?, ctx.t(g)?);
            let matching = is_matching_union(g);
            fail_if(tr < t || tr > 2 * t || (tr == t) != matching, || {
                format!("γ_t = {t}, γ_tR = {tr}, union of K_2 {matching}")
            })
        }
        Hen3 => {
            if !connected_from(g, 3) {
                return skip();
            }
            let (tr, t) = (ctx.tr(g)?, ctx.t(g)?);
            let universal = g.universal_vertex().is_some();
            fail_if((tr == t + 1) != universal, || {
                format!("γ_t = {t}, γ_tR = {tr}, universal vertex {universal}")
            })
        }
        TrGtT1 => {
            if !connected_from(g, 3) || g.universal_vertex().is_some() {
                return skip();
            }
            let (tr, t) = (ctx.tr(g)?, ctx.t(g)?);
            fail_if(tr < t + 2 || tr > 2 * t, || format!("γ_t = {t}, γ_tR = {tr}"))
        }
        T2Iff => {
            if !connected_from(g, 3) {
                return skip();
            }
            let (tr, t, d) = (ctx.tr(g)?, ctx.t(g)?, ctx.dom(g)?);
            let bad = (matches!(tr, 3 | 4) != (t == 2))
                || (tr == 3 && d != 1)
                || (tr == 4 && d != 2);
            fail_if(bad, || format!("γ = {d}, γ_t = {t}, γ_tR = {tr}"))
        }
        FiveCrit => {
            if !no_isolated(g) {
                return skip();
            }
            let tr = ctx.tr(g)?;
            if tr != 5 || !ctx.edge_critical(g, tr)? {
                return ok();
            }
            let t_critical = is_gamma_t_edge_critical(ctx.solver, g, 3)
                .map_err(|e| VerifyError::solve(g, e))?;
            if t_critical {
                return ok();
            }
            if is_k2_plus_complete(g) {
                let profile = gamma_t_profile(ctx.solver, Exec::Sequential, g)
                    .map_err(|e| VerifyError::criticality(g, e))?;
                let super4 = profile.base_value == 4
                    && profile.classification == crate::criticality::Classification::Supercritical;
                return fail_if(!super4, || {
                    format!(
                        "K_2 ∪ K_m with γ_t = {} and γ_t class {}",
                        profile.base_value, profile.classification
                    )
                });
            }
            fail("5-edge-critical but neither 3-γ_t-edge-critical nor K_2 ∪ K_m".into())
        }
        EndDeg3 => {
            if !no_isolated(g) {
                return skip();
            }
            let Some((w, x, u, v)) = pendant_with_open_support(g) else {
                return skip();
            };
            let (base, plus) = (ctx.tr(g)?, ctx.tr_plus(g, u, v)?);
            fail_if(plus != base, || {
                format!("leaf {w}, support {x}: γ_tR = {base}, γ_tR(G+{u}{v}) = {plus}")
            })
        }
        Stems => {
            if n < 2 || !g.is_tree() {
                return skip();
            }
            let stem = (0..n).find(|&x| {
                g.degree(x) >= 3 && members(g.neighbors(x)).any(|y| g.degree(y) == 1)
            });
            let Some(x) = stem else {
                return ok();
            };
            let tr = ctx.tr(g)?;
            fail_if(ctx.edge_critical(g, tr)?, || {
                format!("edge-critical tree with stem {x} of degree {}", g.degree(x))
            })
        }
        LongLegs => {
            if !no_isolated(g) {
                return skip();
            }
            let long: Vec<_> = endpaths(g).into_iter().filter(|e| e.len >= 3).collect();
            let [a, b, ..] = long.as_slice() else {
                return skip();
            };
            let (base, plus) = (ctx.tr(g)?, ctx.tr_plus(g, a.leaf, b.leaf)?);
            fail_if(plus != base, || {
                format!("leaves {} and {}: γ_tR = {base}, γ_tR(G+ab) = {plus}", a.leaf, b.leaf)
            })
        }
        SpiderFormula | SpiderCrit => {
            let Some(legs) = spider_legs(g) else {
                return skip();
            };
            let tr = ctx.tr(g)?;
            if id == SpiderFormula {
                let formula = spider_gamma_formula(&legs)?;
                return fail_if(formula != tr, || {
                    format!("legs {legs:?}: formula {formula}, solver {tr}")
                });
            }
            let predicted = spider_is_critical(&legs)?;
            let stable = ctx.first_stable(g, tr)?;
            fail_if(predicted != stable.is_none(), || {
                format!("legs {legs:?}: predicted {predicted}, first stable non-edge {stable:?}")
            })
        }
        Span => {
            if !no_isolated(g) {
                return skip();
            }
            let k = ctx.tr(g)?;
            if k < 4 {
                return ok();
            }
            completion_check(ctx, g, k, false)
        }
        KnKm => match inst.family {
            Some(FamilySpec::CartesianComplete(a, b)) if a.min(b) >= 2 => {
                let tr = ctx.tr(g)?;
                let want = 2 * a.min(b);
                fail_if(tr != want, || format!("γ_tR = {tr}, expected {want}"))
            }
            _ => skip(),
        },
        Diam2 => match inst.family {
            Some(FamilySpec::ProductDeleted(l)) if l >= 2 => {
                let tr = ctx.tr(g)?;
                if tr != 2 * l + 1 {
                    return fail(format!("γ_tR = {tr}, expected {}", 2 * l + 1));
                }
                completion_check(ctx, g, tr, true)
            }
            Some(FamilySpec::CartesianComplete(a, b)) if a == b && a >= 2 => {
                let tr = ctx.tr(g)?;
                if tr != 2 * a {
                    return fail(format!("γ_tR = {tr}, expected {}", 2 * a));
                }
                completion_check(ctx, g, tr, true)
            }
            _ => skip(),
        },
        Dn => match inst.family {
            Some(FamilySpec::DeadExample(k)) if k >= 2 => {
                let tr = ctx.tr(g)?;
                let dead = ctx.dead(g, Mode::TotalRoman)?;
                let w = dead_example_w(k).into_iter().fold(0u64, |acc, v| acc | 1 << v);
                fail_if(tr != 2 * k + 1 || dead != w, || {
                    format!(
                        "γ_tR = {tr} (expected {}), dead set {:?}, expected {:?}",
                        2 * k + 1,
                        members(dead).collect::<Vec<_>>(),
                        dead_example_w(k)
                    )
                })
            }
            _ => skip(),
        },
        DnEdges => match inst.family {
            Some(FamilySpec::DeadExample(k)) if k >= 2 => dn_edges(ctx, g, k),
            _ => skip(),
        },
        RdDeadPair => {
            if n > ENUMERATION_MAX_ORDER {
                return skip();
            }
            let dead = ctx.dead(g, Mode::Roman)?;
            let base = ctx.roman(g)?;
            for u in members(dead) {
                for v in members(dead & !g.closed_neighbors(u) & above(u)) {
                    let plus = ctx.roman(&g.add_edge(u, v).expect("non-adjacent"))?;
                    if plus != base {
                        return fail(format!(
                            "Roman-dead {u}, {v}: γ_R = {base}, γ_R(G+{u}{v}) = {plus}"
                        ));
                    }
                }
            }
            ok()
        }
    }
}

fn crit_edge_values(ctx: &Ctx, g: &Graph) -> Res<Verdict> {
    let base = ctx.tr(g)?;
    for (u, v) in g.non_edges() {
        let h = g.add_edge(u, v).expect("non-edge");
        let fs = ctx.solver.enumerate_min_trd(&h).map_err(|e| VerifyError::solve(&h, e))?;
        let value = fs.first().map(|f| f.weight()).expect("minimum functions exist");
        if value >= base {
            continue;
        }
        for f in &fs {
            let pair = (f.get(u).min(f.get(v)), f.get(u).max(f.get(v)));
            if !matches!(pair, (2, 2) | (1, 2) | (0, 2) | (1, 1)) {
                return fail(format!("critical {u}{v}: γ_tR(G+uv)-function {f:?} has {pair:?}"));
            }
        }
        if g.degree(u) == 1
            && g.degree(v) == 1
            && !fs.iter().any(|f| f.get(u) == 1 && f.get(v) == 1)
        {
            return fail(format!("critical leaf pair {u}{v}: no γ_tR(G+uv)-function with 1, 1"));
        }
    }
    ok()
}

/// Completion keeps γ_tR at `k` and ends edge-critical (and, if asked, of diameter 2).
fn completion_check(ctx: &Ctx, g: &Graph, k: usize, want_diameter_two: bool) -> Res<Verdict> {
    let (h, added) = complete_to_critical_traced(ctx.solver, g)
        .map_err(|e| VerifyError::criticality(g, e))?;
    let after = ctx.tr(&h)?;
    if after != k {
        return fail(format!("completion changed γ_tR from {k} to {after}"));
    }
    if let Some((u, v)) = ctx.first_stable(&h, k)? {
        return fail(format!(
            "completion (added {added:?}) is not edge-critical: {u}{v} keeps γ_tR = {k}"
        ));
    }
    if h.is_complete() {
        return fail("completion is complete".into());
    }
    let diameter = h.diameter();
    fail_if(want_diameter_two && diameter != Diameter::Finite(2), || {
        format!("completion has diameter {diameter:?}")
    })
}

fn dn_edges(ctx: &Ctx, g: &Graph, k: usize) -> Res<Verdict> {
    let base = ctx.tr(g)?;
    let w = dead_example_w(k);
    // u_i = w_i - 2
    let (u1, u2) = (w[0] - 2, w[1] - 2);
    if k == 2 {
        let plus = ctx.tr_plus(g, w[0], w[1])?;
        return fail_if(plus != base, || format!("γ_tR(D_2 + w_1w_2) = {plus}, base {base}"));
    }
    for &wi in &w {
        for v in members(g.all_vertices() & !g.closed_neighbors(wi)) {
            let plus = ctx.tr_plus(g, wi, v)?;
            if plus >= base {
                return fail(format!("non-edge {wi}{v} at a w vertex keeps γ_tR = {plus}"));
            }
        }
    }
    let plus = ctx.tr_plus(g, u1, u2)?;
    fail_if(plus != base, || format!("γ_tR(D_n + u_1u_2) = {plus}, base {base}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
            assert!(!id.statement().is_empty());
        }
        assert_eq!("t_4crit".parse::<TheoremId>().unwrap(), TheoremId::FourCrit);
        assert_eq!(
            "T_NOPE".parse::<TheoremId>(),
            Err(VerifyError::UnknownTheorem("T_NOPE".into()))
        );
    }

    #[test]
    fn family_checks_reject_labeled_universes() {
        let err = verify(
            &Solver::default(),
            Exec::Sequential,
            TheoremId::KnKm,
            &InstanceUniverse::all_labeled(4, false, true),
        )
        .unwrap_err();
        assert!(matches!(err, VerifyError::IncompatibleUniverse { .. }));
    }

    #[test]
    fn small_registry_sweeps_pass() {
        let u = InstanceUniverse::all_labeled(5, false, true);
        for id in [
            TheoremId::Bounds,
            TheoremId::Tr3,
            TheoremId::FourCrit,
            TheoremId::Hen2,
            TheoremId::Hen3,
            TheoremId::T2Iff,
            TheoremId::EndDeg3,
            TheoremId::RdDeadPair,
        ] {
            let r = verify(&Solver::default(), Exec::default(), id, &u).unwrap();
            assert!(r.passed(), "{id}: {:?}", r.counterexamples);
            assert!(r.instances_checked > 0, "{id}");
        }
    }

    #[test]
    fn knkm_reports_six_instances() {
        let r = verify(
            &Solver::default(),
            Exec::default(),
            TheoremId::KnKm,
            &TheoremId::KnKm.default_universe(),
        )
        .unwrap();
        assert!(r.passed());
        assert_eq!(r.instances_checked, 6);
    }

    #[test]
    fn broken_claim_is_caught() {
        // sanity: the runner reports violations, capped and in stream order
        let u = InstanceUniverse::all_labeled(5, false, true);
        let r = run("demo", &u, Exec::default(), |inst| {
            fail_if(inst.graph.order() == 5, || "order five".into())
        })
        .unwrap();
        assert!(!r.passed());
        assert_eq!(r.counterexamples.len(), super::super::MAX_COUNTEREXAMPLES);
        assert!(r.counterexamples.iter().all(|c| c.graph6.starts_with('D')));
    }
}
