//! Effect of single-edge additions on γ_tR (and γ_t).

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exec::Exec;
use crate::graph::Graph;
use crate::solver::{SolveError, Solver};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalityError {
    #[error("{0}-{1} is not a non-edge of the graph")]
    NotANonEdge(usize, usize),
    #[error("γ_tR = {0}; completion to an edge-critical graph needs γ_tR ≥ 4")]
    ValueTooSmall(usize),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    EdgeCritical,
    Supercritical,
    Stable,
    Mixed,
    /// No non-edges at all.
    Complete,
}

impl Classification {
    /// Supercritical graphs are edge-critical as well.
    pub fn is_edge_critical(self) -> bool {
        matches!(self, Classification::EdgeCritical | Classification::Supercritical)
    }

    pub fn from_deltas<I: IntoIterator<Item = usize>>(deltas: I) -> Self {
        let (mut any, mut all_two, mut all_pos, mut all_zero) = (false, true, true, true);
        for d in deltas {
            any = true;
            all_two &= d == 2;
            all_pos &= d >= 1;
            all_zero &= d == 0;
        }
        match () {
            _ if !any => Classification::Complete,
            _ if all_two => Classification::Supercritical,
            _ if all_pos => Classification::EdgeCritical,
            _ if all_zero => Classification::Stable,
            _ => Classification::Mixed,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::EdgeCritical => "edge-critical",
            Classification::Supercritical => "supercritical",
            Classification::Stable => "stable",
            Classification::Mixed => "mixed",
            Classification::Complete => "complete",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeDelta {
    pub u: usize,
    pub v: usize,
    pub delta: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeProfile {
    pub base_value: usize,
    /// One entry per non-edge, sorted by `(u, v)` with `u < v`.
    pub deltas: Vec<EdgeDelta>,
    pub classification: Classification,
}

impl EdgeProfile {
    pub fn delta(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.deltas
            .binary_search_by_key(&key, |d| (d.u, d.v))
            .ok()
            .map(|i| self.deltas[i].delta)
    }

    pub fn is_edge_critical(&self) -> bool {
        self.classification.is_edge_critical()
    }

    /// First non-edge (in pair order) whose addition leaves the value unchanged.
    pub fn first_stable_edge(&self) -> Option<(usize, usize)> {
        self.deltas.iter().find(|d| d.delta == 0).map(|d| (d.u, d.v))
    }
}

/// `γ_tR(g) - γ_tR(g + uv)`.
pub fn edge_delta(g: &Graph, u: usize, v: usize) -> Result<usize, CriticalityError> {
    edge_delta_with(&Solver::default(), g, u, v)
}

pub fn edge_delta_with(
    solver: &Solver,
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<usize, CriticalityError> {
    if u == v || u >= g.order() || v >= g.order() || g.has_edge(u, v) {
        return Err(CriticalityError::NotANonEdge(u, v));
    }
    let base = solver.gamma_tr_value(g)?;
    let plus = g.add_edge(u, v).expect("checked non-edge");
    Ok(base - solver.gamma_tr_value(&plus)?)
}

pub fn edge_profile(g: &Graph) -> Result<EdgeProfile, CriticalityError> {
    edge_profile_with(&Solver::default(), Exec::default(), g)
}

pub fn edge_profile_with(
    solver: &Solver,
    exec: Exec,
    g: &Graph,
) -> Result<EdgeProfile, CriticalityError> {
    profile_by(exec, g, |h| solver.gamma_tr_value(h))
}

/// The same profile for γ_t instead of γ_tR.
pub fn gamma_t_profile(
    solver: &Solver,
    exec: Exec,
    g: &Graph,
) -> Result<EdgeProfile, CriticalityError> {
    profile_by(exec, g, |h| solver.gamma_t(h).map(|r| r.value))
}

fn profile_by<F>(exec: Exec, g: &Graph, value: F) -> Result<EdgeProfile, CriticalityError>
where
    F: Fn(&Graph) -> Result<usize, SolveError> + Sync + Send,
{
    let base_value = value(g)?;
    let pairs = g.non_edges();
    let deltas = exec
        .map(&pairs, |&(u, v)| {
            let plus = g.add_edge(u, v).expect("non-edge");
            value(&plus).map(|x| EdgeDelta { u, v, delta: base_value - x })
        })
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let classification = Classification::from_deltas(deltas.iter().map(|d| d.delta));
    Ok(EdgeProfile { base_value, deltas, classification })
}

/// `k`-γ_t-edge-critical: γ_t = k and every added edge lowers γ_t.
pub fn is_gamma_t_edge_critical(solver: &Solver, g: &Graph, k: usize) -> Result<bool, SolveError> {
    if solver.gamma_t(g)?.value != k {
        return Ok(false);
    }
    let pairs = g.non_edges();
    if pairs.is_empty() {
        return Ok(false);
    }
    for (u, v) in pairs {
        if solver.gamma_t(&g.add_edge(u, v).expect("non-edge"))?.value >= k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Add value-preserving edges in pair order until every remaining non-edge is critical.
pub fn complete_to_critical(g: &Graph) -> Result<Graph, CriticalityError> {
    complete_to_critical_traced(&Solver::default(), g).map(|(h, _)| h)
}

/// As [`complete_to_critical`], also returning the added edges in order.
///
/// Adding edges never raises γ_tR, so a non-edge that is critical for the
/// current graph stays critical for every later supergraph with the same
/// value. One pass over the non-edges of `g` therefore yields the same graph
/// as restarting the scan after every addition.
pub fn complete_to_critical_traced(
    solver: &Solver,
    g: &Graph,
) -> Result<(Graph, Vec<(usize, usize)>), CriticalityError> {
    let k = solver.gamma_tr_value(g)?;
    if k < 4 {
        return Err(CriticalityError::ValueTooSmall(k));
    }
    let mut current = g.clone();
    let mut added = Vec::new();
    for (u, v) in g.non_edges() {
        let plus = current.add_edge(u, v).expect("still a non-edge");
        if solver.gamma_tr_value(&plus)? == k {
            current = plus;
            added.push((u, v));
        }
    }
    Ok((current, added))
}
