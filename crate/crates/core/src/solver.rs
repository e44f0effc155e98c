//! Exact domination invariants: γ, γ_t, γ_R and γ_tR.
//!
//! Weighted invariants (γ_R, γ_tR) share one branch-and-bound engine over
//! partial assignments `V -> {0,1,2}`; the total condition is a flag on it.
//! Set invariants (γ, γ_t) use a covering search with forbidden-candidate
//! branching so that no subset is visited twice.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bit, members, Graph, VertexSet};

/// Order cap for exhaustive-at-optimum operations (enumeration, dead vertices).
pub const ENUMERATION_MAX_ORDER: usize = 16;
/// Order cap for the 3^n brute-force oracle.
pub const ORACLE_MAX_ORDER: usize = 12;
pub const DEFAULT_MAX_ORDER: usize = 24;
pub const DEFAULT_NODE_BUDGET: u64 = 500_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph of order {0} is too small (need at least 2 vertices)")]
    TooSmall(usize),
    #[error("graph of order {n} exceeds the cap of {cap} for this operation")]
    TooLarge { n: usize, cap: usize },
    #[error("function has {found} values but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("weight {0} is not in {{0,1,2}}")]
    InvalidWeight(u8),
    #[error("search exceeded the node budget of {0}")]
    BudgetExceeded(u64),
}

/// An assignment `V -> {0,1,2}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct WeightFunction(Vec<u8>);

impl WeightFunction {
    pub fn new(values: Vec<u8>) -> Result<Self, SolveError> {
        if let Some(&bad) = values.iter().find(|&&x| x > 2) {
            return Err(SolveError::InvalidWeight(bad));
        }
        Ok(Self(values))
    }

    fn from_masks(n: usize, ones: VertexSet, twos: VertexSet) -> Self {
        Self(
            (0..n)
                .map(|v| {
                    if twos & bit(v) != 0 {
                        2
                    } else if ones & bit(v) != 0 {
                        1
                    } else {
                        0
                    }
                })
                .collect(),
        )
    }

    /// The 0/1 indicator of a vertex set.
    pub fn indicator(n: usize, set: VertexSet) -> Self {
        Self::from_masks(n, set, 0)
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    /// `V_f^i` as a bitmask.
    pub fn level_set(&self, i: u8) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == i)
            .fold(0, |acc, (v, _)| acc | bit(v))
    }

    /// `V_f^+ = V_f^1 ∪ V_f^2`.
    pub fn positive_set(&self) -> VertexSet {
        self.level_set(1) | self.level_set(2)
    }
}

impl fmt::Debug for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// A 0-vertex has no neighbour of weight 2.
    Roman,
    /// A positive vertex has no positive neighbour.
    Total,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Valid,
    Invalid { vertex: usize, condition: Condition },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

fn check_function(g: &Graph, f: &WeightFunction, total: bool) -> Result<Verdict, SolveError> {
    if f.len() != g.order() {
        return Err(SolveError::LengthMismatch { expected: g.order(), found: f.len() });
    }
    let twos = f.level_set(2);
    let pos = f.positive_set();
    for v in 0..g.order() {
        let nb = g.neighbors(v);
        if f.get(v) == 0 {
            if nb & twos == 0 {
                return Ok(Verdict::Invalid { vertex: v, condition: Condition::Roman });
            }
        } else if total && nb & pos == 0 {
            return Ok(Verdict::Invalid { vertex: v, condition: Condition::Total });
        }
    }
    Ok(Verdict::Valid)
}

/// Check both conditions of a total Roman dominating function, reporting the
/// first violating vertex in index order.
pub fn is_trd_function(g: &Graph, f: &WeightFunction) -> Result<Verdict, SolveError> {
    check_function(g, f, true)
}

pub fn is_rd_function(g: &Graph, f: &WeightFunction) -> Result<Verdict, SolveError> {
    check_function(g, f, false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Invariant {
    #[serde(rename = "gamma")]
    Gamma,
    #[serde(rename = "gamma_t")]
    GammaT,
    #[serde(rename = "gamma_R")]
    GammaR,
    #[serde(rename = "gamma_tR")]
    GammaTR,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub invariant: Invariant,
    pub value: usize,
    pub witness: WeightFunction,
    pub nodes_explored: u64,
}

/// Roman (γ_R) or total Roman (γ_tR) minimum functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Mode {
    #[serde(rename = "total-Roman")]
    TotalRoman,
    #[serde(rename = "Roman")]
    Roman,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassicalNumbers {
    pub gamma: usize,
    pub gamma_t: usize,
    pub gamma_r: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_order: usize,
    pub node_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { max_order: DEFAULT_MAX_ORDER, node_budget: DEFAULT_NODE_BUDGET }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Solver {
    pub config: SolverConfig,
}

impl Solver {
    pub fn new(config: SolverConfig) -> Self {
        Self { config }
    }

    pub fn with_budget(node_budget: u64) -> Self {
        Self { config: SolverConfig { node_budget, ..SolverConfig::default() } }
    }

    fn check_order(&self, g: &Graph, cap: usize) -> Result<(), SolveError> {
        if g.order() > cap {
            return Err(SolveError::TooLarge { n: g.order(), cap });
        }
        Ok(())
    }

    pub fn gamma_tr(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        require_total_input(g)?;
        self.check_order(g, self.config.max_order)?;
        self.weighted(g, true)
    }

    /// γ_tR without computing a witness; the cheaper call for sweeps.
    pub fn gamma_tr_value(&self, g: &Graph) -> Result<usize, SolveError> {
        require_total_input(g)?;
        self.check_order(g, self.config.max_order)?;
        self.optimum(g, true).map(|(v, _)| v)
    }

    pub fn gamma_r_value(&self, g: &Graph) -> Result<usize, SolveError> {
        self.check_order(g, self.config.max_order)?;
        self.optimum(g, false).map(|(v, _)| v)
    }

    pub fn gamma_r(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.check_order(g, self.config.max_order)?;
        self.weighted(g, false)
    }

    pub fn gamma(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        self.check_order(g, self.config.max_order)?;
        self.set_search(g, false)
    }

    pub fn gamma_t(&self, g: &Graph) -> Result<SolveResult, SolveError> {
        require_no_isolated(g)?;
        self.check_order(g, self.config.max_order)?;
        self.set_search(g, true)
    }

    pub fn classical_numbers(&self, g: &Graph) -> Result<ClassicalNumbers, SolveError> {
        Ok(ClassicalNumbers {
            gamma: self.gamma(g)?.value,
            gamma_t: self.gamma_t(g)?.value,
            gamma_r: self.gamma_r(g)?.value,
        })
    }

    /// Every minimum function of the given kind, in lexicographic order.
    pub fn enumerate_minimum(
        &self,
        g: &Graph,
        mode: Mode,
    ) -> Result<Vec<WeightFunction>, SolveError> {
        let total = mode == Mode::TotalRoman;
        if total {
            require_total_input(g)?;
        }
        self.check_order(g, ENUMERATION_MAX_ORDER)?;
        let value = self.optimum(g, total)?.0;
        let mut search = WeightSearch::new(g, total, self.config.node_budget);
        let mut out = Vec::new();
        search.lex_dfs(State::default(), 0, value, &mut |st| {
            out.push(WeightFunction::from_masks(g.order(), st.ones, st.twos));
            false
        })?;
        Ok(out)
    }

    pub fn enumerate_min_trd(&self, g: &Graph) -> Result<Vec<WeightFunction>, SolveError> {
        self.enumerate_minimum(g, Mode::TotalRoman)
    }

    /// Vertices assigned 0 by every minimum function of the given kind.
    pub fn dead_vertices(&self, g: &Graph, mode: Mode) -> Result<VertexSet, SolveError> {
        let fs = self.enumerate_minimum(g, mode)?;
        Ok(fs
            .iter()
            .fold(g.all_vertices(), |acc, f| acc & f.level_set(0)))
    }

    fn optimum(&self, g: &Graph, total: bool) -> Result<(usize, u64), SolveError> {
        let mut search = WeightSearch::new(g, total, self.config.node_budget);
        // all-ones is feasible for RD always and for TRD without isolated vertices
        let mut best = (g.order(), State { ones: g.all_vertices(), ..State::default() });
        search.improve(State::default(), 0, &mut best)?;
        Ok((best.0, search.nodes))
    }

    fn weighted(&self, g: &Graph, total: bool) -> Result<SolveResult, SolveError> {
        let n = g.order();
        let (value, spent) = self.optimum(g, total)?;
        let mut search = WeightSearch::new(g, total, self.config.node_budget.saturating_sub(spent));
        let mut witness = None;
        search.lex_dfs(State::default(), 0, value, &mut |st| {
            witness = Some(WeightFunction::from_masks(n, st.ones, st.twos));
            true
        })
        .map_err(|_| SolveError::BudgetExceeded(self.config.node_budget))?;
        let witness = witness.expect("an optimal function exists at the proven value");
        Ok(SolveResult {
            invariant: if total { Invariant::GammaTR } else { Invariant::GammaR },
            value,
            witness,
            nodes_explored: spent + search.nodes,
        })
    }

    fn set_search(&self, g: &Graph, total: bool) -> Result<SolveResult, SolveError> {
        let n = g.order();
        let mut search = SetSearch::new(g, total, self.config.node_budget);
        let mut best = (n, g.all_vertices());
        search.run(0, 0, &mut best)?;
        Ok(SolveResult {
            invariant: if total { Invariant::GammaT } else { Invariant::Gamma },
            value: best.0,
            witness: WeightFunction::indicator(n, best.1),
            nodes_explored: search.nodes,
        })
    }
}

fn require_no_isolated(g: &Graph) -> Result<(), SolveError> {
    match (0..g.order()).find(|&v| g.degree(v) == 0) {
        Some(v) => Err(SolveError::IsolatedVertex(v)),
        None => Ok(()),
    }
}

fn require_total_input(g: &Graph) -> Result<(), SolveError> {
    if g.order() < 2 {
        return Err(SolveError::TooSmall(g.order()));
    }
    require_no_isolated(g)
}

pub fn gamma_tr(g: &Graph) -> Result<SolveResult, SolveError> {
    Solver::default().gamma_tr(g)
}

pub fn classical_numbers(g: &Graph) -> Result<ClassicalNumbers, SolveError> {
    Solver::default().classical_numbers(g)
}

pub fn enumerate_min_trd(g: &Graph) -> Result<Vec<WeightFunction>, SolveError> {
    Solver::default().enumerate_min_trd(g)
}

pub fn dead_vertices(g: &Graph, mode: Mode) -> Result<VertexSet, SolveError> {
    Solver::default().dead_vertices(g, mode)
}

/// γ_tR by scanning all 3^n weight vectors through [`is_trd_function`].
pub fn brute_oracle_gamma_tr(g: &Graph) -> Result<usize, SolveError> {
    require_total_input(g)?;
    brute_force(g, true)
}

/// γ_R by scanning all 3^n weight vectors through [`is_rd_function`].
pub fn brute_oracle_gamma_r(g: &Graph) -> Result<usize, SolveError> {
    brute_force(g, false)
}

fn brute_force(g: &Graph, total: bool) -> Result<usize, SolveError> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(SolveError::TooLarge { n, cap: ORACLE_MAX_ORDER });
    }
    let mut values = vec![0u8; n];
    let mut best = usize::MAX;
    loop {
        let w: usize = values.iter().map(|&x| x as usize).sum();
        if w < best {
            let f = WeightFunction(values.clone());
            if check_function(g, &f, total)?.is_valid() {
                best = w;
            }
        }
        // base-3 increment
        let mut i = 0;
        while i < n && values[i] == 2 {
            values[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        values[i] += 1;
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, Default)]
struct State {
    ones: VertexSet,
    twos: VertexSet,
    zeros: VertexSet,
}

impl State {
    #[inline]
    fn assigned(&self) -> VertexSet {
        self.ones | self.twos | self.zeros
    }
    #[inline]
    fn positive(&self) -> VertexSet {
        self.ones | self.twos
    }
    #[inline]
    fn with(mut self, v: usize, value: u8) -> Self {
        match value {
            0 => self.zeros |= bit(v),
            1 => self.ones |= bit(v),
            _ => self.twos |= bit(v),
        }
        self
    }
}

struct WeightSearch<'g> {
    g: &'g Graph,
    all: VertexSet,
    total: bool,
    nodes: u64,
    budget: u64,
}

impl<'g> WeightSearch<'g> {
    fn new(g: &'g Graph, total: bool, budget: u64) -> Self {
        Self { g, all: g.all_vertices(), total, nodes: 0, budget }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    fn dominated(&self, st: &State) -> VertexSet {
        members(st.twos).fold(st.twos, |acc, t| acc | self.g.neighbors(t))
    }

    /// False when some assigned vertex can no longer be satisfied.
    fn consistent(&self, st: &State) -> bool {
        let free = self.all & !st.assigned();
        let supply = st.twos | free;
        if members(st.zeros).any(|z| self.g.neighbors(z) & supply == 0) {
            return false;
        }
        if self.total {
            let support = st.positive() | free;
            if members(st.positive()).any(|p| self.g.neighbors(p) & support == 0) {
                return false;
            }
        }
        true
    }

    /// Admissible completion cost: the undominated vertices must each get weight
    /// of their own (cost 1 per vertex) or sit next to a new 2 (cost 2 per free
    /// vertex, covering at most its closed neighbourhood).
    fn lower_bound(&self, st: &State, undominated: VertexSet) -> usize {
        let need = undominated.count_ones() as usize;
        if need == 0 {
            return 0;
        }
        let free = self.all & !st.assigned();
        let mut covers = [0u8; 64];
        let mut k = 0;
        for x in members(free) {
            let c = (self.g.closed_neighbors(x) & undominated).count_ones();
            if c > 2 {
                covers[k] = c as u8;
                k += 1;
            }
        }
        let covers = &mut covers[..k];
        covers.sort_unstable_by(|a, b| b.cmp(a));
        let mut best = need;
        let mut covered = 0usize;
        for (i, &c) in covers.iter().enumerate() {
            covered += c as usize;
            let cost = 2 * (i + 1) + need.saturating_sub(covered);
            best = best.min(cost);
            if covered >= need {
                break;
            }
        }
        best
    }

    /// Branch and bound for a strictly better incumbent.
    fn improve(
        &mut self,
        st: State,
        weight: usize,
        best: &mut (usize, State),
    ) -> Result<(), SolveError> {
        self.tick()?;
        if !self.consistent(&st) {
            return Ok(());
        }
        let free = self.all & !st.assigned();
        let undominated = self.all & !st.positive() & !self.dominated(&st);
        if weight + self.lower_bound(&st, undominated) >= best.0 {
            return Ok(());
        }
        let target = undominated & free;
        let pick = if target != 0 {
            max_degree(self.g, target)
        } else if undominated != 0 {
            // undominated zeros; consistency guarantees a free neighbour
            let near = members(undominated).fold(0, |acc, z| acc | self.g.neighbors(z)) & free;
            max_degree(self.g, near)
        } else {
            let needy = if self.total { self.needy(&st) } else { 0 };
            let candidates = members(needy).fold(0, |acc, p| acc | self.g.neighbors(p)) & free;
            if candidates == 0 {
                // every free vertex can take 0
                *best = (weight, State { zeros: st.zeros | free, ..st });
                return Ok(());
            }
            max_degree(self.g, candidates)
        };
        for value in [2u8, 1, 0] {
            self.improve(st.with(pick, value), weight + value as usize, best)?;
        }
        Ok(())
    }

    /// Positive vertices with no positive neighbour yet.
    fn needy(&self, st: &State) -> VertexSet {
        let pos = st.positive();
        members(pos)
            .filter(|&p| self.g.neighbors(p) & pos == 0)
            .fold(0, |acc, p| acc | bit(p))
    }

    /// Lexicographic DFS (vertex 0 first, values 0 < 1 < 2) over complete
    /// feasible assignments of weight at most `cap`. `visit` returns true to stop.
    fn lex_dfs(
        &mut self,
        st: State,
        weight: usize,
        cap: usize,
        visit: &mut dyn FnMut(&State) -> bool,
    ) -> Result<bool, SolveError> {
        self.tick()?;
        if weight > cap || !self.consistent(&st) {
            return Ok(false);
        }
        let undominated = self.all & !st.positive() & !self.dominated(&st);
        if weight + self.lower_bound(&st, undominated) > cap {
            return Ok(false);
        }
        let free = self.all & !st.assigned();
        if free == 0 {
            return Ok(visit(&st));
        }
        let v = free.trailing_zeros() as usize;
        for value in [0u8, 1, 2] {
            if self.lex_dfs(st.with(v, value), weight + value as usize, cap, visit)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn max_degree(g: &Graph, set: VertexSet) -> usize {
    members(set)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("nonempty candidate set")
}

struct SetSearch<'g> {
    g: &'g Graph,
    all: VertexSet,
    total: bool,
    nodes: u64,
    budget: u64,
}

impl<'g> SetSearch<'g> {
    fn new(g: &'g Graph, total: bool, budget: u64) -> Self {
        Self { g, all: g.all_vertices(), total, nodes: 0, budget }
    }

    /// Vertices whose membership in the set would dominate `v`.
    #[inline]
    fn dominators(&self, v: usize) -> VertexSet {
        if self.total {
            self.g.neighbors(v)
        } else {
            self.g.closed_neighbors(v)
        }
    }

    fn run(
        &mut self,
        chosen: VertexSet,
        forbidden: VertexSet,
        best: &mut (usize, VertexSet),
    ) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::BudgetExceeded(self.budget));
        }
        let size = chosen.count_ones() as usize;
        let undominated = members(self.all)
            .filter(|&v| self.dominators(v) & chosen == 0)
            .fold(0, |acc, v| acc | bit(v));
        if undominated == 0 {
            if size < best.0 {
                *best = (size, chosen);
            }
            return Ok(());
        }
        let open = self.all & !chosen & !forbidden;
        // dominators relation is symmetric, so x covers dominators(x) ∩ undominated
        let max_cover = members(open)
            .map(|x| (self.dominators(x) & undominated).count_ones() as usize)
            .max()
            .unwrap_or(0);
        if max_cover == 0 {
            return Ok(());
        }
        let need = undominated.count_ones() as usize;
        if size + need.div_ceil(max_cover) >= best.0 {
            return Ok(());
        }
        let pivot = members(undominated)
            .min_by_key(|&v| (self.dominators(v) & open).count_ones())
            .expect("undominated is nonempty");
        let mut excluded = forbidden;
        for c in members(self.dominators(pivot) & open) {
            self.run(chosen | bit(c), excluded, best)?;
            excluded |= bit(c);
        }
        Ok(())
    }
}
