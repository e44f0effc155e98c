//! Immutable simple graphs on vertices `0..n` with one `u64` adjacency row per vertex.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Largest order representable by a single-word adjacency row.
pub const MAX_ORDER: usize = 64;

/// Vertex subsets are plain bitmasks over `0..n`.
pub type VertexSet = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),
    #[error("graph order {0} exceeds the supported maximum")]
    TooLarge(usize),
    #[error("graph must have at least one vertex")]
    Empty,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

#[inline]
pub(crate) fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// Iterate the members of a vertex set in increasing order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Vertices with index greater than `v`.
pub(crate) fn above(v: usize) -> VertexSet {
    (!0 << v) << 1
}

pub(crate) fn full_set(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    /// Build a graph from an edge list. Duplicate pairs collapse into one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check_pair(u, v)?;
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Build from raw adjacency rows; rows must already be symmetric and loop-free.
    pub(crate) fn from_rows_unchecked(adj: Vec<VertexSet>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_ORDER);
        let g = Self { n: adj.len(), adj };
        debug_assert!(g.is_well_formed());
        g
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::OutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Self::empty(n)?;
        let all = full_set(n);
        Ok(Self::from_rows_unchecked((0..n).map(|v| all & !bit(v)).collect()))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v] | bit(v)
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn all_vertices(&self) -> VertexSet {
        full_set(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in members(self.adj[u] & !full_set(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let all = self.all_vertices();
        for u in 0..self.n {
            for v in members(all & !self.adj[u] & !full_set(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        let all = self.all_vertices();
        Self::from_rows_unchecked(
            (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect(),
        )
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::EdgeExists(u.min(v), u.max(v)));
        }
        let mut adj = self.adj.clone();
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        Ok(Self { n: self.n, adj })
    }

    /// Returns `None` when `uv` is not an edge.
    pub fn remove_edge(&self, u: usize, v: usize) -> Option<Self> {
        if !self.has_edge(u, v) {
            return None;
        }
        let mut adj = self.adj.clone();
        adj[u] &= !bit(v);
        adj[v] &= !bit(u);
        Some(Self { n: self.n, adj })
    }

    /// Subgraph induced by `keep`, relabelled to `0..|keep|` in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Result<Self, GraphError> {
        let keep = keep & self.all_vertices();
        let order: Vec<usize> = members(keep).collect();
        if order.is_empty() {
            return Err(GraphError::Empty);
        }
        let rows = order
            .iter()
            .map(|&v| {
                let row = self.adj[v] & keep;
                order
                    .iter()
                    .enumerate()
                    .filter(|(_, &w)| row & bit(w) != 0)
                    .fold(0, |acc, (i, _)| acc | bit(i))
            })
            .collect();
        Ok(Self::from_rows_unchecked(rows))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Self { n, adj })
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.adj[v] == 0)
            .fold(0, |acc, v| acc | bit(v))
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn universal_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.degree(v) == self.n - 1)
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen: VertexSet = 0;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let next = members(frontier).fold(0, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    /// True when every vertex of `set` is adjacent to every other vertex of `set`.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        members(set).all(|v| self.adj[v] & set == set & !bit(v))
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() + 1 == self.n
    }

    /// BFS distances from `s`; `None` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for w in members(self.adj[v]) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn metrics(&self) -> GraphMetrics {
        let components = self.components();
        let mut per_component = Vec::with_capacity(components.len());
        for &comp in &components {
            let ecc_max = members(comp)
                .map(|s| {
                    self.distances_from(s)
                        .into_iter()
                        .flatten()
                        .max()
                        .unwrap_or(0)
                })
                .max()
                .unwrap_or(0);
            per_component.push(ecc_max);
        }
        let diameter = if components.len() == 1 {
            Diameter::Finite(per_component[0])
        } else {
            Diameter::Infinite
        };
        GraphMetrics {
            degrees: (0..self.n).map(|v| self.degree(v)).collect(),
            components: components.iter().map(|&c| members(c).collect()).collect(),
            component_diameters: per_component,
            isolated_vertices: members(self.isolated_vertices()).collect(),
            diameter,
            universal_vertex: self.universal_vertex(),
        }
    }

    pub fn diameter(&self) -> Diameter {
        self.metrics().diameter
    }

    fn is_well_formed(&self) -> bool {
        (0..self.n).all(|v| {
            self.adj[v] & bit(v) == 0
                && self.adj[v] & !self.all_vertices() == 0
                && members(self.adj[v]).all(|w| self.adj[w] & bit(v) != 0)
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(untagged)]
pub enum Diameter {
    Finite(usize),
    /// The graph is disconnected.
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GraphMetrics {
    pub degrees: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    /// Largest eccentricity inside each component, aligned with `components`.
    pub component_diameters: Vec<usize>,
    pub isolated_vertices: Vec<usize>,
    pub diameter: Diameter,
    pub universal_vertex: Option<usize>,
}

/// Parse the plain edge-list format: a header line `n m` followed by `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let nums = parse_pair(header).ok_or(EdgeListError::BadLine(1))?;
    let (n, m) = nums;
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        edges.push(parse_pair(line).ok_or(EdgeListError::BadLine(idx + 1))?);
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount { declared: m, found: edges.len() });
    }
    Ok(Graph::from_edges(n, edges)?)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    let a = it.next()?.ok()?;
    let b = it.next()?.ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("edge list is empty; expected a header line `n m`")]
    MissingHeader,
    #[error("malformed line {0}")]
    BadLine(usize),
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
