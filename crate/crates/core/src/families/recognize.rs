//! Structural recognisers. All tests are label-independent.

use std::fmt;

use serde::{Serialize, Serializer};

use super::FamilyError;
use crate::graph::{above, bit, members, Graph, VertexSet};

/// Which clause of the γ_tR = n characterisation a connected graph falls under.
///
/// Clauses are tried in the fixed order path/cycle, subdivided star, corona,
/// family G, family H; the first match wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hen1Class {
    PathOrCycle,
    Corona,
    SubdividedStar,
    FamilyG,
    FamilyH { r: usize },
    None,
}

impl Hen1Class {
    pub fn is_none(self) -> bool {
        self == Hen1Class::None
    }
}

impl fmt::Display for Hen1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hen1Class::PathOrCycle => f.write_str("path-or-cycle"),
            Hen1Class::Corona => f.write_str("corona"),
            Hen1Class::SubdividedStar => f.write_str("subdivided-star"),
            Hen1Class::FamilyG => f.write_str("family-G"),
            Hen1Class::FamilyH { r } => write!(f, "family-H(r={r})"),
            Hen1Class::None => f.write_str("none"),
        }
    }
}

impl Serialize for Hen1Class {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn set_of(g: &Graph, pred: impl Fn(usize) -> bool) -> VertexSet {
    (0..g.order()).filter(|&v| pred(v)).fold(0, |acc, v| acc | bit(v))
}

fn leaves(g: &Graph) -> VertexSet {
    set_of(g, |v| g.degree(v) == 1)
}

fn max_degree(g: &Graph) -> usize {
    (0..g.order()).map(|v| g.degree(v)).max().unwrap_or(0)
}

fn require_connected(g: &Graph, min_order: usize) -> Result<(), FamilyError> {
    if g.order() < min_order {
        return Err(FamilyError::TooSmall(g.order()));
    }
    if !g.is_connected() {
        return Err(FamilyError::Disconnected);
    }
    Ok(())
}

pub fn hen1_classify(g: &Graph) -> Result<Hen1Class, FamilyError> {
    require_connected(g, 2)?;
    Ok(if max_degree(g) <= 2 {
        Hen1Class::PathOrCycle
    } else if is_subdivided_star(g) {
        Hen1Class::SubdividedStar
    } else if is_corona(g) {
        Hen1Class::Corona
    } else if is_family_g(g) {
        Hen1Class::FamilyG
    } else if let Some(r) = family_h_r(g) {
        Hen1Class::FamilyH { r }
    } else {
        Hen1Class::None
    })
}

/// Tree with a centre of degree `k >= 2` whose neighbours have degree 2 and
/// whose remaining `k` vertices are leaves.
fn is_subdivided_star(g: &Graph) -> bool {
    let n = g.order();
    if n < 5 || n.is_multiple_of(2) || !g.is_tree() {
        return false;
    }
    let k = (n - 1) / 2;
    (0..n).any(|c| {
        let nb = g.neighbors(c);
        g.degree(c) == k
            && members(nb).all(|x| g.degree(x) == 2)
            && members(g.all_vertices() & !nb & !bit(c)).all(|x| g.degree(x) == 1)
    })
}

/// Half the vertices are leaves and every other vertex has exactly one leaf neighbour.
fn is_corona(g: &Graph) -> bool {
    let n = g.order();
    let l = leaves(g);
    if !n.is_multiple_of(2) || l.count_ones() as usize != n / 2 {
        return false;
    }
    let inner = g.all_vertices() & !l;
    members(l).all(|x| g.neighbors(x) & inner != 0)
        && members(inner).all(|x| (g.neighbors(x) & l).count_ones() == 1)
}

/// Split off pendant `P_2`s (leaf + degree-2 support). Returns (leaves,
/// supports, attachment vertices) or `None` when a support is malformed.
fn pendant_paths(g: &Graph) -> Option<(VertexSet, VertexSet, Vec<usize>)> {
    let l = leaves(g);
    let mut supports = 0;
    for x in members(l) {
        let s = g.neighbors(x).trailing_zeros() as usize;
        if g.degree(s) != 2 {
            return None;
        }
        supports |= bit(s);
    }
    if (supports & l) != 0 || supports.count_ones() != l.count_ones() {
        return None;
    }
    let mut attach = Vec::new();
    for s in members(supports) {
        let a = (g.neighbors(s) & !l).trailing_zeros() as usize;
        if supports & bit(a) != 0 {
            return None;
        }
        attach.push(a);
    }
    Some((l, supports, attach))
}

/// 4-cycle with at least one pendant `P_2`, all attached to two adjacent cycle vertices.
fn is_family_g(g: &Graph) -> bool {
    let n = g.order();
    if n < 6 || !n.is_multiple_of(2) || g.size() != n {
        return false;
    }
    let Some((l, s, attach)) = pendant_paths(g) else {
        return false;
    };
    if l.count_ones() as usize != (n - 4) / 2 {
        return false;
    }
    let core = g.all_vertices() & !l & !s;
    if core.count_ones() != 4 || !members(core).all(|v| (g.neighbors(v) & core).count_ones() == 2)
    {
        return false;
    }
    let mut spots: Vec<usize> = attach;
    spots.sort_unstable();
    spots.dedup();
    match spots.as_slice() {
        [_] => true,
        [a, b] => g.has_edge(*a, *b),
        _ => false,
    }
}

/// Tree made of a path `x .. y` (`r` internal vertices) with pendant `P_2`s
/// hanging only from `x` and `y`, each of which carries at least one.
fn family_h_r(g: &Graph) -> Option<usize> {
    if !g.is_tree() {
        return None;
    }
    let (l, s, attach) = pendant_paths(g)?;
    let core = g.all_vertices() & !l & !s;
    if core.count_ones() < 2 {
        return None;
    }
    let spine = g.induced(core).ok()?;
    if !spine.is_connected() || (0..spine.order()).any(|v| spine.degree(v) > 2) {
        return None;
    }
    let ends: Vec<usize> = members(core)
        .filter(|&v| (g.neighbors(v) & core).count_ones() == 1)
        .collect();
    if ends.len() != 2 {
        return None;
    }
    if !attach.iter().all(|a| ends.contains(a)) || !ends.iter().all(|e| attach.contains(e)) {
        return None;
    }
    Some(core.count_ones() as usize - 2)
}

/// Two or more components, each a star `K_{1,s}` with `s >= 1`.
pub fn is_galaxy(g: &Graph) -> bool {
    let comps = g.components();
    comps.len() >= 2
        && comps.iter().all(|&c| {
            let k = c.count_ones() as usize;
            let edges: usize = members(c).map(|v| g.degree(v)).sum::<usize>() / 2;
            k >= 2 && edges == k - 1 && members(c).any(|v| g.degree(v) == k - 1)
        })
}

pub fn complement_is_galaxy(g: &Graph) -> bool {
    is_galaxy(&g.complement())
}

/// Every component is `K_2`.
pub fn is_matching_union(g: &Graph) -> bool {
    (0..g.order()).all(|v| g.degree(v) == 1)
}

/// At least two components, each complete of order at least 3.
pub fn is_union_of_large_cliques(g: &Graph) -> bool {
    let comps = g.components();
    comps.len() >= 2 && comps.iter().all(|&c| c.count_ones() >= 3 && g.is_clique(c))
}

/// `K_2 ∪ K_m` with `m >= 3`.
pub fn is_k2_plus_complete(g: &Graph) -> bool {
    let comps = g.components();
    if comps.len() != 2 || !comps.iter().all(|&c| g.is_clique(c)) {
        return false;
    }
    let mut sizes: Vec<u32> = comps.iter().map(|c| c.count_ones()).collect();
    sizes.sort_unstable();
    sizes[0] == 2 && sizes[1] >= 3
}

/// Predicts whether a connected graph of order `n >= 4` is `n`-γ_tR-edge-critical:
/// cycles, coronas of complete graphs of order ≥ 3, subdivided stars of order ≥ 7,
/// family G, and family H with `r ∉ {0, 2}`.
pub fn predict_n_critical(g: &Graph) -> Result<bool, FamilyError> {
    require_connected(g, 4)?;
    Ok(match hen1_classify(g)? {
        Hen1Class::PathOrCycle => (0..g.order()).all(|v| g.degree(v) == 2),
        Hen1Class::Corona => {
            let inner = g.all_vertices() & !leaves(g);
            inner.count_ones() >= 3 && g.is_clique(inner)
        }
        Hen1Class::SubdividedStar => g.order() >= 7,
        Hen1Class::FamilyG => true,
        Hen1Class::FamilyH { r } => r != 0 && r != 2,
        Hen1Class::None => false,
    })
}

/// Closed-form γ_tR of `Sp(legs)` for `k >= 3` legs, with `y` legs of length 2:
/// `n` when `y >= k-1`, `n-k+y+1` when `1 <= y < k-1`, `n-k+2` when `y = 0`.
pub fn spider_gamma_formula(legs: &[usize]) -> Result<usize, FamilyError> {
    let k = legs.len();
    if k < 3 {
        return Err(FamilyError::TooFewLegs(k));
    }
    if legs.contains(&0) {
        return Err(FamilyError::InvalidSpec("spider legs must have length >= 1".into()));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let y = legs.iter().filter(|&&l| l == 2).count();
    Ok(if y + 1 >= k {
        n
    } else if y >= 1 {
        n - k + y + 1
    } else {
        n - k + 2
    })
}

/// Edge-critical spiders: all legs but the longest have length 2, and the
/// longest has length 2, 4, or at least 6.
pub fn spider_is_critical(legs: &[usize]) -> Result<bool, FamilyError> {
    if legs.len() < 3 {
        return Err(FamilyError::TooFewLegs(legs.len()));
    }
    let mut sorted = legs.to_vec();
    sorted.sort_unstable();
    let (last, rest) = sorted.split_last().expect("k >= 3");
    Ok(rest.iter().all(|&l| l == 2) && (*last == 2 || *last == 4 || *last >= 6))
}

/// A path `branch, .., leaf` whose internal vertices have degree 2, where
/// `branch` has degree at least 3. `len` counts edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Endpath {
    pub branch: usize,
    pub leaf: usize,
    pub len: usize,
}

/// Every endpath, one per leaf that reaches a branch vertex, in leaf order.
pub fn endpaths(g: &Graph) -> Vec<Endpath> {
    let mut out = Vec::new();
    for leaf in members(leaves(g)) {
        let (mut prev, mut cur, mut len) = (leaf, g.neighbors(leaf).trailing_zeros() as usize, 1);
        while g.degree(cur) == 2 {
            let next = (g.neighbors(cur) & !bit(prev)).trailing_zeros() as usize;
            (prev, cur, len) = (cur, next, len + 1);
        }
        if g.degree(cur) >= 3 {
            out.push(Endpath { branch: cur, leaf, len });
        }
    }
    out
}

/// Leg lengths (ascending) if `g` is a spider with at least 3 legs.
pub fn spider_legs(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_tree() {
        return None;
    }
    let mut heads = (0..g.order()).filter(|&v| g.degree(v) >= 3);
    let head = heads.next()?;
    if heads.next().is_some() {
        return None;
    }
    let mut legs: Vec<usize> = endpaths(g).iter().map(|e| e.len).collect();
    debug_assert_eq!(legs.len(), g.degree(head));
    legs.sort_unstable();
    Some(legs)
}

/// A leaf `w` with support `x` and two non-adjacent `u, v ∈ N(x) - w`,
/// as `(w, x, u, v)`; the first such in index order.
pub fn pendant_with_open_support(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    for w in members(leaves(g)) {
        let x = g.neighbors(w).trailing_zeros() as usize;
        let others = g.neighbors(x) & !bit(w);
        for u in members(others) {
            if let Some(v) = members(others & !g.closed_neighbors(u) & above(u)).next() {
                return Some((w, x, u, v));
            }
        }
    }
    None
}
