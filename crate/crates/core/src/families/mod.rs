//! Named graph families: descriptors, generators and structural recognisers.
//!
//! Canonical labellings produced by [`generate`]:
//!
//! * `path(n)`: `0-1-..-(n-1)`; `cycle(n)` closes it with `(n-1)-0`.
//! * `star(k)`: centre 0, leaves `1..=k`.
//! * `spider(l_1,..,l_k)`: head 0, legs sorted ascending, each leg's vertices
//!   numbered consecutively from the head outwards. `sstar(k)` is `spider(2,..,2)`.
//! * `dstar(a,b)`: centres 0 and 1, then the `a` leaves of 0, then the `b` leaves of 1.
//! * `cor(X)`: the vertices of `X` keep their labels, the leaf of `i` is `|X| + i`.
//! * `familyG(k1,k2)`: 4-cycle `0-1-2-3-0` (`v_1 = 0`, `v_2 = 1`), then the
//!   attached `P_2`s as pairs (near, far), first the `k1` on vertex 0, then the `k2` on 1.
//! * `familyH(a,b,r)`: stem `x = 0`, the `r` subdivision vertices `1..=r`,
//!   stem `y = r+1`, then pairs (support, leaf): `a` on `x`, then `b` on `y`.
//! * `galaxy(s_1,..)`: stars one after another, centre first.
//! * `KxK(n,m)`: row-major, `v_ij = i*m + j`.
//! * `Gd(l)`: `KxK(l+1,l+1)` minus the first-column vertices of rows
//!   `floor(l/2)+1 ..= l` (0-based), remaining vertices row-major.
//! * `D(n)`: centre `c = 0`, then for copy `i` the block `u_i, v_i, w_i`
//!   at `1+3i, 2+3i, 3+3i`.
//! * `union(A,B,..)`: components concatenated in order.

mod recognize;
mod syntax;

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

pub use recognize::{
    complement_is_galaxy, endpaths, hen1_classify, is_galaxy, is_k2_plus_complete,
    is_matching_union, is_union_of_large_cliques, pendant_with_open_support, predict_n_critical,
    spider_gamma_formula, spider_is_critical, spider_legs, Endpath, Hen1Class,
};
pub use syntax::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("spider needs at least 3 legs, got {0}")]
    TooFewLegs(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph of order {0} is too small for this recogniser")]
    TooSmall(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,k}`.
    Star(usize),
    /// `K_{1,k}` with every edge subdivided once.
    SubdividedStar(usize),
    DoubleStar(usize, usize),
    Corona(Box<FamilySpec>),
    Spider(Vec<usize>),
    FamilyG(usize, usize),
    FamilyH { a: usize, b: usize, r: usize },
    Galaxy(Vec<usize>),
    CartesianComplete(usize, usize),
    ProductDeleted(usize),
    DeadExample(usize),
    DisjointUnion(Vec<FamilySpec>),
}

impl FamilySpec {
    /// Spider with legs normalised to ascending order.
    pub fn spider(mut legs: Vec<usize>) -> Self {
        legs.sort_unstable();
        FamilySpec::Spider(legs)
    }

    pub fn corona(inner: FamilySpec) -> Self {
        FamilySpec::Corona(Box::new(inner))
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        syntax::parse(text)
    }

    /// Vertex count, or an error when the spec violates its invariants.
    pub fn order(&self) -> Result<usize, FamilyError> {
        self.validate()?;
        Ok(self.order_unchecked())
    }

    fn order_unchecked(&self) -> usize {
        use FamilySpec::*;
        match self {
            Path(n) | Cycle(n) | Complete(n) => *n,
            Star(k) => k + 1,
            SubdividedStar(k) => 2 * k + 1,
            DoubleStar(a, b) => a + b + 2,
            Corona(inner) => 2 * inner.order_unchecked(),
            Spider(legs) => 1 + legs.iter().sum::<usize>(),
            FamilyG(k1, k2) => 4 + 2 * (k1 + k2),
            FamilyH { a, b, r } => 2 * (a + b) + r + 2,
            Galaxy(stars) => stars.iter().map(|s| s + 1).sum(),
            CartesianComplete(n, m) => n * m,
            ProductDeleted(l) => (l + 1) * (l + 1) - l.div_ceil(2),
            DeadExample(n) => 3 * n + 1,
            DisjointUnion(parts) => parts.iter().map(FamilySpec::order_unchecked).sum(),
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        use FamilySpec::*;
        let bad = |msg: String| Err(FamilyError::InvalidSpec(msg));
        match self {
            Path(n) if *n < 1 => return bad(format!("path order {n} < 1")),
            Cycle(n) if *n < 3 => return bad(format!("cycle order {n} < 3")),
            Complete(n) if *n < 1 => return bad(format!("complete order {n} < 1")),
            Star(k) if *k < 1 => return bad(format!("star with {k} leaves")),
            SubdividedStar(k) if *k < 2 => {
                return bad(format!("subdivided star needs k >= 2, got {k}"))
            }
            DoubleStar(a, b) if *a < 1 || *b < 1 => {
                return bad(format!("double star needs a, b >= 1, got ({a}, {b})"))
            }
            Corona(inner) => inner.validate()?,
            Spider(legs) => {
                if legs.len() < 2 {
                    return bad(format!("spider needs k >= 2 legs, got {}", legs.len()));
                }
                if legs.contains(&0) {
                    return bad("spider legs must have length >= 1".into());
                }
            }
            FamilyG(k1, k2) if k1 + k2 < 1 => return bad("familyG needs k1 + k2 >= 1".into()),
            FamilyH { a, b, .. } if *a < 1 || *b < 1 => {
                return bad(format!("familyH needs a, b >= 1, got ({a}, {b})"))
            }
            Galaxy(stars) => {
                if stars.len() < 2 {
                    return bad(format!("galaxy needs t >= 2 stars, got {}", stars.len()));
                }
                if stars.contains(&0) {
                    return bad("galaxy stars must be non-trivial (s >= 1)".into());
                }
            }
            CartesianComplete(n, m) if *n < 2 || *m < 2 => {
                return bad(format!("KxK needs n, m >= 2, got ({n}, {m})"))
            }
            ProductDeleted(l) if *l < 2 => return bad(format!("Gd needs l >= 2, got {l}")),
            DeadExample(n) if *n < 2 => return bad(format!("D needs n >= 2, got {n}")),
            DisjointUnion(parts) => {
                if parts.is_empty() {
                    return bad("union of nothing".into());
                }
                for p in parts {
                    p.validate()?;
                }
            }
            _ => {}
        }
        let n = self.order_unchecked();
        if n > MAX_ORDER {
            return bad(format!("order {n} exceeds {MAX_ORDER}"));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        syntax::write_spec(self, f)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::str::FromStr for FamilySpec {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        syntax::parse(s)
    }
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Self { n: 0, edges: Vec::new() }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// Path hanging off `from` with `len` new vertices; returns them in order.
    fn leg(&mut self, from: usize, len: usize) -> Vec<usize> {
        let mut prev = from;
        (0..len)
            .map(|_| {
                let v = self.vertex();
                self.edge(prev, v);
                prev = v;
                v
            })
            .collect()
    }

    fn finish(self) -> Result<Graph, FamilyError> {
        Ok(Graph::from_edges(self.n, self.edges)?)
    }
}

/// Build the graph described by `spec` with its canonical labelling.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    use FamilySpec::*;
    spec.validate()?;
    let mut b = Builder::new();
    match spec {
        Path(n) => {
            let s = b.vertex();
            b.leg(s, n - 1);
        }
        Cycle(n) => {
            let s = b.vertex();
            let rest = b.leg(s, n - 1);
            b.edge(*rest.last().expect("n >= 3"), s);
        }
        Complete(n) => return Ok(Graph::complete(*n)?),
        Star(k) => return star(*k),
        SubdividedStar(k) => return generate(&Spider(vec![2; *k])),
        DoubleStar(a, b2) => {
            let x = b.vertex();
            let y = b.vertex();
            b.edge(x, y);
            for _ in 0..*a {
                b.leg(x, 1);
            }
            for _ in 0..*b2 {
                b.leg(y, 1);
            }
        }
        Corona(inner) => {
            let base = generate(inner)?;
            let m = base.order();
            let mut edges = base.edges();
            edges.extend((0..m).map(|i| (i, m + i)));
            return Ok(Graph::from_edges(2 * m, edges)?);
        }
        Spider(legs) => {
            let mut legs = legs.clone();
            legs.sort_unstable();
            let head = b.vertex();
            for l in legs {
                b.leg(head, l);
            }
        }
        FamilyG(k1, k2) => {
            let c: Vec<usize> = (0..4).map(|_| b.vertex()).collect();
            for i in 0..4 {
                b.edge(c[i], c[(i + 1) % 4]);
            }
            for _ in 0..*k1 {
                b.leg(c[0], 2);
            }
            for _ in 0..*k2 {
                b.leg(c[1], 2);
            }
        }
        FamilyH { a, b: bb, r } => {
            let x = b.vertex();
            let inner = b.leg(x, r + 1);
            let y = *inner.last().expect("r + 1 >= 1");
            for _ in 0..*a {
                b.leg(x, 2);
            }
            for _ in 0..*bb {
                b.leg(y, 2);
            }
        }
        Galaxy(stars) => {
            for &s in stars {
                let c = b.vertex();
                for _ in 0..s {
                    b.leg(c, 1);
                }
            }
        }
        CartesianComplete(n, m) => {
            let (n, m) = (*n, *m);
            b.n = n * m;
            for a in 0..n * m {
                for c in a + 1..n * m {
                    if a / m == c / m || a % m == c % m {
                        b.edge(a, c);
                    }
                }
            }
        }
        ProductDeleted(l) => {
            let side = l + 1;
            let full = generate(&CartesianComplete(side, side))?;
            // rows floor(l/2)+1 ..= l (0-based) lose their column-0 vertex
            let deleted = ((l / 2 + 1)..side).fold(0u64, |acc, row| acc | 1 << (row * side));
            return Ok(full.induced(full.all_vertices() & !deleted)?);
        }
        DeadExample(n) => {
            let c = b.vertex();
            for _ in 0..*n {
                let u = b.vertex();
                let v = b.vertex();
                let w = b.vertex();
                for (p, q) in [(c, u), (c, v), (u, v), (u, w), (v, w)] {
                    b.edge(p, q);
                }
            }
        }
        DisjointUnion(parts) => {
            let mut it = parts.iter();
            let mut acc = generate(it.next().expect("validated nonempty"))?;
            for p in it {
                acc = acc.disjoint_union(&generate(p)?)?;
            }
            return Ok(acc);
        }
    }
    b.finish()
}

fn star(k: usize) -> Result<Graph, FamilyError> {
    Ok(Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))?)
}

/// Labels of `w_1..w_n` in `D(n)`.
pub fn dead_example_w(n: usize) -> Vec<usize> {
    (0..n).map(|i| 3 + 3 * i).collect()
}

/// All sorted leg multisets with `k` legs of lengths in `1..=max_leg`.
pub fn spider_leg_multisets(k: usize, max_leg: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, min: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for l in min..=max {
            cur.push(l);
            rec(k, l, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, 1, max_leg, &mut Vec::with_capacity(k), &mut out);
    out
}
