//! Brute-force oracles shared by the integration tests. They work from plain
//! adjacency lists and never call into the solver, so they can referee it.

#![allow(dead_code)]

use trd_core::Graph;

pub struct Adj(pub Vec<Vec<usize>>);

impl Adj {
    pub fn of(g: &Graph) -> Self {
        let mut lists = vec![Vec::new(); g.order()];
        for (u, v) in g.edges() {
            lists[u].push(v);
            lists[v].push(u);
        }
        Adj(lists)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Roman condition, plus the total condition when `total` is set.
    pub fn accepts(&self, f: &[u8], total: bool) -> bool {
        self.0.iter().enumerate().all(|(v, nb)| {
            let roman = f[v] > 0 || nb.iter().any(|&u| f[u] == 2);
            let tot = !total || f[v] == 0 || nb.iter().any(|&u| f[u] > 0);
            roman && tot
        })
    }

    /// Minimum weight and all minimum functions (lexicographic order), by
    /// scanning all `3^n` assignments.
    pub fn minimum(&self, total: bool) -> (usize, Vec<Vec<u8>>) {
        let n = self.n();
        let mut f = vec![0u8; n];
        let mut best = usize::MAX;
        let mut all = Vec::new();
        loop {
            let w: usize = f.iter().map(|&x| x as usize).sum();
            if w <= best && self.accepts(&f, total) {
                if w < best {
                    best = w;
                    all.clear();
                }
                all.push(f.clone());
            }
            // increment as a base-3 number with the last vertex least significant
            let mut i = n;
            loop {
                if i == 0 {
                    return (best, all);
                }
                i -= 1;
                if f[i] < 2 {
                    f[i] += 1;
                    break;
                }
                f[i] = 0;
            }
        }
    }

    pub fn min_value(&self, total: bool) -> usize {
        self.minimum(total).0
    }

    /// Vertices that are 0 in every minimum function.
    pub fn dead(&self, total: bool) -> Vec<usize> {
        let (_, fs) = self.minimum(total);
        (0..self.n()).filter(|&v| fs.iter().all(|f| f[v] == 0)).collect()
    }

    /// Smallest (total) dominating set size by subset scan.
    pub fn domination(&self, total: bool) -> usize {
        let n = self.n();
        (0u32..1 << n)
            .filter(|&s| {
                (0..n).all(|v| {
                    let own = !total && s >> v & 1 == 1;
                    own || self.0[v].iter().any(|&u| s >> u & 1 == 1)
                })
            })
            .map(|s| s.count_ones() as usize)
            .min()
            .expect("V itself dominates")
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &u in &self.0[comp[i]] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Complement is a disjoint union of at least two stars with at least one edge each.
pub fn complement_is_galaxy(g: &Graph) -> bool {
    let n = g.order();
    let comp = Graph::from_edges(n, g.non_edges()).expect("complement");
    let adj = Adj::of(&comp);
    let comps = adj.components();
    comps.len() >= 2
        && comps.iter().all(|c| {
            let k = c.len();
            let edges: usize = c.iter().map(|&v| adj.0[v].len()).sum::<usize>() / 2;
            k >= 2 && edges == k - 1 && c.iter().any(|&v| adj.0[v].len() == k - 1)
        })
}

/// Exactly two components, both complete, of orders 2 and at least 3.
pub fn is_k2_plus_clique(g: &Graph) -> bool {
    let adj = Adj::of(g);
    let comps = adj.components();
    if comps.len() != 2 {
        return false;
    }
    let complete = comps.iter().all(|c| c.iter().all(|&v| adj.0[v].len() == c.len() - 1));
    let mut sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    complete && sizes[0] == 2 && sizes[1] >= 3
}

/// Spider value from the leg counts: n, n-k+y+1, or n-k+2 depending on how many
/// legs have length 2.
pub fn spider_value(legs: &[usize]) -> usize {
    let k = legs.len();
    let n = 1 + legs.iter().sum::<usize>();
    let y = legs.iter().filter(|&&l| l == 2).count();
    if y >= k - 1 {
        n
    } else if y >= 1 {
        n - k + y + 1
    } else {
        n - k + 2
    }
}

/// Every labelled graph on `n` vertices.
pub fn labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edges(
            n,
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
        )
        .expect("valid pairs")
    })
}

pub fn no_isolated(g: &Graph) -> bool {
    (0..g.order()).all(|v| g.degree(v) > 0)
}
