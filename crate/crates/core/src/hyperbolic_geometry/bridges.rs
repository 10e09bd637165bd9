use alloc::vec::Vec;
use core::cmp::Ordering;

use super::GeometryError;

/// Complete graph on boundary components weighted by bridge lengths.
/// Missing bridges are encoded as `f64::INFINITY`.
#[derive(Debug, Clone, PartialEq)]
pub struct BridgeGraph {
    n: usize,
    lengths: Vec<f64>,
}

/// Tree edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub length: f64,
}

impl BridgeGraph {
    /// `lengths` is the row-major `n x n` matrix; the diagonal is ignored.
    pub fn new(n: usize, lengths: Vec<f64>) -> Result<Self, GeometryError> {
        if lengths.len() != n * n {
            return Err(GeometryError::MatrixShape {
                n,
                len: lengths.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                let l = lengths[i * n + j];
                if i != j && (l.is_nan() || l <= 0.0 || l != lengths[j * n + i]) {
                    return Err(GeometryError::InvalidLength { i, j });
                }
            }
        }
        Ok(BridgeGraph { n, lengths })
    }

    pub fn from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize) -> f64,
    ) -> Result<Self, GeometryError> {
        let mut lengths = alloc::vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let l = f(i, j);
                lengths[i * n + j] = l;
                lengths[j * n + i] = l;
            }
        }
        Self::new(n, lengths)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn length(&self, i: usize, j: usize) -> f64 {
        self.lengths[i * self.n + j]
    }

    /// Finite edges in tie-break order: length, then endpoints.
    pub fn sorted_edges(&self) -> Vec<Edge> {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let length = self.length(u, v);
                if length.is_finite() {
                    edges.push(Edge { u, v, length });
                }
            }
        }
        edges.sort_by(edge_order);
        edges
    }
}

fn edge_order(a: &Edge, b: &Edge) -> Ordering {
    a.length
        .total_cmp(&b.length)
        .then(a.u.cmp(&b.u))
        .then(a.v.cmp(&b.v))
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Kruskal's algorithm with ties broken lexicographically on
/// `(length, u, v)`, which makes the tree unique.
pub fn minimum_spanning_tree(g: &BridgeGraph) -> Result<Vec<Edge>, GeometryError> {
    let mut sets = DisjointSets::new(g.n);
    let mut tree = Vec::with_capacity(g.n.saturating_sub(1));
    for e in g.sorted_edges() {
        if sets.union(e.u, e.v) {
            tree.push(e);
        }
    }
    if g.n > 0 && tree.len() + 1 != g.n {
        return Err(GeometryError::Disconnected);
    }
    Ok(tree)
}

/// Vertex path between `from` and `to` in a tree on `n` vertices.
pub fn tree_path(n: usize, tree: &[Edge], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut adj = alloc::vec![Vec::new(); n];
    for e in tree {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut prev = alloc::vec![usize::MAX; n];
    let mut stack = alloc::vec![from];
    prev[from] = from;
    while let Some(x) = stack.pop() {
        if x == to {
            break;
        }
        for &y in &adj[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                stack.push(y);
            }
        }
    }
    if prev[to] == usize::MAX {
        return None;
    }
    let mut path = alloc::vec![to];
    let mut x = to;
    while x != from {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    Some(path)
}

/// A tree edge flagged by the exchange oracle together with the witness
/// vertex and whether the implied replacement is strictly shorter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExchangeCheck {
    pub edge: (usize, usize),
    pub witness: usize,
    pub improving: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Chain {
    pub path: Vec<usize>,
    pub tree: Vec<Edge>,
    pub tree_length: f64,
    pub flagged: Vec<ExchangeCheck>,
}

impl Chain {
    /// Flagged edges whose exchange would shorten the tree. Always zero for a
    /// genuine minimum spanning tree.
    pub fn exchange_violations(&self) -> usize {
        self.flagged.iter().filter(|c| c.improving).count()
    }

    /// True when the oracle flagged no tree edge.
    pub fn admissible(&self) -> bool {
        self.flagged.is_empty()
    }
}

/// Minimum spanning tree and the tree path from `from` to `to`.
///
/// `oracle(u, v, w)` answers whether the bridge `u-v` fails to be
/// admissible because of a shorter detour through `w`. Every flagged tree
/// edge is recorded with the outcome of the corresponding exchange.
pub fn admissible_chain(
    g: &BridgeGraph,
    from: usize,
    to: usize,
    oracle: Option<&dyn Fn(usize, usize, usize) -> bool>,
) -> Result<Chain, GeometryError> {
    for v in [from, to] {
        if v >= g.n {
            return Err(GeometryError::VertexOutOfRange(v));
        }
    }
    if from == to {
        return Err(GeometryError::SameVertex);
    }
    let tree = minimum_spanning_tree(g)?;
    let path = tree_path(g.n, &tree, from, to).ok_or(GeometryError::Disconnected)?;
    let tree_length = tree.iter().map(|e| e.length).sum();
    let mut flagged = Vec::new();
    if let Some(oracle) = oracle {
        for (idx, e) in tree.iter().enumerate() {
            let rest: Vec<Edge> = tree
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != idx)
                .map(|(_, e)| *e)
                .collect();
            for w in 0..g.n {
                if w == e.u || w == e.v || !oracle(e.u, e.v, w) {
                    continue;
                }
                // w sits on u's side or on v's side once e is removed
                let on_u_side = tree_path(g.n, &rest, e.u, w).is_some();
                let replacement = if on_u_side {
                    g.length(w, e.v)
                } else {
                    g.length(e.u, w)
                };
                flagged.push(ExchangeCheck {
                    edge: (e.u, e.v),
                    witness: w,
                    improving: replacement < e.length,
                });
            }
        }
    }
    Ok(Chain {
        path,
        tree,
        tree_length,
        flagged,
    })
}
