//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Adjacency is stored as one `u16` neighbour mask per vertex, so vertex
//! subsets fit in a machine word throughout the crate.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

/// Hard cap on the number of vertices.
pub const MAX_ORDER: usize = 16;

/// A set of vertices of a graph with at most [`MAX_ORDER`] vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 16 {
            VertexSet(u16::MAX)
        } else {
            VertexSet((1u16 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// An edge `(u, v)` with `u < v`.
pub type Edge = (usize, usize);

/// A simple undirected graph with vertices `0..n`.
///
/// Values are immutable once built: every "modifying" operation returns a
/// new graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u16; MAX_ORDER],
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// endpoints outside `0..n`.
    pub fn new(n: usize, edges: &[Edge]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { n });
        }
        let mut adj = [0u16; MAX_ORDER];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            if adj[u] >> v & 1 == 1 {
                return Err(GraphError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::new(n, &[])
    }

    /// Builds a graph from per-vertex neighbour masks. The masks must be
    /// symmetric and loop-free; only used internally on trusted data.
    pub(crate) fn from_adjacency(n: usize, adj: [u16; MAX_ORDER]) -> Graph {
        debug_assert!((1..=MAX_ORDER).contains(&n));
        debug_assert!((0..n).all(|u| adj[u] >> u & 1 == 0));
        debug_assert!((0..n).all(|u| VertexSet(adj[u]).iter().all(|v| v < n && adj[v] >> u & 1 == 1)));
        Graph { n, adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !((2u32 << u) - 1) as u16).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Pairs `{u, v}` with `u < v` that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub(crate) fn adjacency(&self) -> &[u16; MAX_ORDER] {
        &self.adj
    }

    /// Returns a copy with the extra edge `{u, v}`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut edges = self.edges();
        edges.push((u, v));
        Graph::new(self.n, &edges)
    }

    /// Returns a copy without the edge `{u, v}`.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        let mut g = *self;
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = VertexSet::EMPTY;
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation);
        }
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(GraphError::BadPermutation);
            }
            seen.insert(p);
        }
        let mut adj = [0u16; MAX_ORDER];
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(Graph::from_adjacency(self.n, adj))
    }

    /// The subgraph induced by `set`, with vertices renumbered in ascending
    /// order. Returns `None` for the empty set.
    pub fn induced(&self, set: VertexSet) -> Option<Graph> {
        let verts = set.to_vec();
        if verts.is_empty() {
            return None;
        }
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = [0u16; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            for w in self.neighbors(v).intersection(set).iter() {
                adj[i] |= 1 << index[w];
            }
        }
        Some(Graph::from_adjacency(verts.len(), adj))
    }

    /// Breadth-first hop counts from `v`; `None` marks unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Result<Vec<Option<usize>>, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.neighbors(u).iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Greatest distance from `v`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, v: usize) -> Result<Option<usize>, GraphError> {
        let dist = self.distances_from(v)?;
        Ok(dist.into_iter().try_fold(0, |acc, d| d.map(|d| acc.max(d))))
    }

    /// Maximum distance over all pairs; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        (0..self.n)
            .map(|v| self.eccentricity(v).ok().flatten())
            .try_fold(0, |acc, e| e.map(|e| acc.max(e)))
    }

    /// Minimum eccentricity; `None` when disconnected.
    pub fn radius(&self) -> Option<usize> {
        let eccs: Option<Vec<usize>> = (0..self.n).map(|v| self.eccentricity(v).ok().flatten()).collect();
        eccs?.into_iter().min()
    }

    /// Vertices reachable from `v` (including `v`) inside `within`.
    pub fn reach_within(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u16;
            for u in frontier.iter() {
                next |= self.adj[u];
            }
            let next = VertexSet(next).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Whether `set` is non-empty and induces a connected subgraph.
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        match set.first() {
            None => false,
            Some(v) => self.reach_within(v, set) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reach_within(v, left);
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    /// The join: disjoint union of `self` and `other` (whose vertices are
    /// shifted by `self.order()`) plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { n });
        }
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        for u in 0..self.n {
            for v in 0..other.n {
                edges.push((u, v + self.n));
            }
        }
        Graph::new(n, &edges)
    }

    /// Adds a new vertex (numbered `order()`) adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: VertexSet) -> Result<Graph, GraphError> {
        if self.n == MAX_ORDER {
            return Err(GraphError::OrderTooLarge { n: self.n + 1 });
        }
        if let Some(bad) = neighbors.difference(self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let mut g = *self;
        let new = self.n;
        for v in neighbors.iter() {
            g.adj[v] |= 1 << new;
        }
        g.adj[new] = neighbors.0;
        g.n += 1;
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
