//! Named graph families and the maximal outerplanar construction process.

use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::TooSmall {
            what: "cycle",
            min: 3,
            got: n,
        });
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges)
}

/// Sides `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph, GraphError> {
    if s == 0 || t == 0 {
        return Err(GraphError::TooSmall {
            what: "bipartite side",
            min: 1,
            got: 0,
        });
    }
    let edges: Vec<_> = (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))).collect();
    Graph::new(s + t, &edges)
}

/// The fan `P_n` joined with `K_1`: path `0..n`, hub `n`.
pub fn fan(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooSmall {
            what: "fan",
            min: 2,
            got: n,
        });
    }
    path(n)?.join(&Graph::empty(1)?)
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).expect("valid bowtie")
}

/// Adds a vertex adjacent to exactly the two ends of the edge `{u, v}`.
pub fn attach_vertex_to_adjacent_pair(g: &Graph, u: usize, v: usize) -> Result<Graph, GraphError> {
    if !g.has_edge(u, v) {
        return Err(GraphError::MissingEdge {
            u: u.min(v),
            v: u.max(v),
        });
    }
    g.with_vertex([u, v].into_iter().collect::<VertexSet>())
}

/// Start from the triangle `0 1 2`; step `i` joins a new vertex `3 + i` to
/// both ends of the named outer-face edge.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MopConstruction {
    pub steps: Vec<(usize, usize)>,
}

impl MopConstruction {
    pub fn new(steps: Vec<(usize, usize)>) -> Self {
        MopConstruction { steps }
    }
}

/// Builds the graph while tracking the outer cycle as a cyclic sequence.
/// Returns the graph and its final outer cycle.
pub fn build_mop_with_outer_cycle(c: &MopConstruction) -> Result<(Graph, Vec<usize>), GraphError> {
    let mut g = complete(3)?;
    let mut outer = vec![0, 1, 2];
    for &(u, v) in &c.steps {
        let len = outer.len();
        let slot = (0..len).find(|&i| {
            let (a, b) = (outer[i], outer[(i + 1) % len]);
            (a, b) == (u, v) || (a, b) == (v, u)
        });
        let slot = slot.ok_or(GraphError::NotOuterEdge { u, v })?;
        let new = g.order();
        g = attach_vertex_to_adjacent_pair(&g, u, v)?;
        outer.insert(slot + 1, new);
    }
    Ok((g, outer))
}

pub fn build_mop(c: &MopConstruction) -> Result<Graph, GraphError> {
    build_mop_with_outer_cycle(c).map(|(g, _)| g)
}
