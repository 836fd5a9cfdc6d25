//! Bridges, cut vertices and blocks via depth-first lowpoints.

use crate::error::GraphError;
use crate::graph::{Edge, Graph, VertexSet, MAX_ORDER};

/// Cut vertices plus the vertex sets of the blocks of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub cut_vertices: VertexSet,
    /// Sorted by their ascending vertex lists.
    pub blocks: Vec<VertexSet>,
}

impl BlockDecomposition {
    /// Number of edges of `g` inside each block, in block order.
    pub fn block_sizes(&self, g: &Graph) -> Vec<usize> {
        self.blocks
            .iter()
            .map(|&b| g.induced(b).map_or(0, |h| h.size()))
            .collect()
    }
}

struct Lowpoint<'a> {
    g: &'a Graph,
    disc: [u8; MAX_ORDER],
    low: [u8; MAX_ORDER],
    clock: u8,
    stack: Vec<Edge>,
    cut: VertexSet,
    bridges: Vec<Edge>,
    blocks: Vec<VertexSet>,
}

const UNSEEN: u8 = u8::MAX;

impl<'a> Lowpoint<'a> {
    fn run(g: &'a Graph) -> Self {
        let mut s = Lowpoint {
            g,
            disc: [UNSEEN; MAX_ORDER],
            low: [UNSEEN; MAX_ORDER],
            clock: 0,
            stack: Vec::new(),
            cut: VertexSet::EMPTY,
            bridges: Vec::new(),
            blocks: Vec::new(),
        };
        for root in 0..g.order() {
            if s.disc[root] != UNSEEN {
                continue;
            }
            if g.degree(root) == 0 {
                s.blocks.push(VertexSet::singleton(root));
            }
            s.visit(root, None);
        }
        s.bridges.sort_unstable();
        s.blocks.sort_by_key(|b| b.to_vec());
        s
    }

    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.disc[u] = self.clock;
        self.low[u] = self.clock;
        self.clock += 1;
        let mut children = 0;
        for w in self.g.neighbors(u).iter() {
            if self.disc[w] == UNSEEN {
                children += 1;
                self.stack.push((u, w));
                self.visit(w, Some(u));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.cut.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
                if self.low[w] > self.disc[u] {
                    self.bridges.push((u.min(w), u.max(w)));
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// Edges whose removal disconnects their component, in lexicographic order.
pub fn bridges(g: &Graph) -> Vec<Edge> {
    Lowpoint::run(g).bridges
}

/// Connected and free of bridges. The single-vertex graph qualifies.
pub fn is_bridgeless(g: &Graph) -> bool {
    g.is_connected() && bridges(g).is_empty()
}

/// Cut vertices of every component.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    Lowpoint::run(g).cut
}

/// Connected, at least three vertices, no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && cut_vertices(g).is_empty()
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let lp = Lowpoint::run(g);
    Ok(BlockDecomposition {
        cut_vertices: lp.cut,
        blocks: lp.blocks,
    })
}
