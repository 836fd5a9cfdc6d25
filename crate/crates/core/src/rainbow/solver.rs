//! Exact search for rainbow colorings with a given number of colors.
//!
//! Only paths of length at most `k` can be rainbow under `k` colors, so each
//! non-adjacent vertex pair gets a catalogue of its simple paths up to that
//! length. Edges are colored one at a time; a path dies as soon as two of its
//! colored edges repeat a color, and a branch is cut once some pair has no
//! live path left. Uncolored edges count as fresh colors, so cutting is sound
//! and the search stays complete.

use crate::blocks::bridges;
use crate::error::{GraphError, RainbowError};
use crate::graph::{Edge, Graph, MAX_ORDER};

use super::{EdgeColoring, MAX_COLORS};

/// The rainbow connection number together with a coloring attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RcResult {
    pub rc: usize,
    pub witness: EdgeColoring,
}

const UNCOLORED: u8 = u8::MAX;

struct Catalog {
    /// Edge indices of each path.
    paths: Vec<Vec<u8>>,
    path_pair: Vec<u32>,
    pair_count: usize,
    paths_of_edge: Vec<Vec<u32>>,
}

fn edge_index(edges: &[Edge]) -> [[u8; MAX_ORDER]; MAX_ORDER] {
    let mut idx = [[u8::MAX; MAX_ORDER]; MAX_ORDER];
    for (i, &(u, v)) in edges.iter().enumerate() {
        idx[u][v] = i as u8;
        idx[v][u] = i as u8;
    }
    idx
}

/// Simple paths of length at most `k` between non-adjacent pairs. `None`
/// when some pair has none (its distance exceeds `k`).
fn build_catalog(g: &Graph, edges: &[Edge], k: usize) -> Option<Catalog> {
    let n = g.order();
    let idx = edge_index(edges);
    let mut paths = Vec::new();
    let mut path_pair = Vec::new();
    let mut pair_count = 0;
    for u in 0..n {
        let mut per_target: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
        let mut trail = Vec::with_capacity(k);
        collect_paths(g, &idx, u, 1 << u, k, &mut trail, &mut per_target);
        for (v, found) in per_target.iter_mut().enumerate().skip(u + 1) {
            if g.has_edge(u, v) {
                continue;
            }
            let found = std::mem::take(found);
            if found.is_empty() {
                return None;
            }
            for p in found {
                paths.push(p);
                path_pair.push(pair_count as u32);
            }
            pair_count += 1;
        }
    }
    let mut paths_of_edge = vec![Vec::new(); edges.len()];
    for (pi, p) in paths.iter().enumerate() {
        for &e in p {
            paths_of_edge[e as usize].push(pi as u32);
        }
    }
    Some(Catalog {
        paths,
        path_pair,
        pair_count,
        paths_of_edge,
    })
}

fn collect_paths(
    g: &Graph,
    idx: &[[u8; MAX_ORDER]; MAX_ORDER],
    at: usize,
    visited: u16,
    budget: usize,
    trail: &mut Vec<u8>,
    out: &mut [Vec<Vec<u8>>],
) {
    if budget == 0 {
        return;
    }
    for w in g.neighbors(at).iter() {
        if visited >> w & 1 == 1 {
            continue;
        }
        trail.push(idx[at][w]);
        if trail.len() >= 2 {
            out[w].push(trail.clone());
        }
        collect_paths(g, idx, w, visited | 1 << w, budget - 1, trail, out);
        trail.pop();
    }
}

/// Backtracking state over a fixed edge order.
struct Search<'a> {
    cat: &'a Catalog,
    k: usize,
    order: Vec<usize>,
    color: Vec<u8>,
    path_colors: Vec<u16>,
    path_alive: Vec<bool>,
    pair_alive: Vec<u32>,
    /// Undo log: path index << 5 | color << 1 | killed.
    trail: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(cat: &'a Catalog, edge_count: usize, k: usize, order: Vec<usize>) -> Self {
        let mut pair_alive = vec![0u32; cat.pair_count];
        for &p in &cat.path_pair {
            pair_alive[p as usize] += 1;
        }
        Search {
            cat,
            k,
            order,
            color: vec![UNCOLORED; edge_count],
            path_colors: vec![0; cat.paths.len()],
            path_alive: vec![true; cat.paths.len()],
            pair_alive,
            trail: Vec::new(),
        }
    }

    /// Colors edge `e` with `c`; false if some pair lost its last live path.
    fn assign(&mut self, e: usize, c: u8) -> bool {
        self.color[e] = c;
        let bit = 1u16 << c;
        let mut ok = true;
        for &p in &self.cat.paths_of_edge[e] {
            let pi = p as usize;
            if !self.path_alive[pi] {
                continue;
            }
            if self.path_colors[pi] & bit != 0 {
                self.path_alive[pi] = false;
                let pair = self.cat.path_pair[pi] as usize;
                self.pair_alive[pair] -= 1;
                if self.pair_alive[pair] == 0 {
                    ok = false;
                }
                self.trail.push(p << 5 | (c as u32) << 1 | 1);
            } else {
                self.path_colors[pi] |= bit;
                self.trail.push(p << 5 | (c as u32) << 1);
            }
        }
        ok
    }

    fn undo(&mut self, e: usize, mark: usize) {
        while self.trail.len() > mark {
            let t = self.trail.pop().unwrap();
            let pi = (t >> 5) as usize;
            if t & 1 == 1 {
                self.path_alive[pi] = true;
                self.pair_alive[self.cat.path_pair[pi] as usize] += 1;
            } else {
                self.path_colors[pi] &= !(1u16 << (t >> 1 & 0xf));
            }
        }
        self.color[e] = UNCOLORED;
    }

    /// Colors are introduced in order of first use: position `pos` may take
    /// any color already used or the next unused one.
    fn run(&mut self, pos: usize, used: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let e = self.order[pos];
        let top = (used + 1).min(self.k);
        for c in 0..top {
            let mark = self.trail.len();
            if self.assign(e, c as u8) && self.run(pos + 1, used.max(c + 1)) {
                return true;
            }
            self.undo(e, mark);
        }
        false
    }
}

/// Edges carried by many shortest paths first; ties by edge index.
fn constrained_first(g: &Graph, cat: &Catalog, edge_count: usize) -> Vec<usize> {
    let n = g.order();
    let dist: Vec<Vec<Option<usize>>> = (0..n)
        .map(|v| g.distances_from(v).expect("vertex in range"))
        .collect();
    let mut pair_dist = Vec::with_capacity(cat.pair_count);
    for (u, row) in dist.iter().enumerate() {
        for (v, d) in row.iter().enumerate().skip(u + 1) {
            if !g.has_edge(u, v) {
                pair_dist.push(d.unwrap_or(usize::MAX));
            }
        }
    }
    let mut load = vec![0usize; edge_count];
    for (p, path) in cat.paths.iter().enumerate() {
        if path.len() == pair_dist[cat.path_pair[p] as usize] {
            for &e in path {
                load[e as usize] += 1;
            }
        }
    }
    let mut order: Vec<usize> = (0..edge_count).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(load[e]), e));
    order
}

fn require_connected(g: &Graph) -> Result<(), RainbowError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(GraphError::Disconnected.into())
    }
}

/// A coloring with at most `k` colors that rainbow-connects `g`, if any.
///
/// Existence is decided with the constrained-first edge order. When a
/// coloring exists the returned witness is the lexicographically smallest
/// color sequence in the graph's edge order.
pub fn exists_rainbow_coloring(g: &Graph, k: usize) -> Result<Option<EdgeColoring>, RainbowError> {
    require_connected(g)?;
    if k == 0 {
        return Err(GraphError::TooSmall {
            what: "color count",
            min: 1,
            got: 0,
        }
        .into());
    }
    if k > MAX_COLORS {
        return Err(RainbowError::TooManyColors { k });
    }
    let edges = g.edges();
    let cat = match build_catalog(g, &edges, k) {
        Some(cat) => cat,
        None => return Ok(None),
    };
    let order = constrained_first(g, &cat, edges.len());
    let mut probe = Search::new(&cat, edges.len(), k, order);
    if !probe.run(0, 0) {
        return Ok(None);
    }
    let mut lex = Search::new(&cat, edges.len(), k, (0..edges.len()).collect());
    let found = lex.run(0, 0);
    debug_assert!(found);
    let colors: Vec<usize> = lex.color.iter().map(|&c| c as usize).collect();
    Ok(Some(EdgeColoring::new(g, &colors, k)?))
}

/// `max(1, diameter, number of bridges)`. Any two bridges lie together on
/// every path between some pair of vertices, so bridges need distinct colors.
pub fn rc_lower_bound(g: &Graph) -> usize {
    let diam = g.diameter().unwrap_or(0);
    diam.max(bridges(g).len()).max(1)
}

/// The rainbow connection number by increasing `k` from [`rc_lower_bound`].
/// Trees short-circuit to `rc = m` with all edges colored distinctly.
pub fn rc_exact(g: &Graph) -> Result<RcResult, RainbowError> {
    require_connected(g)?;
    let n = g.order();
    if n < 2 {
        return Err(GraphError::TooSmall {
            what: "rc",
            min: 2,
            got: n,
        }
        .into());
    }
    let m = g.size();
    if m == n - 1 {
        let colors: Vec<usize> = (0..m).collect();
        return Ok(RcResult {
            rc: m,
            witness: EdgeColoring::new(g, &colors, m)?,
        });
    }
    // A spanning tree colored distinctly always works, so rc <= n - 1.
    for k in rc_lower_bound(g)..n {
        if let Some(witness) = exists_rainbow_coloring(g, k)? {
            return Ok(RcResult { rc: k, witness });
        }
    }
    unreachable!("a distinctly colored spanning tree rainbow-connects {g:?}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rainbow::is_rainbow_connected;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, &e).unwrap()
    }

    fn fan(n: usize) -> Graph {
        let mut e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.extend((0..n).map(|i| (i, n)));
        Graph::new(n + 1, &e).unwrap()
    }

    #[test]
    fn decision_examples() {
        assert!(exists_rainbow_coloring(&complete(4), 1).unwrap().is_some());
        assert!(exists_rainbow_coloring(&cycle(6), 2).unwrap().is_none());
        let w = exists_rainbow_coloring(&cycle(5), 3).unwrap().unwrap();
        assert!(is_rainbow_connected(&cycle(5), &w).unwrap());
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            exists_rainbow_coloring(&two, 2),
            Err(GraphError::Disconnected.into())
        );
        assert!(exists_rainbow_coloring(&cycle(4), 0).is_err());
        assert_eq!(
            exists_rainbow_coloring(&cycle(4), 17),
            Err(RainbowError::TooManyColors { k: 17 })
        );
    }

    #[test]
    fn rc_examples() {
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(rc_exact(&star).unwrap().rc, 4);
        assert_eq!(rc_exact(&fan(7)).unwrap().rc, 3);
        let bowtie = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(rc_exact(&bowtie).unwrap().rc, 2);
        assert!(rc_exact(&Graph::empty(1).unwrap()).is_err());
        assert!(rc_exact(&Graph::new(3, &[(0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        // Over edges (0,1) (0,3) (1,2) (2,3): 0-3-2 and 1-2-3 carry colors 0, 1.
        let r = rc_exact(&cycle(4)).unwrap();
        assert_eq!(r.witness.colors().collect::<Vec<_>>(), vec![0, 0, 0, 1]);
        assert_eq!(r.witness.k(), 2);
        // Agrees with a scan of all 2-colorings in lexicographic order.
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let m = g.size();
        let first = (0..1usize << m)
            .map(|bits| (0..m).rev().map(|i| bits >> i & 1).collect::<Vec<_>>())
            .find(|c| is_rainbow_connected(&g, &EdgeColoring::new(&g, c, 2).unwrap()).unwrap())
            .unwrap();
        let r = rc_exact(&g).unwrap();
        assert_eq!(r.rc, 2);
        assert_eq!(r.witness.colors().collect::<Vec<_>>(), first);
    }

    #[test]
    fn bridges_force_distinct_colors() {
        // Triangle with four pendant edges: diameter 3, four bridges.
        let g = Graph::new(7, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5), (0, 6)]).unwrap();
        assert_eq!(g.diameter(), Some(3));
        assert_eq!(rc_lower_bound(&g), 4);
        assert_eq!(rc_exact(&g).unwrap().rc, 4);
    }
}
