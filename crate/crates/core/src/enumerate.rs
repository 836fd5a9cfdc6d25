//! Exhaustive generation of small graph classes up to isomorphism.
//!
//! The structured generator builds 2-connected outerplanar graphs as an outer
//! cycle plus a set of pairwise non-crossing chords, and bridgeless ones by
//! gluing such blocks at single vertices. Graphs are over-generated and then
//! deduplicated by canonical code. An independent labelled enumerator (all
//! edge subsets of `K_n`) cross-checks the structured one for small orders.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::blocks::{is_bridgeless, is_two_connected};
use crate::canon::{canonical_form, CanonicalCode};
use crate::error::{EnumerationError, GraphError};
use crate::graph::{Edge, Graph, VertexSet, MAX_ORDER};
use crate::recognition::{is_mop, is_outerplanar};

/// Highest order the structured outerplanar generators accept.
pub const MAX_ENUMERATION_ORDER: usize = 10;
/// Highest order of the labelled edge-subset oracle (2^21 subsets).
pub const MAX_ORACLE_ORDER: usize = 7;

/// Chords of the polygon `0, 1, .., n-1`, no two of which cross.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordSet {
    n: usize,
    chords: Vec<Edge>,
}

/// Chords `{a, b}` and `{c, d}` (each with its smaller end first) cross when
/// exactly one end of one lies strictly inside the other's interval.
pub fn chords_cross(x: Edge, y: Edge) -> bool {
    let ((a, b), (c, d)) = (x, y);
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl ChordSet {
    pub fn new(n: usize, chords: Vec<Edge>) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooSmall {
                what: "polygon",
                min: 3,
                got: n,
            });
        }
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { n });
        }
        let mut normalized: Vec<Edge> = Vec::with_capacity(chords.len());
        for &(u, v) in &chords {
            let (a, b) = (u.min(v), u.max(v));
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            if b - a < 2 || (a == 0 && b == n - 1) {
                return Err(GraphError::DuplicateEdge { u: a, v: b });
            }
            if normalized.contains(&(a, b)) {
                return Err(GraphError::DuplicateEdge { u: a, v: b });
            }
            if let Some(&(c, d)) = normalized.iter().find(|&&other| chords_cross(other, (a, b))) {
                return Err(GraphError::CrossingChords {
                    first: (c, d),
                    second: (a, b),
                });
            }
            normalized.push((a, b));
        }
        normalized.sort_unstable();
        Ok(ChordSet {
            n,
            chords: normalized,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> &[Edge] {
        &self.chords
    }

    /// Outer cycle plus chords.
    pub fn to_graph(&self) -> Graph {
        let mut edges: Vec<Edge> = (0..self.n).map(|i| (i, (i + 1) % self.n)).collect();
        edges.extend_from_slice(&self.chords);
        Graph::new(self.n, &edges).expect("chord sets are simple")
    }
}

/// Every non-crossing chord set of the `n`-gon.
pub fn non_crossing_chord_sets(n: usize) -> Result<Vec<ChordSet>, GraphError> {
    if n < 3 {
        return Err(GraphError::TooSmall {
            what: "polygon",
            min: 3,
            got: n,
        });
    }
    if n > MAX_ORDER {
        return Err(GraphError::OrderTooLarge { n });
    }
    let diagonals: Vec<Edge> = (0..n)
        .flat_map(|a| (a + 2..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !(a == 0 && b == n - 1))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(i: usize, diagonals: &[Edge], chosen: &mut Vec<Edge>, n: usize, out: &mut Vec<ChordSet>) {
        if i == diagonals.len() {
            out.push(ChordSet {
                n,
                chords: chosen.clone(),
            });
            return;
        }
        go(i + 1, diagonals, chosen, n, out);
        let d = diagonals[i];
        if chosen.iter().all(|&c| !chords_cross(c, d)) {
            chosen.push(d);
            go(i + 1, diagonals, chosen, n, out);
            chosen.pop();
        }
    }
    go(0, &diagonals, &mut chosen, n, &mut out);
    Ok(out)
}

/// Graph classes the enumerators understand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    All,
    Outerplanar,
    BridgelessOuterplanar,
    Mop,
}

impl GraphClass {
    /// Largest order this crate enumerates for the class.
    pub fn cap(self) -> usize {
        match self {
            GraphClass::All => 7,
            GraphClass::Outerplanar => 8,
            GraphClass::BridgelessOuterplanar | GraphClass::Mop => MAX_ENUMERATION_ORDER,
        }
    }

    /// Smallest order the enumerators accept for the class.
    pub fn min_order(self) -> usize {
        match self {
            GraphClass::All | GraphClass::Outerplanar => 1,
            GraphClass::BridgelessOuterplanar | GraphClass::Mop => 3,
        }
    }

    /// Membership test, independent of how the class is generated.
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::All => true,
            GraphClass::Outerplanar => is_outerplanar(g),
            GraphClass::BridgelessOuterplanar => is_bridgeless(g) && is_outerplanar(g),
            GraphClass::Mop => is_mop(g),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::All => "all",
            GraphClass::Outerplanar => "outerplanar",
            GraphClass::BridgelessOuterplanar => "bridgeless-outerplanar",
            GraphClass::Mop => "mop",
        })
    }
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(GraphClass::All),
            "outerplanar" => Ok(GraphClass::Outerplanar),
            "bridgeless-outerplanar" => Ok(GraphClass::BridgelessOuterplanar),
            "mop" => Ok(GraphClass::Mop),
            other => Err(format!("unknown graph class `{other}`")),
        }
    }
}

fn check_order(n: usize, class: GraphClass) -> Result<(), EnumerationError> {
    if n > class.cap() {
        return Err(EnumerationError::CapExceeded { n, cap: class.cap() });
    }
    if n < class.min_order() {
        return Err(EnumerationError::OrderTooSmall {
            n,
            min: class.min_order(),
        });
    }
    Ok(())
}

fn canonical_entry(g: &Graph) -> (CanonicalCode, Graph) {
    let (canon, _) = canonical_form(g);
    let code = CanonicalCode::from_canonical_form(&canon);
    (code, canon)
}

/// Canonical forms, deduplicated, in ascending code order.
fn dedup<I: IntoParallelIterator<Item = Graph>>(graphs: I) -> Vec<Graph> {
    let entries: Vec<(CanonicalCode, Graph)> = graphs.into_par_iter().map(|g| canonical_entry(&g)).collect();
    let map: BTreeMap<CanonicalCode, Graph> = entries.into_iter().collect();
    map.into_values().collect()
}

fn two_connected_raw(n: usize) -> Vec<Graph> {
    non_crossing_chord_sets(n)
        .expect("order already checked")
        .iter()
        .map(ChordSet::to_graph)
        .collect()
}

/// 2-connected outerplanar graphs of order `n`, canonical forms in code order.
pub fn enumerate_two_connected_outerplanar(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    check_order(n, GraphClass::BridgelessOuterplanar)?;
    Ok(dedup(two_connected_raw(n)))
}

/// Identifies vertex `w` of `block` with vertex `v` of `host`; the other
/// block vertices are appended after the host's.
fn glue(host: &Graph, v: usize, block: &Graph, w: usize) -> Graph {
    let offset = host.order();
    let map = |x: usize| match x.cmp(&w) {
        std::cmp::Ordering::Equal => v,
        std::cmp::Ordering::Less => offset + x,
        std::cmp::Ordering::Greater => offset + x - 1,
    };
    let mut adj = *host.adjacency();
    for (a, b) in block.edges() {
        let (a, b) = (map(a), map(b));
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    Graph::from_adjacency(offset + block.order() - 1, adj)
}

fn bridgeless_raw(
    n: usize,
    smaller: &BTreeMap<usize, Vec<Graph>>,
    blocks: &BTreeMap<usize, Vec<Graph>>,
) -> Vec<Graph> {
    let mut raw = two_connected_raw(n);
    // Peel off a leaf block of b vertices; the rest has n - b + 1 >= 3.
    for b in 3..=n.saturating_sub(2) {
        let hosts = &smaller[&(n - b + 1)];
        let leaves = &blocks[&b];
        let glued: Vec<Graph> = hosts
            .par_iter()
            .flat_map_iter(|h| {
                leaves.iter().flat_map(move |blk| {
                    (0..h.order()).flat_map(move |v| (0..blk.order()).map(move |w| glue(h, v, blk, w)))
                })
            })
            .collect();
        raw.extend(glued);
    }
    raw
}

fn bridgeless_levels(n: usize) -> (BTreeMap<usize, Vec<Graph>>, BTreeMap<usize, Vec<Graph>>) {
    let mut levels = BTreeMap::new();
    let mut blocks = BTreeMap::new();
    for m in 3..=n {
        blocks.insert(m, dedup(two_connected_raw(m)));
        if m < n {
            let level = dedup(bridgeless_raw(m, &levels, &blocks));
            levels.insert(m, level);
        }
    }
    (levels, blocks)
}

/// Bridgeless outerplanar graphs of order `n`: 2-connected ones plus block
/// trees of 2-connected outerplanar blocks glued at cut vertices.
pub fn enumerate_bridgeless_outerplanar(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    check_order(n, GraphClass::BridgelessOuterplanar)?;
    let (levels, blocks) = bridgeless_levels(n);
    Ok(dedup(bridgeless_raw(n, &levels, &blocks)))
}

/// Vertex-by-vertex extension of every canonical graph of the previous
/// order; `keep` must be closed under vertex deletion.
fn augment_levels(n: usize, keep: impl Fn(&Graph) -> bool + Sync) -> (Vec<Graph>, Vec<Graph>) {
    let mut level = vec![Graph::empty(1).expect("one vertex")];
    let mut raw = level.clone();
    for order in 2..=n {
        raw = level
            .par_iter()
            .flat_map_iter(|g| {
                (0u16..1 << (order - 1)).map(move |s| g.with_vertex(VertexSet(s)).expect("order within cap"))
            })
            .filter(|h| keep(h))
            .collect();
        level = dedup(raw.clone());
    }
    (raw, level)
}

/// Every graph of order `n` (connected or not), at most order 7.
pub fn enumerate_all_graphs(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    check_order(n, GraphClass::All)?;
    Ok(augment_levels(n, |_| true).1)
}

/// Every outerplanar graph of order `n` (connected or not).
pub fn enumerate_outerplanar(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    check_order(n, GraphClass::Outerplanar)?;
    Ok(augment_levels(n, is_outerplanar).1)
}

/// All edge subsets of `K_n` on labelled vertices, filtered by `predicate`
/// and deduplicated. Makes no structural assumptions about the class.
pub fn enumerate_labeled_oracle<P>(n: usize, predicate: P) -> Result<Vec<Graph>, EnumerationError>
where
    P: Fn(&Graph) -> bool + Sync,
{
    if n > MAX_ORACLE_ORDER {
        return Err(EnumerationError::CapExceeded {
            n,
            cap: MAX_ORACLE_ORDER,
        });
    }
    if n == 0 {
        return Err(EnumerationError::OrderTooSmall { n, min: 1 });
    }
    let pairs: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let subsets = 1u32 << pairs.len();
    let hits: Vec<(CanonicalCode, Graph)> = (0..subsets)
        .into_par_iter()
        .filter_map(|mask| {
            let mut adj = [0u16; MAX_ORDER];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            let g = Graph::from_adjacency(n, adj);
            predicate(&g).then(|| canonical_entry(&g))
        })
        .collect();
    let map: BTreeMap<CanonicalCode, Graph> = hits.into_iter().collect();
    Ok(map.into_values().collect())
}

/// Graphs of diameter exactly `d`.
pub fn filter_by_diameter(graphs: Vec<Graph>, d: usize) -> Vec<Graph> {
    graphs.into_iter().filter(|g| g.diameter() == Some(d)).collect()
}

/// A request for one class at one order, optionally restricted to one
/// diameter. With `deduped` unset the raw over-generated list is returned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationStream {
    pub order: usize,
    pub class: GraphClass,
    pub diameter: Option<usize>,
    pub deduped: bool,
}

impl EnumerationStream {
    pub fn new(order: usize, class: GraphClass) -> Self {
        EnumerationStream {
            order,
            class,
            diameter: None,
            deduped: true,
        }
    }

    pub fn with_diameter(mut self, d: usize) -> Self {
        self.diameter = Some(d);
        self
    }

    pub fn raw(mut self) -> Self {
        self.deduped = false;
        self
    }

    pub fn collect(&self) -> Result<Vec<Graph>, EnumerationError> {
        let n = self.order;
        check_order(n, self.class)?;
        let graphs = match (self.class, self.deduped) {
            (GraphClass::All, true) => enumerate_all_graphs(n)?,
            (GraphClass::All, false) => augment_levels(n, |_| true).0,
            (GraphClass::Outerplanar, true) => enumerate_outerplanar(n)?,
            (GraphClass::Outerplanar, false) => augment_levels(n, is_outerplanar).0,
            (GraphClass::BridgelessOuterplanar, true) => enumerate_bridgeless_outerplanar(n)?,
            (GraphClass::BridgelessOuterplanar, false) => {
                let (levels, blocks) = bridgeless_levels(n);
                bridgeless_raw(n, &levels, &blocks)
            }
            (GraphClass::Mop, dedup) => {
                let raw: Vec<Graph> = two_connected_raw(n).into_iter().filter(is_mop).collect();
                if dedup {
                    self::dedup(raw)
                } else {
                    raw
                }
            }
        };
        Ok(match self.diameter {
            Some(d) => filter_by_diameter(graphs, d),
            None => graphs,
        })
    }
}

/// True when `g` is 2-connected and outerplanar; the structured generator's
/// postcondition.
pub fn is_two_connected_outerplanar(g: &Graph) -> bool {
    is_two_connected(g) && is_outerplanar(g)
}
