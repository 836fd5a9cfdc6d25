//! Outerplanarity through the two forbidden minors K4 and K2,3.
//!
//! Minor models are searched component by component. In a connected host,
//! any model can be grown until its branch sets cover every vertex (absorb a
//! leftover vertex into an adjacent branch set), so it suffices to enumerate
//! partitions of the component into exactly 4 (K4) or 5 (K2,3) connected
//! parts and inspect the quotient.

use std::fmt;

use crate::blocks::is_two_connected;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForbiddenMinor {
    K4,
    K23,
}

impl ForbiddenMinor {
    fn branch_count(self) -> usize {
        match self {
            ForbiddenMinor::K4 => 4,
            ForbiddenMinor::K23 => 5,
        }
    }

    /// Pattern edges over branch indices. For K2,3 the first two branch sets
    /// form the side of size two.
    fn pattern_edges(self) -> &'static [(usize, usize)] {
        match self {
            ForbiddenMinor::K4 => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            ForbiddenMinor::K23 => &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        }
    }

    /// Cycle rank (m - n + 1) of the pattern; minors never increase it.
    fn cycle_rank(self) -> usize {
        match self {
            ForbiddenMinor::K4 => 3,
            ForbiddenMinor::K23 => 2,
        }
    }
}

impl fmt::Display for ForbiddenMinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenMinor::K4 => f.write_str("K4"),
            ForbiddenMinor::K23 => f.write_str("K2,3"),
        }
    }
}

/// Disjoint connected branch sets realising a forbidden minor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub pattern: ForbiddenMinor,
    pub branch_sets: Vec<VertexSet>,
}

impl MinorWitness {
    /// Checks disjointness, connectivity and the pattern's linkage in `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.branch_sets.len() != self.pattern.branch_count() {
            return false;
        }
        let mut seen = VertexSet::EMPTY;
        for &b in &self.branch_sets {
            if !b.is_disjoint(seen) || !g.is_connected_set(b) || !b.difference(g.vertices()).is_empty() {
                return false;
            }
            seen = seen.union(b);
        }
        self.pattern
            .pattern_edges()
            .iter()
            .all(|&(i, j)| linked(g, self.branch_sets[i], self.branch_sets[j]))
    }
}

fn linked(g: &Graph, a: VertexSet, b: VertexSet) -> bool {
    a.iter().any(|v| !g.neighbors(v).is_disjoint(b))
}

struct PartitionSearch<'a> {
    g: &'a Graph,
    verts: Vec<usize>,
    parts: usize,
    masks: [VertexSet; 5],
    pattern: ForbiddenMinor,
}

impl PartitionSearch<'_> {
    /// Restricted-growth enumeration: vertex `i` joins an open part or opens
    /// the next one.
    fn go(&mut self, i: usize, opened: usize) -> Option<Vec<VertexSet>> {
        if self.verts.len() - i < self.parts - opened {
            return None;
        }
        if i == self.verts.len() {
            return self.inspect();
        }
        let v = self.verts[i];
        let limit = (opened + 1).min(self.parts);
        for p in 0..limit {
            self.masks[p].insert(v);
            let found = self.go(i + 1, opened.max(p + 1));
            self.masks[p].remove(v);
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn inspect(&self) -> Option<Vec<VertexSet>> {
        let parts = &self.masks[..self.parts];
        if !parts.iter().all(|&p| self.g.is_connected_set(p)) {
            return None;
        }
        let mut quotient = [0u8; 5];
        for i in 0..self.parts {
            for j in i + 1..self.parts {
                if linked(self.g, parts[i], parts[j]) {
                    quotient[i] |= 1 << j;
                    quotient[j] |= 1 << i;
                }
            }
        }
        match self.pattern {
            ForbiddenMinor::K4 => quotient[..4]
                .iter()
                .enumerate()
                .all(|(i, &q)| q | 1 << i == 0b1111)
                .then(|| parts.to_vec()),
            ForbiddenMinor::K23 => {
                for a in 0..5 {
                    for b in a + 1..5 {
                        let rest = 0b11111 & !(1u8 << a | 1 << b);
                        if quotient[a] & rest == rest && quotient[b] & rest == rest {
                            let mut out = vec![parts[a], parts[b]];
                            out.extend((0..5).filter(|&k| k != a && k != b).map(|k| parts[k]));
                            return Some(out);
                        }
                    }
                }
                None
            }
        }
    }
}

fn find_minor(g: &Graph, pattern: ForbiddenMinor) -> Option<MinorWitness> {
    let parts = pattern.branch_count();
    for comp in g.components() {
        if comp.len() < parts {
            continue;
        }
        let h_edges: usize = comp.iter().map(|v| g.neighbors(v).len()).sum::<usize>() / 2;
        if h_edges + 1 < comp.len() + pattern.cycle_rank() {
            continue;
        }
        let mut search = PartitionSearch {
            g,
            verts: comp.to_vec(),
            parts,
            masks: [VertexSet::EMPTY; 5],
            pattern,
        };
        if let Some(branch_sets) = search.go(0, 0) {
            let witness = MinorWitness { pattern, branch_sets };
            assert!(
                witness.is_valid_for(g),
                "invalid minor witness {witness:?} for {g:?}"
            );
            return Some(witness);
        }
    }
    None
}

pub fn find_k4_minor(g: &Graph) -> Option<MinorWitness> {
    find_minor(g, ForbiddenMinor::K4)
}

pub fn find_k23_minor(g: &Graph) -> Option<MinorWitness> {
    find_minor(g, ForbiddenMinor::K23)
}

/// Either forbidden minor, K4 first. No edge-count shortcut.
pub fn find_forbidden_minor(g: &Graph) -> Option<MinorWitness> {
    find_k4_minor(g).or_else(|| find_k23_minor(g))
}

/// Outerplanar iff neither K4 nor K2,3 is a minor. Connected graphs with
/// more than `2n - 3` edges are rejected before searching.
pub fn is_outerplanar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 2 && g.is_connected() && g.size() > 2 * n - 3 {
        return false;
    }
    find_forbidden_minor(g).is_none()
}

/// Maximal outerplanar: outerplanar on at least three vertices, and adding
/// any missing edge destroys outerplanarity.
pub fn is_mop(g: &Graph) -> bool {
    g.order() >= 3
        && is_outerplanar(g)
        && g.non_edges().into_iter().all(|(u, v)| {
            let h = g.with_edge(u, v).expect("non-edge");
            !is_outerplanar(&h)
        })
}

struct HamiltonSearch<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    found: Vec<Vec<usize>>,
    limit: usize,
}

impl HamiltonSearch<'_> {
    fn go(&mut self, used: VertexSet) {
        if self.found.len() >= self.limit {
            return;
        }
        let n = self.g.order();
        let last = *self.path.last().unwrap();
        if self.path.len() == n {
            // Each undirected cycle is reached in both directions; keep one.
            if self.g.has_edge(last, self.path[0]) && self.path[1] < last {
                self.found.push(self.path.clone());
            }
            return;
        }
        for w in self.g.neighbors(last).difference(used).iter() {
            self.path.push(w);
            let mut next = used;
            next.insert(w);
            self.go(next);
            self.path.pop();
        }
    }
}

fn hamiltonian_cycles(g: &Graph, limit: usize) -> Vec<Vec<usize>> {
    if g.order() < 3 {
        return Vec::new();
    }
    let mut s = HamiltonSearch {
        g,
        path: vec![0],
        found: Vec::new(),
        limit,
    };
    s.go(VertexSet::singleton(0));
    s.found
}

/// Number of distinct Hamiltonian cycles (direction ignored).
pub fn count_hamiltonian_cycles(g: &Graph) -> usize {
    hamiltonian_cycles(g, usize::MAX).len()
}

/// The outer cycle of a 2-connected outerplanar graph, starting at vertex 0
/// and oriented so that the second vertex is smaller than the last.
pub fn outer_cycle(g: &Graph) -> Option<Vec<usize>> {
    if !is_two_connected(g) || !is_outerplanar(g) {
        return None;
    }
    let cycles = hamiltonian_cycles(g, 2);
    debug_assert_eq!(cycles.len(), 1, "outer cycle not unique for {g:?}");
    cycles.into_iter().next()
}
