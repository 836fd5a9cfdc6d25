//! Canonical labelling by pruned permutation minimisation.
//!
//! Vertices are first split into cells by iterated degree refinement (an
//! isomorphism-invariant ordered partition). The canonical labelling is the
//! cell-respecting vertex order whose upper-triangle adjacency string, read
//! column by column, is lexicographically smallest. Prefixes that already
//! exceed the best string are cut, and interchangeable twin vertices are only
//! tried once per position.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// Isomorphism-complete code: the graph6 body of the canonical relabelling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    order: u8,
    bytes: Vec<u8>,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Code of a graph already in canonical form.
    pub(crate) fn from_canonical_form(canon: &Graph) -> CanonicalCode {
        CanonicalCode {
            order: canon.order() as u8,
            bytes: graph6_body(canon),
        }
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Printable graph6 string of the canonical form.
    pub fn to_graph6(&self) -> String {
        let mut s = String::with_capacity(self.bytes.len() + 1);
        s.push((self.order + 63) as char);
        s.extend(self.bytes.iter().map(|&b| b as char));
        s
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_graph6())
    }
}

/// Upper triangle in column order, six bits per byte offset by 63,
/// zero-padded. This is the graph6 body without the order byte.
pub fn graph6_body(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity((n * (n - 1) / 2).div_ceil(6));
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// Full graph6 string (order byte plus body) for graphs with at most 62 vertices.
pub fn to_graph6(g: &Graph) -> String {
    let mut s = String::new();
    s.push((g.order() as u8 + 63) as char);
    s.extend(graph6_body(g).into_iter().map(|b| b as char));
    s
}

/// Iterated refinement of vertex degrees into canonical colour ranks.
fn refine(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut color: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut classes = {
        let mut c = color.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap() as u32)
            .collect();
        color = next;
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Cell that each position must be filled from.
    slot_cell: Vec<VertexSet>,
    twins: [u16; MAX_ORDER],
    perm: [usize; MAX_ORDER],
    cols: [u16; MAX_ORDER],
    best: Option<([u16; MAX_ORDER], [usize; MAX_ORDER])>,
}

impl Search<'_> {
    fn go(&mut self, i: usize, used: VertexSet) {
        if i == self.n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => self.cols[..self.n] < b[..self.n],
            };
            if better {
                self.best = Some((self.cols, self.perm));
            }
            return;
        }
        let mut tried = 0u16;
        for v in self.slot_cell[i].difference(used).iter() {
            if self.twins[v] & tried != 0 {
                continue;
            }
            tried |= 1 << v;
            let mut col = 0u16;
            for j in 0..i {
                col = col << 1 | self.g.has_edge(self.perm[j], v) as u16;
            }
            self.cols[i] = col;
            if let Some((b, _)) = &self.best {
                if self.cols[..=i].cmp(&b[..=i]) == Ordering::Greater {
                    continue;
                }
            }
            self.perm[i] = v;
            let mut next = used;
            next.insert(v);
            self.go(i + 1, next);
        }
    }
}

/// Canonical relabelling of `g` and the labelling used: vertex `v` of `g`
/// becomes vertex `labeling[v]` of the returned graph.
pub fn canonical_form(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.order();
    let color = refine(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (color[v], v));
    let slot_cell: Vec<VertexSet> = order
        .iter()
        .map(|&v| (0..n).filter(|&w| color[w] == color[v]).collect())
        .collect();
    let mut twins = [0u16; MAX_ORDER];
    for (u, mask) in twins.iter_mut().enumerate().take(n) {
        for v in (0..n).filter(|&v| v != u) {
            let nu = g.neighbors(u).difference(VertexSet::singleton(v));
            let nv = g.neighbors(v).difference(VertexSet::singleton(u));
            if nu == nv {
                *mask |= 1 << v;
            }
        }
    }
    let mut search = Search {
        g,
        n,
        slot_cell,
        twins,
        perm: [0; MAX_ORDER],
        cols: [0; MAX_ORDER],
        best: None,
    };
    search.go(0, VertexSet::EMPTY);
    let (_, perm) = search.best.expect("at least one labelling exists");
    let mut labeling = vec![0; n];
    for (i, &v) in perm[..n].iter().enumerate() {
        labeling[v] = i;
    }
    let canon = g.relabel(&labeling).expect("search yields a permutation");
    (canon, labeling)
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    CanonicalCode::from_canonical_form(&canonical_form(g).0)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_code(g) == canonical_code(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    /// Reference: minimum graph6 body over all n! relabellings.
    fn brute_force_code(g: &Graph) -> Vec<u8> {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for i in 0..n {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        permutations(g.order())
            .into_iter()
            .map(|p| graph6_body(&g.relabel(&p).unwrap()))
            .min()
            .unwrap()
    }

    #[test]
    fn relabelled_c4_has_same_code() {
        let g = c4();
        let h = g.relabel(&[0, 2, 1, 3]).unwrap();
        assert_ne!(g, h);
        assert_eq!(canonical_code(&g), canonical_code(&h));
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn c4_and_p4_differ() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_ne!(canonical_code(&c4()), canonical_code(&p4));
        assert!(!are_isomorphic(&c4(), &p4));
    }

    #[test]
    fn bowtie_labellings_agree() {
        let a = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let b = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
    }

    #[test]
    fn k3_is_c3() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c3 = Graph::new(3, &[(2, 0), (0, 1), (1, 2)]).unwrap();
        assert!(are_isomorphic(&k3, &c3));
    }

    #[test]
    fn graph6_known_values() {
        // Five vertices, edges 0-2 0-4 1-3 3-4.
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
    }

    /// Two labelled graphs on five vertices get equal codes exactly when
    /// their brute-force minimum codes (over all 120 relabellings) agree.
    #[test]
    fn codes_partition_like_brute_force_on_five_vertices() {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let mut by_code = std::collections::HashMap::new();
        let mut by_brute = std::collections::HashMap::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(5, &edges).unwrap();
            let fast = canonical_code(&g);
            let slow = brute_force_code(&g);
            assert_eq!(*by_code.entry(fast.clone()).or_insert_with(|| slow.clone()), slow);
            assert_eq!(*by_brute.entry(slow).or_insert(fast.clone()), fast);
        }
        assert_eq!(by_code.len(), 34);
    }

    #[test]
    fn complete_graph_is_fast() {
        let edges: Vec<_> = (0..16).flat_map(|u| (u + 1..16).map(move |v| (u, v))).collect();
        let k16 = Graph::new(16, &edges).unwrap();
        let (canon, _) = canonical_form(&k16);
        assert_eq!(canon, k16);
    }
}
