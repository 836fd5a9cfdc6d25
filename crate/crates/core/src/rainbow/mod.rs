//! Edge colorings, rainbow paths and the rainbow connection number.

mod formula;
mod oracle;
mod solver;

pub use formula::{formula_rc_cycle, formula_rc_fan};
pub use oracle::rc_oracle;
pub use solver::{exists_rainbow_coloring, rc_exact, rc_lower_bound, RcResult};

use crate::error::RainbowError;
use crate::graph::{Edge, Graph, VertexSet, MAX_ORDER};

/// Colors are `u8` identifiers below this cap; color sets are `u16` masks.
pub const MAX_COLORS: usize = 16;

/// A color in `0..k` for every edge of one particular graph. Colors are
/// listed in the graph's lexicographic edge order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    order: usize,
    edges: Vec<Edge>,
    colors: Vec<u8>,
    k: usize,
}

impl EdgeColoring {
    /// `colors[i]` colors the `i`-th edge of `g.edges()`.
    pub fn new(g: &Graph, colors: &[usize], k: usize) -> Result<Self, RainbowError> {
        if k > MAX_COLORS {
            return Err(RainbowError::TooManyColors { k });
        }
        let edges = g.edges();
        if colors.len() != edges.len() {
            return Err(RainbowError::ColoringMismatch(format!(
                "{} colors for {} edges",
                colors.len(),
                edges.len()
            )));
        }
        if let Some(&color) = colors.iter().find(|&&c| c >= k) {
            return Err(RainbowError::ColorOutOfRange { color, k });
        }
        Ok(EdgeColoring {
            order: g.order(),
            edges,
            colors: colors.iter().map(|&c| c as u8).collect(),
            k,
        })
    }

    /// Builds a coloring from `(u, v, color)` triples that must mention every
    /// edge of `g` exactly once. `k` is one more than the largest color.
    pub fn from_triples(g: &Graph, triples: &[(usize, usize, usize)]) -> Result<Self, RainbowError> {
        let edges = g.edges();
        let mut colors: Vec<Option<usize>> = vec![None; edges.len()];
        for &(u, v, c) in triples {
            let key = (u.min(v), u.max(v));
            let idx = edges
                .binary_search(&key)
                .map_err(|_| RainbowError::ColoringMismatch(format!("{{{u},{v}}} is not an edge")))?;
            if colors[idx].replace(c).is_some() {
                return Err(RainbowError::ColoringMismatch(format!(
                    "edge {{{u},{v}}} colored twice"
                )));
            }
        }
        let colors: Vec<usize> = colors
            .into_iter()
            .zip(&edges)
            .map(|(c, &(u, v))| {
                c.ok_or_else(|| RainbowError::ColoringMismatch(format!("edge {{{u},{v}}} has no color")))
            })
            .collect::<Result<_, _>>()?;
        let k = colors.iter().max().map_or(1, |&c| c + 1);
        EdgeColoring::new(g, &colors, k)
    }

    /// Every edge gets color 0.
    pub fn monochromatic(g: &Graph) -> Self {
        EdgeColoring::new(g, &vec![0; g.size()], 1).expect("one color")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn colors(&self) -> impl Iterator<Item = usize> + '_ {
        self.colors.iter().map(|&c| c as usize)
    }

    /// Declared color count; may exceed the number of colors in use.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.edges
            .binary_search(&(u.min(v), u.max(v)))
            .ok()
            .map(|i| self.colors[i] as usize)
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().fold(0u16, |m, &c| m | 1 << c).count_ones() as usize
    }

    /// `(u, v, color)` per edge in lexicographic edge order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges
            .iter()
            .zip(&self.colors)
            .map(|(&(u, v), &c)| (u, v, c as usize))
    }

    /// Applies `rename` to every color. The result declares `k` colors.
    pub fn renamed(&self, rename: &[usize], k: usize) -> Result<Self, RainbowError> {
        if k > MAX_COLORS {
            return Err(RainbowError::TooManyColors { k });
        }
        let mut colors = Vec::with_capacity(self.colors.len());
        for &c in &self.colors {
            let to = *rename.get(c as usize).ok_or(RainbowError::ColorOutOfRange {
                color: c as usize,
                k: rename.len(),
            })?;
            if to >= k {
                return Err(RainbowError::ColorOutOfRange { color: to, k });
            }
            colors.push(to as u8);
        }
        Ok(EdgeColoring {
            colors,
            k,
            ..self.clone()
        })
    }

    /// Extends this coloring of `g` to a coloring of the supergraph `h`,
    /// giving each new edge the corresponding entry of `extra`.
    pub fn extended(&self, h: &Graph, extra: &[usize], k: usize) -> Result<Self, RainbowError> {
        let mut extra = extra.iter();
        let colors: Vec<usize> = h
            .edges()
            .iter()
            .map(|&(u, v)| {
                self.color_of(u, v)
                    .or_else(|| extra.next().copied())
                    .ok_or_else(|| RainbowError::ColoringMismatch("not enough colors for new edges".into()))
            })
            .collect::<Result<_, _>>()?;
        EdgeColoring::new(h, &colors, k)
    }

    fn check_graph(&self, g: &Graph) -> Result<(), RainbowError> {
        if self.order != g.order() || self.edges != g.edges() {
            return Err(RainbowError::ColoringMismatch(
                "coloring refers to a different graph".into(),
            ));
        }
        Ok(())
    }

    fn color_matrix(&self) -> [[u8; MAX_ORDER]; MAX_ORDER] {
        let mut m = [[u8::MAX; MAX_ORDER]; MAX_ORDER];
        for (&(u, v), &c) in self.edges.iter().zip(&self.colors) {
            m[u][v] = c;
            m[v][u] = c;
        }
        m
    }
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "EdgeColoring(k={}, {:?})",
            self.k,
            self.triples().collect::<Vec<_>>()
        )
    }
}

/// Vertices reachable from `source` along a trail whose edge colors are
/// pairwise distinct. A trail with distinct colors shortcuts to a path using
/// a subset of its colors, so this is exactly the set of vertices joined to
/// `source` by a rainbow path.
///
/// Dynamic program over (vertex, used-color set) states, at most n * 2^k.
/// Stops early once `stop_at` is fully reached.
fn rainbow_reach(
    g: &Graph,
    colors: &[[u8; MAX_ORDER]; MAX_ORDER],
    k: usize,
    source: usize,
    stop_at: VertexSet,
) -> VertexSet {
    if stop_at.is_empty() {
        return VertexSet::singleton(source);
    }
    let states = 1usize << k;
    let mut seen = vec![false; g.order() * states];
    let mut reached = VertexSet::singleton(source);
    let mut stack = vec![(source, 0u16)];
    seen[source * states] = true;
    while let Some((u, used)) = stack.pop() {
        for w in g.neighbors(u).iter() {
            let bit = 1u16 << colors[u][w];
            if used & bit != 0 {
                continue;
            }
            let next = used | bit;
            let slot = w * states + next as usize;
            if !seen[slot] {
                seen[slot] = true;
                reached.insert(w);
                if stop_at.difference(reached).is_empty() {
                    return reached;
                }
                stack.push((w, next));
            }
        }
    }
    reached
}

/// Whether some `u`-`v` path in `g` has pairwise distinct edge colors.
pub fn rainbow_path_exists(g: &Graph, c: &EdgeColoring, u: usize, v: usize) -> Result<bool, RainbowError> {
    c.check_graph(g)?;
    for w in [u, v] {
        if w >= g.order() {
            return Err(crate::error::GraphError::VertexOutOfRange {
                vertex: w,
                n: g.order(),
            }
            .into());
        }
    }
    let target = VertexSet::singleton(v);
    Ok(rainbow_reach(g, &c.color_matrix(), c.k(), u, target).contains(v))
}

pub(crate) fn rainbow_connected_unchecked(
    g: &Graph,
    colors: &[[u8; MAX_ORDER]; MAX_ORDER],
    k: usize,
) -> bool {
    let n = g.order();
    (0..n).all(|u| {
        let later = VertexSet::full(n).difference(VertexSet::full(u + 1));
        later.difference(rainbow_reach(g, colors, k, u, later)).is_empty()
    })
}

/// Rainbow path between every pair of vertices.
pub fn is_rainbow_connected(g: &Graph, c: &EdgeColoring) -> Result<bool, RainbowError> {
    c.check_graph(g)?;
    Ok(rainbow_connected_unchecked(g, &c.color_matrix(), c.k()))
}

/// Outcome of checking a supplied coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringReport {
    /// Pairs `(u, v)`, `u < v`, without a rainbow path, in lexicographic order.
    pub failing_pairs: Vec<(usize, usize)>,
}

impl ColoringReport {
    pub fn passed(&self) -> bool {
        self.failing_pairs.is_empty()
    }
}

pub fn verify_coloring(g: &Graph, c: &EdgeColoring) -> Result<ColoringReport, RainbowError> {
    c.check_graph(g)?;
    let n = g.order();
    let colors = c.color_matrix();
    let mut failing_pairs = Vec::new();
    for u in 0..n {
        let later = VertexSet::full(n).difference(VertexSet::full(u + 1));
        let reach = rainbow_reach(g, &colors, c.k(), u, later);
        failing_pairs.extend(later.difference(reach).iter().map(|v| (u, v)));
    }
    Ok(ColoringReport { failing_pairs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    /// Colors given around the cycle: edge {i, i+1 mod n} gets `around[i]`.
    fn cycle_coloring(n: usize, around: &[usize], k: usize) -> (Graph, EdgeColoring) {
        let g = cycle(n);
        let triples: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, around[i])).collect();
        let c = EdgeColoring::from_triples(&g, &triples).unwrap();
        (g, c.renamed(&(0..c.k()).collect::<Vec<_>>(), k).unwrap())
    }

    #[test]
    fn path_exists_small() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let mono = EdgeColoring::monochromatic(&p3);
        assert!(!rainbow_path_exists(&p3, &mono, 0, 2).unwrap());
        assert!(rainbow_path_exists(&p3, &mono, 0, 1).unwrap());
        assert!(rainbow_path_exists(&p3, &mono, 1, 1).unwrap());
        let (c4, col) = cycle_coloring(4, &[0, 1, 0, 1], 2);
        assert!(rainbow_path_exists(&c4, &col, 0, 2).unwrap());
        assert!(rainbow_path_exists(&c4, &col, 1, 3).unwrap());
        assert!(rainbow_path_exists(&c4, &col, 0, 4).is_err());
    }

    #[test]
    fn connected_small() {
        let k3 = cycle(3);
        assert!(is_rainbow_connected(&k3, &EdgeColoring::monochromatic(&k3)).unwrap());
        let (c6, col) = cycle_coloring(6, &[0, 1, 2, 0, 1, 2], 3);
        assert!(is_rainbow_connected(&c6, &col).unwrap());
    }

    #[test]
    fn no_two_coloring_of_c6() {
        let g = cycle(6);
        for mask in 0u32..64 {
            let colors: Vec<usize> = (0..6).map(|i| (mask >> i & 1) as usize).collect();
            let c = EdgeColoring::new(&g, &colors, 2).unwrap();
            assert!(!is_rainbow_connected(&g, &c).unwrap());
        }
    }

    #[test]
    fn report_lists_failing_pairs() {
        let k3 = cycle(3);
        assert!(verify_coloring(&k3, &EdgeColoring::monochromatic(&k3))
            .unwrap()
            .passed());
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let r = verify_coloring(&p3, &EdgeColoring::monochromatic(&p3)).unwrap();
        assert_eq!(r.failing_pairs, vec![(0, 2)]);
        let (c4, col) = cycle_coloring(4, &[0, 1, 0, 1], 2);
        assert!(verify_coloring(&c4, &col).unwrap().passed());
    }

    #[test]
    fn coloring_validation() {
        let g = cycle(4);
        assert!(matches!(
            EdgeColoring::new(&g, &[0, 1, 2], 3),
            Err(RainbowError::ColoringMismatch(_))
        ));
        assert_eq!(
            EdgeColoring::new(&g, &[0, 1, 2, 3], 3),
            Err(RainbowError::ColorOutOfRange { color: 3, k: 3 })
        );
        assert_eq!(
            EdgeColoring::new(&g, &[0; 4], 17),
            Err(RainbowError::TooManyColors { k: 17 })
        );
        assert!(EdgeColoring::from_triples(&g, &[(0, 1, 0), (1, 2, 0), (2, 3, 0)]).is_err());
        assert!(EdgeColoring::from_triples(&g, &[(0, 1, 0), (1, 0, 0), (2, 3, 0), (0, 3, 0)]).is_err());
        assert!(EdgeColoring::from_triples(&g, &[(0, 2, 0), (1, 2, 0), (2, 3, 0), (0, 3, 0)]).is_err());
        let other = EdgeColoring::monochromatic(&cycle(5));
        assert!(is_rainbow_connected(&g, &other).is_err());
    }
}
