//! Brute-force rainbow connection number: every `k^m` coloring, no pruning.

use crate::error::{GraphError, RainbowError};
use crate::graph::{Graph, MAX_ORDER};

use super::rainbow_connected_unchecked;

/// Largest edge count the oracle accepts.
pub const ORACLE_MAX_EDGES: usize = 10;

/// Smallest `k` such that some coloring among all `k^m` colorings is rainbow
/// connected. Independent of the backtracking solver; used to validate it.
pub fn rc_oracle(g: &Graph) -> Result<usize, RainbowError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    if g.order() < 2 {
        return Err(GraphError::TooSmall {
            what: "rc",
            min: 2,
            got: g.order(),
        }
        .into());
    }
    let edges = g.edges();
    let m = edges.len();
    if m > ORACLE_MAX_EDGES {
        return Err(RainbowError::OracleTooLarge { m });
    }
    for k in 1..=m {
        let mut digits = vec![0u8; m];
        loop {
            let mut colors = [[u8::MAX; MAX_ORDER]; MAX_ORDER];
            for (&(u, v), &c) in edges.iter().zip(&digits) {
                colors[u][v] = c;
                colors[v][u] = c;
            }
            if rainbow_connected_unchecked(g, &colors, k) {
                return Ok(k);
            }
            // Odometer increment in base k.
            let mut i = 0;
            while i < m && digits[i] as usize == k - 1 {
                digits[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
            digits[i] += 1;
        }
    }
    unreachable!("m distinct colors rainbow-connect every connected graph")
}
