//! Fixed inputs shared by the benchmarks.

use rainbow_core::{enumerate_bridgeless_outerplanar, families, Graph};

/// Named graphs for the solver benchmarks, roughly in order of difficulty.
pub fn solver_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("bowtie", families::bowtie()),
        ("fan6", families::fan(6).unwrap()),
        ("fan9", families::fan(9).unwrap()),
        ("cycle9", families::cycle(9).unwrap()),
        ("cycle12", families::cycle(12).unwrap()),
    ]
}

/// Every bridgeless outerplanar graph of order `n` with diameter `d`.
pub fn diameter_class(n: usize, d: usize) -> Vec<Graph> {
    enumerate_bridgeless_outerplanar(n)
        .unwrap()
        .into_iter()
        .filter(|g| g.diameter() == Some(d))
        .collect()
}
