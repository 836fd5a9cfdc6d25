use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("order {n} exceeds the cap of 16 vertices")]
    OrderTooLarge { n: usize },
    #[error("vertex {vertex} is out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("duplicate edge {{{u},{v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("{{{u},{v}}} is not an edge")]
    MissingEdge { u: usize, v: usize },
    #[error("not a permutation of the vertex set")]
    BadPermutation,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{{{u},{v}}} is not an edge of the current outer face")]
    NotOuterEdge { u: usize, v: usize },
    #[error("chords {first:?} and {second:?} cross")]
    CrossingChords {
        first: (usize, usize),
        second: (usize, usize),
    },
    #[error("{what} requires at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RainbowError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("coloring does not match the graph: {0}")]
    ColoringMismatch(String),
    #[error("color {color} is not below the color count {k}")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("{k} colors exceeds the cap of 16")]
    TooManyColors { k: usize },
    #[error("brute-force oracle refuses {m} edges (cap is 10)")]
    OracleTooLarge { m: usize },
    #[error("formula is only stated for n >= {min}, got {n}")]
    FormulaDomain { n: usize, min: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {n} exceeds the enumeration cap of {cap} for this class")]
    CapExceeded { n: usize, cap: usize },
    #[error("order {n} is below the minimum of {min} for this class")]
    OrderTooSmall { n: usize, min: usize },
}
