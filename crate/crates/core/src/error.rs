use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a rooted graph needs at least one non-root vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range 0..={max}")]
    VertexOutOfRange { vertex: usize, max: usize },
    #[error("invalid adjacency: {0}")]
    InvalidAdjacency(String),
    #[error("cannot remove {requested} rooted edges at vertex {vertex}: only {available} present")]
    RemovalExceeds {
        vertex: usize,
        requested: u64,
        available: u64,
    },
    #[error("invalid vertex subset: {0}")]
    InvalidSubset(String),
    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix order {order} exceeds the limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("matrix is not in G_n: {0}")]
    NotInGn(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("exponent vector has {found} entries, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("ideal is not Artinian: no pure power of x{variable}")]
    NotArtinian { variable: usize },
    #[error("exponent box volume {volume} exceeds the limit {limit}")]
    BoxTooLarge { volume: u128, limit: u128 },
    #[error("graph has {edges} edges, enumeration limit is {limit}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("{what}: {count} subsets exceed the limit {limit}")]
    TooManySubsets {
        what: &'static str,
        count: u128,
        limit: u128,
    },
    #[error("skeleton index {k} out of range 0..={max}")]
    SkeletonIndex { k: usize, max: usize },
    #[error("not a subgraph of any K^(a,1): pair ({u}, {v}) has multiplicity {multiplicity}")]
    NotSubgraphOfKa1 { u: usize, v: usize, multiplicity: u64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown suite `{name}`; available: {available}")]
    UnknownSuite { name: String, available: String },
}
