//! Error types shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PlabicError {
    #[error("malformed graph description: {0}")]
    BadSpec(String),
    #[error("edge {edge} joins two vertices of the same color")]
    NonBipartite { edge: usize },
    #[error("boundary vertex b_{index} must be black of degree one")]
    BoundaryDegree { index: usize },
    #[error("rotation list at vertex {vertex} does not match its incident edges")]
    BadRotation { vertex: usize },
    #[error("rotation system does not embed in the disk")]
    NonPlanarEmbedding,
    #[error("strand starting at b_{start} never returns to the boundary")]
    StrandCycle { start: usize },
    #[error("graph admits no almost perfect matching")]
    NoMatching,
    #[error("graph limit admits no almost perfect matching; gauge fixing was needed before the limit")]
    LimitNoMatching,
    #[error("move site does not match the {move_name} pattern: {reason}")]
    PatternMismatch { move_name: &'static str, reason: String },
    #[error("fixed point {index} is matched in some but not all matchings; graph is not reduced")]
    LoopColoopAmbiguous { index: usize },
    #[error("weight for edge {edge} is missing or negative")]
    BadWeight { edge: usize },
}

#[derive(Debug, Error)]
pub enum PermError {
    #[error("window value f({j}) = {value} violates j <= f(j) <= j+n")]
    OutOfBounds { j: usize, value: i64 },
    #[error("window values are not distinct modulo n")]
    NotBijective,
    #[error("sum of f(j) - j is {sum}, not a multiple of n")]
    BadSum { sum: i64 },
    #[error("permutation has a loop at {j}")]
    HasLoop { j: usize },
    #[error("interval of length {len} must be shorter than the period {n}")]
    IntervalTooLong { len: usize, n: usize },
    #[error("arch certificate needs t, j, g(j-1) pairwise distinct")]
    DegenerateIndices,
    #[error("intervals do not form an n-periodic partition")]
    BadPartition,
    #[error("strand diagram is disconnected")]
    DisconnectedDiagram,
    #[error("need k <= n-2 with four disjoint blocks")]
    BadSquareInput,
}

#[derive(Debug, Error)]
pub enum PosetError {
    #[error("poset axioms fail: {0}")]
    BadPoset(String),
    #[error("subset is not a tube: {0}")]
    NotATube(String),
    #[error("tube collection is not a tubing: {0}")]
    NotATubing(String),
    #[error("enumeration bound exceeded: {0}")]
    TooLarge(String),
    #[error("tuple is not a circular chain")]
    NotAChain,
    #[error("order polytope point invalid: {0}")]
    BadPoint(String),
    #[error("tubing partition of data for tube {tube} does not match the children in the tubing")]
    StratumMismatch { tube: String },
    #[error("missing order-polytope datum for tube {tube}")]
    MissingData { tube: String },
    #[error("exact backend cannot evaluate a sine; point has no maximal proper tube")]
    ExactSine,
}

#[derive(Debug, Error)]
pub enum CritError {
    #[error(transparent)]
    Plabic(#[from] PlabicError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("angles are not admissible: crossing pair ({p},{q}) violates theta_p < theta_q < theta_p + pi")]
    NotAdmissible { p: usize, q: usize },
    #[error("graph carries a degenerate strand label at edge {edge}; contract it first")]
    NotContracted { edge: usize },
    #[error("pruned graph admits no almost perfect matching; this would contradict the matching-existence guarantee")]
    PrunedNoMatching,
    #[error("point is not in the second hypersimplex: {0}")]
    NotInHypersimplex(String),
    #[error("side {index} exceeds the sum of the others")]
    PolygonInequalityViolated { index: usize },
    #[error("reduction branch unavailable: k and k+1 both lie in the special interval")]
    BranchUnavailable,
    #[error("seed ratios malformed: {0}")]
    BadSeed(String),
}
