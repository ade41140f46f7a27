use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex count {0} outside supported range 1..={1}")]
    VertexCount(usize, usize),
    #[error("vertex {0} out of range for n = {1}")]
    VertexRange(usize, usize),
    #[error("arc ({0}, {0}) is a loop")]
    Loop(usize),
    #[error("duplicate arc for pair {{{0}, {1}}}")]
    DuplicatePair(usize, usize),
    #[error("missing arc for pair {{{0}, {1}}}")]
    MissingPair(usize, usize),
    #[error("duplicate vertex {0} in subset")]
    DuplicateVertex(usize),
    #[error("invalid rotational symbol: {0}")]
    InvalidSymbol(String),
    #[error("{0} is not a prime congruent to 3 mod 4")]
    NotQrPrime(usize),
    #[error("doubly regular tournaments require order 3 mod 4, got {0}")]
    NotDoublyRegularOrder(usize),
    #[error("not a tournament score sequence: {0}")]
    NotScoreSequence(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("n = {0} exceeds the enumeration budget max_n = {1}; raise the budget explicitly")]
    OverBudget(usize, usize),
    #[error("regular tournaments require an odd vertex count, got {0}")]
    EvenOrder(usize),
    #[error("alpha = {0} is not supported by this routine: {1}")]
    BadAlpha(f64, &'static str),
    #[error("Laplacian trace is zero; normalization undefined")]
    ZeroTrace,
    #[error("digraph has no arcs")]
    Arcless,
    #[error("matrix dimensions do not match: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("root finding did not converge: {0}")]
    NonConvergence(String),
    #[error("spectrum is not real within tolerance: max |Im| = {0:.3e}")]
    NonRealSpectrum(f64),
    #[error("invalid probability distribution: {0}")]
    BadDistribution(String),
    #[error("invalid walk configuration: {0}")]
    BadWalkConfig(String),
    #[error("order elements must share a vertex count: found {0} and {1}")]
    MixedOrder(usize, usize),
    #[error("empty input: {0}")]
    Empty(&'static str),
}
