use thiserror::Error;

/// Crate-wide error type. Every fallible operation reports the offending
/// vertex, edge, or parameter so failures are diagnosable without a debugger.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop ({0},{0}) is not allowed in a simple graph")]
    SelfLoop(usize),

    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(usize, usize),

    #[error("vertex {v} out of range for a graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("edge ({0},{1}) is not in the graph")]
    EdgeNotInGraph(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("order {n} exceeds the canonical-labeling bound {bound}; use the streaming dedup-free mode instead")]
    CertificateBound { n: usize, bound: usize },

    #[error("order {n} exceeds the supported maximum {max} for exact index arithmetic")]
    OrderTooLarge { n: usize, max: usize },

    #[error("closed form requires order >= 3, got {0}")]
    ClosedFormOrder(usize),

    #[error("revised Szeged mismatch between direct and identity routes: direct {direct}, identity {identity} (internal bug)")]
    SzStarMismatch { direct: i64, identity: i64 },

    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),

    #[error("unknown base multigraph id {0:?}")]
    UnknownBase(String),

    #[error("assignment for base {base} expects {expected} path lengths, got {got}")]
    LengthCount {
        base: String,
        expected: usize,
        got: usize,
    },

    #[error("path length {0} is below the minimum of 1")]
    LengthTooSmall(usize),

    #[error("loop subdivision needs length >= 3, got {0}")]
    LoopTooShort(usize),

    #[error("two parallel edges between vertices {u} and {v} both have length 1")]
    ParallelUnitPaths { u: usize, v: usize },

    #[error("order {n} too small: {reason}")]
    OrderTooSmall { n: usize, reason: &'static str },

    #[error("order {n} outside the supported range {lo}..={hi} for this operation")]
    OrderOutOfRange { n: usize, lo: usize, hi: usize },

    #[error("empty range: {lo}..{hi}")]
    EmptyRange { lo: usize, hi: usize },

    #[error("range {lo}..={hi} requires {what}")]
    InvalidRange {
        lo: usize,
        hi: usize,
        what: &'static str,
    },

    #[error("need at least one sample, got {0}")]
    NoSamples(usize),

    #[error("io: {0}")]
    Io(String),

    #[error("record parse error at line {line}: {msg}")]
    RecordParse { line: usize, msg: String },

    #[error(
        "record invariant violated at line {line}: sz4 {sz4} + dsq {dsq} != (n+2)*n^2 for n={n}"
    )]
    RecordInvariant {
        line: usize,
        n: usize,
        sz4: i64,
        dsq: i64,
    },
}

/// Decoding errors for the graph6 byte format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,

    #[error("malformed header")]
    MalformedHeader,

    #[error("order {0} exceeds the supported graph6 maximum 258047")]
    TooLarge(usize),

    #[error("truncated body: expected {expected} bytes, got {got}")]
    Truncated { expected: usize, got: usize },

    #[error("trailing garbage: expected {expected} body bytes, got {got}")]
    TrailingGarbage { expected: usize, got: usize },

    #[error("byte {0:#04x} outside the printable graph6 range 63..=126")]
    InvalidByte(u8),

    #[error("nonzero padding bit for out-of-range vertex pair")]
    PaddingBit,
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
