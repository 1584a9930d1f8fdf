use thiserror::Error;

/// Errors raised by path, poset, tree and bijection operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("character {found:?} at position {position} is not a step letter")]
    BadAlphabet { found: char, position: usize },
    #[error("word {word:?} is not a Dyck word")]
    NonDyckWord { word: String },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("size mismatch: expected {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("size {size} exceeds the cap {cap}")]
    SizeTooLarge { size: usize, cap: usize },
    #[error("size must be at least 1")]
    EmptySize,
    #[error("span {start}..={end} does not fit in a word of length {len}")]
    SpanOutOfRange { start: usize, end: usize, len: usize },

    #[error("cover ({low}, {high}) refers to a missing element (poset has {len})")]
    CoverOutOfRange { low: usize, high: usize, len: usize },
    #[error("cover relation contains a cycle")]
    CycleDetected,
    #[error("element #{index} appears twice")]
    DuplicateElement { index: usize },
    #[error("element is not in the poset")]
    UnknownElement,
    #[error("elements are not comparable")]
    NotComparable,

    #[error("leaf {leaf} out of range 0..={max}")]
    LeafOutOfRange { leaf: usize, max: usize },
    #[error("node {node} out of range (tree has {size} nodes)")]
    NodeOutOfRange { node: usize, size: usize },
    #[error("cannot plug into the root edge")]
    RootEdgeForbidden,
    #[error("bottom is not below top in the Tamari order")]
    InvalidInterval,
    #[error("cannot parse tree from {text:?}")]
    BadTree { text: String },

    #[error("up step u_{index} is not preceded by a down step")]
    NotAValley { index: usize },
    #[error("bad increment function {text:?}")]
    BadDelta { text: String },
    #[error("rotation graph is not transitively reduced ({redundant} redundant covers)")]
    RotationGraphNotReduced { redundant: usize },

    #[error("structural classification disagrees with the poset for {bottom} -> {top}")]
    ClassificationMismatch { bottom: String, top: String },
    #[error("height {k} outside 2..{n}")]
    HeightOutOfRange { k: usize, n: usize },

    #[error("interval is not a covering relation")]
    NotACovering,
    #[error("interval is not a left interval")]
    NotLeft,
    #[error("interval is not a right interval")]
    NotRight,
    #[error("interval is not linear")]
    NotLinear,
    #[error("bad decomposition: {reason}")]
    BadDecomposition { reason: String },

    #[error("unknown property {name:?}")]
    UnknownProperty { name: String },

    #[error("order {order} exceeded (requested degree {degree})")]
    OrderExceeded { degree: usize, order: usize },
    #[error("series operation needs {what}")]
    SeriesDomain { what: &'static str },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
