use thiserror::Error;

/// Errors raised by graph construction, index evaluation and the coloring space.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    NoSuchVertex { vertex: usize, n: usize },

    #[error("function has {got} values but the graph has {n} vertices")]
    FunctionLength { got: usize, n: usize },

    #[error("function is not locally injective at vertex {vertex}: neighbor {neighbor} has the same value")]
    NotLocallyInjective { vertex: usize, neighbor: usize },

    #[error("empty probability space: no proper {colors}-coloring exists (chromatic number {chromatic})")]
    EmptySpace { colors: u32, chromatic: u32 },

    #[error("invalid color count {0}; need at least 1")]
    InvalidColorCount(u32),

    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),

    #[error("invalid parameters for generator '{name}': {reason}")]
    InvalidParams { name: String, reason: String },

    #[error("coloring row {row} out of range; the space has {len} colorings")]
    RowOutOfRange { row: usize, len: usize },

    #[error("malformed graph input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
