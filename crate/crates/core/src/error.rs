use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("loop at vertex {0} is not allowed here")]
    Loop(usize),

    #[error("no parts")]
    NoParts,

    #[error("part {0} has size zero")]
    EmptyPart(usize),

    #[error("oracle limit: {what} supports at most {limit}, got {got}")]
    OracleLimit {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("search limit: C({n},2) = {edges} edges exceeds the limit of {limit}")]
    SearchLimit {
        n: usize,
        edges: usize,
        limit: usize,
    },

    #[error("enumeration limit: {0}")]
    EnumerationLimit(String),

    #[error("not a tournament: {0}")]
    NotTournament(String),

    #[error("arity mismatch: coloring uses {colors} colors but {spec} clique sizes were given")]
    ArityMismatch { colors: usize, spec: usize },

    #[error("color {color} out of range for {color_count} colors")]
    ColorOutOfRange { color: usize, color_count: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("bad length: expected {expected} letters, got {got}")]
    BadLength { expected: usize, got: usize },

    #[error("bad letter {letter:?} at position {position} for alphabet size {alphabet}")]
    BadAlphabet {
        letter: char,
        position: usize,
        alphabet: usize,
    },

    #[error("wrap mismatch: the last {0} letters must repeat the first {0}")]
    WrapMismatch(usize),

    #[error("window {window} repeated at position {position}")]
    RepeatedWindow { window: String, position: usize },

    #[error("words have different parameters")]
    MixedParameters,

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
