use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed edge list (line {line}): {message}")]
    EdgeList { line: usize, message: String },

    #[error("{what}: graph has {n} vertices, limit is {limit}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("biclique enumeration exceeded the cap of {cap} bicliques")]
    BicliqueCapExceeded { cap: usize },

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("edge {0}-{1} is an isolated edge; its line graph has an isolated vertex")]
    IsolatedEdge(usize, usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("girth {0} is below five")]
    GirthBelowFive(usize),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid parameters for {name}: {message}")]
    InvalidParameter { name: String, message: String },

    #[error("budget exceeded at step {step}: {reason}")]
    BudgetExceeded { step: usize, reason: String },
}
