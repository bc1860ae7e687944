use thiserror::Error;

/// Violations of the ribbon graph structural invariants.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("dangling half-edge {0}: it appears in no vertex rotation")]
    DanglingHalfEdge(String),
    #[error("duplicate occurrence of half-edge {0}")]
    DuplicateHalfEdge(String),
    #[error("unpaired edge: half-edge {0} refers to an undeclared edge")]
    UnpairedEdge(String),
    #[error("duplicate edge label {0}")]
    DuplicateEdge(String),
    #[error("duplicate vertex name {0}")]
    DuplicateVertex(String),
    #[error("invalid label {0:?}")]
    InvalidLabel(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown edge {0}")]
    UnknownEdge(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("{what}: size {actual} exceeds the cap of {cap} (raise it with {flag})")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        cap: usize,
        flag: &'static str,
    },
    #[error("ribbon graph is not connected")]
    Disconnected,
    #[error("ribbon graph is not a bouquet")]
    NotABouquet,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("arrow presentation: label {label} occurs {count} times (expected 2)")]
    ArrowLabelCount { label: String, count: usize },
    #[error("diagram error: {0}")]
    Diagram(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_cap(what: &'static str, actual: usize, cap: usize, flag: &'static str) -> Result<()> {
    if actual > cap {
        Err(Error::CapExceeded {
            what,
            actual,
            cap,
            flag,
        })
    } else {
        Ok(())
    }
}
