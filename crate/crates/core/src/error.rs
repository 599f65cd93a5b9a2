use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// An operation needed a populated field (objectives, rank, ...) that is unset.
    #[error("invalid state: {0}")]
    State(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("unknown name: {0}")]
    Lookup(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed data: {0}")]
    Parse(String),

    #[error("incomplete data, missing cells: {}", format_missing(.0))]
    IncompleteData(Vec<(String, String)>),
}

fn format_missing(cells: &[(String, String)]) -> String {
    cells.iter().map(|(p, a)| format!("({p}, {a})")).collect::<Vec<_>>().join(", ")
}

impl Error {
    pub(crate) fn dim(expected: usize, found: usize) -> Self {
        Error::Dimension { expected, found }
    }

    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 3,
            Error::IncompleteData(_) => 4,
            _ => 2,
        }
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        if e.is_io_error() {
            match e.into_kind() {
                csv::ErrorKind::Io(io) => Error::Io(io),
                other => Error::Parse(format!("{other:?}")),
            }
        } else {
            Error::Parse(e.to_string())
        }
    }
}
