use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("weights {weights:?} do not sum to 0 mod {order}, so the group is not in SL(3)")]
    NotInSl3 { weights: [u32; 3], order: u32 },
    #[error("the weights do not define a faithful action")]
    NotFaithful,
    #[error("usage: {0}")]
    Usage(String),
    /// the fan or complex failed a structural check
    #[error("fan error: {0}")]
    Fan(String),
    /// a property that should hold for every group failed
    #[error("invariant violated: {0}")]
    Invariant(String),
    /// two independent computations disagree
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::NotInSl3 { .. } | Error::NotFaithful | Error::Usage(_) => 1,
            Error::Io(_) | Error::Json(_) => 1,
            Error::Fan(_) | Error::Invariant(_) => 2,
            Error::Inconsistency(_) => 3,
        }
    }
}
