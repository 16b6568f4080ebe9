use majorana::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Degenerate(_) => 4,
            CliError::Io(_) | CliError::Numeric(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Unsupported(_) => CliError::Unsupported(msg),
            Error::Degenerate(_) | Error::Divergent(_) | Error::Domain(_) | Error::SingularMobius => {
                CliError::Degenerate(msg)
            }
            Error::NoConvergence(_) => CliError::Numeric(msg),
            _ => CliError::Parse(msg),
        }
    }
}
