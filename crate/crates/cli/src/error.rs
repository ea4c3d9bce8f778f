use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Input(_) => 65,
            CliError::Resource(_) => 69,
        }
    }
}

impl From<bigram_uniq::Error> for CliError {
    fn from(e: bigram_uniq::Error) -> Self {
        use bigram_uniq::Error as E;
        match e {
            E::BudgetExceeded { .. } | E::Overflow(_) => CliError::Resource(e.to_string()),
            E::AlphabetTooLarge(_) | E::EmptyAlphabet => CliError::Usage(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("bad automaton document: {}", e))
    }
}

pub type CliResult<T> = Result<T, CliError>;
