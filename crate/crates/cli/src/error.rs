use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unknown or conflicting flags, malformed config files.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] covosc_core::Error),
    #[error("{0}")]
    Io(String),
    /// `--help` and `--version`; carries the rendered text.
    #[error("{0}")]
    Info(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Info(_) => 0,
            CliError::Core(e) if e.is_numeric_integrity() => 2,
            _ => 1,
        }
    }

    /// First line of the message, for the error stream.
    pub fn diagnostic(&self) -> String {
        let text = self.to_string();
        let line = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .unwrap_or("error");
        line.trim().to_string()
    }
}

impl From<clap::Error> for CliError {
    fn from(e: clap::Error) -> Self {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                CliError::Info(e.render().to_string())
            }
            _ => CliError::Usage(e.render().to_string()),
        }
    }
}
