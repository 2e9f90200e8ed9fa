/// Errors surfaced by the CLI layer.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// A format/content combination that has no defined rendering
    /// (e.g. b-file output for anything but the lcm-binomial values).
    #[error("invalid format: {0}")]
    InvalidFormat(String),

    /// A b-file snapshot that does not follow the "index value" line format.
    #[error("malformed b-file at line {line}: {reason}")]
    MalformedBfile { line: usize, reason: String },

    #[error(transparent)]
    Core(#[from] lcm_binomial::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
