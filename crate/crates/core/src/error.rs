use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input violated an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Numeric quadrature did not reach the requested accuracy.
    #[error("quadrature did not converge: estimated error {estimate:e} above tolerance {tolerance:e}")]
    Accuracy { estimate: f64, tolerance: f64 },

    /// The kernel-weighted normal matrix could not be factored.
    #[error("weighted normal matrix is numerically singular (condition estimate {condition:e})")]
    Singular { condition: f64 },

    /// Filter weights left the finite range guarded by the divergence check.
    #[error("filter diverged: weight norm {norm:e}")]
    Diverged { norm: f64 },

    /// A sweep configuration value failed validation.
    #[error("invalid config at `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed results file: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }
}
