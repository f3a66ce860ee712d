use thiserror::Error;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("scenario: {0}")]
    Scenario(String),
    #[error("{context}: {source}")]
    Core {
        context: String,
        #[source]
        source: tricat_core::Error,
    },
    #[error("report: {0}")]
    Report(String),
}

/// Runs `$body` with `$k` bound to the field named by a `FieldSpec`.
#[macro_export]
macro_rules! dispatch {
    ($spec:expr, |$k:ident| $body:expr) => {{
        let spec: tricat_core::FieldSpec = $spec;
        match spec.kind() {
            tricat_core::FieldKind::Rationals => {
                let $k = tricat_core::Rationals;
                $body
            }
            tricat_core::FieldKind::PrimeField => {
                let $k = tricat_core::PrimeField::new(spec.characteristic())
                    .map_err(|e| $crate::error::CliError::Scenario(format!("field: {e}")))?;
                $body
            }
        }
    }};
}
