use minktrig_core::GeometryError;
use serde::Serialize;

/// Process exit codes.
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;
pub const EXIT_VERIFY: u8 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Input(String),
    #[error("invalid input: {0}")]
    InvalidGeometry(GeometryError),
    #[error("{0}")]
    Domain(GeometryError),
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    schema: &'static str,
    error: &'a str,
    message: String,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => EXIT_DOMAIN,
            _ => EXIT_INPUT,
        }
    }

    /// Stable machine-readable code.
    pub fn code(&self) -> String {
        match self {
            CliError::Io(_) => "Io".into(),
            CliError::Json(_) => "MalformedJson".into(),
            CliError::Input(_) => "InvalidInput".into(),
            CliError::InvalidGeometry(e) | CliError::Domain(e) => variant_name(e),
        }
    }

    pub fn to_json(&self) -> String {
        let body = ErrorBody { schema: crate::num::SCHEMA, error: &self.code(), message: self.to_string() };
        serde_json::to_string(&body).expect("error body serializes")
    }
}

fn variant_name(e: &GeometryError) -> String {
    let debug = format!("{e:?}");
    debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_owned()
}
