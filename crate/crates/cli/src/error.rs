use std::fmt;
use std::path::Path;

use mems_core::MemsError;

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SIZE: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;
pub const EXIT_UNWRITABLE: i32 = 5;
pub const EXIT_SHAPE: i32 = 6;
pub const EXIT_CONFIG: i32 = 7;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn unwritable(path: &Path, err: impl fmt::Display) -> Self {
        Self::new(EXIT_UNWRITABLE, format!("cannot write {}: {err}", path.display()))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<MemsError> for CliError {
    fn from(err: MemsError) -> Self {
        let code = match &err {
            MemsError::DimensionMismatch { .. }
            | MemsError::ZeroNorm(_)
            | MemsError::InvalidDims(_)
            | MemsError::DigitOutOfRange { .. }
            | MemsError::WeightInvalid(_)
            | MemsError::Parse { .. }
            | MemsError::Io(_) => EXIT_PARSE,
            MemsError::InvalidSize { .. } | MemsError::SubsetInvalid { .. } | MemsError::SizeOutOfRange(_) => {
                EXIT_SIZE
            }
            MemsError::NotPsd(_) | MemsError::NotNormalized(_) | MemsError::NotHermitian(_) => EXIT_NUMERICAL,
            MemsError::ShapeMismatch(_) => EXIT_SHAPE,
            MemsError::ConfigInvalid(_) => EXIT_CONFIG,
        };
        CliError::new(code, err.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
