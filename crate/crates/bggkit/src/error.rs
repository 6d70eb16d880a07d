use thiserror::Error;

#[derive(Debug, Error)]
pub enum BggError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid extension: {0}")]
    InvalidExtension(String),
    #[error("degenerate pairing: {0}")]
    DegeneratePairing(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("no normal extension under these gauge constraints (homogeneity {0})")]
    NoNormalExtension(i64),
    #[error("iteration did not terminate: {0}")]
    NonTermination(String),
    #[error("unknown geometry {name:?}; valid names: {valid}")]
    UnknownGeometry { name: String, valid: String },
    #[error("unknown representation {0:?}")]
    UnknownRepresentation(String),
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<BggError>,
    },
}

impl BggError {
    pub fn at(self, stage: &'static str) -> BggError {
        BggError::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, BggError>;
