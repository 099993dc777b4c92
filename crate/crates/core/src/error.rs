use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("non-admissible relations: {0}")]
    NonAdmissible(String),
    #[error("inconsistent path: {0}")]
    InconsistentPath(String),
    #[error("cut is not admissible: {0}")]
    NonHomogeneousCut(String),

    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not projective: {0}")]
    NotProjective(String),
    #[error("not injective: {0}")]
    NotInjective(String),
    #[error("field too small: characteristic {p} must exceed {needed}")]
    FieldTooSmall { p: u64, needed: usize },
    #[error("invalid bimodule: {0}")]
    BimoduleInvalid(String),
    #[error("chain map lift failed: {0}")]
    LiftFailed(String),

    #[error("global dimension {found} exceeds 2")]
    GlobalDimensionTooHigh { found: String },
    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    #[error("terms do not present the module: {0}")]
    TermsDoNotPresent(String),
    #[error("Gorenstein violation: {0}")]
    GorensteinViolation(String),
    #[error("no cut in the family induces {0}")]
    NoInducingCut(String),
    #[error("certificate search failed: {0}")]
    CertificateSearchFailed(String),
}

impl Error {
    /// Process exit code: 1 falsified conclusion, 2 input error, 3 hypothesis violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TermsDoNotPresent(_) | Error::GorensteinViolation(_) => 1,
            Error::GlobalDimensionTooHigh { .. }
            | Error::HypothesisViolation(_)
            | Error::NoInducingCut(_) => 3,
            Error::CertificateSearchFailed(_) => 1,
            _ => 2,
        }
    }
}
