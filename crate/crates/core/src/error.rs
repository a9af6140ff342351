use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A sub-expression is not analytic at the expansion point.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("derivative of order {requested} requested from a jet of order {available}")]
    Order { requested: usize, available: usize },

    #[error("matrix is singular (det = {det:e})")]
    Singular { det: f64 },

    /// `det Ḃ` vanishes, so the sliding velocity has no unique zero.
    #[error("no unique pole point: det of the velocity matrix is {det:e}")]
    SingularPole { det: f64 },

    #[error("curve passes through the origin (|alpha| = {norm:e})")]
    Origin { norm: f64 },

    #[error("cross sum a1a2 + a2a3 + a3a1 = {cross_sum:e} exceeds tolerance {tolerance:e}")]
    NotAdmissible { cross_sum: f64, tolerance: f64 },

    #[error("curve is not on the unit sphere at t = {t} (|alpha| = {norm})")]
    NotSpherical { t: f64, norm: f64 },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("unknown built-in curve `{0}`")]
    UnknownName(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("i/o error: {0}")]
    Io(String),
}
