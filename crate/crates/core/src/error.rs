//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building models, checking
/// specifications, or running the synthesis.
#[derive(Debug, Error)]
pub enum Error {
    /// A frequency grid was empty, unsorted, or contained non-finite values.
    #[error("invalid frequency grid: {0}")]
    InvalidGrid(String),

    /// Two FRFs (or an FRF and a weight set) live on different grids.
    #[error("frequency grid mismatch: {0}")]
    GridMismatch(String),

    /// Matrix shapes are inconsistent.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// The dynamic stiffness matrix (-w^2 M + iwD + K) is numerically
    /// singular at some evaluation frequency.
    #[error("dynamic stiffness singular at omega = {omega} rad/s")]
    SingularDynamicStiffness { omega: f64 },

    /// (I - K_BB G_B) is too ill-conditioned to close the interconnection.
    #[error("ill-posed interconnection at omega = {omega} rad/s (rcond = {rcond:.3e})")]
    IllPosedInterconnection { omega: f64, rcond: f64 },

    /// A channel index addressed a non-existent input/output.
    #[error("channel index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    /// A relative specification was requested around a baseline whose
    /// 2-norm vanishes at some frequency.
    #[error("baseline FRF has zero norm at omega = {omega} rad/s; relative bound undefined")]
    ZeroBaselineNorm { omega: f64 },

    /// An operation defined only for single-input single-output data was
    /// called on a MIMO quantity.
    #[error("operation requires a SISO quantity, got {rows}x{cols}")]
    NotSiso { rows: usize, cols: usize },

    /// A matrix expected to be Hermitian was not (beyond tolerance).
    #[error("matrix is not Hermitian (max asymmetry {max_asym:.3e})")]
    NotHermitian { max_asym: f64 },

    /// Dimensions of weights, scalings, and the nominal operator disagree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The weight optimization is infeasible at the listed frequencies:
    /// the system specification is too tight for the sufficient condition,
    /// even with module weights at their floor.
    #[error("synthesis infeasible at {} frequency point(s), first at omega = {first} rad/s", omegas.len())]
    Infeasible { omegas: Vec<f64>, first: f64 },

    /// The interior-point solver failed to make progress.
    #[error("solver failure: {0}")]
    SolverFailure(String),

    /// A sampled module-level perturbation within its specification broke
    /// the system specification. This indicates an implementation bug.
    #[error(
        "guarantee violated for sample {sample}: system margin {system_margin} at omega = {omega} rad/s"
    )]
    GuaranteeViolated {
        sample: usize,
        system_margin: f64,
        omega: f64,
    },

    /// A builder or perturbation was handed parameters that produce an
    /// invalid model.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// File / serialization problem, with the offending path.
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// JSON (de)serialization problem, with the offending path.
    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },
}
