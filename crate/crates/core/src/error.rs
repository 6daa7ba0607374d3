use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Bloch vector has norm {norm}, which exceeds 1")]
    UnphysicalBloch { norm: f64 },

    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("trace is {trace}, expected 1")]
    TraceNotOne { trace: f64 },

    #[error("matrix has negative eigenvalue {eigenvalue:e}")]
    NotPositive { eigenvalue: f64 },

    #[error("{which} is not unitary (deviation {deviation:e})")]
    NotUnitary { which: &'static str, deviation: f64 },

    #[error("invalid probability vector {0:?}")]
    InvalidProbabilities([f64; 4]),

    #[error("{name} = {value} is outside its allowed range {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("probe axes disagree on the shift by {deviation:e}")]
    InconsistentShift { deviation: f64 },

    #[error("Kraus and affine forms disagree by {deviation:e}")]
    PathMismatch { deviation: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
