use thiserror::Error;

/// Failure modes shared by all solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LcpsError {
    /// A configured size cap would be exceeded. `resource` names the cap.
    #[error("{resource} capacity exceeded: {required} required, cap is {cap}")]
    CapacityExceeded {
        resource: &'static str,
        required: u128,
        cap: u128,
    },
    #[error("input of length {len} exceeds the brute-force limit of {max}")]
    InputTooLarge { len: usize, max: usize },
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
}

pub type Result<T, E = LcpsError> = std::result::Result<T, E>;
