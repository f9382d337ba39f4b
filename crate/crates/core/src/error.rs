use thiserror::Error;

/// Errors raised by the differentiation library.
///
/// Undefined derivatives and floating-point domain violations are not
/// errors; they surface as IEEE `NaN`/`Inf` in the value or partials.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdError {
    #[error("derivative capacity exceeded: {required} entries needed, capacity is {capacity}")]
    CapacityOverflow { required: usize, capacity: usize },

    #[error("invalid independent-variable identifier {0}: identifiers start at 1")]
    InvalidIdentifier(usize),

    #[error("duplicate independent-variable identifier {0}")]
    DuplicateIdentifier(usize),

    #[error("invalid capacity {0}: capacity must be at least 1")]
    InvalidCapacity(usize),

    #[error("configuration is frozen with capacity {current}; cannot change it to {requested}")]
    ConfigFrozen { current: usize, requested: usize },

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: usize, found: usize },

    #[error("operation requires a non-empty sequence")]
    EmptySequence,
}

pub type Result<T> = std::result::Result<T, AdError>;
