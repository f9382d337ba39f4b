//! Process-wide derivative capacity.
//!
//! Every [`SparseDual`](crate::SparseDual) in a process is bounded by the
//! same capacity: the maximum number of derivative entries a single value
//! may carry. The configuration may be installed once, before any dual is
//! built; the first read freezes it (falling back to [`DEFAULT_CAPACITY`]).

use std::sync::OnceLock;

use crate::error::{AdError, Result};

/// Capacity used when nothing was installed before the first dual was built.
pub const DEFAULT_CAPACITY: usize = 64;

static GLOBAL: OnceLock<ADConfig> = OnceLock::new();

/// What happens when an operation would produce more derivative entries
/// than the capacity allows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OverflowPolicy {
    /// Fail the operation with [`AdError::CapacityOverflow`].
    #[default]
    Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ADConfig {
    capacity: usize,
    overflow_policy: OverflowPolicy,
}

impl ADConfig {
    pub fn new(capacity: usize) -> Result<Self> {
        if capacity == 0 {
            return Err(AdError::InvalidCapacity(capacity));
        }
        Ok(Self {
            capacity,
            overflow_policy: OverflowPolicy::Error,
        })
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn overflow_policy(&self) -> OverflowPolicy {
        self.overflow_policy
    }

    /// Installs `self` as the process-wide configuration.
    ///
    /// Succeeds if no configuration is frozen yet, or if the frozen one is
    /// identical. Any attempt to change a frozen configuration fails with
    /// [`AdError::ConfigFrozen`].
    pub fn install(self) -> Result<()> {
        let frozen = GLOBAL.get_or_init(|| self);
        if *frozen == self {
            Ok(())
        } else {
            Err(AdError::ConfigFrozen {
                current: frozen.capacity,
                requested: self.capacity,
            })
        }
    }

    /// Returns the process-wide configuration, freezing the default if none
    /// was installed.
    #[inline]
    pub fn current() -> ADConfig {
        *GLOBAL.get_or_init(|| ADConfig {
            capacity: DEFAULT_CAPACITY,
            overflow_policy: OverflowPolicy::Error,
        })
    }

    /// Whether a configuration has been frozen in this process.
    pub fn is_frozen() -> bool {
        GLOBAL.get().is_some()
    }
}

#[inline]
pub(crate) fn capacity() -> usize {
    ADConfig::current().capacity
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_capacity_rejected() {
        assert_eq!(ADConfig::new(0), Err(AdError::InvalidCapacity(0)));
    }

    #[test]
    fn frozen_config_rejects_changes() {
        let current = ADConfig::current();
        assert!(ADConfig::is_frozen());
        assert!(current.install().is_ok());
        let other = ADConfig::new(current.capacity() + 1).unwrap();
        assert_eq!(
            other.install(),
            Err(AdError::ConfigFrozen {
                current: current.capacity(),
                requested: current.capacity() + 1,
            })
        );
    }
}
