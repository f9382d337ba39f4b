//! Forward-mode automatic differentiation with sparse derivative vectors.
//!
//! A [`SparseDual`] carries a value together with the first partial
//! derivatives it actually has, stored as a sorted list of 1-based
//! independent-variable identifiers and a parallel list of partials. When
//! each output depends on only a few of many independent variables, this
//! keeps every value small and every operation proportional to the number
//! of dependencies rather than to the problem size.
//!
//! ```
//! use spardiff::{derivative, independents, value};
//!
//! let x = independents(&[1.0, 5.0]).unwrap();
//! let f: Vec<_> = x.iter().map(|xi| (xi * xi).sin()).collect();
//! assert_eq!(value(&f[0]), 1f64.sin());
//! assert_eq!(derivative(&f[0], 1).unwrap(), 2.0 * 1f64.cos());
//! assert_eq!(derivative(&f[0], 2).unwrap(), 0.0);
//! ```
//!
//! The maximum number of entries any value may hold is set once per process
//! through [`ADConfig::install`]; operations that would exceed it fail with
//! [`AdError::CapacityOverflow`]. [`fillin`] reports the capacity a
//! computation actually needed.

pub mod array;
mod config;
mod dual;
pub mod elemental;
mod error;
pub mod oracles;
pub mod rules;
mod scalar;
mod seed;

pub use config::{ADConfig, OverflowPolicy, DEFAULT_CAPACITY};
pub use dual::SparseDual;
pub use error::{AdError, Result};
pub use rules::{BinaryFn, UnaryFn, UnaryRule};
pub use scalar::AdScalar;
pub use seed::{
    derivative, fillin, independents, jacobian_into, jacobian_len, jacobian_triplets,
    seed_independent, value, FillinReport, JacobianTriplets,
};
