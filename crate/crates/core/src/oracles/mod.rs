//! Independent references for checking the sparse core: a dense forward
//! mode dual with one gradient slot per independent variable, central
//! finite differences, and a random expression-tree generator.

mod dense;
mod expr;
mod fd;
pub mod random;

pub use dense::{dense_eval, first_mismatch, same_bits, DenseDual};
pub use expr::Expr;
pub use fd::{fd_column, fd_jacobian, fd_matches, StepRule};
