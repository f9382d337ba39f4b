//! Rank-1 reductions and linear algebra over slices of [`SparseDual`].
//!
//! All folds run left to right in storage order, so the value channel of a
//! reduction is bit-identical to the same loop over plain reals.

use std::cmp::Ordering;

use crate::dual::SparseDual;
use crate::error::{AdError, Result};
use crate::rules::BinaryFn;

fn fold(v: &[SparseDual], init: f64, op: BinaryFn) -> Result<SparseDual> {
    v.iter()
        .try_fold(SparseDual::constant(init), |acc, x| acc.apply_binary(op, x))
}

/// `0 + v[0] + v[1] + ...`; empty input gives `constant(0.0)`.
pub fn sum(v: &[SparseDual]) -> Result<SparseDual> {
    fold(v, 0.0, BinaryFn::Add)
}

/// `1 * v[0] * v[1] * ...`; empty input gives `constant(1.0)`.
pub fn product(v: &[SparseDual]) -> Result<SparseDual> {
    fold(v, 1.0, BinaryFn::Mul)
}

pub fn dot_product(a: &[SparseDual], b: &[SparseDual]) -> Result<SparseDual> {
    if a.len() != b.len() {
        return Err(AdError::ShapeMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    a.iter()
        .zip(b)
        .try_fold(SparseDual::constant(0.0), |acc, (x, y)| {
            acc.try_add(&x.try_mul(y)?)
        })
}

/// Matrix-vector product; `rows` is the matrix in row-major order and every
/// row must have `x.len()` entries.
pub fn matmul(rows: &[Vec<SparseDual>], x: &[SparseDual]) -> Result<Vec<SparseDual>> {
    rows.iter().map(|row| dot_product(row, x)).collect()
}

fn extreme(v: &[SparseDual], op: BinaryFn) -> Result<SparseDual> {
    let (first, rest) = v.split_first().ok_or(AdError::EmptySequence)?;
    rest.iter()
        .try_fold(first.clone(), |acc, x| acc.apply_binary(op, x))
}

/// Fold of pairwise `max`, including its tie rule.
pub fn maxval(v: &[SparseDual]) -> Result<SparseDual> {
    extreme(v, BinaryFn::Max)
}

pub fn minval(v: &[SparseDual]) -> Result<SparseDual> {
    extreme(v, BinaryFn::Min)
}

fn locate(v: &[SparseDual], wanted: Ordering) -> Result<usize> {
    if v.is_empty() {
        return Err(AdError::EmptySequence);
    }
    let mut best = 0;
    for (k, x) in v.iter().enumerate().skip(1) {
        if x.value().partial_cmp(&v[best].value()) == Some(wanted) {
            best = k;
        }
    }
    Ok(best + 1)
}

/// 1-based position of the first maximum by value.
pub fn maxloc(v: &[SparseDual]) -> Result<usize> {
    locate(v, Ordering::Greater)
}

/// 1-based position of the first minimum by value.
pub fn minloc(v: &[SparseDual]) -> Result<usize> {
    locate(v, Ordering::Less)
}
