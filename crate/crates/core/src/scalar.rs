//! A common interface over plain reals and the dual number types, so one
//! generic routine can be evaluated with values only, with sparse
//! derivatives, or with the dense oracle.

use crate::dual::SparseDual;
use crate::error::Result;
use crate::rules::{powi_local, BinaryFn, UnaryFn};

pub trait AdScalar: Clone + Sized {
    /// Problem-wide data needed to build leaves (the dense gradient length).
    type Context;

    fn constant(ctx: &Self::Context, value: f64) -> Self;
    fn variable(ctx: &Self::Context, id: usize, value: f64) -> Result<Self>;
    fn value(&self) -> f64;
    fn unary(&self, f: UnaryFn) -> Self;
    fn powi(&self, n: i32) -> Self;
    fn binary(&self, f: BinaryFn, rhs: &Self) -> Result<Self>;
    /// Mixed-mode product with a real.
    fn scale(&self, a: f64) -> Self;
}

impl AdScalar for f64 {
    type Context = ();

    fn constant(_: &(), value: f64) -> Self {
        value
    }

    fn variable(_: &(), id: usize, value: f64) -> Result<Self> {
        crate::dual::check_identifier(id)?;
        Ok(value)
    }

    fn value(&self) -> f64 {
        *self
    }

    fn unary(&self, f: UnaryFn) -> Self {
        (f.rule().value_fn)(*self)
    }

    fn powi(&self, n: i32) -> Self {
        powi_local(*self, n).0
    }

    fn binary(&self, f: BinaryFn, rhs: &Self) -> Result<Self> {
        Ok(f.value(*self, *rhs))
    }

    fn scale(&self, a: f64) -> Self {
        a * self
    }
}

impl AdScalar for SparseDual {
    type Context = ();

    fn constant(_: &(), value: f64) -> Self {
        SparseDual::constant(value)
    }

    fn variable(_: &(), id: usize, value: f64) -> Result<Self> {
        SparseDual::independent(id, value)
    }

    fn value(&self) -> f64 {
        SparseDual::value(self)
    }

    fn unary(&self, f: UnaryFn) -> Self {
        self.apply_unary(f)
    }

    fn powi(&self, n: i32) -> Self {
        SparseDual::powi(self, n)
    }

    fn binary(&self, f: BinaryFn, rhs: &Self) -> Result<Self> {
        self.apply_binary(f, rhs)
    }

    fn scale(&self, a: f64) -> Self {
        SparseDual::scale(self, a)
    }
}
