use std::fmt;

use crate::error::{AdError, Result};
use crate::rules::{BinaryFn, UnaryFn};
use crate::scalar::AdScalar;

/// An expression over independent variables, evaluated in a fixed
/// post-order so every number type performs the same operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// Independent variable by 1-based identifier.
    Var(usize),
    Const(f64),
    Unary(UnaryFn, Box<Expr>),
    PowI(Box<Expr>, i32),
    Binary(BinaryFn, Box<Expr>, Box<Expr>),
    /// Mixed-mode product with a real.
    Scale(f64, Box<Expr>),
}

impl Expr {
    pub fn var(id: usize) -> Expr {
        Expr::Var(id)
    }

    pub fn constant(v: f64) -> Expr {
        Expr::Const(v)
    }

    pub fn unary(f: UnaryFn, e: Expr) -> Expr {
        Expr::Unary(f, Box::new(e))
    }

    pub fn powi(e: Expr, n: i32) -> Expr {
        Expr::PowI(Box::new(e), n)
    }

    pub fn binary(f: BinaryFn, a: Expr, b: Expr) -> Expr {
        Expr::Binary(f, Box::new(a), Box::new(b))
    }

    pub fn scale(a: f64, e: Expr) -> Expr {
        Expr::Scale(a, Box::new(e))
    }

    /// Leaves have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Expr::Var(_) | Expr::Const(_) => 0,
            Expr::Unary(_, e) | Expr::PowI(e, _) | Expr::Scale(_, e) => 1 + e.depth(),
            Expr::Binary(_, a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Largest identifier referenced, 0 for a constant tree.
    pub fn max_var(&self) -> usize {
        match self {
            Expr::Var(id) => *id,
            Expr::Const(_) => 0,
            Expr::Unary(_, e) | Expr::PowI(e, _) | Expr::Scale(_, e) => e.max_var(),
            Expr::Binary(_, a, b) => a.max_var().max(b.max_var()),
        }
    }

    /// Evaluates with `vars[k]` bound to identifier `k + 1`.
    pub fn eval<T: AdScalar>(&self, ctx: &T::Context, vars: &[T]) -> Result<T> {
        Ok(match self {
            Expr::Var(id) => {
                if *id == 0 || *id > vars.len() {
                    return Err(AdError::InvalidIdentifier(*id));
                }
                vars[id - 1].clone()
            }
            Expr::Const(v) => T::constant(ctx, *v),
            Expr::Unary(f, e) => e.eval(ctx, vars)?.unary(*f),
            Expr::PowI(e, n) => e.eval(ctx, vars)?.powi(*n),
            Expr::Binary(f, a, b) => {
                let a = a.eval(ctx, vars)?;
                let b = b.eval(ctx, vars)?;
                a.binary(*f, &b)?
            }
            Expr::Scale(a, e) => e.eval(ctx, vars)?.scale(*a),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(id) => write!(f, "x{id}"),
            Expr::Const(v) => write!(f, "{v}"),
            Expr::Unary(u, e) => write!(f, "{}({e})", u.name()),
            Expr::PowI(e, n) => write!(f, "({e})^{n}"),
            Expr::Binary(b, x, y) => write!(f, "{}({x}, {y})", b.name()),
            Expr::Scale(a, e) => write!(f, "{a}*({e})"),
        }
    }
}
