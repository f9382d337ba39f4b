//! Random expression trees whose operands stay inside the domains where the
//! derivatives exist.
//!
//! Arguments of restricted functions are mapped first: `log`, `log10` and
//! `sqrt` see `cosh(u) >= 1`; `asin`, `acos` and `tan` see `sin(u)`; `exp`,
//! `sinh` and `cosh` see `atan(u)`; divisors, `pow` bases and `mod` divisors
//! see `cosh(u)`; `pow` exponents see `sin(u)`.

use rand::Rng;

use super::Expr;
use crate::rules::{BinaryFn, UnaryFn};

pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, max_depth: usize, n_vars: usize) -> Expr {
    assert!(n_vars >= 1, "need at least one independent variable");
    node(rng, max_depth, n_vars)
}

/// Values for identifiers `1..=n_vars`, uniform in `[-2, 2]`.
pub fn random_point<R: Rng + ?Sized>(rng: &mut R, n_vars: usize) -> Vec<f64> {
    (0..n_vars).map(|_| rng.gen_range(-2.0..=2.0)).collect()
}

fn signed<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    let m = rng.gen_range(lo..=hi);
    if rng.gen_bool(0.5) {
        m
    } else {
        -m
    }
}

/// A point where `f` is differentiable, kept far enough from singularities
/// and poles for central differences to be accurate.
pub fn unary_sample<R: Rng + ?Sized>(f: UnaryFn, rng: &mut R) -> f64 {
    match f {
        UnaryFn::Neg | UnaryFn::Sin | UnaryFn::Cos | UnaryFn::Atan => rng.gen_range(-10.0..=10.0),
        UnaryFn::Tan => rng.gen_range(-1.4..=1.4),
        UnaryFn::Exp | UnaryFn::Sinh | UnaryFn::Cosh | UnaryFn::Tanh => rng.gen_range(-5.0..=5.0),
        UnaryFn::Log | UnaryFn::Log10 | UnaryFn::Sqrt => rng.gen_range(0.1..=10.0),
        UnaryFn::Asin | UnaryFn::Acos => rng.gen_range(-0.9..=0.9),
        UnaryFn::Abs => signed(rng, 0.1, 5.0),
    }
}

/// Operand pair where `f` is differentiable in both arguments, away from
/// ties, sign changes, branch cuts and jumps.
pub fn binary_sample<R: Rng + ?Sized>(f: BinaryFn, rng: &mut R) -> (f64, f64) {
    match f {
        BinaryFn::Add | BinaryFn::Sub | BinaryFn::Mul => {
            (rng.gen_range(-5.0..=5.0), rng.gen_range(-5.0..=5.0))
        }
        BinaryFn::Div => (rng.gen_range(-5.0..=5.0), signed(rng, 0.5, 5.0)),
        BinaryFn::Pow => (rng.gen_range(0.2..=5.0), rng.gen_range(-2.0..=2.0)),
        BinaryFn::Atan2 => (signed(rng, 0.2, 5.0), rng.gen_range(-5.0..=5.0)),
        BinaryFn::Max | BinaryFn::Min | BinaryFn::Dim => {
            let a = rng.gen_range(-5.0..=5.0);
            (a, a + signed(rng, 0.1, 3.0))
        }
        BinaryFn::Sign => (signed(rng, 0.1, 5.0), signed(rng, 0.1, 5.0)),
        BinaryFn::Mod | BinaryFn::Modulo => {
            let b = signed(rng, 0.5, 3.0);
            let q = f64::from(rng.gen_range(-5i32..=5));
            (b * (q + rng.gen_range(0.1..=0.9)), b)
        }
    }
}

fn leaf<R: Rng + ?Sized>(rng: &mut R, n_vars: usize) -> Expr {
    if rng.gen_bool(0.7) {
        Expr::var(rng.gen_range(1..=n_vars))
    } else {
        Expr::constant(rng.gen_range(-2.0..=2.0))
    }
}

fn wrap(f: UnaryFn, e: Expr) -> Expr {
    Expr::unary(f, e)
}

fn node<R: Rng + ?Sized>(rng: &mut R, budget: usize, n_vars: usize) -> Expr {
    if budget == 0 || rng.gen_bool(0.2) {
        return leaf(rng, n_vars);
    }
    // restricted operands spend one level on their mapping
    let inner = budget.saturating_sub(2);
    let direct = budget - 1;
    match rng.gen_range(0..10) {
        0..=3 => {
            let f = UnaryFn::ALL[rng.gen_range(0..UnaryFn::ALL.len())];
            let restricted = matches!(
                f,
                UnaryFn::Log
                    | UnaryFn::Log10
                    | UnaryFn::Sqrt
                    | UnaryFn::Asin
                    | UnaryFn::Acos
                    | UnaryFn::Tan
                    | UnaryFn::Exp
                    | UnaryFn::Sinh
                    | UnaryFn::Cosh
            );
            let mapped = restricted && budget >= 2;
            let arg = if mapped {
                let u = node(rng, inner, n_vars);
                match f {
                    UnaryFn::Log | UnaryFn::Log10 | UnaryFn::Sqrt => wrap(UnaryFn::Cosh, u),
                    UnaryFn::Asin | UnaryFn::Acos | UnaryFn::Tan => wrap(UnaryFn::Sin, u),
                    _ => wrap(UnaryFn::Atan, u),
                }
            } else {
                match f {
                    UnaryFn::Log | UnaryFn::Log10 | UnaryFn::Sqrt => {
                        Expr::constant(rng.gen_range(0.5..=2.0))
                    }
                    UnaryFn::Asin | UnaryFn::Acos => Expr::constant(rng.gen_range(-0.9..=0.9)),
                    UnaryFn::Tan | UnaryFn::Exp | UnaryFn::Sinh | UnaryFn::Cosh => leaf(rng, n_vars),
                    _ => node(rng, direct, n_vars),
                }
            };
            Expr::unary(f, arg)
        }
        4 => Expr::powi(node(rng, direct, n_vars), rng.gen_range(-2..=3)),
        5 => Expr::scale(rng.gen_range(-3.0..=3.0), node(rng, direct, n_vars)),
        _ => {
            let f = BinaryFn::ALL[rng.gen_range(0..BinaryFn::ALL.len())];
            match f {
                BinaryFn::Div | BinaryFn::Mod | BinaryFn::Modulo if budget >= 2 => {
                    let a = node(rng, direct, n_vars);
                    let b = wrap(UnaryFn::Cosh, node(rng, inner, n_vars));
                    Expr::binary(f, a, b)
                }
                BinaryFn::Pow if budget >= 2 => {
                    let a = wrap(UnaryFn::Cosh, node(rng, inner, n_vars));
                    let b = wrap(UnaryFn::Sin, node(rng, inner, n_vars));
                    Expr::binary(f, a, b)
                }
                BinaryFn::Pow => {
                    let b = leaf(rng, n_vars);
                    Expr::binary(f, Expr::constant(rng.gen_range(0.5..=2.0)), b)
                }
                BinaryFn::Div | BinaryFn::Mod | BinaryFn::Modulo => {
                    let a = leaf(rng, n_vars);
                    Expr::binary(f, a, Expr::constant(rng.gen_range(0.5..=2.0)))
                }
                _ => Expr::binary(f, node(rng, direct, n_vars), node(rng, direct, n_vars)),
            }
        }
    }
}
