//! Elementary functions on [`SparseDual`].
//!
//! At points where the value exists but the derivative does not (`abs` and
//! `sqrt` at 0, `asin`/`acos` at ±1, `atan2` at the origin, ties in
//! `max`/`min`, `sign` at zero arguments, `dim` at equality, `mod` and
//! `modulo` at exact multiples) every partial of the result is `NaN`.
//! Other domain violations follow IEEE arithmetic.

use crate::dual::SparseDual;
use crate::error::Result;
use crate::rules::{BinaryFn, UnaryFn, UnaryRule};

/// Applies `rule` to `x`: the value through `value_fn`, each partial scaled
/// by the local derivative. Indices are copied unchanged.
pub fn apply_unary(rule: UnaryFn, x: &SparseDual) -> SparseDual {
    x.apply_unary(rule)
}

/// Looks up a rule by name.
pub fn unary_rule(name: &str) -> Option<&'static UnaryRule> {
    UnaryFn::ALL
        .iter()
        .map(|f| f.rule())
        .find(|r| r.name == name)
}

/// `tanh` whose derivative switches to `4 exp(-2|x|)` for large `|x|`, so
/// it never overflows.
pub fn tanh_ad(x: &SparseDual) -> SparseDual {
    x.apply_unary(UnaryFn::Tanh)
}

pub fn atan2(y: &SparseDual, x: &SparseDual) -> Result<SparseDual> {
    y.apply_binary(BinaryFn::Atan2, x)
}

pub fn max2(a: &SparseDual, b: &SparseDual) -> Result<SparseDual> {
    a.apply_binary(BinaryFn::Max, b)
}

pub fn min2(a: &SparseDual, b: &SparseDual) -> Result<SparseDual> {
    a.apply_binary(BinaryFn::Min, b)
}

pub fn sign2(a: &SparseDual, b: &SparseDual) -> Result<SparseDual> {
    a.apply_binary(BinaryFn::Sign, b)
}

pub fn dim2(a: &SparseDual, b: &SparseDual) -> Result<SparseDual> {
    a.apply_binary(BinaryFn::Dim, b)
}

pub fn mod2(a: &SparseDual, b: &SparseDual) -> Result<SparseDual> {
    a.apply_binary(BinaryFn::Mod, b)
}

pub fn modulo2(a: &SparseDual, b: &SparseDual) -> Result<SparseDual> {
    a.apply_binary(BinaryFn::Modulo, b)
}

macro_rules! unary_methods {
    ($($name:ident => $f:ident),* $(,)?) => {
        impl SparseDual {
            $(
                pub fn $name(&self) -> SparseDual {
                    self.apply_unary(UnaryFn::$f)
                }
            )*
        }
    };
}

unary_methods! {
    sin => Sin,
    cos => Cos,
    tan => Tan,
    exp => Exp,
    ln => Log,
    log10 => Log10,
    sqrt => Sqrt,
    sinh => Sinh,
    cosh => Cosh,
    tanh => Tanh,
    asin => Asin,
    acos => Acos,
    atan => Atan,
    abs => Abs,
}

impl SparseDual {
    pub fn atan2(&self, x: &SparseDual) -> Result<SparseDual> {
        atan2(self, x)
    }

    pub fn max(&self, other: &SparseDual) -> Result<SparseDual> {
        max2(self, other)
    }

    pub fn min(&self, other: &SparseDual) -> Result<SparseDual> {
        min2(self, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual(value: f64, entries: &[(usize, f64)]) -> SparseDual {
        SparseDual::from_entries(value, entries.iter().copied()).unwrap()
    }

    fn all_nan(x: &SparseDual) -> bool {
        x.nnz() > 0 && x.partials().iter().all(|d| d.is_nan())
    }

    #[test]
    fn sin_output_verification_values() {
        let r = dual(1.0, &[(1, 2.0)]).sin();
        assert_eq!(r.value(), 0.8414709848078965);
        assert_eq!(format!("{:.15e}", r.partials()[0]), "1.080604611736280e0");
    }

    #[test]
    fn sqrt_at_zero_is_nan() {
        let r = dual(0.0, &[(1, 1.0)]).sqrt();
        assert_eq!(r.value(), 0.0);
        assert!(all_nan(&r));
    }

    #[test]
    fn passive_abs_at_zero_has_no_entries() {
        let r = SparseDual::constant(0.0).abs();
        assert_eq!(r.value(), 0.0);
        assert_eq!(r.nnz(), 0);
    }

    #[test]
    fn tanh_examples() {
        let r = tanh_ad(&dual(0.0, &[(1, 1.0)]));
        assert_eq!((r.value(), r.partials()[0]), (0.0, 1.0));
        let hi = tanh_ad(&dual(700.0, &[(1, 1.0)]));
        assert_eq!(hi.partials()[0], 4.0 * (-1400.0f64).exp());
        assert!(hi.partials()[0].is_finite());
        let lo = tanh_ad(&dual(-700.0, &[(1, 1.0)]));
        assert_eq!(lo.partials()[0].to_bits(), hi.partials()[0].to_bits());
    }

    #[test]
    fn max_examples() {
        let r = max2(&dual(2.0, &[(1, 1.0)]), &dual(1.0, &[(2, 1.0)])).unwrap();
        assert!(r.same_as(&dual(2.0, &[(1, 1.0)])));
        let tie = max2(&dual(1.0, &[(1, 1.0)]), &dual(1.0, &[(2, 1.0)])).unwrap();
        assert_eq!(tie.value(), 1.0);
        assert_eq!(tie.indices(), &[1, 2]);
        assert!(all_nan(&tie));
        let same = dual(1.0, &[(1, 1.0)]);
        assert!(max2(&same, &same.clone()).unwrap().same_as(&same));
        let m = min2(&dual(2.0, &[(1, 1.0)]), &dual(1.0, &[(2, 1.0)])).unwrap();
        assert!(m.same_as(&dual(1.0, &[(2, 1.0)])));
    }

    #[test]
    fn atan2_examples() {
        let r = atan2(&SparseDual::constant(0.0), &dual(1.0, &[(1, 1.0)])).unwrap();
        assert_eq!(r.value(), 0.0);
        assert_eq!(r.partials(), &[0.0]);
        let o = atan2(&dual(0.0, &[(1, 1.0)]), &dual(0.0, &[(2, 1.0)])).unwrap();
        assert!(all_nan(&o));
    }

    #[test]
    fn sign_dim_mod_nan_points() {
        assert!(all_nan(&sign2(&dual(0.0, &[(1, 1.0)]), &SparseDual::constant(2.0)).unwrap()));
        assert!(all_nan(&sign2(&SparseDual::constant(2.0), &dual(0.0, &[(1, 1.0)])).unwrap()));
        assert!(all_nan(&dim2(&dual(1.0, &[(1, 1.0)]), &SparseDual::constant(1.0)).unwrap()));
        assert!(all_nan(&mod2(&dual(6.0, &[(1, 1.0)]), &SparseDual::constant(3.0)).unwrap()));
        assert!(all_nan(&modulo2(&dual(-6.0, &[(1, 1.0)]), &SparseDual::constant(3.0)).unwrap()));
    }

    #[test]
    fn sign_passes_through_away_from_zero() {
        let r = sign2(&dual(-3.0, &[(1, 1.0)]), &dual(2.0, &[(2, 1.0)])).unwrap();
        assert_eq!(r.value(), 3.0);
        assert_eq!(r.partials(), &[-1.0, 0.0]);
    }

    #[test]
    fn dim_branches() {
        let a = dual(5.0, &[(1, 1.0)]);
        let b = dual(2.0, &[(2, 1.0)]);
        let r = dim2(&a, &b).unwrap();
        assert_eq!((r.value(), r.partials()), (3.0, &[1.0, -1.0][..]));
        let r = dim2(&b, &a).unwrap();
        assert_eq!(r.value(), 0.0);
        assert_eq!(r.indices(), &[1, 2]);
        assert!(r.partials().iter().all(|&d| d == 0.0));
    }

    #[test]
    fn rule_lookup_by_name() {
        assert_eq!(unary_rule("log10").unwrap().name, "log10");
        assert!(unary_rule("erf").is_none());
    }
}
