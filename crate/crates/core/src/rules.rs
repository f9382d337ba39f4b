//! Local derivative rules for every elementary operation.
//!
//! The sparse dual, the dense oracle and plain `f64` evaluation all draw
//! their values and local derivatives from this table, so the three number
//! types perform the same floating-point operations for each node.
//!
//! A binary node `h(a, b)` propagates as `h' = da * a' + db * b'` for every
//! identifier in the union of the operands' index sets, with an absent
//! partial read as `0.0`.

use std::f64::consts::LOG10_E;

/// Decimal exponent range of `f64` (Fortran's `range`): 307.
pub const DECIMAL_RANGE: i32 = if -f64::MIN_10_EXP < f64::MAX_10_EXP {
    -f64::MIN_10_EXP
} else {
    f64::MAX_10_EXP
};

/// `|x|` at which the tanh derivative switches from `1/cosh(x)^2` to
/// `4 exp(-2|x|)`: twice the decimal exponent range, 614 for `f64`.
pub const TANH_SWITCH: f64 = 2.0 * DECIMAL_RANGE as f64;

/// dtanh/dx without overflow.
pub fn tanh_multiplier(x: f64) -> f64 {
    let ax = x.abs();
    if ax < TANH_SWITCH {
        let sech = 1.0 / x.cosh();
        sech * sech
    } else {
        4.0 * (-2.0 * ax).exp()
    }
}

/// A scalar function with its derivative.
#[derive(Debug)]
pub struct UnaryRule {
    pub name: &'static str,
    pub value_fn: fn(f64) -> f64,
    /// dg/du evaluated at the operand value.
    pub derivative_fn: fn(f64) -> f64,
    /// True where the derivative does not exist although the value does.
    pub singular_fn: fn(f64) -> bool,
    pub domain_note: &'static str,
}

impl UnaryRule {
    /// Local derivative at `x`, with `NaN` at non-differentiable points.
    #[inline]
    pub fn multiplier(&self, x: f64) -> f64 {
        if (self.singular_fn)(x) {
            f64::NAN
        } else {
            (self.derivative_fn)(x)
        }
    }
}

fn never(_: f64) -> bool {
    false
}

fn at_zero(x: f64) -> bool {
    x == 0.0
}

fn at_unit(x: f64) -> bool {
    x.abs() == 1.0
}

fn sign_of(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        f64::NAN
    }
}

static NEG: UnaryRule = UnaryRule {
    name: "neg",
    value_fn: |x| -x,
    derivative_fn: |_| -1.0,
    singular_fn: never,
    domain_note: "everywhere differentiable",
};
static SIN: UnaryRule = UnaryRule {
    name: "sin",
    value_fn: f64::sin,
    derivative_fn: f64::cos,
    singular_fn: never,
    domain_note: "everywhere differentiable",
};
static COS: UnaryRule = UnaryRule {
    name: "cos",
    value_fn: f64::cos,
    derivative_fn: |x| -x.sin(),
    singular_fn: never,
    domain_note: "everywhere differentiable",
};
static TAN: UnaryRule = UnaryRule {
    name: "tan",
    value_fn: f64::tan,
    derivative_fn: |x| {
        let c = x.cos();
        1.0 / (c * c)
    },
    singular_fn: never,
    domain_note: "poles at odd multiples of pi/2 follow IEEE",
};
static EXP: UnaryRule = UnaryRule {
    name: "exp",
    value_fn: f64::exp,
    derivative_fn: f64::exp,
    singular_fn: never,
    domain_note: "everywhere differentiable",
};
static LOG: UnaryRule = UnaryRule {
    name: "log",
    value_fn: f64::ln,
    derivative_fn: |x| 1.0 / x,
    singular_fn: never,
    domain_note: "x <= 0 follows IEEE",
};
static LOG10: UnaryRule = UnaryRule {
    name: "log10",
    value_fn: f64::log10,
    derivative_fn: |x| LOG10_E / x,
    singular_fn: never,
    domain_note: "x <= 0 follows IEEE",
};
static SQRT: UnaryRule = UnaryRule {
    name: "sqrt",
    value_fn: f64::sqrt,
    derivative_fn: |x| 0.5 / x.sqrt(),
    singular_fn: at_zero,
    domain_note: "derivative undefined at 0; x < 0 follows IEEE",
};
static SINH: UnaryRule = UnaryRule {
    name: "sinh",
    value_fn: f64::sinh,
    derivative_fn: f64::cosh,
    singular_fn: never,
    domain_note: "everywhere differentiable",
};
static COSH: UnaryRule = UnaryRule {
    name: "cosh",
    value_fn: f64::cosh,
    derivative_fn: f64::sinh,
    singular_fn: never,
    domain_note: "everywhere differentiable",
};
static TANH: UnaryRule = UnaryRule {
    name: "tanh",
    value_fn: f64::tanh,
    derivative_fn: tanh_multiplier,
    singular_fn: never,
    domain_note: "everywhere differentiable; derivative never overflows",
};
static ASIN: UnaryRule = UnaryRule {
    name: "asin",
    value_fn: f64::asin,
    derivative_fn: |x| 1.0 / (1.0 - x * x).sqrt(),
    singular_fn: at_unit,
    domain_note: "derivative undefined at +-1; |x| > 1 follows IEEE",
};
static ACOS: UnaryRule = UnaryRule {
    name: "acos",
    value_fn: f64::acos,
    derivative_fn: |x| -1.0 / (1.0 - x * x).sqrt(),
    singular_fn: at_unit,
    domain_note: "derivative undefined at +-1; |x| > 1 follows IEEE",
};
static ATAN: UnaryRule = UnaryRule {
    name: "atan",
    value_fn: f64::atan,
    derivative_fn: |x| 1.0 / (1.0 + x * x),
    singular_fn: never,
    domain_note: "everywhere differentiable",
};
static ABS: UnaryRule = UnaryRule {
    name: "abs",
    value_fn: f64::abs,
    derivative_fn: sign_of,
    singular_fn: at_zero,
    domain_note: "derivative undefined at 0",
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnaryFn {
    Neg,
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Log10,
    Sqrt,
    Sinh,
    Cosh,
    Tanh,
    Asin,
    Acos,
    Atan,
    Abs,
}

impl UnaryFn {
    pub const ALL: [UnaryFn; 15] = [
        UnaryFn::Neg,
        UnaryFn::Sin,
        UnaryFn::Cos,
        UnaryFn::Tan,
        UnaryFn::Exp,
        UnaryFn::Log,
        UnaryFn::Log10,
        UnaryFn::Sqrt,
        UnaryFn::Sinh,
        UnaryFn::Cosh,
        UnaryFn::Tanh,
        UnaryFn::Asin,
        UnaryFn::Acos,
        UnaryFn::Atan,
        UnaryFn::Abs,
    ];

    pub fn rule(self) -> &'static UnaryRule {
        match self {
            UnaryFn::Neg => &NEG,
            UnaryFn::Sin => &SIN,
            UnaryFn::Cos => &COS,
            UnaryFn::Tan => &TAN,
            UnaryFn::Exp => &EXP,
            UnaryFn::Log => &LOG,
            UnaryFn::Log10 => &LOG10,
            UnaryFn::Sqrt => &SQRT,
            UnaryFn::Sinh => &SINH,
            UnaryFn::Cosh => &COSH,
            UnaryFn::Tanh => &TANH,
            UnaryFn::Asin => &ASIN,
            UnaryFn::Acos => &ACOS,
            UnaryFn::Atan => &ATAN,
            UnaryFn::Abs => &ABS,
        }
    }

    pub fn name(self) -> &'static str {
        self.rule().name
    }
}

/// Value and multiplier of `a^n` for an integer exponent.
#[inline]
pub fn powi_local(a: f64, n: i32) -> (f64, f64) {
    (a.powi(n), f64::from(n) * a.powi(n.saturating_sub(1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryFn {
    Add,
    Sub,
    Mul,
    Div,
    /// `a^b` for a real exponent, computed as `exp(b ln a)`.
    Pow,
    /// `atan2(a, b)`, with `a` the ordinate.
    Atan2,
    Max,
    Min,
    /// `|a|` carrying the sign of `b`.
    Sign,
    /// Positive difference `max(a - b, 0)`.
    Dim,
    /// `a - trunc(a/b) b`.
    Mod,
    /// `a - floor(a/b) b`.
    Modulo,
}

/// Value and local partials of a binary node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinaryLocal {
    pub value: f64,
    pub da: f64,
    pub db: f64,
    /// The derivative does not exist if `a` carries dependencies.
    pub undefined_in_a: bool,
    /// The derivative does not exist if `b` carries dependencies.
    pub undefined_in_b: bool,
}

impl BinaryLocal {
    fn smooth(value: f64, da: f64, db: f64) -> Self {
        Self {
            value,
            da,
            db,
            undefined_in_a: false,
            undefined_in_b: false,
        }
    }

    fn undefined_if(mut self, in_a: bool, in_b: bool) -> Self {
        self.undefined_in_a = in_a;
        self.undefined_in_b = in_b;
        self
    }
}

/// Which operand `max`/`min` picks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    First,
    Second,
    Tie,
}

impl BinaryFn {
    pub const ALL: [BinaryFn; 12] = [
        BinaryFn::Add,
        BinaryFn::Sub,
        BinaryFn::Mul,
        BinaryFn::Div,
        BinaryFn::Pow,
        BinaryFn::Atan2,
        BinaryFn::Max,
        BinaryFn::Min,
        BinaryFn::Sign,
        BinaryFn::Dim,
        BinaryFn::Mod,
        BinaryFn::Modulo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BinaryFn::Add => "add",
            BinaryFn::Sub => "sub",
            BinaryFn::Mul => "mul",
            BinaryFn::Div => "div",
            BinaryFn::Pow => "pow",
            BinaryFn::Atan2 => "atan2",
            BinaryFn::Max => "max",
            BinaryFn::Min => "min",
            BinaryFn::Sign => "sign",
            BinaryFn::Dim => "dim",
            BinaryFn::Mod => "mod",
            BinaryFn::Modulo => "modulo",
        }
    }

    /// `Some` for the selection functions `Max` and `Min`, which copy one
    /// operand instead of combining partials.
    #[inline]
    pub fn select(self, a: f64, b: f64) -> Option<Selection> {
        let (first_wins, second_wins) = match self {
            BinaryFn::Max => (a > b, a < b),
            BinaryFn::Min => (a < b, a > b),
            _ => return None,
        };
        Some(if first_wins {
            Selection::First
        } else if second_wins {
            Selection::Second
        } else {
            Selection::Tie
        })
    }

    /// Plain real value of the node.
    pub fn value(self, a: f64, b: f64) -> f64 {
        match self.select(a, b) {
            Some(Selection::Second) => b,
            Some(_) => a,
            None => self.local(a, b).value,
        }
    }

    /// Local partials for the non-selection functions.
    ///
    /// For `Max`/`Min` this reports the strict winner's partials, with a
    /// tie marked undefined; callers copy the winner instead.
    pub fn local(self, a: f64, b: f64) -> BinaryLocal {
        match self {
            BinaryFn::Add => BinaryLocal::smooth(a + b, 1.0, 1.0),
            BinaryFn::Sub => BinaryLocal::smooth(a - b, 1.0, -1.0),
            BinaryFn::Mul => BinaryLocal::smooth(a * b, b, a),
            BinaryFn::Div => {
                let value = a / b;
                BinaryLocal::smooth(value, 1.0 / b, -value / b)
            }
            BinaryFn::Pow => {
                let ln_a = a.ln();
                let value = (b * ln_a).exp();
                BinaryLocal::smooth(value, value * b / a, value * ln_a)
                    .undefined_if(a <= 0.0, a <= 0.0)
            }
            BinaryFn::Atan2 => {
                let r = a * a + b * b;
                let origin = a == 0.0 && b == 0.0;
                BinaryLocal::smooth(a.atan2(b), b / r, -a / r).undefined_if(origin, origin)
            }
            BinaryFn::Max | BinaryFn::Min => match self.select(a, b) {
                Some(Selection::First) => BinaryLocal::smooth(a, 1.0, 0.0),
                Some(Selection::Second) => BinaryLocal::smooth(b, 0.0, 1.0),
                _ => BinaryLocal::smooth(a, f64::NAN, f64::NAN).undefined_if(true, true),
            },
            BinaryFn::Sign => {
                let sb = if b >= 0.0 { 1.0 } else { -1.0 };
                let value = sb * a.abs();
                let sa = if a >= 0.0 { 1.0 } else { -1.0 };
                BinaryLocal::smooth(value, sa * sb, 0.0).undefined_if(a == 0.0, b == 0.0)
            }
            BinaryFn::Dim => {
                if a > b {
                    BinaryLocal::smooth(a - b, 1.0, -1.0)
                } else {
                    BinaryLocal::smooth(0.0, 0.0, 0.0).undefined_if(a == b, a == b)
                }
            }
            BinaryFn::Mod => {
                let r = a % b;
                let q = (a / b).trunc();
                BinaryLocal::smooth(r, 1.0, -q).undefined_if(r == 0.0, r == 0.0)
            }
            BinaryFn::Modulo => {
                let r = a % b;
                let exact = r == 0.0;
                let value = if !exact && (r < 0.0) != (b < 0.0) {
                    r + b
                } else {
                    r
                };
                let q = (a / b).floor();
                BinaryLocal::smooth(value, 1.0, -q).undefined_if(exact, exact)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tanh_switch_is_614() {
        assert_eq!(DECIMAL_RANGE, 307);
        assert_eq!(TANH_SWITCH, 614.0);
    }

    #[test]
    fn tanh_multiplier_regimes() {
        assert_eq!(tanh_multiplier(0.0), 1.0);
        assert_eq!(tanh_multiplier(700.0), 4.0 * (-1400.0f64).exp());
        assert_eq!(tanh_multiplier(-700.0), tanh_multiplier(700.0));
        let sech = 2.0 / (3.0f64.exp() + (-3.0f64).exp());
        assert!((tanh_multiplier(3.0) - sech * sech).abs() <= 1e-15 * sech * sech);
        // cosh(x)^2 alone would overflow here
        assert!(tanh_multiplier(360.0) > 0.0);
    }

    #[test]
    fn tanh_multiplier_decreases_across_switch() {
        let below = tanh_multiplier(TANH_SWITCH - 1.0);
        let at = tanh_multiplier(TANH_SWITCH);
        let above = tanh_multiplier(TANH_SWITCH + 1.0);
        assert!(below >= at && at >= above && above >= 0.0);
    }

    #[test]
    fn singular_points_give_nan_multiplier() {
        assert!(UnaryFn::Abs.rule().multiplier(0.0).is_nan());
        assert!(UnaryFn::Sqrt.rule().multiplier(0.0).is_nan());
        assert!(UnaryFn::Asin.rule().multiplier(1.0).is_nan());
        assert!(UnaryFn::Acos.rule().multiplier(-1.0).is_nan());
        assert_eq!(UnaryFn::Abs.rule().multiplier(-2.0), -1.0);
    }

    #[test]
    fn modulo_follows_divisor_sign() {
        assert_eq!(BinaryFn::Mod.value(-7.0, 3.0), -1.0);
        assert_eq!(BinaryFn::Modulo.value(-7.0, 3.0), 2.0);
        assert_eq!(BinaryFn::Modulo.value(7.0, -3.0), -2.0);
        assert_eq!(BinaryFn::Mod.local(-7.0, 3.0).db, 2.0);
        assert_eq!(BinaryFn::Modulo.local(-7.0, 3.0).db, 3.0);
    }

    #[test]
    fn sign_and_dim_values() {
        assert_eq!(BinaryFn::Sign.value(-3.0, 2.0), 3.0);
        assert_eq!(BinaryFn::Sign.value(3.0, -2.0), -3.0);
        assert_eq!(BinaryFn::Dim.value(5.0, 2.0), 3.0);
        assert_eq!(BinaryFn::Dim.value(2.0, 5.0), 0.0);
    }

    #[test]
    fn selection_ties() {
        assert_eq!(BinaryFn::Max.select(1.0, 1.0), Some(Selection::Tie));
        assert_eq!(BinaryFn::Min.select(1.0, 2.0), Some(Selection::First));
        assert_eq!(BinaryFn::Max.value(1.0, 2.0), 2.0);
        assert_eq!(BinaryFn::Add.select(1.0, 2.0), None);
    }
}
