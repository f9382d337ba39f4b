use crate::dual::SparseDual;
use crate::error::{AdError, Result};
use crate::rules::{powi_local, BinaryFn, Selection, UnaryFn};
use crate::scalar::AdScalar;

use super::Expr;

/// Forward-mode dual with a full-length gradient.
///
/// Uses the same rule table as [`SparseDual`](crate::SparseDual) and the
/// same per-slot arithmetic, so on the identifiers a sparse value stores the
/// two agree bit for bit. Every value in one problem has the same gradient
/// length.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseDual {
    value: f64,
    gradient: Vec<f64>,
}

impl DenseDual {
    pub fn constant(n: usize, value: f64) -> Self {
        Self {
            value,
            gradient: vec![0.0; n],
        }
    }

    pub fn independent(n: usize, id: usize, value: f64) -> Result<Self> {
        if id == 0 || id > n {
            return Err(AdError::InvalidIdentifier(id));
        }
        let mut gradient = vec![0.0; n];
        gradient[id - 1] = 1.0;
        Ok(Self { value, gradient })
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    /// `gradient()[i - 1]` is the derivative with respect to identifier `i`.
    pub fn gradient(&self) -> &[f64] {
        &self.gradient
    }

    fn is_active(&self) -> bool {
        self.gradient.iter().any(|&g| g != 0.0)
    }

    fn nan_where_active(value: f64, a: &DenseDual, b: &DenseDual) -> DenseDual {
        let gradient = a
            .gradient
            .iter()
            .zip(&b.gradient)
            .map(|(&ga, &gb)| if ga != 0.0 || gb != 0.0 { f64::NAN } else { 0.0 })
            .collect();
        DenseDual { value, gradient }
    }

    fn with_multiplier(&self, value: f64, m: f64) -> DenseDual {
        DenseDual {
            value,
            gradient: self.gradient.iter().map(|&g| m * g).collect(),
        }
    }
}

impl AdScalar for DenseDual {
    type Context = usize;

    fn constant(n: &usize, value: f64) -> Self {
        DenseDual::constant(*n, value)
    }

    fn variable(n: &usize, id: usize, value: f64) -> Result<Self> {
        DenseDual::independent(*n, id, value)
    }

    fn value(&self) -> f64 {
        self.value
    }

    fn unary(&self, f: UnaryFn) -> Self {
        let rule = f.rule();
        let value = (rule.value_fn)(self.value);
        if (rule.singular_fn)(self.value) && self.is_active() {
            let gradient = self
                .gradient
                .iter()
                .map(|&g| if g != 0.0 { f64::NAN } else { 0.0 })
                .collect();
            return DenseDual { value, gradient };
        }
        self.with_multiplier(value, (rule.derivative_fn)(self.value))
    }

    fn powi(&self, n: i32) -> Self {
        let (value, m) = powi_local(self.value, n);
        self.with_multiplier(value, m)
    }

    fn binary(&self, f: BinaryFn, rhs: &Self) -> Result<Self> {
        if self.gradient.len() != rhs.gradient.len() {
            return Err(AdError::ShapeMismatch {
                expected: self.gradient.len(),
                found: rhs.gradient.len(),
            });
        }
        if let Some(sel) = f.select(self.value, rhs.value) {
            return Ok(match sel {
                Selection::First => self.clone(),
                Selection::Second => rhs.clone(),
                Selection::Tie if self.gradient == rhs.gradient => self.clone(),
                Selection::Tie => DenseDual::nan_where_active(self.value, self, rhs),
            });
        }
        let local = f.local(self.value, rhs.value);
        if (local.undefined_in_a && self.is_active()) || (local.undefined_in_b && rhs.is_active()) {
            return Ok(DenseDual::nan_where_active(local.value, self, rhs));
        }
        let (da, db) = (local.da, local.db);
        let gradient = self
            .gradient
            .iter()
            .zip(&rhs.gradient)
            .map(|(&ga, &gb)| da * ga + db * gb)
            .collect();
        Ok(DenseDual {
            value: local.value,
            gradient,
        })
    }

    fn scale(&self, a: f64) -> Self {
        DenseDual {
            value: a * self.value,
            gradient: self.gradient.iter().map(|&g| a * g).collect(),
        }
    }
}

/// Where a sparse value and a dense value disagree: `Some(0)` for the value,
/// `Some(id)` for a derivative, `None` if they agree.
///
/// Stored sparse partials must match their dense slot bit for bit (any two
/// NaNs match); slots the sparse value does not store must be exactly zero.
pub fn first_mismatch(sparse: &SparseDual, dense: &DenseDual) -> Option<usize> {
    if !same_bits(sparse.value(), dense.value) {
        return Some(0);
    }
    let mut stored = sparse.entries().peekable();
    for (k, &g) in dense.gradient.iter().enumerate() {
        let id = k + 1;
        match stored.peek() {
            Some(&(sid, d)) if sid == id => {
                stored.next();
                if !same_bits(d, g) {
                    return Some(id);
                }
            }
            _ if g != 0.0 => return Some(id),
            _ => {}
        }
    }
    stored.next().map(|(id, _)| id)
}

/// Bitwise equality, with every NaN equal to every other and `+0.0` equal to
/// `-0.0`.
///
/// Signed zeros are the one place the two layouts legitimately differ: a
/// sparse value reads an absent partial as `+0.0`, while the dense slot for
/// the same identifier may hold `-0.0` from earlier products.
pub fn same_bits(a: f64, b: f64) -> bool {
    a.to_bits() == b.to_bits() || (a.is_nan() && b.is_nan()) || (a == 0.0 && b == 0.0)
}

/// Evaluates `expr` with dense gradients of length `n`; `seeds[k]` is the
/// value of independent variable `k + 1`.
pub fn dense_eval(expr: &Expr, seeds: &[f64], n: usize) -> Result<DenseDual> {
    if seeds.len() > n {
        return Err(AdError::ShapeMismatch {
            expected: n,
            found: seeds.len(),
        });
    }
    let vars = seeds
        .iter()
        .enumerate()
        .map(|(k, &v)| DenseDual::independent(n, k + 1, v))
        .collect::<Result<Vec<_>>>()?;
    expr.eval(&n, &vars)
}
