//! The sparse dual number.
//!
//! A [`SparseDual`] stores a value and the partial derivatives with respect
//! to the independent variables it actually depends on, as two parallel
//! lists sorted by identifier. Binary operations merge the two index lists
//! in one linear pass; the result is bounded by the process-wide capacity
//! (see [`ADConfig`](crate::ADConfig)).

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::config;
use crate::error::{AdError, Result};
use crate::rules::{powi_local, BinaryFn, Selection, UnaryFn};

/// Inline slots before the index and partial lists spill to the heap.
const INLINE: usize = 8;

pub(crate) type Indices = SmallVec<[u32; INLINE]>;
pub(crate) type Partials = SmallVec<[f64; INLINE]>;

/// A value with an index-compressed list of first partial derivatives.
///
/// `partials()[k]` is the derivative with respect to the independent
/// variable `indices()[k]`. Identifiers are 1-based and strictly increasing;
/// an identifier that is not stored has a derivative of exactly `0.0`.
/// Entries whose partial cancels to `0.0` stay stored.
#[derive(Clone, Default)]
pub struct SparseDual {
    value: f64,
    indices: Indices,
    partials: Partials,
}

pub(crate) fn check_identifier(id: usize) -> Result<u32> {
    if id == 0 {
        return Err(AdError::InvalidIdentifier(id));
    }
    u32::try_from(id).map_err(|_| AdError::InvalidIdentifier(id))
}

impl SparseDual {
    /// A passive value with no dependencies.
    pub fn constant(value: f64) -> Self {
        // freezes the process configuration
        let _ = config::capacity();
        Self {
            value,
            indices: Indices::new(),
            partials: Partials::new(),
        }
    }

    /// An independent variable: `value` with derivative 1 with respect to
    /// itself.
    pub fn independent(id: usize, value: f64) -> Result<Self> {
        let id = check_identifier(id)?;
        let _ = config::capacity();
        let mut indices = Indices::new();
        indices.push(id);
        let mut partials = Partials::new();
        partials.push(1.0);
        Ok(Self {
            value,
            indices,
            partials,
        })
    }

    /// Builds a dual from explicit `(identifier, partial)` entries in any
    /// order. Duplicate identifiers are rejected.
    pub fn from_entries<I>(value: f64, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, f64)>,
    {
        let mut pairs = entries
            .into_iter()
            .map(|(id, d)| check_identifier(id).map(|id| (id, d)))
            .collect::<Result<Vec<_>>>()?;
        pairs.sort_by_key(|&(id, _)| id);
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(AdError::DuplicateIdentifier(w[0].0 as usize));
        }
        let capacity = config::capacity();
        if pairs.len() > capacity {
            return Err(AdError::CapacityOverflow {
                required: pairs.len(),
                capacity,
            });
        }
        Ok(Self {
            value,
            indices: pairs.iter().map(|&(id, _)| id).collect(),
            partials: pairs.iter().map(|&(_, d)| d).collect(),
        })
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.value
    }

    /// Number of stored derivative entries.
    #[inline]
    pub fn nnz(&self) -> usize {
        self.indices.len()
    }

    #[inline]
    pub fn is_passive(&self) -> bool {
        self.indices.is_empty()
    }

    #[inline]
    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    #[inline]
    pub fn partials(&self) -> &[f64] {
        &self.partials
    }

    /// Iterates `(identifier, partial)` pairs in identifier order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.indices
            .iter()
            .zip(&self.partials)
            .map(|(&id, &d)| (id as usize, d))
    }

    /// Partial derivative with respect to independent variable `id`, or
    /// `0.0` if this value does not depend on it.
    pub fn derivative(&self, id: usize) -> Result<f64> {
        let id = check_identifier(id)?;
        Ok(match self.indices.binary_search(&id) {
            Ok(k) => self.partials[k],
            Err(_) => 0.0,
        })
    }

    /// Structural equality: same value bits, identifiers and partial bits.
    pub fn same_as(&self, other: &SparseDual) -> bool {
        self.value.to_bits() == other.value.to_bits()
            && self.indices == other.indices
            && self.partials.len() == other.partials.len()
            && self
                .partials
                .iter()
                .zip(&other.partials)
                .all(|(a, b)| a.to_bits() == b.to_bits())
    }

    /// Turns `self` into independent variable `id`, discarding any previous
    /// derivative entries.
    pub fn seed(&mut self, id: usize, value: f64) -> Result<()> {
        *self = Self::independent(id, value)?;
        Ok(())
    }

    /// Value-only ordering; derivatives are ignored.
    pub fn compare(&self, other: &SparseDual) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }

    /// Mixed-mode product with a real: `a * self`, partials scaled by `a`.
    pub fn scale(&self, a: f64) -> SparseDual {
        SparseDual {
            value: a * self.value,
            indices: self.indices.clone(),
            partials: self.partials.iter().map(|&d| a * d).collect(),
        }
    }

    /// Mixed-mode sum with a real; partials unchanged.
    pub fn shift(&self, a: f64) -> SparseDual {
        SparseDual {
            value: self.value + a,
            indices: self.indices.clone(),
            partials: self.partials.clone(),
        }
    }

    /// Applies a unary rule through the chain rule.
    pub fn apply_unary(&self, f: UnaryFn) -> SparseDual {
        let rule = f.rule();
        let value = (rule.value_fn)(self.value);
        if self.is_passive() {
            return SparseDual::constant(value);
        }
        self.with_multiplier(value, rule.multiplier(self.value))
    }

    /// `self^n` for an integer exponent.
    pub fn powi(&self, n: i32) -> SparseDual {
        let (value, m) = powi_local(self.value, n);
        if self.is_passive() {
            return SparseDual::constant(value);
        }
        self.with_multiplier(value, m)
    }

    fn with_multiplier(&self, value: f64, m: f64) -> SparseDual {
        SparseDual {
            value,
            indices: self.indices.clone(),
            partials: self.partials.iter().map(|&d| m * d).collect(),
        }
    }

    /// Applies a binary function, merging the operands' index sets.
    pub fn apply_binary(&self, f: BinaryFn, rhs: &SparseDual) -> Result<SparseDual> {
        if let Some(sel) = f.select(self.value, rhs.value) {
            return match sel {
                Selection::First => Ok(self.clone()),
                Selection::Second => Ok(rhs.clone()),
                Selection::Tie if self.same_entries(rhs) => Ok(self.clone()),
                Selection::Tie => nan_union(self.value, self, rhs),
            };
        }
        let local = f.local(self.value, rhs.value);
        if (local.undefined_in_a && !self.is_passive())
            || (local.undefined_in_b && !rhs.is_passive())
        {
            return nan_union(local.value, self, rhs);
        }
        merge(self, rhs, local.value, local.da, local.db)
    }

    fn same_entries(&self, other: &SparseDual) -> bool {
        self.indices == other.indices && self.partials == other.partials
    }

    pub fn try_add(&self, rhs: &SparseDual) -> Result<SparseDual> {
        self.apply_binary(BinaryFn::Add, rhs)
    }

    pub fn try_sub(&self, rhs: &SparseDual) -> Result<SparseDual> {
        self.apply_binary(BinaryFn::Sub, rhs)
    }

    pub fn try_mul(&self, rhs: &SparseDual) -> Result<SparseDual> {
        self.apply_binary(BinaryFn::Mul, rhs)
    }

    /// Quotient; a zero-valued divisor yields IEEE `Inf`/`NaN`, not an error.
    pub fn try_div(&self, rhs: &SparseDual) -> Result<SparseDual> {
        self.apply_binary(BinaryFn::Div, rhs)
    }

    /// `self^rhs` for a dual exponent, computed as `exp(rhs ln self)`.
    pub fn try_powf(&self, rhs: &SparseDual) -> Result<SparseDual> {
        self.apply_binary(BinaryFn::Pow, rhs)
    }
}

/// Two-pointer merge of the sorted index lists, `da * a' + db * b'` per
/// identifier with absent partials read as zero.
fn merge(a: &SparseDual, b: &SparseDual, value: f64, da: f64, db: f64) -> Result<SparseDual> {
    let (ai, ap) = (&a.indices[..], &a.partials[..]);
    let (bi, bp) = (&b.indices[..], &b.partials[..]);
    let mut indices = Indices::with_capacity(ai.len() + bi.len());
    let mut partials = Partials::with_capacity(ai.len() + bi.len());
    let (mut i, mut j) = (0, 0);
    while i < ai.len() && j < bi.len() {
        match ai[i].cmp(&bi[j]) {
            Ordering::Less => {
                indices.push(ai[i]);
                partials.push(da * ap[i] + db * 0.0);
                i += 1;
            }
            Ordering::Greater => {
                indices.push(bi[j]);
                partials.push(da * 0.0 + db * bp[j]);
                j += 1;
            }
            Ordering::Equal => {
                indices.push(ai[i]);
                partials.push(da * ap[i] + db * bp[j]);
                i += 1;
                j += 1;
            }
        }
    }
    for k in i..ai.len() {
        indices.push(ai[k]);
        partials.push(da * ap[k] + db * 0.0);
    }
    for k in j..bi.len() {
        indices.push(bi[k]);
        partials.push(da * 0.0 + db * bp[k]);
    }
    let capacity = config::capacity();
    if indices.len() > capacity {
        return Err(AdError::CapacityOverflow {
            required: indices.len(),
            capacity,
        });
    }
    Ok(SparseDual {
        value,
        indices,
        partials,
    })
}

/// `value` with a `NaN` partial for every identifier of either operand.
fn nan_union(value: f64, a: &SparseDual, b: &SparseDual) -> Result<SparseDual> {
    let mut out = merge(a, b, value, 0.0, 0.0)?;
    out.partials.iter_mut().for_each(|d| *d = f64::NAN);
    Ok(out)
}

impl fmt::Debug for SparseDual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SparseDual")
            .field("value", &self.value)
            .field("entries", &self.entries().collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for SparseDual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{", self.value)?;
        for (k, (id, d)) in self.entries().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{id}: {d}")?;
        }
        write!(f, "}}")
    }
}

impl From<f64> for SparseDual {
    fn from(value: f64) -> Self {
        SparseDual::constant(value)
    }
}

/// Relational operators compare values only, as they would on reals.
impl PartialEq for SparseDual {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for SparseDual {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.compare(other)
    }
}

impl PartialEq<f64> for SparseDual {
    fn eq(&self, other: &f64) -> bool {
        self.value == *other
    }
}

impl PartialOrd<f64> for SparseDual {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.value.partial_cmp(other)
    }
}

// Operator forms panic on capacity overflow, like integer overflow in debug
// builds; the `try_*` methods return the error instead.
macro_rules! dual_binop {
    ($trait:ident, $method:ident, $fn:expr) => {
        impl std::ops::$trait<&SparseDual> for &SparseDual {
            type Output = SparseDual;
            fn $method(self, rhs: &SparseDual) -> SparseDual {
                match self.apply_binary($fn, rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl std::ops::$trait<SparseDual> for SparseDual {
            type Output = SparseDual;
            fn $method(self, rhs: SparseDual) -> SparseDual {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&SparseDual> for SparseDual {
            type Output = SparseDual;
            fn $method(self, rhs: &SparseDual) -> SparseDual {
                std::ops::$trait::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<SparseDual> for &SparseDual {
            type Output = SparseDual;
            fn $method(self, rhs: SparseDual) -> SparseDual {
                std::ops::$trait::$method(self, &rhs)
            }
        }
    };
}

dual_binop!(Add, add, BinaryFn::Add);
dual_binop!(Sub, sub, BinaryFn::Sub);
dual_binop!(Mul, mul, BinaryFn::Mul);
dual_binop!(Div, div, BinaryFn::Div);

impl std::ops::Neg for &SparseDual {
    type Output = SparseDual;
    fn neg(self) -> SparseDual {
        self.apply_unary(UnaryFn::Neg)
    }
}

impl std::ops::Neg for SparseDual {
    type Output = SparseDual;
    fn neg(self) -> SparseDual {
        -&self
    }
}

// Mixed mode with reals.

impl std::ops::Mul<&SparseDual> for f64 {
    type Output = SparseDual;
    fn mul(self, rhs: &SparseDual) -> SparseDual {
        rhs.scale(self)
    }
}

impl std::ops::Mul<SparseDual> for f64 {
    type Output = SparseDual;
    fn mul(self, rhs: SparseDual) -> SparseDual {
        rhs.scale(self)
    }
}

impl std::ops::Mul<f64> for &SparseDual {
    type Output = SparseDual;
    fn mul(self, rhs: f64) -> SparseDual {
        self.scale(rhs)
    }
}

impl std::ops::Mul<f64> for SparseDual {
    type Output = SparseDual;
    fn mul(self, rhs: f64) -> SparseDual {
        self.scale(rhs)
    }
}

impl std::ops::Add<f64> for &SparseDual {
    type Output = SparseDual;
    fn add(self, rhs: f64) -> SparseDual {
        self.shift(rhs)
    }
}

impl std::ops::Add<f64> for SparseDual {
    type Output = SparseDual;
    fn add(self, rhs: f64) -> SparseDual {
        self.shift(rhs)
    }
}

impl std::ops::Add<&SparseDual> for f64 {
    type Output = SparseDual;
    fn add(self, rhs: &SparseDual) -> SparseDual {
        rhs.shift(self)
    }
}

impl std::ops::Sub<f64> for &SparseDual {
    type Output = SparseDual;
    fn sub(self, rhs: f64) -> SparseDual {
        self.shift(-rhs)
    }
}

impl std::ops::Div<f64> for &SparseDual {
    type Output = SparseDual;
    fn div(self, rhs: f64) -> SparseDual {
        SparseDual {
            value: self.value / rhs,
            indices: self.indices.clone(),
            partials: self.partials.iter().map(|&d| d / rhs).collect(),
        }
    }
}
