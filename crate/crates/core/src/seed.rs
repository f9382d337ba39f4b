//! Declaring independent variables and reading results back out: values,
//! single derivatives, sparse Jacobian triplets and fill-in statistics.

use crate::dual::SparseDual;
use crate::error::Result;

/// Makes `target` independent variable `id` with the given value. Any
/// previous derivative entries of `target` are discarded.
pub fn seed_independent(id: usize, target: &mut SparseDual, value: f64) -> Result<()> {
    target.seed(id, value)
}

/// Independent variables with identifiers `1..=values.len()`.
pub fn independents(values: &[f64]) -> Result<Vec<SparseDual>> {
    values
        .iter()
        .enumerate()
        .map(|(k, &v)| SparseDual::independent(k + 1, v))
        .collect()
}

pub fn value(x: &SparseDual) -> f64 {
    x.value()
}

/// `∂x/∂x_id`, `0.0` when `x` does not depend on `id`.
pub fn derivative(x: &SparseDual, id: usize) -> Result<f64> {
    x.derivative(id)
}

/// Sparse Jacobian as parallel 1-based row/column/value lists.
///
/// `nz` is the number of entries, or the negated required count when the
/// buffer was too small (in which case the lists are empty).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct JacobianTriplets {
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
    pub vals: Vec<f64>,
    pub nz: i64,
}

impl JacobianTriplets {
    pub fn is_complete(&self) -> bool {
        self.nz >= 0
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, f64)> + '_ {
        self.rows
            .iter()
            .zip(&self.cols)
            .zip(&self.vals)
            .map(|((&r, &c), &v)| (r, c, v))
    }
}

/// Total number of stored derivative entries across `f`.
pub fn jacobian_len(f: &[SparseDual]) -> usize {
    f.iter().map(SparseDual::nnz).sum()
}

/// Writes every stored derivative entry of `f` into caller buffers, row
/// major with ascending columns. Row `i` is the 1-based position in `f`.
///
/// Returns the entry count, or its negation if any buffer is shorter than
/// that; nothing is written in that case.
pub fn jacobian_into(f: &[SparseDual], rows: &mut [u32], cols: &mut [u32], vals: &mut [f64]) -> i64 {
    let needed = jacobian_len(f);
    let room = rows.len().min(cols.len()).min(vals.len());
    if needed > room {
        return -(needed as i64);
    }
    let mut k = 0;
    for (i, fi) in f.iter().enumerate() {
        for (&col, &d) in fi.indices().iter().zip(fi.partials()) {
            rows[k] = (i + 1) as u32;
            cols[k] = col;
            vals[k] = d;
            k += 1;
        }
    }
    needed as i64
}

/// [`jacobian_into`] with owned buffers of `buffer_len` entries.
pub fn jacobian_triplets(f: &[SparseDual], buffer_len: usize) -> JacobianTriplets {
    let needed = jacobian_len(f);
    if needed > buffer_len {
        return JacobianTriplets {
            rows: Vec::new(),
            cols: Vec::new(),
            vals: Vec::new(),
            nz: -(needed as i64),
        };
    }
    let mut rows = vec![0; needed];
    let mut cols = vec![0; needed];
    let mut vals = vec![0.0; needed];
    let nz = jacobian_into(f, &mut rows, &mut cols, &mut vals);
    JacobianTriplets {
        rows,
        cols,
        vals,
        nz,
    }
}

/// Smallest sufficient capacity and band widths observed in `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FillinReport {
    /// Largest number of derivative entries on any element.
    pub ldsize_opt: usize,
    /// Number of nonzero sub-diagonals.
    pub ml: usize,
    /// Number of nonzero super-diagonals.
    pub mu: usize,
}

/// Fill-in of `f`, with element `i` (1-based) taken as Jacobian row `i`.
///
/// The count can only be trusted if `f` was computed with a capacity large
/// enough not to overflow.
pub fn fillin(f: &[SparseDual]) -> FillinReport {
    let mut report = FillinReport::default();
    for (i, fi) in f.iter().enumerate() {
        let row = i + 1;
        report.ldsize_opt = report.ldsize_opt.max(fi.nnz());
        for &col in fi.indices() {
            let col = col as usize;
            report.ml = report.ml.max(row.saturating_sub(col));
            report.mu = report.mu.max(col.saturating_sub(row));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::AdError;

    /// f(2:n-1) = x(3:n) - 2 x(2:n-1) + x(1:n-2); f(1), f(n) passive.
    fn stencil(n: usize) -> Vec<SparseDual> {
        let x = independents(&(0..n).map(|i| (i as f64 * 0.3).sin()).collect::<Vec<_>>()).unwrap();
        let mut f = vec![SparseDual::default(); n];
        for i in 1..n - 1 {
            f[i] = &(&x[i + 1] - &(2.0 * &x[i])) + &x[i - 1];
        }
        f
    }

    #[test]
    fn seeding_and_extraction() {
        let mut x = SparseDual::default();
        seed_independent(1, &mut x, 1.0).unwrap();
        assert_eq!(derivative(&x, 1).unwrap(), 1.0);
        seed_independent(5, &mut x, 2.5).unwrap();
        assert_eq!(derivative(&x, 4).unwrap(), 0.0);
        assert_eq!(
            seed_independent(0, &mut x, 1.0),
            Err(AdError::InvalidIdentifier(0))
        );
        assert_eq!(derivative(&x, 0), Err(AdError::InvalidIdentifier(0)));
        assert_eq!(value(&SparseDual::constant(3.0)), 3.0);
    }

    #[test]
    fn seeding_is_idempotent() {
        let mut a = SparseDual::default();
        let mut b = SparseDual::default();
        seed_independent(3, &mut a, 1.5).unwrap();
        seed_independent(3, &mut b, 1.5).unwrap();
        seed_independent(3, &mut b, 1.5).unwrap();
        assert!(a.same_as(&b));
    }

    #[test]
    fn sin_of_square() {
        let x = independents(&[1.0, 5.0]).unwrap();
        let f: Vec<_> = x.iter().map(|xi| (xi * xi).sin()).collect();
        assert_eq!(value(&f[0]), 0.8414709848078965);
        assert_eq!(format!("{:.15e}", value(&f[1])), "-1.323517500977730e-1");
        assert_eq!(format!("{:.15e}", derivative(&f[0], 1).unwrap()), "1.080604611736280e0");
        assert_eq!(derivative(&f[0], 2).unwrap(), 0.0);
        assert_eq!(format!("{:.15e}", derivative(&f[1], 2).unwrap()), "9.912028118634735e0");
    }

    #[test]
    fn stencil_triplets() {
        let f = stencil(10);
        let t = jacobian_triplets(&f, 100);
        assert_eq!(t.nz, 24);
        let row2: Vec<_> = t.iter().filter(|e| e.0 == 2).collect();
        assert_eq!(row2, vec![(2, 1, 1.0), (2, 2, -2.0), (2, 3, 1.0)]);
        for (r, c, v) in t.iter() {
            let expected = if r == c { -2.0 } else { 1.0 };
            assert_eq!(v, expected, "entry ({r}, {c})");
        }
        assert_eq!(jacobian_triplets(&f, 5).nz, -24);
    }

    #[test]
    fn stencil_fillin() {
        let r = fillin(&stencil(10));
        assert_eq!(r, FillinReport { ldsize_opt: 3, ml: 1, mu: 1 });
        let passive = vec![SparseDual::constant(1.0); 4];
        assert_eq!(fillin(&passive), FillinReport::default());
    }

    #[test]
    fn short_buffer_is_untouched() {
        let f = stencil(10);
        let mut rows = [7u32; 8];
        let mut cols = [7u32; 8];
        let mut vals = [7.0; 8];
        let nz = jacobian_into(&f, &mut rows[..5], &mut cols[..5], &mut vals[..5]);
        assert_eq!(nz, -24);
        assert!(rows.iter().all(|&r| r == 7));
        assert!(vals.iter().all(|&v| v == 7.0));
    }

    #[test]
    fn stored_zeros_are_emitted() {
        let z = SparseDual::from_entries(0.0, [(1, 0.0), (2, 1.0)]).unwrap();
        let t = jacobian_triplets(&[z], 10);
        assert_eq!(t.nz, 2);
        assert_eq!(t.vals, vec![0.0, 1.0]);
    }
}
