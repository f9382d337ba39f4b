//! The `stencil`, `network` and `bench` drivers.

use std::hint::black_box;

use anyhow::{ensure, Result};
use serde::Serialize;
use spardiff::oracles::{fd_column, fd_matches, DenseDual, StepRule};
use spardiff::{
    derivative, fillin, independents, jacobian_len, jacobian_triplets, ADConfig, AdScalar,
    FillinReport, JacobianTriplets, SparseDual,
};

use crate::problems::{stencil, stencil_point, Network};
use crate::record::{peak_bytes_estimate, BenchRecord};
use crate::timing::best_of;

/// Relative and absolute tolerance for the finite-difference checks.
pub const FD_REL: f64 = 1e-6;
pub const FD_ABS: f64 = 1e-8;

/// Fixes the process-wide capacity; fails if a different one is in force.
pub fn install_capacity(capacity: usize) -> Result<()> {
    ADConfig::new(capacity)?.install()?;
    Ok(())
}

/// Compares whole Jacobian columns against central differences of the
/// real-valued evaluation. Returns (entries compared, mismatches).
fn fd_check_columns<F>(f: &[SparseDual], real: F, point: &[f64], cols: &[usize]) -> Result<(usize, usize)>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    let mut checked = 0;
    let mut bad = 0;
    for &col in cols {
        let fd = fd_column(&real, point, col - 1, StepRule::default());
        for (fi, fdi) in f.iter().zip(&fd) {
            let ad = derivative(fi, col)?;
            checked += 1;
            if !fd_matches(ad, *fdi, FD_REL, FD_ABS) {
                bad += 1;
            }
        }
    }
    Ok((checked, bad))
}

/// Up to `count` evenly spread picks from `0..len`.
fn spread(len: usize, count: usize) -> impl Iterator<Item = usize> {
    let count = count.min(len);
    (0..count).map(move |k| k * len / count)
}

#[derive(Debug, Clone, Serialize)]
pub struct StencilOutcome {
    pub n: usize,
    pub capacity: usize,
    pub nz: i64,
    pub ldsize_opt: usize,
    pub ml: usize,
    pub mu: usize,
    pub fd_entries_sampled: usize,
    pub fd_entries_compared: usize,
    pub fd_mismatches: usize,
    pub record: BenchRecord,
    #[serde(skip)]
    pub triplets: JacobianTriplets,
}

impl StencilOutcome {
    pub fn passed(&self) -> bool {
        self.nz == 3 * (self.n as i64 - 2)
            && (self.ldsize_opt, self.ml, self.mu) == (3, 1, 1)
            && self.fd_mismatches == 0
    }
}

fn stencil_jacobian(point: &[f64]) -> Result<(Vec<SparseDual>, JacobianTriplets)> {
    let x = independents(point)?;
    let f = stencil::<SparseDual>(&(), &x)?;
    let t = jacobian_triplets(&f, jacobian_len(&f));
    Ok((f, t))
}

/// Sparse Jacobian of the `n`-point stencil. The capacity must already be
/// installed.
pub fn run_stencil(n: usize, capacity: usize) -> Result<StencilOutcome> {
    ensure!(n >= 3, "stencil needs n >= 3, got {n}");
    ensure!(capacity >= 3, "stencil needs capacity >= 3, got {capacity}");
    let point = stencil_point(n);
    let (f, triplets) = stencil_jacobian(&point)?;
    let FillinReport { ldsize_opt, ml, mu } = fillin(&f);

    let real = |x: &[f64]| stencil::<f64>(&(), x).expect("real stencil");
    let mut cols: Vec<usize> = spread(triplets.cols.len(), 100)
        .map(|k| triplets.cols[k] as usize)
        .collect();
    let sampled = cols.len();
    cols.dedup();
    let (compared, mismatches) = fd_check_columns(&f, real, &point, &cols)?;

    let wall = best_of(|| {
        black_box(stencil_jacobian(black_box(&point)).expect("stencil pass"));
    });
    let record = BenchRecord {
        case_name: "stencil-sparse".into(),
        n_independent: n,
        capacity,
        wall_time_ns: wall,
        peak_bytes_estimate: peak_bytes_estimate(2 * n, capacity),
        jacobian_nnz: triplets.nz.max(0) as usize,
    };
    Ok(StencilOutcome {
        n,
        capacity,
        nz: triplets.nz,
        ldsize_opt,
        ml,
        mu,
        fd_entries_sampled: sampled,
        fd_entries_compared: compared,
        fd_mismatches: mismatches,
        record,
        triplets,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct NetworkOutcome {
    pub shells: usize,
    pub species: usize,
    pub capacity: usize,
    pub nz: i64,
    pub ldsize_opt: usize,
    pub ml: usize,
    pub mu: usize,
    pub fd_columns: usize,
    pub fd_entries_compared: usize,
    pub fd_mismatches: usize,
    pub record: BenchRecord,
}

impl NetworkOutcome {
    pub fn passed(&self) -> bool {
        self.nz == (self.shells * self.species * self.species) as i64
            && self.ldsize_opt == self.species
            && self.ml == self.species - 1
            && self.mu == self.species - 1
            && self.fd_mismatches == 0
    }
}

fn network_jacobian(net: &Network, point: &[f64]) -> Result<(Vec<SparseDual>, JacobianTriplets)> {
    let y = independents(point)?;
    let f = net.rates::<SparseDual>(&(), &y)?;
    let t = jacobian_triplets(&f, jacobian_len(&f));
    Ok((f, t))
}

/// Sparse Jacobian of the synthetic network. The capacity must already be
/// installed and be at least `species`.
pub fn run_network(shells: usize, species: usize, capacity: usize) -> Result<NetworkOutcome> {
    ensure!(shells >= 1 && species >= 1, "network needs at least one shell and one species");
    ensure!(
        capacity >= species,
        "capacity {capacity} is below the {species} species coupled in each shell"
    );
    let net = Network::new(shells, species);
    let point = net.initial_point();
    let (f, triplets) = network_jacobian(&net, &point)?;
    let FillinReport { ldsize_opt, ml, mu } = fillin(&f);

    let real = |y: &[f64]| net.rates::<f64>(&(), y).expect("real network");
    let cols: Vec<usize> = spread(point.len(), 20).map(|k| k + 1).collect();
    let (compared, mismatches) = fd_check_columns(&f, real, &point, &cols)?;

    let wall = best_of(|| {
        black_box(network_jacobian(&net, black_box(&point)).expect("network pass"));
    });
    let n = net.n_independent();
    let record = BenchRecord {
        case_name: "network-sparse".into(),
        n_independent: n,
        capacity,
        wall_time_ns: wall,
        peak_bytes_estimate: peak_bytes_estimate(2 * n, capacity),
        jacobian_nnz: triplets.nz.max(0) as usize,
    };
    Ok(NetworkOutcome {
        shells,
        species,
        capacity,
        nz: triplets.nz,
        ldsize_opt,
        ml,
        mu,
        fd_columns: cols.len(),
        fd_entries_compared: compared,
        fd_mismatches: mismatches,
        record,
    })
}

/// Capacity used for the sparse side of the benchmark.
pub const BENCH_CAPACITY: usize = 3;

#[derive(Debug, Clone, Serialize)]
pub struct BenchComparison {
    pub n: usize,
    pub sparse: BenchRecord,
    pub dense: BenchRecord,
    /// Dense time over sparse time.
    pub speedup: f64,
    /// Sparse bytes over dense bytes.
    pub memory_ratio: f64,
}

impl BenchComparison {
    pub fn records(&self) -> [BenchRecord; 2] {
        [self.sparse.clone(), self.dense.clone()]
    }
}

fn dense_stencil_jacobian(point: &[f64]) -> Result<JacobianTriplets> {
    let n = point.len();
    let x = point
        .iter()
        .enumerate()
        .map(|(i, &v)| DenseDual::variable(&n, i + 1, v))
        .collect::<spardiff::Result<Vec<_>>>()?;
    let f = stencil::<DenseDual>(&n, &x)?;
    let mut t = JacobianTriplets::default();
    for (i, fi) in f.iter().enumerate() {
        for (j, &g) in fi.gradient().iter().enumerate() {
            if g != 0.0 {
                t.rows.push(i as u32 + 1);
                t.cols.push(j as u32 + 1);
                t.vals.push(g);
            }
        }
    }
    t.nz = t.vals.len() as i64;
    Ok(t)
}

/// Times one seed/evaluate/extract pass of the `n`-point stencil Jacobian
/// with sparse duals of capacity [`BENCH_CAPACITY`] (which must already be
/// installed) and with dense gradients of length `n`.
pub fn run_bench(n: usize) -> Result<BenchComparison> {
    ensure!(n >= 100, "bench needs n >= 100, got {n}");
    let point = stencil_point(n);

    let (_, sparse_t) = stencil_jacobian(&point)?;
    let dense_t = dense_stencil_jacobian(&point)?;
    ensure!(
        sparse_t.nz == dense_t.nz && sparse_t.vals == dense_t.vals,
        "sparse and dense Jacobians differ"
    );

    let sparse_ns = best_of(|| {
        black_box(stencil_jacobian(black_box(&point)).expect("sparse pass"));
    });
    let dense_ns = best_of(|| {
        black_box(dense_stencil_jacobian(black_box(&point)).expect("dense pass"));
    });
    let nnz = sparse_t.nz as usize;
    let sparse = BenchRecord {
        case_name: "stencil-sparse".into(),
        n_independent: n,
        capacity: BENCH_CAPACITY,
        wall_time_ns: sparse_ns,
        peak_bytes_estimate: peak_bytes_estimate(2 * n, BENCH_CAPACITY),
        jacobian_nnz: nnz,
    };
    let dense = BenchRecord {
        case_name: "stencil-dense".into(),
        n_independent: n,
        capacity: n,
        wall_time_ns: dense_ns,
        peak_bytes_estimate: peak_bytes_estimate(2 * n, n),
        jacobian_nnz: dense_t.nz as usize,
    };
    sparse.validate()?;
    dense.validate()?;
    Ok(BenchComparison {
        n,
        speedup: dense_ns as f64 / sparse_ns as f64,
        memory_ratio: sparse.peak_bytes_estimate as f64 / dense.peak_bytes_estimate as f64,
        sparse,
        dense,
    })
}
