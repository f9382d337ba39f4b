//! Test problems shared by the commands, written once over [`AdScalar`] so
//! the same code runs with sparse duals, dense duals or plain reals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spardiff::{AdScalar, BinaryFn, Result, UnaryFn};

/// Second-difference stencil `f_i = x_{i+1} - 2 x_i + x_{i-1}` on the
/// interior; the two boundary outputs are passive zeros.
pub fn stencil<T: AdScalar>(ctx: &T::Context, x: &[T]) -> Result<Vec<T>> {
    let n = x.len();
    let mut f = Vec::with_capacity(n);
    f.push(T::constant(ctx, 0.0));
    for i in 1..n.saturating_sub(1) {
        let fi = x[i + 1]
            .binary(BinaryFn::Sub, &x[i].scale(2.0))?
            .binary(BinaryFn::Add, &x[i - 1])?;
        f.push(fi);
    }
    if n > 1 {
        f.push(T::constant(ctx, 0.0));
    }
    Ok(f)
}

/// Deterministic evaluation point for the stencil.
pub fn stencil_point(n: usize) -> Vec<f64> {
    (0..n).map(|i| 1.0 + 0.5 * (0.1 * i as f64).sin()).collect()
}

/// Synthetic reaction network: `shells` independent blocks of `species`
/// coupled abundances.
///
/// Within a shell at temperature `T`, with passive rate coefficients
/// `r_kj = A_kj exp(-B_kj / T)`, species `k` evolves as
///
/// ```text
/// f_k = sum_{j != k} r_kj y_j y_{j+1} - y_k sum_j r_jk y_j + c_k y_k^3 exp(-y_k)
/// ```
///
/// so every rate depends on all species of its own shell and nothing else.
#[derive(Debug, Clone)]
pub struct Network {
    pub shells: usize,
    pub species: usize,
    temperatures: Vec<f64>,
    prefactor: Vec<f64>,
    activation: Vec<f64>,
    decay: Vec<f64>,
}

impl Network {
    pub fn new(shells: usize, species: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6e65_7477);
        let k2 = species * species;
        Self {
            shells,
            species,
            temperatures: (0..shells).map(|_| rng.gen_range(1.0..3.0)).collect(),
            prefactor: (0..k2).map(|_| rng.gen_range(0.5..1.5)).collect(),
            activation: (0..k2).map(|_| rng.gen_range(1.0..3.0)).collect(),
            decay: (0..species).map(|_| rng.gen_range(0.1..1.0)).collect(),
        }
    }

    pub fn n_independent(&self) -> usize {
        self.shells * self.species
    }

    /// Abundances in `[0.1, 1]`, shell-major.
    pub fn initial_point(&self) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7965_6c64);
        (0..self.n_independent())
            .map(|_| rng.gen_range(0.1..1.0))
            .collect()
    }

    fn rate(&self, shell: usize, k: usize, j: usize) -> f64 {
        let idx = k * self.species + j;
        self.prefactor[idx] * (-self.activation[idx] / self.temperatures[shell]).exp()
    }

    pub fn rates<T: AdScalar>(&self, ctx: &T::Context, y: &[T]) -> Result<Vec<T>> {
        let ns = self.species;
        let mut out = Vec::with_capacity(y.len());
        for (s, block) in y.chunks(ns).enumerate().take(self.shells) {
            for k in 0..ns {
                let mut gain = T::constant(ctx, 0.0);
                for j in (0..ns).filter(|&j| j != k) {
                    let pair = block[j].binary(BinaryFn::Mul, &block[(j + 1) % ns])?;
                    gain = gain.binary(BinaryFn::Add, &pair.scale(self.rate(s, k, j)))?;
                }
                let mut sink = T::constant(ctx, 0.0);
                for (j, yj) in block.iter().enumerate() {
                    sink = sink.binary(BinaryFn::Add, &yj.scale(self.rate(s, j, k)))?;
                }
                let loss = block[k].binary(BinaryFn::Mul, &sink)?;
                let burn = block[k]
                    .powi(3)
                    .binary(BinaryFn::Mul, &block[k].unary(UnaryFn::Neg).unary(UnaryFn::Exp))?
                    .scale(self.decay[k]);
                out.push(gain.binary(BinaryFn::Sub, &loss)?.binary(BinaryFn::Add, &burn)?);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use spardiff::{fillin, independents, SparseDual};

    #[test]
    fn stencil_smallest_instance() {
        let x = independents(&stencil_point(3)).unwrap();
        let f = stencil::<SparseDual>(&(), &x).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f[1].nnz(), 3);
        assert_eq!(f[0].nnz() + f[2].nnz(), 0);
    }

    #[test]
    fn network_blocks_are_full() {
        let net = Network::new(2, 4);
        let y = independents(&net.initial_point()).unwrap();
        let f = net.rates::<SparseDual>(&(), &y).unwrap();
        assert_eq!(f.len(), 8);
        let report = fillin(&f);
        assert_eq!(report.ldsize_opt, 4);
        assert_eq!((report.ml, report.mu), (3, 3));
        assert_eq!(f[5].indices(), &[5, 6, 7, 8]);
    }

    #[test]
    fn scalar_network() {
        let net = Network::new(1, 1);
        let y = independents(&net.initial_point()).unwrap();
        let f = net.rates::<SparseDual>(&(), &y).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].indices(), &[1]);
    }

    #[test]
    fn value_channel_matches_reals() {
        let net = Network::new(3, 5);
        let p = net.initial_point();
        let plain = net.rates::<f64>(&(), &p).unwrap();
        let ad = net
            .rates::<SparseDual>(&(), &independents(&p).unwrap())
            .unwrap();
        for (a, b) in plain.iter().zip(&ad) {
            assert_eq!(a.to_bits(), b.value().to_bits());
        }
    }
}
