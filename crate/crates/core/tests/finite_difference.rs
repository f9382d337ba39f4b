use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spardiff::oracles::random::{binary_sample, unary_sample};
use spardiff::oracles::{fd_column, fd_matches, StepRule};
use spardiff::{AdScalar, BinaryFn, SparseDual, UnaryFn};

const REL: f64 = 1e-6;
const ABS: f64 = 1e-8;
const POINTS: usize = 100;

#[test]
fn unary_rules_match_central_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for f in UnaryFn::ALL {
        for _ in 0..POINTS {
            let x0 = unary_sample(f, &mut rng);
            let x = SparseDual::independent(1, x0).unwrap();
            let ad = x.apply_unary(f).derivative(1).unwrap();
            let fd = fd_column(|p| vec![p[0].unary(f)], &[x0], 0, StepRule::CubeRootEps)[0];
            assert!(fd_matches(ad, fd, REL, ABS), "{} at {x0}: ad {ad} fd {fd}", f.name());
        }
    }
}

#[test]
fn powi_matches_central_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in -3..=4 {
        for _ in 0..POINTS {
            let x0 = unary_sample(UnaryFn::Abs, &mut rng);
            let ad = SparseDual::independent(1, x0).unwrap().powi(n).derivative(1).unwrap();
            let fd = fd_column(|p| vec![p[0].powi(n)], &[x0], 0, StepRule::CubeRootEps)[0];
            assert!(fd_matches(ad, fd, REL, ABS), "x^{n} at {x0}: ad {ad} fd {fd}");
        }
    }
}

#[test]
fn binary_functions_match_central_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for f in BinaryFn::ALL {
        for _ in 0..POINTS {
            let (a0, b0) = binary_sample(f, &mut rng);
            let a = SparseDual::independent(1, a0).unwrap();
            let b = SparseDual::independent(2, b0).unwrap();
            let r = a.apply_binary(f, &b).unwrap();
            let plain = |p: &[f64]| vec![f.value(p[0], p[1])];
            for j in 0..2 {
                let ad = r.derivative(j + 1).unwrap();
                let fd = fd_column(plain, &[a0, b0], j, StepRule::CubeRootEps)[0];
                assert!(
                    fd_matches(ad, fd, REL, ABS),
                    "{} at ({a0}, {b0}) wrt arg {j}: ad {ad} fd {fd}",
                    f.name()
                );
            }
        }
    }
}
