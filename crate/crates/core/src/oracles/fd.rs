/// Step size policy for central differences.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum StepRule {
    /// `h = max(1, |x|) * cbrt(eps)`.
    #[default]
    CubeRootEps,
    Fixed(f64),
}

impl StepRule {
    pub fn step(&self, x: f64) -> f64 {
        match *self {
            StepRule::CubeRootEps => x.abs().max(1.0) * f64::EPSILON.cbrt(),
            StepRule::Fixed(h) => h,
        }
    }
}

/// Central-difference estimate of column `j` (0-based) of the Jacobian of
/// `func` at `point`.
pub fn fd_column<F>(func: F, point: &[f64], j: usize, rule: StepRule) -> Vec<f64>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    let h = rule.step(point[j]);
    let mut x = point.to_vec();
    x[j] = point[j] + h;
    let up_at = x[j];
    let up = func(&x);
    x[j] = point[j] - h;
    let down_at = x[j];
    let down = func(&x);
    // divide by the step actually taken after rounding
    let width = up_at - down_at;
    up.iter().zip(&down).map(|(u, d)| (u - d) / width).collect()
}

/// Dense central-difference Jacobian, `jac[i][j] = ∂f_i/∂x_j`.
pub fn fd_jacobian<F>(func: F, point: &[f64], rule: StepRule) -> Vec<Vec<f64>>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    let columns: Vec<Vec<f64>> = (0..point.len())
        .map(|j| fd_column(&func, point, j, rule))
        .collect();
    let rows = columns.first().map_or(0, Vec::len);
    (0..rows)
        .map(|i| columns.iter().map(|c| c[i]).collect())
        .collect()
}

/// `|ad - fd| <= max(rel * max(|ad|, |fd|), abs)`.
pub fn fd_matches(ad: f64, fd: f64, rel: f64, abs: f64) -> bool {
    (ad - fd).abs() <= (rel * ad.abs().max(fd.abs())).max(abs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_at_three() {
        let d = fd_column(|x| vec![x[0] * x[0]], &[3.0], 0, StepRule::default());
        assert!(fd_matches(6.0, d[0], 1e-6, 0.0));
    }

    #[test]
    fn sin_square_at_five() {
        let d = fd_column(|x| vec![(x[0] * x[0]).sin()], &[5.0], 0, StepRule::default());
        assert!(fd_matches(9.912028118634735, d[0], 1e-6, 0.0));
    }

    #[test]
    fn linear_stencil_is_exact_to_rounding() {
        let x: Vec<f64> = (0..5).map(|i| 1.0 + 0.1 * i as f64).collect();
        let jac = fd_jacobian(|x| vec![x[3] - 2.0 * x[2] + x[1]], &x, StepRule::default());
        let expected = [0.0, 1.0, -2.0, 1.0, 0.0];
        for (got, want) in jac[0].iter().zip(expected) {
            assert!((got - want).abs() <= 1e-9, "{got} vs {want}");
        }
    }
}
