//! Two-variable smoke test: `f_i = sin(x_i^2)` at `x = (1, 5)`, printed in
//! Fortran `ES25.15` layout next to the analytic derivative `2 x cos(x^2)`.

use spardiff::{derivative, independents, SparseDual};

use crate::format::fortran_es;

pub const POINT: [f64; 2] = [1.0, 5.0];

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub x: [f64; 2],
    pub f: [f64; 2],
    /// `ad[i][j] = ∂f_j/∂x_i`, laid out as the printed rows.
    pub ad: [[f64; 2]; 2],
    pub analytic: [[f64; 2]; 2],
    pub lines: Vec<String>,
}

impl VerifyReport {
    /// Values and diagonal derivatives agree with the closed forms to 15
    /// significant digits, and the cross derivatives are exactly zero.
    pub fn passed(&self) -> bool {
        let digits = |a: f64, b: f64| format!("{a:.14e}") == format!("{b:.14e}");
        let values = (0..2).all(|i| digits(self.f[i], (self.x[i] * self.x[i]).sin()));
        let diagonal = (0..2).all(|i| digits(self.ad[i][i], self.analytic[i][i]));
        let cross = self.ad[0][1] == 0.0 && self.ad[1][0] == 0.0;
        values && diagonal && cross
    }
}

fn row(label: &str, values: &[f64]) -> String {
    let mut s = label.to_string();
    for v in values {
        s.push_str(&fortran_es(*v, 25, 15));
    }
    s
}

pub fn run_verify() -> spardiff::Result<VerifyReport> {
    let x = independents(&POINT)?;
    let f: Vec<SparseDual> = x.iter().map(|xi| (xi * xi).sin()).collect();

    let mut ad = [[0.0; 2]; 2];
    let mut analytic = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            ad[i][j] = derivative(&f[j], i + 1)?;
        }
        analytic[i][i] = 2.0 * POINT[i] * (POINT[i] * POINT[i]).cos();
    }
    let fv = [f[0].value(), f[1].value()];

    let lines = vec![
        row("x array =", &POINT),
        row("f array =", &fv),
        " ***AD:".to_string(),
        row("df/dx1  =", &ad[0]),
        row("df/dx2  =", &ad[1]),
        " ***Analytic:".to_string(),
        row("df/dx1  =", &analytic[0]),
        row("df/dx2  =", &analytic[1]),
    ];
    Ok(VerifyReport {
        x: POINT,
        f: fv,
        ad,
        analytic,
        lines,
    })
}
