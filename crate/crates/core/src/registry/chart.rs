//! Orbit charts: coordinates `(t, θ, u, v)` on an open orbit with fiber
//! coordinate `t = |f(x)|`.

use crate::poly::Rational;
use crate::quadrature;
use serde::{Deserialize, Serialize};

/// Parametrization of one open orbit.
///
/// * `HalfLine { sign }`: `x = sign · t` on the line (`f = x`).
/// * `SphereShell { p }`: `x = √t · u`, `u ∈ S^{p-1}` (`f = |x|²`).
/// * `HyperboloidShell { p, q, sign }`: for `sign = +1`,
///   `x = √t (cosh θ · u, sinh θ · v)`; for `sign = -1`,
///   `x = √t (sinh θ · u, cosh θ · v)`, with `u ∈ S^{p-1}`, `v ∈ S^{q-1}`,
///   `θ ≥ 0` (`f = x₁²+…+x_p² − x_{p+1}²−…−x_n²`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Chart {
    HalfLine { sign: i8 },
    SphereShell { p: usize },
    HyperboloidShell { p: usize, q: usize, sign: i8 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitChart {
    pub sign_vector: Vec<i8>,
    pub sample_point: Vec<Rational>,
    pub parametrization: Chart,
    /// Hyperbolic-angle cutoff used by [`OrbitChart::integrate`].
    pub truncation: f64,
}

/// Default hyperbolic cutoff: the Gaussian mass beyond it is below 1e-11.
pub const DEFAULT_TRUNCATION: f64 = 13.0;

impl Chart {
    pub fn dim(&self) -> usize {
        match *self {
            Chart::HalfLine { .. } => 1,
            Chart::SphereShell { p } => p,
            Chart::HyperboloidShell { p, q, .. } => p + q,
        }
    }

    /// Point of the orbit at fiber value `t`, hyperbolic angle `theta`
    /// (ignored unless hyperboloid) and sphere points `u`, `v`.
    pub fn point(&self, t: f64, theta: f64, u: &[f64], v: &[f64]) -> Vec<f64> {
        let r = t.sqrt();
        match *self {
            Chart::HalfLine { sign } => vec![sign as f64 * t],
            Chart::SphereShell { .. } => u.iter().map(|ui| r * ui).collect(),
            Chart::HyperboloidShell { sign, .. } => {
                let (a, b) = if sign > 0 { (theta.cosh(), theta.sinh()) } else { (theta.sinh(), theta.cosh()) };
                u.iter().map(|ui| r * a * ui).chain(v.iter().map(|vi| r * b * vi)).collect()
            }
        }
    }

    /// Lebesgue density in chart coordinates: `dx = J · dt dθ du dv`.
    pub fn jacobian(&self, t: f64, theta: f64) -> f64 {
        match *self {
            Chart::HalfLine { .. } => 1.0,
            Chart::SphereShell { p } => 0.5 * t.powf(p as f64 / 2.0 - 1.0),
            Chart::HyperboloidShell { p, q, sign } => {
                let (a, b) = if sign > 0 { (theta.cosh(), theta.sinh()) } else { (theta.sinh(), theta.cosh()) };
                let n = (p + q) as f64;
                0.5 * t.powf(n / 2.0 - 1.0) * a.powi(p as i32 - 1) * b.powi(q as i32 - 1)
            }
        }
    }
}

/// Sphere `S^{m-1}` integrated against `g`; `m ≤ 3`.
fn sphere_integral(m: usize, level: u32, g: &dyn Fn(&[f64]) -> f64) -> f64 {
    match m {
        0 => g(&[]),
        1 => g(&[1.0]) + g(&[-1.0]),
        2 => quadrature::circle(|phi| g(&[phi.cos(), phi.sin()]), 64),
        3 => {
            // z ∈ [-1, 1], φ on the circle; area element dz dφ
            let mut zs = Vec::new();
            let h = 0.5f64.powi(level as i32);
            let kmax = (6.0 / h) as i64;
            for k in -kmax..=kmax {
                let t = k as f64 * h;
                let u = std::f64::consts::FRAC_PI_2 * t.sinh();
                let z = u.tanh();
                let w = h * std::f64::consts::FRAC_PI_2 * t.cosh() / u.cosh().powi(2);
                if w > 1e-300 && z.abs() < 1.0 {
                    zs.push((z, w));
                }
            }
            let mut acc = 0.0;
            for (z, w) in zs {
                let rho = (1.0 - z * z).sqrt();
                acc += w * quadrature::circle(|phi| g(&[rho * phi.cos(), rho * phi.sin(), z]), 48);
            }
            acc
        }
        _ => panic!("sphere integration implemented for m ≤ 3"),
    }
}

impl OrbitChart {
    /// Brute-force `∫_orbit g(x) dx` in chart coordinates.
    ///
    /// Nested fixed-level tanh-sinh in `t` and `θ`, trapezoid on circles.
    /// Independent of the zeta engine's analytic fiber integration, so it
    /// serves as a cross-check for it.
    pub fn integrate(&self, g: impl Fn(&[f64]) -> f64, level: u32) -> f64 {
        let chart = self.parametrization;
        match chart {
            Chart::HalfLine { .. } => quadrature::half_line_fixed(|t| g(&chart.point(t, 0.0, &[], &[])), level),
            Chart::SphereShell { p } => quadrature::half_line_fixed(
                |t| {
                    let j = chart.jacobian(t, 0.0);
                    j * sphere_integral(p, level, &|u| g(&chart.point(t, 0.0, u, &[])))
                },
                level,
            ),
            Chart::HyperboloidShell { p, q, .. } => quadrature::half_line_fixed(
                |t| {
                    quadrature::interval_fixed(
                        |theta| {
                            let j = chart.jacobian(t, theta);
                            if j == 0.0 {
                                return 0.0;
                            }
                            j * sphere_integral(p, level, &|u| {
                                sphere_integral(q, level, &|v| g(&chart.point(t, theta, u, v)))
                            })
                        },
                        0.0,
                        self.truncation,
                        level,
                    )
                },
                level,
            ),
        }
    }

    /// A few chart points spread over the coordinate ranges, for invariant checks.
    pub fn probe_points(&self) -> Vec<(f64, Vec<f64>)> {
        let chart = self.parametrization;
        let mut out = Vec::new();
        let sphere = |m: usize| -> Vec<Vec<f64>> {
            match m {
                0 => vec![vec![]],
                1 => vec![vec![1.0], vec![-1.0]],
                2 => vec![vec![0.6, 0.8], vec![-1.0, 0.0]],
                _ => vec![vec![2.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0], vec![0.0, 0.0, -1.0]],
            }
        };
        for &t in &[0.25, 1.0, 3.5] {
            match chart {
                Chart::HalfLine { .. } => out.push((t, chart.point(t, 0.0, &[], &[]))),
                Chart::SphereShell { p } => {
                    for u in sphere(p) {
                        out.push((t, chart.point(t, 0.0, &u, &[])));
                    }
                }
                Chart::HyperboloidShell { p, q, .. } => {
                    for &theta in &[0.0, 0.7, 2.5] {
                        for u in sphere(p) {
                            for v in sphere(q) {
                                out.push((t, chart.point(t, theta, &u, &v)));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}
