//! Orbitwise zeta integrals of the Gaussian in the convergent range,
//! compared with the classical closed forms.

use num_complex::Complex64;
use pvzeta::registry::builtin_space;
use pvzeta::schwartz::TestFunction;
use pvzeta::special::{gamma, gamma_r};
use pvzeta::zeta::{zeta_grid, EtaVector, QuadConfig};
use std::f64::consts::PI;

fn main() {
    let cfg = QuadConfig::default();
    let tate = builtin_space("TATE").unwrap();
    let grid: Vec<Complex64> = (0..6).map(|j| Complex64::new(0.0 + 0.4 * j as f64, 1.0)).collect();
    println!("TATE, ξ = e^(-πx²): Z(λ) against Γ_ℝ(λ + 1/2)");
    for (l, z) in zeta_grid(&tate, &EtaVector::ones(2), &TestFunction::gaussian(1), &grid, &cfg) {
        let z = z.unwrap();
        let want = gamma_r(l + 0.5);
        println!("  λ = {l:.2}  Z = {:.12}  |Z − Γ_ℝ| = {:.1e}", z.value, (z.value - want).norm());
    }

    let q = builtin_space("QF_3_0").unwrap();
    println!("QF_3_0: Z(λ) against π^(-e)Γ(e + 3/2)/Γ(3/2), e = λ − 3/4");
    let grid: Vec<Complex64> = (0..4).map(|j| Complex64::new(0.5 * j as f64, 0.0)).collect();
    for (l, z) in zeta_grid(&q, &EtaVector::ones(1), &TestFunction::gaussian(3), &grid, &cfg) {
        let z = z.unwrap();
        let e = q.exponent(l);
        let want = (-e * PI.ln()).exp() * gamma(e + 1.5) / gamma(Complex64::new(1.5, 0.0));
        println!("  λ = {:.2}  Z = {:.12}  error {:.1e}", l.re, z.value.re, (z.value - want).norm());
    }

    let h = builtin_space("QF_1_1").unwrap();
    let z = pvzeta::zeta::z_convergent(&h, &EtaVector::basis(2, 0), &TestFunction::gaussian(2), Complex64::new(1.0, 0.0), &cfg).unwrap();
    println!("QF_1_1 at λ = 1, orbit breakdown {:?}", z.orbit_breakdown.iter().map(|v| v.re).collect::<Vec<_>>());
}
