//! γ-matrix extraction from the local functional equation.

use num_complex::Complex64;
use pvzeta::gamma_factor::{extract_gamma, parity_diagonal, DEFAULT_BASIS};
use pvzeta::registry::builtin_space;
use pvzeta::schwartz::PsiCharacter;
use pvzeta::special::gamma_r;
use pvzeta::zeta::QuadConfig;

fn main() {
    let cfg = QuadConfig::default();
    let psi = PsiCharacter::standard();
    let tate = builtin_space("TATE").unwrap();
    println!("TATE, s = λ + 1/2:");
    for j in 1..=4 {
        let s = Complex64::new(0.2 * j as f64, 0.0);
        let g = extract_gamma(&tate, s - 0.5, &psi, DEFAULT_BASIS, &cfg).unwrap();
        let (even, odd, _) = parity_diagonal(&g);
        println!(
            "  s = {:.1}: γ_even = {:.10} (Γ_ℝ(1−s)/Γ_ℝ(s) = {:.10}), γ_odd = {:.10}",
            s.re,
            even.re,
            (gamma_r(1.0 - s) / gamma_r(s)).re,
            odd
        );
    }

    for name in ["QF_2_0", "QF_1_1", "QF_2_1"] {
        let desc = builtin_space(name).unwrap();
        let g = extract_gamma(&desc, Complex64::new(0.1, 0.0), &psi, DEFAULT_BASIS, &cfg).unwrap();
        println!("{name} at λ = 0.1 (residual {:.1e}, condition {:.2}):", g.lsq_residual, g.condition_number);
        for row in &g.entries {
            println!("  {}", row.iter().map(|z| format!("{:>24.12}", z)).collect::<Vec<_>>().join(" "));
        }
    }
}
