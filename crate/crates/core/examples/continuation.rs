//! Meromorphic continuation past the convergence boundary, poles and residues.

use num_complex::Complex64;
use pvzeta::registry::builtin_space;
use pvzeta::schwartz::{basis, TestFunction};
use pvzeta::weyl::denominator;
use pvzeta::zeta::{lz, pole_table, z_continued, ContinuationOptions, EtaVector, QuadConfig};

fn main() {
    let cfg = QuadConfig::default();
    for name in ["TATE", "QF_1_1", "QF_2_1"] {
        let desc = builtin_space(name).unwrap();
        let k = desc.orbit_count();
        let xi = TestFunction::gaussian(desc.dim);
        let den = denominator(&desc).unwrap();
        println!("{name}: L(λ) = {}", den.describe());
        let l = Complex64::new(-1.3, 0.2);
        for m in 1..=3 {
            let z = z_continued(&desc, &EtaVector::ones(k), &xi, l, &cfg, ContinuationOptions { min_steps: m }).unwrap();
            println!("  Z({l}) with {} steps = {:.12}", z.continuation_steps, z.value);
        }
        let entire = lz(&desc, &EtaVector::ones(k), &xi, Complex64::new(-0.5, 0.0), &cfg).unwrap();
        println!("  L·Z at λ = -1/2: {:.10}", entire.value);
        for (pole, res) in pole_table(&desc, &EtaVector::ones(k), &basis(desc.dim, 2)[0], -2.6, -0.4, &cfg).unwrap() {
            match res {
                Ok(r) => println!("  residue at λ = {pole}: {r:.10}"),
                Err(e) => println!("  λ = {pole}: {e}"),
            }
        }
    }
    // evaluating on a pole reports which Γ factor is singular
    let tate = builtin_space("TATE").unwrap();
    let err = z_continued(&tate, &EtaVector::ones(2), &TestFunction::gaussian(1), Complex64::new(-0.5, 0.0), &cfg, Default::default()).unwrap_err();
    println!("TATE at λ = -1/2: {err}");
}
