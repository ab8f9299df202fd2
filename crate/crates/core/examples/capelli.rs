//! Capelli-type eigenvalues of h^M·ȟ(∂)^M and their behaviour under twisting.

use pvzeta::registry::builtin_space;
use pvzeta::weyl::{capelli_eigenvalue, leading_coeff_at, twist_shift_check, twisted_capelli_eigenvalue};

fn main() {
    for name in ["TATE", "QF_2_0", "QF_2_1"] {
        let desc = builtin_space(name).unwrap();
        for m in 1..=2 {
            let c = capelli_eigenvalue(&desc, m).unwrap();
            println!("{name}, M = {m}: c(s) = {}", c.factor());
            for t in [-1, 1] {
                let tw = twisted_capelli_eigenvalue(&desc, m, t).unwrap();
                println!("  twist by |f|^{}: {tw}  (shift law holds: {})", 2 * t, twist_shift_check(&desc, m, t).unwrap());
            }
            println!("  leading coefficient: {}", leading_coeff_at(&desc, m).unwrap());
        }
    }
}
