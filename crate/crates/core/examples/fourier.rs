//! Gaussian–Hermite test functions and their exact Fourier transforms.

use pvzeta::poly::rat;
use pvzeta::schwartz::{basis, hermite_function, PsiCharacter, TestFunction};

fn main() {
    let psi = PsiCharacter::standard();
    for f in basis(1, 3) {
        println!("ξ = {}  ↦  Fξ = {}", f.poly(), f.fourier(&psi).poly());
    }
    // Hermite functions are eigenvectors of F with eigenvalues (-i)^k
    for k in 0..4u32 {
        let h = hermite_function(&[k]);
        let fh = h.fourier(&psi);
        println!("H_{k}: Fh = {}·h  ({})", fh.poly().leading().map(|(_, c)| c.to_string()).unwrap_or_default(), h.poly());
    }
    let psi2 = PsiCharacter::new(rat(2, 1)).unwrap();
    let g = TestFunction::gaussian(2);
    let back = g.fourier(&psi2).fourier(&psi2.inverse());
    println!("F_(-2) F_2 applied to the Gaussian on R^2 = {}·(Gaussian)  at σ = {}", back.value_at_origin(), back.sigma());
}
