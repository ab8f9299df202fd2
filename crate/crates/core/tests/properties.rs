//! Randomized invariants.

use num_complex::Complex64;
use proptest::prelude::*;
use pvzeta::poly::{rat, rat_int, MultiPoly};
use pvzeta::registry::{builtin_space, BUILTIN_NAMES};
use pvzeta::schwartz::{basis, PsiCharacter, TestFunction};
use pvzeta::weyl::{b_function, capelli_eigenvalue};
use pvzeta::zeta::{z_convergent, EtaVector, QuadConfig};

fn space() -> impl Strategy<Value = &'static str> {
    prop::sample::select(BUILTIN_NAMES.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn b_function_is_deterministic(name in space()) {
        let d = builtin_space(name).unwrap();
        prop_assert_eq!(b_function(d.f(), d.fdual()).unwrap(), b_function(d.f(), d.fdual()).unwrap());
    }

    #[test]
    fn scalar_substitution(name in space(), k in prop::sample::select(vec![1i64, -1, 2])) {
        let d = builtin_space(name).unwrap();
        let b = b_function(d.f(), d.fdual()).unwrap();
        prop_assert_eq!(b_function(&d.f().scale(&rat_int(k)), d.fdual()).unwrap(), b.scale(&rat_int(k)));
    }

    #[test]
    fn capelli_composition(name in space(), m1 in 1u32..3, m2 in 1u32..3) {
        let d = builtin_space(name).unwrap();
        let whole = capelli_eigenvalue(&d, m1 + m2).unwrap();
        let first = capelli_eigenvalue(&d, m1).unwrap();
        let second = capelli_eigenvalue(&d, m2).unwrap().shift(&rat_int(-2 * m1 as i64));
        prop_assert_eq!(whole, first.mul(&second));
    }

    #[test]
    fn fourier_commutes_with_multiplication(n in 1usize..4, deg in 0u32..3, idx in 0usize..20, j in 0usize..3, a in prop::sample::select(vec![1i64, -1, 2, 3])) {
        let b = basis(n, deg);
        let xi = &b[idx % b.len()];
        let j = j % n;
        let psi = PsiCharacter::from_i64(a).unwrap();
        // F(x_j ξ) = c(ψ) ∂_j F(ξ)
        let lhs = xi.mul_poly(&MultiPoly::var(n, j)).fourier(&psi);
        let rhs = xi.fourier(&psi).partial(j).scale(&psi.c_exact());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fourier_is_linear(n in 1usize..3, i in 0usize..10, k in 0usize..10, p in -5i64..5, q in 1i64..4) {
        let b = basis(n, 3);
        let (u, v) = (&b[i % b.len()], &b[k % b.len()]);
        let psi = PsiCharacter::standard();
        let s = rat(p, q);
        let lhs = u.add(&v.scale_rational(&s)).fourier(&psi);
        let rhs = u.fourier(&psi).add(&v.fourier(&psi).scale_rational(&s));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dilation_equivariance(n in 1usize..3, idx in 0usize..10, p in 1i64..4, q in 1i64..4, sign in prop::bool::ANY) {
        // F(ξ(a·)) = |a|^{−n} (Fξ)(·/a)
        let b = basis(n, 2);
        let xi = &b[idx % b.len()];
        let a = rat(if sign { p } else { -p }, q);
        let psi = PsiCharacter::standard();
        let lhs = xi.dilate(&a).unwrap().fourier(&psi);
        let scale = rat(q, p).pow(n as i32);
        let rhs = xi.fourier(&psi).dilate(&a.recip()).unwrap().scale_rational(&scale);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_matches_fourier_inversion(n in 1usize..3, idx in 0usize..10) {
        let b = basis(n, 2);
        let xi = &b[idx % b.len()];
        let psi = PsiCharacter::from_i64(2).unwrap();
        let back = xi.fourier(&psi).fourier(&psi.inverse());
        let point = vec![0.3; n];
        let want = xi.evaluate(&point) * 0.5f64.powi(n as i32);
        prop_assert!((back.evaluate(&point) - want).norm() < 1e-12);
    }

    #[test]
    fn zeta_is_linear_in_eta(name in space(), l in 0.6f64..2.0, w in -2.0f64..2.0) {
        let d = builtin_space(name).unwrap();
        let k = d.orbit_count();
        let cfg = QuadConfig::default();
        let g = TestFunction::gaussian(d.dim);
        let lam = Complex64::new(l, 0.3);
        let coeffs: Vec<f64> = (0..k).map(|i| 1.0 + w * i as f64).collect();
        let total = z_convergent(&d, &EtaVector::from_real(&coeffs), &g, lam, &cfg).unwrap().value;
        let parts: Complex64 = (0..k).map(|i| coeffs[i] * z_convergent(&d, &EtaVector::basis(k, i), &g, lam, &cfg).unwrap().value).sum();
        prop_assert!((total - parts).norm() <= 1e-12 * total.norm().max(1.0));
    }
}

#[test]
fn charts_cover_the_space() {
    // ∫ e^{−π|x|²} dx = 1 over the union of the orbit charts
    for name in BUILTIN_NAMES {
        let d = builtin_space(name).unwrap();
        let level = if d.dim == 3 { 4 } else { 6 };
        let total: f64 = d.orbits.iter().map(|o| o.integrate(|x| (-std::f64::consts::PI * x.iter().map(|v| v * v).sum::<f64>()).exp(), level)).sum();
        assert!((total - 1.0).abs() < 1e-8, "{name}: {total}");
    }
}
