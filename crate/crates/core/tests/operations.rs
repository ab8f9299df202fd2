//! Worked examples for each public operation, checked against independent oracles.

use num_complex::Complex64;
use pvzeta::gamma_factor::{check_hm_shift, check_inversion, check_scaling, check_self_dual, check_translation, extract_gamma, orbit_permutation, DEFAULT_BASIS};
use pvzeta::poly::{diagonal_quadratic, rat, rat_int, MultiPoly};
use pvzeta::registry::{builtin_space, dual, validate};
use pvzeta::schwartz::{a_psi, basis, c_psi, PsiCharacter, TestFunction};
use pvzeta::weyl::{
    apply_operator, b_function, capelli_eigenvalue, denominator, leading_coeff_at, orbit_sign_factor, twist_shift_check, twisted_capelli_eigenvalue, SymbolicPower, UnivarPoly,
    WeylError,
};
use pvzeta::zeta::{lz, residue_estimate, z_continued, z_convergent, ContinuationOptions, EtaVector, QuadConfig, ZetaError};
use statrs::function::gamma::gamma;
use std::f64::consts::PI;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn gamma_r(s: f64) -> f64 {
    PI.powf(-s / 2.0) * gamma(s / 2.0)
}

fn x() -> MultiPoly {
    MultiPoly::var(1, 0)
}

#[test]
fn builtin_descriptors() {
    let t = builtin_space("TATE").unwrap();
    assert_eq!((t.dim, t.rank, t.orbit_count()), (1, 1, 2));
    assert_eq!(t.f(), &x());
    assert_eq!(t.orbits.iter().map(|o| o.sign_vector.clone()).collect::<Vec<_>>(), vec![vec![1], vec![-1]]);
    assert_eq!(t.lambda0[0], rat(1, 2));
    assert_eq!(t.measure_exponent[0], rat_int(1));
    assert_eq!(t.b(), &UnivarPoly::from_i64(&[1, 1]));

    let h = builtin_space("QF_1_1").unwrap();
    assert_eq!(h.f(), &diagonal_quadratic(&[1, -1]));
    assert_eq!(h.orbit_count(), 2);
    assert_eq!((h.lambda0[0].clone(), h.measure_exponent[0].clone()), (rat(1, 2), rat_int(1)));
    assert_eq!(h.b(), &UnivarPoly::from_shifts(rat_int(4), &[rat_int(1), rat_int(1)]));

    let q = builtin_space("QF_2_0").unwrap();
    assert_eq!(q.orbit_count(), 1);
    assert_eq!(q.b(), &UnivarPoly::from_shifts(rat_int(4), &[rat_int(1), rat_int(1)]));
}

#[test]
fn duals() {
    let t = builtin_space("TATE").unwrap();
    let td = dual(&t);
    assert_eq!(td.lambda_orientation, -1);
    assert_eq!(td.lambda0[0], rat(-1, 2));
    assert_eq!(dual(&td), t);
    let h = builtin_space("QF_1_1").unwrap();
    let hd = dual(&h);
    assert_eq!(hd.f(), &diagonal_quadratic(&[1, -1]));
    assert_eq!(hd.orbit_count(), 2);
    // the identification carries orbit i to dual orbit i
    for (i, o) in h.orbits.iter().enumerate() {
        let y: Vec<_> = o.sample_point.iter().zip(&h.identification).map(|(a, b)| a * b).collect();
        assert_eq!(hd.orbit_of(&y), Some(i));
    }
}

#[test]
fn validation_catches_corruption() {
    let t = builtin_space("TATE").unwrap();
    assert!(validate(&t).all_passed());

    let mut bad = t.clone();
    bad.bfun[0] = UnivarPoly::from_i64(&[2, 1]);
    let r = validate(&bad);
    let check = r.get("bfun_certified").unwrap();
    assert!(!check.passed);
    assert!(check.witness.as_deref().unwrap_or("").len() > 1);

    let mut flipped = t.clone();
    flipped.orbits[0].sign_vector = vec![-1];
    let r = validate(&flipped);
    assert!(!r.get("sign_vector").unwrap().passed);
}

#[test]
fn operator_application() {
    // ∂ x^s = s x^{s-1}
    let d = MultiPoly::monomial(vec![1], rat_int(1));
    let out = apply_operator(&d, &SymbolicPower::power(&x(), 0));
    assert_eq!(out, SymbolicPower::power(&x(), -1).mul_univar(&UnivarPoly::from_i64(&[0, 1])));

    // ∂² (x²)^{s+1} = (2s+2)(2s+1) (x²)^s
    let x2 = x().pow(2);
    let d2 = MultiPoly::monomial(vec![2], rat_int(1));
    let eig = apply_operator(&d2, &SymbolicPower::power(&x2, 1)).as_eigen().unwrap();
    assert_eq!(eig, UnivarPoly::from_i64(&[2, 6, 4]));
    // ordinary differentiation at s = 0, 1, 2
    for s in 0..3u32 {
        let mut p = x2.pow(s + 1);
        p = p.derivative(0).derivative(0);
        assert_eq!(p, x2.pow(s).scale(&eig.eval(&rat_int(s as i64))));
    }

    let q = diagonal_quadratic(&[1, -1]);
    let eig = apply_operator(&q, &SymbolicPower::power(&q, 1)).as_eigen().unwrap();
    assert_eq!(eig, UnivarPoly::from_shifts(rat_int(4), &[rat_int(1), rat_int(1)]));
}

#[test]
fn b_functions_and_failures() {
    assert_eq!(b_function(&x(), &x()).unwrap(), UnivarPoly::from_i64(&[1, 1]));
    let q = diagonal_quadratic(&[1, 1]);
    assert_eq!(b_function(&q, &q).unwrap(), UnivarPoly::from_shifts(rat_int(4), &[rat_int(1), rat_int(1)]));
    let q3 = diagonal_quadratic(&[1, 1, 1]);
    assert_eq!(b_function(&q3, &q3).unwrap(), UnivarPoly::from_shifts(rat_int(4), &[rat_int(1), rat(3, 2)]));
    assert!(matches!(b_function(&x().pow(3), &x()), Err(WeylError::NotEigen(_))));
}

#[test]
fn orbit_signs() {
    let t = builtin_space("TATE").unwrap();
    assert_eq!(orbit_sign_factor(&t, &t.orbits[0]).unwrap(), rat_int(1));
    assert_eq!(orbit_sign_factor(&t, &t.orbits[1]).unwrap(), rat_int(-1));
    // on x < 0, |x|^3 = (−x)^3 and ∂(−x)^3 = −3(−x)^2
    let neg = x().scale(&rat_int(-1));
    assert_eq!(neg.pow(3).derivative(0), neg.pow(2).scale(&rat_int(-3)));

    let h = builtin_space("QF_1_1").unwrap();
    let i = h.orbits.iter().position(|o| o.sign_vector == vec![-1]).unwrap();
    assert_eq!(orbit_sign_factor(&h, &h.orbits[i]).unwrap(), rat_int(-1));
    // on Q < 0, |Q|^3 = (−Q)^3; (∂x² − ∂y²)(−Q)^3 = −4·9·(−Q)^2
    let negq = h.f().scale(&rat_int(-1));
    let mut lhs = MultiPoly::zero(2);
    for (beta, coeff) in h.fdual().terms() {
        lhs = &lhs + &negq.pow(3).derivative_multi(beta).scale(coeff);
    }
    assert_eq!(lhs, negq.pow(2).scale(&rat_int(-36)));
}

#[test]
fn capelli_examples() {
    let t = builtin_space("TATE").unwrap();
    let c1 = capelli_eigenvalue(&t, 1).unwrap();
    assert_eq!(c1, UnivarPoly::from_shifts(rat_int(1), &[rat_int(0), rat_int(-1)]));
    // x²·∂²(x⁴) = 12·x⁴
    assert_eq!(&x().pow(4).derivative(0).derivative(0) * &x().pow(2), x().pow(4).scale(&c1.eval(&rat_int(4))));
    for name in ["TATE", "QF_2_0", "QF_2_1"] {
        assert_eq!(capelli_eigenvalue(&builtin_space(name).unwrap(), 0).unwrap(), UnivarPoly::one());
    }
    // Δ²(Q^s)·Q² on R²: Δ Q^t = 4t² Q^{t−1}
    let q = builtin_space("QF_2_0").unwrap();
    assert_eq!(capelli_eigenvalue(&q, 1).unwrap(), UnivarPoly::from_shifts(rat_int(16), &[rat_int(0), rat_int(0), rat_int(-1), rat_int(-1)]));

    assert_eq!(twist_shift_check(&t, 1, 0), Ok(true));
    assert_eq!(twist_shift_check(&t, 1, 1), Ok(true));
    assert_eq!(twisted_capelli_eigenvalue(&t, 1, 1).unwrap(), c1.shift(&rat_int(2)));
    assert_eq!(twist_shift_check(&builtin_space("QF_1_1").unwrap(), 1, 2), Ok(true));

    assert_eq!(leading_coeff_at(&t, 1).unwrap(), rat_int(4));
    assert_ne!(leading_coeff_at(&t, 2).unwrap(), rat_int(0));
    assert_ne!(leading_coeff_at(&builtin_space("QF_1_1").unwrap(), 1).unwrap(), rat_int(0));
}

#[test]
fn denominators() {
    let t = builtin_space("TATE").unwrap();
    let d = denominator(&t).unwrap();
    assert_eq!(d.factors.len(), 1);
    // L = 1/Γ(λ + 1/2)
    for l in [0.3, 1.7] {
        assert!((d.eval(c(l)).re - 1.0 / gamma(l + 0.5)).abs() < 1e-12);
    }
    assert_eq!(d.pole_candidates(-2.6, 0.0), vec![-2.5, -1.5, -0.5]);
    assert_eq!(denominator(&builtin_space("QF_2_0").unwrap()).unwrap().factors.len(), 2);

    let mut flat = t.clone();
    flat.bfun[0] = UnivarPoly::one();
    let d = denominator(&flat).unwrap();
    assert!(d.factors.is_empty());
    assert_eq!(d.eval(c(0.37)), c(1.0));
}

/// `∫ ξ(x) e^{2πiaxy} dx` by the trapezoid rule on [-9, 9].
fn numeric_fourier(xi: &TestFunction, a: f64, y: f64) -> Complex64 {
    let h = 1e-3;
    (-9000..=9000).map(|k| k as f64 * h).map(|t| xi.evaluate(&[t]) * Complex64::from_polar(1.0, 2.0 * PI * a * t * y) * h).sum()
}

#[test]
fn fourier_examples() {
    let psi = PsiCharacter::standard();
    let g = TestFunction::gaussian(1);
    let xg = basis(1, 1)[1].clone();
    for y in [-1.3, -0.4, 0.0, 0.7, 1.9] {
        assert!((g.fourier(&psi).evaluate(&[y]) - numeric_fourier(&g, 1.0, y)).norm() < 1e-10);
        let want = Complex64::i() * y * (-PI * y * y).exp();
        assert!((xg.fourier(&psi).evaluate(&[y]) - want).norm() < 1e-10);
        assert!((xg.fourier(&psi).evaluate(&[y]) - numeric_fourier(&xg, 1.0, y)).norm() < 1e-10);
    }
    for xi in basis(2, 3) {
        let back = xi.fourier(&psi).fourier(&psi.inverse());
        assert_eq!(back, xi);
    }
}

#[test]
fn fourier_constants() {
    let one = c_psi(&PsiCharacter::standard());
    assert!((one - Complex64::new(0.0, -1.0 / (2.0 * PI))).norm() < 1e-15);
    assert!(one.re == 0.0 && one.im != 0.0);
    let two = c_psi(&PsiCharacter::from_i64(2).unwrap());
    assert!((two - one / 2.0).norm() < 1e-15);
    // F(x ξ) = c(ψ) ∂(Fξ), numerically for a = 2 at y = 0.3
    let g = TestFunction::gaussian(1);
    let h = 1e-5;
    let fd = (numeric_fourier(&g, 2.0, 0.3 + h) - numeric_fourier(&g, 2.0, 0.3 - h)) / (2.0 * h);
    let xg = basis(1, 1)[1].clone();
    assert!((numeric_fourier(&xg, 2.0, 0.3) - two * fd).norm() < 1e-7);

    for n in 1..4 {
        assert_eq!(a_psi(&PsiCharacter::standard(), n), 1.0);
        assert_eq!(a_psi(&PsiCharacter::from_i64(-1).unwrap(), n), 1.0);
    }
    assert_eq!(a_psi(&PsiCharacter::from_i64(2).unwrap(), 2), 0.25);
}

#[test]
fn basis_sizes() {
    assert_eq!(basis(1, 1), vec![TestFunction::gaussian(1), TestFunction::monomial(&[1])]);
    assert_eq!(basis(2, 2).len(), 6);
    assert_eq!(basis(1, 0), vec![TestFunction::gaussian(1)]);
}

#[test]
fn convergent_zeta_examples() {
    let t = builtin_space("TATE").unwrap();
    let cfg = QuadConfig::default();
    let g = TestFunction::gaussian(1);
    let z = z_convergent(&t, &EtaVector::ones(2), &g, c(0.5), &cfg).unwrap();
    assert!((z.value.re - 1.0).abs() < 1e-8);
    let z = z_convergent(&t, &EtaVector::ones(2), &g, c(1.5), &cfg).unwrap();
    assert!((z.value.re - 1.0 / PI).abs() < 1e-8 / PI);
    for name in ["TATE", "QF_1_1", "QF_2_1"] {
        let d = builtin_space(name).unwrap();
        let z = z_convergent(&d, &EtaVector::ones(d.orbit_count()), &TestFunction::zero(d.dim), c(0.7), &cfg).unwrap();
        assert_eq!(z.value, c(0.0));
    }
    for l in [0.1, 0.9, 2.3] {
        let z = z_convergent(&t, &EtaVector::from_real(&[1.0, -1.0]), &g, c(l), &cfg).unwrap();
        assert!(z.value.norm() < 1e-10);
    }
    assert!(matches!(z_convergent(&t, &EtaVector::ones(2), &g, c(-0.6), &cfg), Err(ZetaError::OutOfRange { .. })));
}

#[test]
fn continued_zeta_examples() {
    let t = builtin_space("TATE").unwrap();
    let cfg = QuadConfig::default();
    let g = TestFunction::gaussian(1);
    let direct = z_convergent(&t, &EtaVector::ones(2), &g, c(0.5), &cfg).unwrap().value;
    let forced = z_continued(&t, &EtaVector::ones(2), &g, c(0.5), &cfg, ContinuationOptions { min_steps: 1 }).unwrap();
    assert!((forced.value - direct).norm() < 1e-7);
    let v = z_continued(&t, &EtaVector::ones(2), &g, c(-0.25), &cfg, ContinuationOptions::default()).unwrap();
    assert!((v.value.re - gamma_r(0.25)).abs() < 1e-9 * gamma_r(0.25));
    // past the first pole: Γ_ℝ(s) at s = −0.3
    let v = z_continued(&t, &EtaVector::ones(2), &g, c(-0.8), &cfg, ContinuationOptions::default()).unwrap();
    assert!((v.value.re - gamma_r(-0.3)).abs() < 1e-9 * gamma_r(-0.3).abs());
    match z_continued(&t, &EtaVector::ones(2), &g, c(-0.5), &cfg, ContinuationOptions::default()) {
        Err(ZetaError::NearPole { factor, at, .. }) => {
            assert_eq!(at, 0);
            assert!(factor.contains("Γ(λ + 1/2)"), "{factor}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn residues() {
    let t = builtin_space("TATE").unwrap();
    let cfg = QuadConfig::default();
    let r = residue_estimate(&t, &EtaVector::ones(2), &TestFunction::gaussian(1), c(-0.5), &cfg).unwrap();
    assert!((r - c(2.0)).norm() < 1e-4);
    let r = residue_estimate(&t, &EtaVector::ones(2), &TestFunction::monomial(&[1]), c(-0.5), &cfg).unwrap();
    assert!(r.norm() < 1e-6);
    // QF_2_0: π^{−e}Γ(e + 1) has residue π at e = −1
    let q = builtin_space("QF_2_0").unwrap();
    let r = residue_estimate(&q, &EtaVector::ones(1), &TestFunction::gaussian(2), c(-0.5), &cfg).unwrap();
    assert!((r - c(PI)).norm() < 1e-6, "{r}");
    let v = lz(&t, &EtaVector::ones(2), &TestFunction::gaussian(1), c(-0.5), &cfg).unwrap();
    assert!((v.value - c(2.0)).norm() < 1e-10);
}

#[test]
fn gamma_examples() {
    let cfg = QuadConfig::default();
    let h = builtin_space("QF_1_1").unwrap();
    let g = extract_gamma(&h, c(0.1), &PsiCharacter::standard(), DEFAULT_BASIS, &cfg).unwrap();
    assert_eq!(g.k(), 2);
    assert!(g.lsq_residual < 1e-4);
    assert!(!g.flagged);

    let t = builtin_space("TATE").unwrap();
    let r = check_inversion(&t, c(0.1), &PsiCharacter::standard(), &cfg).unwrap();
    assert!(r.deviation < 1e-6);
    assert!(check_inversion(&t, c(0.1), &PsiCharacter::from_i64(2).unwrap(), &cfg).unwrap().deviation < 1e-6);
    assert!(check_inversion(&builtin_space("QF_2_0").unwrap(), c(0.2), &PsiCharacter::standard(), &cfg).unwrap().deviation < 1e-4);

    assert!(check_scaling(&t, c(0.1), &rat_int(2), &cfg).unwrap().deviation < 1e-6);
    assert!(check_scaling(&t, c(0.1), &rat_int(-1), &cfg).unwrap().deviation < 1e-6);
    let p = orbit_permutation(&dual(&t), &rat_int(-1));
    assert_eq!((p[(0, 1)], p[(1, 0)], p[(0, 0)]), (c(1.0), c(1.0), c(0.0)));
    assert_eq!(orbit_permutation(&dual(&t), &rat_int(2))[(0, 0)], c(1.0));
    assert!(check_self_dual(&t, &rat_int(-1), &cfg).unwrap().deviation < 1e-6);

    assert!(check_translation(&t, c(0.1), c(0.05), &cfg).unwrap().deviation < 1e-6);
    assert!(check_translation(&t, c(0.0), c(0.2), &cfg).unwrap().deviation < 1e-12);
    assert!(check_translation(&h, c(0.1), c(0.1), &cfg).unwrap().deviation < 1e-4);

    assert!(check_hm_shift(&t, c(0.1), 1, &cfg).unwrap().deviation < 1e-6);
    assert!(check_hm_shift(&t, c(0.1), 0, &cfg).unwrap().deviation < 1e-12);
    assert!(check_hm_shift(&builtin_space("QF_2_0").unwrap(), c(0.3), 1, &cfg).unwrap().deviation < 1e-4);
}

#[test]
fn unknown_space() {
    assert!(builtin_space("QF_9_9").is_err());
    assert_eq!(builtin_space("QF_1_1_DUAL").unwrap(), dual(&builtin_space("QF_1_1").unwrap()));
}
