//! Orbitwise zeta integrals `Z_i(λ; ξ) = ∫_{orbit i} |f|^{e(λ)} ξ₀ dx`, their
//! continuation by the b-function recursion, poles and residues.
//!
//! The fiber integral over `t = |f|` is done in closed form per monomial of
//! `ξ₀`; for hyperboloid orbits a single one-dimensional hyperbolic-angle
//! integral remains, evaluated by adaptive tanh-sinh after the substitution
//! `w = e^{−2θ}` (which maps the noncompact angle range onto `(0, 1]`).

use crate::poly::rat_to_f64;
use crate::quadrature;
use crate::registry::{Chart, PvsDescriptor};
use crate::schwartz::TestFunction;
use crate::special;
use crate::weyl::{self, GammaProduct, WeylError};
use num_complex::Complex64;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ZetaError {
    #[error("λ = {lambda} is outside the convergence range (need Re(o·λ) > {kappa}); use continuation")]
    OutOfRange { lambda: Complex64, kappa: f64 },
    #[error("quadrature did not reach tolerance: error {error:e} on value {value}")]
    QuadratureFailure { value: Complex64, error: f64 },
    #[error("λ = {lambda} is within {distance:e} of a pole: {factor}")]
    NearPole { lambda: Complex64, factor: String, at: i64, distance: f64 },
    #[error("residue estimates disagree: {first} at radius 1e-2 vs {second} at 5e-3")]
    Inconsistent { first: Complex64, second: Complex64 },
    #[error("η has {got} coefficients but the space has {expected} orbits")]
    EtaLength { got: usize, expected: usize },
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// Distance below which λ counts as sitting on a pole.
pub const POLE_TOLERANCE: f64 = 1e-6;

/// `η = Σ_i coeffs_i η_i` in the orbit-indicator basis, optionally twisted
/// by `|f|^{twist}` (so `Z_μ(η_λ, ξ) = Z_{μ+λ}(η, ξ)`).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EtaVector {
    pub coeffs: Vec<Complex64>,
    pub twist: Complex64,
}

impl EtaVector {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        EtaVector { coeffs, twist: Complex64::zero() }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// `η_i`.
    pub fn basis(k: usize, i: usize) -> Self {
        Self::new((0..k).map(|j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)).collect())
    }

    /// All orbits with weight one.
    pub fn ones(k: usize) -> Self {
        Self::new(vec![Complex64::new(1.0, 0.0); k])
    }

    pub fn twisted(&self, by: Complex64) -> Self {
        EtaVector { coeffs: self.coeffs.clone(), twist: self.twist + by }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZetaValue {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub lambda: Complex64,
    pub orbit_breakdown: Vec<Complex64>,
    /// Number of b-function steps `M` used.
    pub continuation_steps: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadConfig {
    pub rel_tol: f64,
    /// Maximum tanh-sinh halvings.
    pub max_levels: u32,
    /// Worker threads for grid evaluation; `None` uses `PVZETA_THREADS` or the
    /// rayon default.
    pub threads: Option<usize>,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig { rel_tol: 1e-9, max_levels: 12, threads: None }
    }
}

/// Runs `f` on a pool sized by `threads`, `PVZETA_THREADS` or the default.
pub fn with_pool<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    let n = threads.or_else(|| std::env::var("PVZETA_THREADS").ok().and_then(|v| v.parse().ok()));
    match n {
        Some(n) if n > 0 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        _ => f(),
    }
}

/// `∫_{S^{m-1}} u^β du`.
fn sphere_moment(m: usize, beta: &[u32]) -> f64 {
    if beta.iter().any(|b| b % 2 == 1) {
        return 0.0;
    }
    let total: u32 = beta.iter().sum();
    debug_assert_eq!(beta.len(), m);
    let num: f64 = beta.iter().map(|&b| special::gamma_real((b as f64 + 1.0) / 2.0)).product();
    2.0 * num / special::gamma_real((total as f64 + m as f64) / 2.0)
}

/// `Γ(a) · (π σ²)^{−a}`.
fn gamma_mellin(a: Complex64, pi_s2: f64) -> Complex64 {
    special::gamma(a) * (-a * pi_s2.ln()).exp()
}

/// `∫_0^∞ cosh^A θ sinh^B θ (cosh 2θ)^{−a} dθ` for `Re e > −1`, where
/// `a = e + (A + B)/2 + 1`.
fn hyperbolic_integral(e: Complex64, a: Complex64, big_a: u32, big_b: u32, cfg: &QuadConfig) -> quadrature::QuadResult {
    let delta = e.re + 1.0;
    let stretch = delta < 1.0;
    let (ai, bi) = (big_a as i32, big_b as i32);
    let integrand = |v: f64, cv: f64| -> Complex64 {
        let ln_v = if v < 0.5 { v.ln() } else { (-cv).ln_1p() };
        let (ln_w, weight) = if stretch {
            let ln_w = ln_v / delta;
            // w^e dw = δ⁻¹ exp((e + 1 − δ) ln w) dv
            (ln_w, ((e + 1.0 - delta) * ln_w).exp() / delta)
        } else {
            (ln_v, (e * ln_v).exp())
        };
        let w = ln_w.exp();
        let one_minus_w = if stretch { -ln_w.exp_m1() } else { cv };
        let tail = (-a * (w * w).ln_1p()).exp();
        weight * (1.0 + w).powi(ai) * one_minus_w.powi(bi) * tail
    };
    let mut r = quadrature::tanh_sinh(integrand, cfg.rel_tol * 1e-2, 1e-300, cfg.max_levels);
    let pre = (a - (ai + bi) as f64 - 1.0) * std::f64::consts::LN_2;
    let scale = pre.exp();
    r.value *= scale;
    r.error *= scale.norm();
    r
}

/// Per-orbit integrals `∫_{orbit} |f|^e ξ₀ dx`, `Re e > −1`.
fn orbit_integrals(desc: &PvsDescriptor, xi: &TestFunction, e: Complex64, cfg: &QuadConfig) -> Result<Vec<(Complex64, f64)>, ZetaError> {
    let n = desc.dim;
    let pi_s2 = PI * rat_to_f64(xi.sigma()).powi(2);
    let terms = xi.numeric_terms();
    let mut out = Vec::with_capacity(desc.orbits.len());
    for orbit in &desc.orbits {
        let mut acc = Complex64::zero();
        let mut err = 0.0;
        let mut magnitude = 0.0;
        let mut theta_cache: BTreeMap<(u32, u32), quadrature::QuadResult> = BTreeMap::new();
        for (alpha, c) in &terms {
            let total: u32 = alpha.iter().sum();
            let contribution = match orbit.parametrization {
                Chart::HalfLine { sign } => {
                    let b = (e + total as f64 + 1.0) / 2.0;
                    let parity = if sign < 0 && total % 2 == 1 { -1.0 } else { 1.0 };
                    parity * 0.5 * gamma_mellin(b, pi_s2)
                }
                Chart::SphereShell { p } => {
                    let s = sphere_moment(p, alpha);
                    if s == 0.0 {
                        Complex64::zero()
                    } else {
                        let a = e + (total as f64 + n as f64) / 2.0;
                        0.5 * s * gamma_mellin(a, pi_s2)
                    }
                }
                Chart::HyperboloidShell { p, q, sign } => {
                    let (au, av) = (&alpha[..p], &alpha[p..]);
                    let s = sphere_moment(p, au) * sphere_moment(q, av);
                    if s == 0.0 {
                        Complex64::zero()
                    } else {
                        let nu: u32 = au.iter().sum::<u32>() + p as u32 - 1;
                        let nv: u32 = av.iter().sum::<u32>() + q as u32 - 1;
                        let (cosh_pow, sinh_pow) = if sign > 0 { (nu, nv) } else { (nv, nu) };
                        let a = e + (total as f64 + n as f64) / 2.0;
                        let r = *theta_cache
                            .entry((cosh_pow, sinh_pow))
                            .or_insert_with(|| hyperbolic_integral(e, a, cosh_pow, sinh_pow, cfg));
                        if !r.converged {
                            return Err(ZetaError::QuadratureFailure { value: r.value, error: r.error });
                        }
                        let pre = 0.5 * s * gamma_mellin(a, pi_s2);
                        err += (c * pre).norm() * r.error;
                        pre * r.value
                    }
                }
            };
            let term = c * contribution;
            magnitude += term.norm();
            acc += term;
        }
        err += magnitude * 4.0 * f64::EPSILON;
        out.push((acc, err));
    }
    Ok(out)
}

fn check_eta(desc: &PvsDescriptor, eta: &EtaVector) -> Result<(), ZetaError> {
    if eta.coeffs.len() != desc.orbits.len() {
        return Err(ZetaError::EtaLength { got: eta.coeffs.len(), expected: desc.orbits.len() });
    }
    Ok(())
}

fn combine(eta: &EtaVector, lambda: Complex64, parts: &[(Complex64, f64)], steps: u32) -> ZetaValue {
    let value = eta.coeffs.iter().zip(parts).map(|(c, (z, _))| c * z).sum();
    let abs_error_estimate = eta.coeffs.iter().zip(parts).map(|(c, (_, e))| c.norm() * e).sum();
    ZetaValue { value, abs_error_estimate, lambda, orbit_breakdown: parts.iter().map(|p| p.0).collect(), continuation_steps: steps }
}

/// `Z_λ(η, ξ)` by direct integration; requires absolute convergence.
pub fn z_convergent(desc: &PvsDescriptor, eta: &EtaVector, xi: &TestFunction, lambda: Complex64, cfg: &QuadConfig) -> Result<ZetaValue, ZetaError> {
    check_eta(desc, eta)?;
    let eff = lambda + eta.twist;
    if !desc.converges_at(eff) {
        return Err(ZetaError::OutOfRange { lambda, kappa: rat_to_f64(&desc.kappa[0]) });
    }
    let parts = orbit_integrals(desc, xi, desc.exponent(eff), cfg)?;
    Ok(combine(eta, lambda, &parts, 0))
}

/// Options for [`z_continued`].
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ContinuationOptions {
    /// Lower bound on the number of recursion steps.
    pub min_steps: u32,
}

/// Exact recursion data: `ε'_i`, `(−1)^{deg f̌}` and the Γ-product.
struct Recursion {
    orbit_signs: Vec<f64>,
    parity: f64,
    denominator: GammaProduct,
}

fn recursion(desc: &PvsDescriptor) -> Result<Recursion, ZetaError> {
    let orbit_signs = desc
        .orbits
        .iter()
        .map(|o| weyl::orbit_sign_factor(desc, o).map(|r| rat_to_f64(&r)))
        .collect::<Result<Vec<_>, _>>()?;
    let parity = if desc.degrees[0].dual % 2 == 1 { -1.0 } else { 1.0 };
    Ok(Recursion { orbit_signs, parity, denominator: weyl::denominator(desc)? })
}

/// Least `M ≥ min` with `Re(e + M) > −1` (relative to `κ`).
fn steps_needed(desc: &PvsDescriptor, lambda: Complex64, min: u32) -> u32 {
    let kappa = rat_to_f64(&desc.kappa[0]);
    let own = (lambda * desc.lambda_orientation as f64).re;
    let need = if own > kappa { 0.0 } else { (kappa - own).floor() + 1.0 };
    (need as u32).max(min)
}

/// `f̌(∂)^M ξ`.
fn iterate_operator(desc: &PvsDescriptor, xi: &TestFunction, m: u32) -> TestFunction {
    (0..m).fold(xi.clone(), |acc, _| acc.apply_operator(desc.fdual()))
}

fn near_pole_error(den: &GammaProduct, lambda: Complex64) -> Option<ZetaError> {
    let p = den.nearest_pole(lambda)?;
    (p.distance < POLE_TOLERANCE).then(|| {
        let form = &den.factors[p.factor];
        let arg = weyl::GammaProduct { factors: vec![form.clone()], b_constant: den.b_constant.clone(), shifts: vec![] }
            .describe()
            .trim_end_matches("^-1")
            .to_string();
        ZetaError::NearPole { lambda, factor: format!("{arg} at argument {}", p.at), at: p.at, distance: p.distance }
    })
}

/// Meromorphically continued `Z_λ(η, ξ)`:
///
/// ```text
/// Z_i(e; ξ) = [(−1)^{deg f̌} ε'_i]^M · Π_{j<M} b(e+j)^{−1} · Z_i(e+M; f̌(∂)^M ξ)
/// ```
pub fn z_continued(
    desc: &PvsDescriptor,
    eta: &EtaVector,
    xi: &TestFunction,
    lambda: Complex64,
    cfg: &QuadConfig,
    opts: ContinuationOptions,
) -> Result<ZetaValue, ZetaError> {
    check_eta(desc, eta)?;
    let eff = lambda + eta.twist;
    let rec = recursion(desc)?;
    if let Some(err) = near_pole_error(&rec.denominator, eff) {
        return Err(err);
    }
    let m = steps_needed(desc, eff, opts.min_steps);
    let e = desc.exponent(eff);
    let xi_m = iterate_operator(desc, xi, m);
    let raw = orbit_integrals(desc, &xi_m, e + m as f64, cfg)?;
    let b = desc.b();
    let denom: Complex64 = (0..m).map(|j| b.eval_complex(e + j as f64)).product();
    let parts: Vec<(Complex64, f64)> = raw
        .iter()
        .zip(&rec.orbit_signs)
        .map(|((z, err), eps)| {
            let factor = (rec.parity * eps).powi(m as i32) / denom;
            (z * factor, err * factor.norm())
        })
        .collect();
    Ok(combine(eta, lambda, &parts, m))
}

/// `L(λ)·Z_λ(η, ξ)`, entire: the Γ-product cancels the recursion's
/// denominators analytically, so this is finite at the poles of `Z`.
pub fn lz(desc: &PvsDescriptor, eta: &EtaVector, xi: &TestFunction, lambda: Complex64, cfg: &QuadConfig) -> Result<ZetaValue, ZetaError> {
    check_eta(desc, eta)?;
    let eff = lambda + eta.twist;
    let rec = recursion(desc)?;
    let m = steps_needed(desc, eff, 0);
    let e = desc.exponent(eff);
    let xi_m = iterate_operator(desc, xi, m);
    let raw = orbit_integrals(desc, &xi_m, e + m as f64, cfg)?;
    // L(λ) / Π_{j<M} b(e+j) = C^{−M} Π_i 1/Γ(e + r_i + M)
    let c = rat_to_f64(&rec.denominator.b_constant);
    let mut factor = Complex64::new(c.powi(-(m as i32)), 0.0);
    for r in &rec.denominator.shifts {
        factor *= special::recip_gamma(e + rat_to_f64(r) + m as f64);
    }
    let parts: Vec<(Complex64, f64)> = raw
        .iter()
        .zip(&rec.orbit_signs)
        .map(|((z, err), eps)| {
            let f = factor * (rec.parity * eps).powi(m as i32);
            (z * f, err * f.norm())
        })
        .collect();
    Ok(combine(eta, lambda, &parts, m))
}

/// Residue of `λ ↦ Z_λ(η, ξ)` at a simple pole, by the 8-point trapezoid rule
/// on circles of radius 1e-2 and 5e-3, Richardson-combined.
pub fn residue_estimate(desc: &PvsDescriptor, eta: &EtaVector, xi: &TestFunction, pole: Complex64, cfg: &QuadConfig) -> Result<Complex64, ZetaError> {
    // returns the contour mean and the largest |Z|·r seen on it
    let contour = |r: f64| -> Result<(Complex64, f64), ZetaError> {
        let mut acc = Complex64::zero();
        let mut size: f64 = 0.0;
        for k in 0..8 {
            let u = Complex64::from_polar(1.0, PI * (2 * k + 1) as f64 / 8.0);
            let z = z_continued(desc, eta, xi, pole + u * r, cfg, ContinuationOptions::default())?;
            acc += z.value * u * r;
            size = size.max(z.value.norm() * r);
        }
        Ok((acc / 8.0, size))
    };
    let (first, size1) = contour(1e-2)?;
    let (second, size2) = contour(5e-3)?;
    // a vanishing residue is measured against the size of Z on the contour
    let floor = 1e-6 * size1.max(size2);
    let diff = (first - second).norm();
    if diff > 1e-3 * first.norm().max(second.norm()) && diff > floor {
        return Err(ZetaError::Inconsistent { first, second });
    }
    // trapezoid error is O(r^8) for the regular part
    Ok((second * 256.0 - first) / 255.0)
}

/// One grid row: the value, or the error that stopped it.
pub type GridRow = (Complex64, Result<ZetaValue, ZetaError>);

/// Evaluates `z_continued` on a grid in parallel; the output keeps grid order.
pub fn zeta_grid(desc: &PvsDescriptor, eta: &EtaVector, xi: &TestFunction, grid: &[Complex64], cfg: &QuadConfig) -> Vec<GridRow> {
    with_pool(cfg.threads, || {
        grid.par_iter()
            .map(|&l| (l, z_continued(desc, eta, xi, l, cfg, ContinuationOptions::default())))
            .collect()
    })
}

/// Like [`zeta_grid`] for `L·Z`.
pub fn lz_grid(desc: &PvsDescriptor, eta: &EtaVector, xi: &TestFunction, grid: &[Complex64], cfg: &QuadConfig) -> Vec<GridRow> {
    with_pool(cfg.threads, || grid.par_iter().map(|&l| (l, lz(desc, eta, xi, l, cfg))).collect())
}

/// Real pole candidates of `Z` in `[lo, hi]` with their residues for `ξ`.
pub fn pole_table(
    desc: &PvsDescriptor,
    eta: &EtaVector,
    xi: &TestFunction,
    lo: f64,
    hi: f64,
    cfg: &QuadConfig,
) -> Result<Vec<(f64, Result<Complex64, ZetaError>)>, ZetaError> {
    let den = weyl::denominator(desc)?;
    let cands = den.pole_candidates(lo, hi);
    Ok(with_pool(cfg.threads, || {
        cands
            .par_iter()
            .map(|&l| (l, residue_estimate(desc, eta, xi, Complex64::new(l, 0.0), cfg)))
            .collect()
    }))
}

/// Shared λ-to-`s` conversion used in closed-form comparisons: `s = e(λ) + 1`.
pub fn tate_s(desc: &PvsDescriptor, lambda: Complex64) -> Complex64 {
    desc.exponent(lambda) + 1.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::{builtin_space, dual};
    use crate::schwartz::basis;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn tate_closed_form() {
        let t = builtin_space("TATE").unwrap();
        let g = TestFunction::gaussian(1);
        let cfg = QuadConfig::default();
        let z = z_convergent(&t, &EtaVector::ones(2), &g, c(0.5), &cfg).unwrap();
        assert!((z.value - 1.0).norm() < 1e-12);
        let z = z_convergent(&t, &EtaVector::ones(2), &g, c(1.5), &cfg).unwrap();
        assert!((z.value - 1.0 / PI).norm() < 1e-12);
        let odd = z_convergent(&t, &EtaVector::from_real(&[1.0, -1.0]), &g, c(0.3), &cfg).unwrap();
        assert!(odd.value.norm() < 1e-14);
    }

    #[test]
    fn out_of_range_and_zero() {
        let t = builtin_space("TATE").unwrap();
        let cfg = QuadConfig::default();
        assert!(matches!(
            z_convergent(&t, &EtaVector::ones(2), &TestFunction::gaussian(1), c(-0.6), &cfg),
            Err(ZetaError::OutOfRange { .. })
        ));
        let z = z_convergent(&t, &EtaVector::ones(2), &TestFunction::zero(1), c(0.2), &cfg).unwrap();
        assert_eq!(z.value, Complex64::zero());
    }

    #[test]
    fn continuation_tate() {
        let t = builtin_space("TATE").unwrap();
        let g = TestFunction::gaussian(1);
        let cfg = QuadConfig::default();
        let z = z_continued(&t, &EtaVector::ones(2), &g, c(-0.25), &cfg, ContinuationOptions::default()).unwrap();
        assert!((z.value - special::gamma_r(c(0.25))).norm() < 1e-10 * z.value.norm());
        let z = z_continued(&t, &EtaVector::ones(2), &g, c(-1.2), &cfg, ContinuationOptions::default()).unwrap();
        assert_eq!(z.continuation_steps, 1);
        assert!((z.value - special::gamma_r(c(-0.7))).norm() < 1e-10 * z.value.norm());
        let err = z_continued(&t, &EtaVector::ones(2), &g, c(-0.5), &cfg, ContinuationOptions::default()).unwrap_err();
        assert!(matches!(err, ZetaError::NearPole { at: 0, .. }), "{err}");
        assert!(err.to_string().contains("Γ(λ + 1/2)"));
    }

    #[test]
    fn quadric_gaussian_closed_form() {
        // ∫_{R^n} |x|^{2e} e^{−π|x|²} dx = π^{−e} Γ(e + n/2) / Γ(n/2)
        let cfg = QuadConfig::default();
        for name in ["QF_2_0", "QF_3_0"] {
            let d = builtin_space(name).unwrap();
            let n = d.dim as f64;
            for lam in [0.1, 0.7] {
                let e = d.exponent(c(lam));
                let z = z_convergent(&d, &EtaVector::ones(1), &TestFunction::gaussian(d.dim), c(lam), &cfg).unwrap();
                let want = (-e * PI.ln()).exp() * special::gamma(e + n / 2.0) / special::gamma_real(n / 2.0);
                assert!((z.value - want).norm() < 1e-12 * want.norm(), "{name} {lam}: {} vs {want}", z.value);
            }
        }
    }

    #[test]
    fn hyperboloid_total_matches_brute_force() {
        let cfg = QuadConfig::default();
        for name in ["QF_1_1", "QF_2_1"] {
            let d = builtin_space(name).unwrap();
            let xi = basis(d.dim, 2)[d.dim + 1].clone();
            let lam = 0.6;
            let e = d.exponent(c(lam)).re;
            let z = z_convergent(&d, &EtaVector::basis(2, 1), &xi, c(lam), &cfg).unwrap();
            let f = d.f().clone();
            let brute = d.orbits[1].integrate(|x| f.eval_f64(x).abs().powf(e) * xi.evaluate(x).re, 5);
            assert!((z.value.re - brute).abs() < 1e-7 * brute.abs().max(1e-3), "{name}: {} vs {brute}", z.value);
        }
    }

    #[test]
    fn forced_steps_agree() {
        let cfg = QuadConfig::default();
        let d = builtin_space("QF_1_1").unwrap();
        let xi = basis(2, 2)[3].clone();
        for i in 0..2 {
            let eta = EtaVector::basis(2, i);
            let base = z_convergent(&d, &eta, &xi, c(0.2), &cfg).unwrap();
            for m in 1..=3 {
                let z = z_continued(&d, &eta, &xi, c(0.2), &cfg, ContinuationOptions { min_steps: m }).unwrap();
                assert!((z.value - base.value).norm() < 1e-9 * base.value.norm().max(1e-12), "m={m}");
            }
        }
    }

    #[test]
    fn dual_side_uses_negated_lambda() {
        let t = dual(&builtin_space("TATE").unwrap());
        let g = TestFunction::gaussian(1);
        let z = z_convergent(&t, &EtaVector::ones(2), &g, c(-0.5), &QuadConfig::default()).unwrap();
        // e = −λ − 1/2 = 0 → s = 1
        assert!((z.value - 1.0).norm() < 1e-12);
    }

    #[test]
    fn lz_is_finite_at_pole() {
        let t = builtin_space("TATE").unwrap();
        let v = lz(&t, &EtaVector::ones(2), &TestFunction::gaussian(1), c(-0.5), &QuadConfig::default()).unwrap();
        // L = 1/Γ(s), Z = π^{−s/2}Γ(s/2) → 2 as s → 0
        assert!((v.value - 2.0).norm() < 1e-12);
    }

    #[test]
    fn residue_tate() {
        let t = builtin_space("TATE").unwrap();
        let r = residue_estimate(&t, &EtaVector::ones(2), &TestFunction::gaussian(1), c(-0.5), &QuadConfig::default()).unwrap();
        assert!((r - 2.0).norm() < 1e-8, "{r}");
    }

    #[test]
    fn sphere_moments() {
        assert_eq!(sphere_moment(1, &[2]), 2.0);
        assert!((sphere_moment(2, &[0, 0]) - 2.0 * PI).abs() < 1e-14);
        assert!((sphere_moment(3, &[2, 0, 0]) - 4.0 * PI / 3.0).abs() < 1e-13);
        assert_eq!(sphere_moment(2, &[1, 1]), 0.0);
    }
}
