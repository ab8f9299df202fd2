//! γ-matrix extraction from the functional equation
//!
//! ```text
//! Ž_λ(η̌_j, F_ψ ξ) = Σ_i γ_{ji}(λ; ψ) · Z_λ(η_i, ξ)
//! ```
//!
//! and the identity checks built on it.
//!
//! `entries[j][i] = γ_{ji}`: row `j` is the dual orbit, column `i` the
//! primal orbit, so composing γ-matrices is ordinary matrix multiplication.

use crate::poly::{fmt_rat, rat_to_f64, MultiPoly};
use crate::registry::{dual, PvsDescriptor};
use crate::schwartz::{a_psi, basis, c_psi, PsiCharacter, SchwartzError, TestFunction};
use crate::weyl::{self, WeylError};
use crate::zeta::{self, ContinuationOptions, EtaVector, QuadConfig, ZetaError};
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GammaError {
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Schwartz(#[from] SchwartzError),
    #[error("least-squares system is ill-conditioned (condition number {0:e})")]
    IllConditioned(f64),
    #[error("basis size {got} is below 2k = {need}")]
    BasisTooSmall { got: usize, need: usize },
    #[error("only {found} informative test functions up to degree {degree}")]
    NotEnoughRows { found: usize, degree: u32 },
}

/// Condition number above which entries are flagged as unreliable.
pub const FLAG_CONDITION: f64 = 1e6;
/// Condition number above which extraction refuses to answer.
pub const MAX_CONDITION: f64 = 1e10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Conventions {
    pub kernel: &'static str,
    pub c_psi: Complex64,
    pub a_psi: f64,
    /// `A(ψ)^{−1/2}`, the rescaling to the self-dual γ.
    pub self_dual_scale: f64,
    pub lambda_coordinate: &'static str,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GammaMatrix {
    pub space: String,
    pub entries: Vec<Vec<Complex64>>,
    pub lambda: Complex64,
    pub psi: String,
    pub lsq_residual: f64,
    pub condition_number: f64,
    pub flagged: bool,
    pub rows_used: usize,
    pub conventions: Conventions,
}

impl GammaMatrix {
    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn matrix(&self) -> DMatrix<Complex64> {
        let k = self.k();
        DMatrix::from_fn(k, k, |j, i| self.entries[j][i])
    }

    /// `γ^{sd} = A(ψ)^{−1/2} γ`.
    pub fn self_dual(&self) -> DMatrix<Complex64> {
        self.matrix() * Complex64::new(self.conventions.self_dual_scale, 0.0)
    }
}

fn to_rows(m: &DMatrix<Complex64>) -> Vec<Vec<Complex64>> {
    (0..m.nrows()).map(|j| (0..m.ncols()).map(|i| m[(j, i)]).collect()).collect()
}

pub fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Row of the least-squares system for one test function.
struct Row {
    primal: Vec<Complex64>,
    dual: Vec<Complex64>,
}

fn zeta_row(
    desc: &PvsDescriptor,
    dual_desc: &PvsDescriptor,
    xi: &TestFunction,
    lambda: Complex64,
    psi: &PsiCharacter,
    twist: Complex64,
    opts: ContinuationOptions,
    cfg: &QuadConfig,
) -> Result<Row, ZetaError> {
    let k = desc.orbit_count();
    let eta = EtaVector::ones(k).twisted(twist);
    let z = zeta::z_continued(desc, &eta, xi, lambda, cfg, opts)?;
    let z_dual = zeta::z_continued(dual_desc, &eta, &xi.fourier(psi), lambda, cfg, opts)?;
    Ok(Row { primal: z.orbit_breakdown, dual: z_dual.orbit_breakdown })
}

/// Solves `A X = B` in the least-squares sense on row-normalized data;
/// returns `(X, relative residual, condition number)`.
fn least_squares(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> (DMatrix<Complex64>, f64, f64) {
    let svd = a.clone().svd(true, true);
    let sv = &svd.singular_values;
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    let smin = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    let cond = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    let x = svd.solve(b, smax * 1e-14).unwrap_or_else(|_| DMatrix::zeros(a.ncols(), b.ncols()));
    let r = a * &x - b;
    let resid = r.norm() / b.norm().max(f64::MIN_POSITIVE);
    (x, resid, cond)
}

/// Extraction at `λ`, with both sides' η optionally twisted by `|f|^{twist}`.
fn extract_impl(
    desc: &PvsDescriptor,
    lambda: Complex64,
    psi: &PsiCharacter,
    basis_size: usize,
    twist: Complex64,
    opts: ContinuationOptions,
    cfg: &QuadConfig,
) -> Result<GammaMatrix, GammaError> {
    let k = desc.orbit_count();
    if basis_size < 2 * k {
        return Err(GammaError::BasisTooSmall { got: basis_size, need: 2 * k });
    }
    let dual_desc = dual(desc);
    let mut rows: Vec<Row> = Vec::new();
    let mut degree = 0;
    let mut done = 0;
    // graded basis functions, one degree at a time, until enough rows carry information
    while rows.len() < basis_size {
        if degree > 16 {
            return Err(GammaError::NotEnoughRows { found: rows.len(), degree: degree - 1 });
        }
        let fresh: Vec<TestFunction> = basis(desc.dim, degree).into_iter().skip(done).collect();
        done += fresh.len();
        degree += 1;
        let computed: Vec<Result<Row, ZetaError>> = zeta::with_pool(cfg.threads, || {
            fresh.par_iter().map(|xi| zeta_row(desc, &dual_desc, xi, lambda, psi, twist, opts, cfg)).collect()
        });
        for row in computed {
            let row = row?;
            let scale = row.primal.iter().map(|z| z.norm()).fold(0.0, f64::max);
            if scale > 1e-13 && rows.len() < basis_size {
                rows.push(row);
            }
        }
    }
    let a = DMatrix::from_fn(rows.len(), k, |m, i| rows[m].primal[i]);
    let b = DMatrix::from_fn(rows.len(), k, |m, j| rows[m].dual[j]);
    let mut an = a.clone();
    let mut bn = b.clone();
    for m in 0..rows.len() {
        let s = a.row(m).norm();
        for c in 0..k {
            an[(m, c)] /= s;
            bn[(m, c)] /= s;
        }
    }
    let (x, resid, cond) = least_squares(&an, &bn);
    if cond > MAX_CONDITION {
        return Err(GammaError::IllConditioned(cond));
    }
    // A γᵀ = B
    let gamma = x.transpose();
    let a_val = a_psi(psi, desc.dim);
    Ok(GammaMatrix {
        space: desc.name.clone(),
        entries: to_rows(&gamma),
        lambda,
        psi: fmt_rat(psi.a()),
        lsq_residual: resid,
        condition_number: cond,
        flagged: cond >= FLAG_CONDITION,
        rows_used: rows.len(),
        conventions: Conventions {
            kernel: "psi_a(<x,y>) = exp(2 pi i a <x,y>)",
            c_psi: c_psi(psi),
            a_psi: a_val,
            self_dual_scale: a_val.powf(-0.5),
            lambda_coordinate: "shared X-side",
        },
    })
}

pub fn extract_gamma(desc: &PvsDescriptor, lambda: Complex64, psi: &PsiCharacter, basis_size: usize, cfg: &QuadConfig) -> Result<GammaMatrix, GammaError> {
    extract_impl(desc, lambda, psi, basis_size, Complex64::zero(), ContinuationOptions::default(), cfg)
}

/// [`extract_gamma`] with explicit continuation options for every zeta value.
pub fn extract_gamma_with(
    desc: &PvsDescriptor,
    lambda: Complex64,
    psi: &PsiCharacter,
    basis_size: usize,
    opts: ContinuationOptions,
    cfg: &QuadConfig,
) -> Result<GammaMatrix, GammaError> {
    extract_impl(desc, lambda, psi, basis_size, Complex64::zero(), opts, cfg)
}

/// `(γ_even, γ_odd, max off-diagonal leakage)` for a two-orbit γ in the
/// parity basis `η_± = η_+ ± η_−`.
pub fn parity_diagonal(g: &GammaMatrix) -> (Complex64, Complex64, f64) {
    let t = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 1.0, -1.0].map(|x| Complex64::new(x, 0.0)));
    let d = &t * g.matrix() * &t / Complex64::new(2.0, 0.0);
    (d[(0, 0)], d[(1, 1)], d[(0, 1)].norm().max(d[(1, 0)].norm()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub space: String,
    pub passed: bool,
    pub deviation: f64,
    pub tolerance: f64,
    pub details: Vec<(String, f64)>,
}

impl Report {
    fn new(check: &str, desc: &PvsDescriptor, deviation: f64, tolerance: f64, details: Vec<(String, f64)>) -> Self {
        Report { check: check.into(), space: desc.name.clone(), passed: deviation.is_finite() && deviation < tolerance, deviation, tolerance, details }
    }
}

/// `1e-6` on the line, `1e-4` in dimensions 2 and 3.
pub fn default_tolerance(desc: &PvsDescriptor) -> f64 {
    if desc.dim == 1 {
        1e-6
    } else {
        1e-4
    }
}

pub const DEFAULT_BASIS: usize = 8;

/// `‖γ̌(ψ⁻¹) γ(ψ) − A(ψ) I‖_max`.
pub fn check_inversion(desc: &PvsDescriptor, lambda: Complex64, psi: &PsiCharacter, cfg: &QuadConfig) -> Result<Report, GammaError> {
    let g = extract_gamma(desc, lambda, psi, DEFAULT_BASIS, cfg)?;
    let gd = extract_gamma(&dual(desc), lambda, &psi.inverse(), DEFAULT_BASIS, cfg)?;
    let a = a_psi(psi, desc.dim);
    let prod = gd.matrix() * g.matrix();
    let dev = max_abs(&(prod - DMatrix::identity(g.k(), g.k()) * Complex64::new(a, 0.0)));
    let details = vec![
        ("A(psi)".to_string(), a),
        ("residual".to_string(), g.lsq_residual.max(gd.lsq_residual)),
        ("condition".to_string(), g.condition_number.max(gd.condition_number)),
    ];
    Ok(Report::new("inversion", desc, dev, default_tolerance(desc), details))
}

/// Orbit permutation of `y ↦ a·y` on the dual side: `P[π(j)][j] = 1` with
/// `a·Ǒ_j = Ǒ_{π(j)}`, read off from sample points.
pub fn orbit_permutation(dual_desc: &PvsDescriptor, a: &crate::poly::Rational) -> DMatrix<Complex64> {
    let k = dual_desc.orbit_count();
    let mut p = DMatrix::zeros(k, k);
    for (j, o) in dual_desc.orbits.iter().enumerate() {
        let moved: Vec<_> = o.sample_point.iter().map(|x| x * a).collect();
        let target = dual_desc.orbit_of(&moved).expect("dilation preserves the open orbit");
        p[(target, j)] = Complex64::new(1.0, 0.0);
    }
    p
}

/// Exponent `κ_a` in `γ(ψ_a) = |a|^{κ_a} · (γ(ψ) ∘ m_a)`:
/// `κ_a = −n − deg f̌ · e'(λ)`, `e'` the dual-side integrand exponent.
pub fn scaling_exponent(desc: &PvsDescriptor, lambda: Complex64) -> Complex64 {
    let e_dual = dual(desc).exponent(lambda);
    -(desc.dim as f64) - e_dual * desc.degrees[0].dual as f64
}

/// `γ(ψ_a)` against `|a|^{κ_a} · Pᵀ-permuted γ(ψ)`, plus the self-dual form at `λ = 0`.
pub fn check_scaling(desc: &PvsDescriptor, lambda: Complex64, a: &crate::poly::Rational, cfg: &QuadConfig) -> Result<Report, GammaError> {
    let psi1 = PsiCharacter::standard();
    let psia = PsiCharacter::new(a.clone())?;
    let g1 = extract_gamma(desc, lambda, &psi1, DEFAULT_BASIS, cfg)?;
    let ga = extract_gamma(desc, lambda, &psia, DEFAULT_BASIS, cfg)?;
    let p = orbit_permutation(&dual(desc), a);
    let abs_a = rat_to_f64(a).abs();
    let factor = (scaling_exponent(desc, lambda) * abs_a.ln()).exp();
    // γ(ψ_a)_{j,i} = |a|^κ γ(ψ)_{π(j),i}
    let predicted = p.transpose() * g1.matrix() * factor;
    let dev = max_abs(&(ga.matrix() - predicted));
    let sd_dev = max_abs(&(ga.self_dual() - p.transpose() * g1.self_dual() * (factor * abs_a.powf(desc.dim as f64 / 2.0))));
    let details = vec![
        ("a".to_string(), rat_to_f64(a)),
        ("exponent_re".to_string(), scaling_exponent(desc, lambda).re),
        ("swaps_orbits".to_string(), if p[(0, 0)].re == 1.0 { 0.0 } else { 1.0 }),
        ("self_dual_consistency".to_string(), sd_dev),
    ];
    Ok(Report::new("scaling", desc, dev, default_tolerance(desc), details))
}

/// Self-dual law at `λ = 0`: `γ^{sd}(0; ψ_a) = γ^{sd}(0; ψ) ∘ m_a`.
pub fn check_self_dual(desc: &PvsDescriptor, a: &crate::poly::Rational, cfg: &QuadConfig) -> Result<Report, GammaError> {
    let zero = Complex64::zero();
    let psia = PsiCharacter::new(a.clone())?;
    let g1 = extract_gamma(desc, zero, &PsiCharacter::standard(), DEFAULT_BASIS, cfg)?;
    let ga = extract_gamma(desc, zero, &psia, DEFAULT_BASIS, cfg)?;
    let p = orbit_permutation(&dual(desc), a);
    let dev = max_abs(&(ga.self_dual() - p.transpose() * g1.self_dual()));
    Ok(Report::new("self_dual", desc, dev, default_tolerance(desc), vec![("a".to_string(), rat_to_f64(a))]))
}

/// `γ(λ + μ)` against the extraction at `μ` with both η twisted by `|f|^λ`.
/// The twisted side goes through one forced continuation step, so the two
/// extractions share no zeta evaluations.
pub fn check_translation(desc: &PvsDescriptor, lambda: Complex64, mu: Complex64, cfg: &QuadConfig) -> Result<Report, GammaError> {
    let psi = PsiCharacter::standard();
    let direct = extract_gamma(desc, lambda + mu, &psi, DEFAULT_BASIS, cfg)?;
    let shifted = extract_impl(desc, mu, &psi, DEFAULT_BASIS, lambda, ContinuationOptions { min_steps: 1 }, cfg)?;
    let dev = max_abs(&(direct.matrix() - shifted.matrix()));
    let details = vec![("lambda".to_string(), lambda.re), ("mu".to_string(), mu.re)];
    Ok(Report::new("translation", desc, dev, default_tolerance(desc), details))
}

/// Doubling the basis must not move γ.
pub fn check_uniqueness(desc: &PvsDescriptor, lambda: Complex64, cfg: &QuadConfig) -> Result<Report, GammaError> {
    let psi = PsiCharacter::standard();
    let a = extract_gamma(desc, lambda, &psi, DEFAULT_BASIS, cfg)?;
    let b = extract_gamma(desc, lambda, &psi, 2 * DEFAULT_BASIS, cfg)?;
    let dev = max_abs(&(a.matrix() - b.matrix()));
    let details = vec![("residual".to_string(), a.lsq_residual), ("condition".to_string(), a.condition_number)];
    Ok(Report::new("uniqueness", desc, dev, 1e-6, details))
}

/// Inside the convergence strips of both sides, extraction from direct
/// integrals agrees with extraction through forced continuation.
pub fn check_strip_continuation(desc: &PvsDescriptor, lambda: Complex64, cfg: &QuadConfig) -> Result<Report, GammaError> {
    let psi = PsiCharacter::standard();
    if !desc.converges_at(lambda) || !dual(desc).converges_at(lambda) {
        return Err(GammaError::Zeta(ZetaError::OutOfRange { lambda, kappa: rat_to_f64(&desc.kappa[0]) }));
    }
    let direct = extract_gamma(desc, lambda, &psi, DEFAULT_BASIS, cfg)?;
    let continued = extract_gamma_with(desc, lambda, &psi, DEFAULT_BASIS, ContinuationOptions { min_steps: 1 }, cfg)?;
    let dev = max_abs(&(direct.matrix() - continued.matrix()));
    Ok(Report::new("strip_continuation", desc, dev, 1e-6, vec![("lambda".to_string(), lambda.re)]))
}

/// `L̃(λ)·γ(λ)` stays bounded around the first pole of the dual denominator `L̃`:
/// the maximum on a circle of radius 1e-3 may not exceed twice that on radius 1e-2.
pub fn check_denominator(desc: &PvsDescriptor, cfg: &QuadConfig) -> Result<Report, GammaError> {
    let psi = PsiCharacter::standard();
    let dual_desc = dual(desc);
    let den = weyl::denominator(&dual_desc)?;
    let edge = rat_to_f64(&dual_desc.kappa[0]) * dual_desc.lambda_orientation as f64;
    let pole = den
        .pole_candidates(edge - 3.0, edge + 3.0)
        .into_iter()
        .min_by(|a, b| (a - edge).abs().total_cmp(&(b - edge).abs()))
        .expect("a Γ-product has poles");
    let ring = |r: f64| -> Result<f64, GammaError> {
        let mut m: f64 = 0.0;
        for j in 0..8 {
            let l = Complex64::new(pole, 0.0) + Complex64::from_polar(r, std::f64::consts::PI * (2 * j + 1) as f64 / 8.0);
            let g = extract_gamma(desc, l, &psi, DEFAULT_BASIS, cfg)?;
            m = m.max(max_abs(&g.matrix()) * den.eval(l).norm());
        }
        Ok(m)
    };
    let outer = ring(1e-2)?;
    let inner = ring(1e-3)?;
    let dev = if inner.is_finite() { (inner / outer.max(1e-300) - 1.0).max(0.0) } else { f64::INFINITY };
    let details = vec![("pole".to_string(), pole), ("outer".to_string(), outer), ("inner".to_string(), inner)];
    Ok(Report::new("denominator", desc, dev, 1.0, details))
}

/// Deviation relative to the largest entry of the orbit vector, so entries
/// that vanish by symmetry do not dominate.
fn vec_dev(a: Complex64, b: Complex64, scale: f64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(scale).max(1e-300)
}

/// The `h^M` shift, `h = f²`, checked per orbit:
///
/// * `Ž_λ(η̌_j, F(h^M ξ)) = (−c(ψ))^{M deg h} · č(e'(λ)) · Ž_{λ''}(η̌_j, Fξ)`, where `č`
///   is the dual Capelli eigenvalue and `e'(λ'') = e'(λ) − 2M`;
/// * `Z_λ(η_i, h^M ξ) = Z_{λ'}(η_i, ξ)` with `e(λ') = e(λ) + 2M`;
/// * the functional equation links them: `Ž_λ(η̌_j, F(h^M ξ)) = Σ_i γ_{ji} Z_{λ'}(η_i, ξ)`.
pub fn check_hm_shift(desc: &PvsDescriptor, lambda: Complex64, big_m: u32, cfg: &QuadConfig) -> Result<Report, GammaError> {
    let psi = PsiCharacter::standard();
    let dual_desc = dual(desc);
    let k = desc.orbit_count();
    let w = desc.h_weight() as f64 * big_m as f64;
    let h_m: MultiPoly = desc.f().pow(desc.h_weight() as u32 * big_m);
    let deg_h = desc.h_weight() as u32 * desc.degrees[0].primal;
    let c_dual = weyl::capelli_eigenvalue(&dual_desc, big_m)?;
    let e_dual = dual_desc.exponent(lambda);
    let lambda_dual_shift = dual_desc.lambda_from_exponent(e_dual - w);
    let lambda_primal_shift = desc.lambda_from_exponent(desc.exponent(lambda) + w);
    let gamma = extract_gamma(desc, lambda, &psi, DEFAULT_BASIS, cfg)?.matrix();
    let constant = (-c_psi(&psi)).powu(big_m * deg_h) * c_dual.eval_complex(e_dual);
    let opts = ContinuationOptions::default();
    let ones = EtaVector::ones(k);
    let mut dev_dual: f64 = 0.0;
    let mut dev_primal: f64 = 0.0;
    let mut dev_link: f64 = 0.0;
    for xi in basis(desc.dim, 2).iter().filter(|x| x.degree() % 2 == 0) {
        let hxi = xi.mul_poly(&h_m);
        let lhs = zeta::z_continued(&dual_desc, &ones, &hxi.fourier(&psi), lambda, cfg, opts)?;
        let rhs = zeta::z_continued(&dual_desc, &ones, &xi.fourier(&psi), lambda_dual_shift, cfg, opts)?;
        let zl = zeta::z_continued(desc, &ones, &hxi, lambda, cfg, opts)?;
        let zr = zeta::z_continued(desc, &ones, xi, lambda_primal_shift, cfg, opts)?;
        let scale_dual = lhs.orbit_breakdown.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let scale_primal = zl.orbit_breakdown.iter().map(|z| z.norm()).fold(0.0, f64::max);
        for j in 0..k {
            dev_dual = dev_dual.max(vec_dev(lhs.orbit_breakdown[j], constant * rhs.orbit_breakdown[j], scale_dual));
            let link: Complex64 = (0..k).map(|i| gamma[(j, i)] * zr.orbit_breakdown[i]).sum();
            dev_link = dev_link.max(vec_dev(lhs.orbit_breakdown[j], link, scale_dual));
        }
        for i in 0..k {
            dev_primal = dev_primal.max(vec_dev(zl.orbit_breakdown[i], zr.orbit_breakdown[i], scale_primal));
        }
    }
    let details = vec![
        ("dual_shift".to_string(), dev_dual),
        ("primal_shift".to_string(), dev_primal),
        ("functional_equation_link".to_string(), dev_link),
    ];
    let dev = dev_dual.max(dev_primal).max(dev_link);
    Ok(Report::new("hM_shift", desc, dev, default_tolerance(desc), details))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;
    use crate::registry::builtin_space;
    use crate::special::gamma_r;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn tate_even_odd() {
        let t = builtin_space("TATE").unwrap();
        let cfg = QuadConfig::default();
        let g = extract_gamma(&t, c(0.1), &PsiCharacter::standard(), 8, &cfg).unwrap();
        let (even, odd, leak) = parity_diagonal(&g);
        let s = c(0.6);
        assert!((even - gamma_r(1.0 - s) / gamma_r(s)).norm() < 1e-9, "{even}");
        let want_odd = Complex64::i() * gamma_r(2.0 - s) / gamma_r(1.0 + s);
        assert!((odd - want_odd).norm() < 1e-9, "{odd}");
        assert!(leak < 1e-9);
        assert!(!g.flagged && g.lsq_residual < 1e-9);
    }

    #[test]
    fn tate_inversion_and_scaling() {
        let t = builtin_space("TATE").unwrap();
        let cfg = QuadConfig::default();
        assert!(check_inversion(&t, c(0.1), &PsiCharacter::from_i64(2).unwrap(), &cfg).unwrap().passed);
        let r = check_scaling(&t, c(0.1), &rat_int(-1), &cfg).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(check_scaling(&t, c(0.1), &rat_int(2), &cfg).unwrap().passed);
        assert!(check_self_dual(&t, &rat_int(-1), &cfg).unwrap().passed);
    }

    #[test]
    fn tate_shift_checks() {
        let t = builtin_space("TATE").unwrap();
        let cfg = QuadConfig::default();
        let r = check_hm_shift(&t, c(0.1), 1, &cfg).unwrap();
        assert!(r.passed, "{r:?}");
        let r = check_translation(&t, c(0.1), c(0.05), &cfg).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn basis_too_small() {
        let t = builtin_space("TATE").unwrap();
        let e = extract_gamma(&t, c(0.0), &PsiCharacter::standard(), 3, &QuadConfig::default()).unwrap_err();
        assert_eq!(e, GammaError::BasisTooSmall { got: 3, need: 4 });
    }

    #[test]
    fn permutation_under_reflection() {
        let t = dual(&builtin_space("TATE").unwrap());
        let p = orbit_permutation(&t, &rat_int(-1));
        assert_eq!(p[(1, 0)], c(1.0));
        assert_eq!(p[(0, 1)], c(1.0));
    }
}
